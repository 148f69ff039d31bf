#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/ingest.hpp"
#include "hyperwalk/laplacian.hpp"
#include "hyperwalk/walkrank.hpp"

namespace hyperwalk::cli {

namespace {

enum class InputFormat { Reactions, Json };
enum class Precision { Four, Full };
enum class LaplacianKind { Unnormalized, Symmetric };

struct RunConfig {
  std::string command;
  std::string input;
  std::string output;
  std::optional<InputFormat> format;
  ReversiblePolicy reversible = ReversiblePolicy::Split;
  bool strict = false;
  bool prune = false;
  PowerOptions power;
  DanglingPolicy dangling = DanglingPolicy::Error;
  Index top = 10;
  std::uint64_t seed = 1;
  std::uint64_t steps = 1'000'000;
  std::string start;
  Precision precision = Precision::Four;
  LaplacianKind kind = LaplacianKind::Unnormalized;
};

std::string format_value(double v, Precision p) {
  std::ostringstream os;
  if (p == Precision::Four) {
    os << std::fixed << std::setprecision(4) << v;
  } else {
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Writes to -o PATH when given, otherwise to `out`.
template <typename Fn>
void emit(const RunConfig& cfg, std::ostream& out, Fn&& write) {
  if (cfg.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot write " + cfg.output);
  write(file);
  if (!file) throw Error(ErrorCode::Io, "failed writing " + cfg.output);
}

void print_prune_log(const PruneLog& log, std::ostream& err) {
  for (const auto& ev : log.events) {
    err << "prune round " << ev.round << ": removed " << (ev.kind == PruneEvent::Kind::Arc ? "arc " : "vertex ")
        << ev.id << " (" << ev.reason << ")\n";
  }
  for (const auto& r : log.rounds) {
    err << "prune round " << r.round << ": " << r.arcs_after_arc_step << " arcs after arc step, "
        << r.vertices_after_vertex_step << " vertices after vertex step\n";
  }
}

InputFormat resolved_format(const RunConfig& cfg) {
  if (cfg.format) return *cfg.format;
  return cfg.command == "ingest" ? InputFormat::Reactions : InputFormat::Json;
}

// Loads the input, applies --prune, and returns a hypergraph that may still be invalid.
DirectedHypergraph load_raw(const RunConfig& cfg, std::ostream& err) {
  const std::string text = read_file(cfg.input);
  DirectedHypergraph hg;
  if (resolved_format(cfg) == InputFormat::Json) {
    hg = load_canonical(text);
  } else {
    const auto mode = cfg.strict ? ParseMode::Strict : ParseMode::Permissive;
    auto result = reactions_to_hypergraph(parse_reactions(text, mode), cfg.reversible, !cfg.strict);
    for (const auto& w : result.log.warnings) err << "warning: " << w << '\n';
    err << "records: " << result.log.records << '\n'
        << "reversible splits: " << result.log.reversible_splits << '\n'
        << "collapsed duplicates: " << result.log.collapsed_duplicates << '\n';
    hg = std::move(result.hypergraph);
  }
  if (cfg.prune) {
    auto [core, log] = prune_to_core(hg);
    print_prune_log(log, err);
    err << "core: " << core.num_vertices() << " vertices, " << core.num_arcs() << " arcs\n";
    hg = std::move(core);
  }
  return hg;
}

DirectedHypergraph load_valid(const RunConfig& cfg, std::ostream& err) {
  auto hg = load_raw(cfg, err);
  require_valid(hg);
  return hg;
}

int cmd_ingest(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto hg = load_valid(cfg, err);
  const std::string doc = save_canonical(hg);
  emit(cfg, out, [&](std::ostream& os) { os << doc; });
  err << "vertices: " << hg.num_vertices() << '\n' << "arcs: " << hg.num_arcs() << '\n';
  return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ValidationReport report;
  try {
    report = validate(load_raw(cfg, err));
  } catch (const ValidationError& e) {
    report = e.report();
  }
  emit(cfg, out, [&](std::ostream& os) {
    if (report.empty()) os << "ok\n";
    for (const auto& v : report) os << to_string(v.rule) << '\t' << v.subject << '\t' << v.detail << '\n';
  });
  return report.empty() ? 0 : 1;
}

RankVector rank_l1(const RunConfig& cfg, const DirectedHypergraph& hg, TransitionMatrix& P) {
  P = build_transition(hg, cfg.dangling);
  PowerOptions opts = cfg.power;
  opts.normalization = Normalization::L1;
  return pagerank_power(P, opts);
}

int cmd_rank(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto hg = load_valid(cfg, err);
  TransitionMatrix P;
  const RankVector pi = renormalized(rank_l1(cfg, hg, P), cfg.power.normalization);
  err << "converged after " << pi.iterations << " iterations, L1 residual " << pi.residual << '\n';
  const TopK top = top_k(pi, cfg.top);
  if (top.clamped) err << "notice: --top " << cfg.top << " exceeds " << hg.num_vertices() << " vertices; clamped\n";
  emit(cfg, out, [&](std::ostream& os) {
    os << "rank\tvertex\tvalue\n";
    for (std::size_t i = 0; i < top.entries.size(); ++i) {
      os << i + 1 << '\t' << top.entries[i].first << '\t' << format_value(top.entries[i].second, cfg.precision)
         << '\n';
    }
  });
  return 0;
}

int cmd_laplacian(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto hg = load_valid(cfg, err);
  TransitionMatrix P;
  const RankVector pi = rank_l1(cfg, hg, P);
  const LaplacianPair pair = build_laplacians(with_damping(P, cfg.power.damping), pi);
  const SpectralReport rep = spectral_report(pair);

  const Eigen::MatrixXd& M =
      cfg.kind == LaplacianKind::Unnormalized ? pair.unnormalized : pair.symmetric_normalized;
  emit(cfg, out, [&](std::ostream& os) {
    for (Index i = 0; i < M.rows(); ++i) {
      for (Index j = 0; j < M.cols(); ++j) os << (j ? "\t" : "") << format_value(M(i, j), Precision::Full);
      os << '\n';
    }
  });
  err << "symmetry_defect_L\t" << rep.unnormalized_symmetry_defect << '\n'
      << "symmetry_defect_Lsym\t" << rep.symmetric_symmetry_defect << '\n'
      << "null_residual_L\t" << rep.unnormalized_null_residual << '\n'
      << "null_residual_Lsym\t" << rep.symmetric_null_residual << '\n'
      << "min_eigenvalue_L\t" << rep.unnormalized_min_eigenvalue << '\n'
      << "min_eigenvalue_Lsym\t" << rep.symmetric_min_eigenvalue << '\n';
  if (!within_tolerances(rep)) {
    err << "error: Laplacian invariants violated beyond tolerance\n";
    return 1;
  }
  return 0;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto hg = load_valid(cfg, err);
  Index start = 0;
  if (!cfg.start.empty()) {
    auto found = hg.find_vertex(cfg.start);
    if (!found) throw Error(ErrorCode::UnknownVertex, "start vertex " + cfg.start + " not found");
    start = *found;
  }
  const WalkHistogram hist = simulate_walk(hg, start, cfg.steps, cfg.seed);
  TransitionMatrix P;
  const RankVector pi = rank_l1(cfg, hg, P);
  const double tv = total_variation(hist.frequency, pi.values);
  emit(cfg, out, [&](std::ostream& os) {
    os << "vertex\tfrequency\n";
    for (Index v = 0; v < hist.frequency.size(); ++v) {
      os << hist.vertices[v] << '\t' << format_value(hist.frequency(v), cfg.precision) << '\n';
    }
    os << "tv_distance\t" << format_value(tv, cfg.precision) << '\n';
  });
  return 0;
}

void report_error(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  switch (e.code()) {
    case ErrorCode::DanglingVertex:
      err << "hint: rerun with --prune to drop vertices without outgoing arcs\n";
      break;
    case ErrorCode::NoConvergence:
      err << "hint: rerun with --damping 0.85\n";
      break;
    case ErrorCode::EmptyTail:
    case ErrorCode::EmptyHead:
      err << "hint: rerun with --prune to drop arcs with an empty side\n";
      break;
    default:
      break;
  }
}

void add_shared_flags(CLI::App* sub, RunConfig& cfg) {
  static const std::map<std::string, InputFormat> formats{{"reactions", InputFormat::Reactions},
                                                          {"json", InputFormat::Json}};
  static const std::map<std::string, ReversiblePolicy> policies{{"split", ReversiblePolicy::Split},
                                                                {"forward-only", ReversiblePolicy::ForwardOnly}};
  static const std::map<std::string, Normalization> norms{{"l1", Normalization::L1}, {"l2", Normalization::L2}};
  static const std::map<std::string, Precision> precisions{{"4", Precision::Four}, {"full", Precision::Full}};
  static const std::map<std::string, DanglingPolicy> danglings{{"error", DanglingPolicy::Error},
                                                               {"uniform", DanglingPolicy::UniformJump}};

  sub->add_option("input", cfg.input, "Input file")->required();
  sub->add_option("--format", cfg.format, "Input format: reactions or json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->option_text("reactions|json");
  sub->add_option("--reversible", cfg.reversible, "Reversible reactions: split or forward-only")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case))
      ->option_text("split|forward-only");
  sub->add_flag("--strict", cfg.strict, "Reject reactions with an empty side at parse time");
  sub->add_flag("--prune", cfg.prune, "Reduce to the core where every vertex has tail and head degree");
  sub->add_option("--damping", cfg.power.damping, "Damping factor in (0, 1]");
  sub->add_option("--tol", cfg.power.tolerance, "L1 convergence tolerance");
  sub->add_option("--max-iters", cfg.power.max_iterations, "Iteration cap");
  sub->add_option("--norm", cfg.power.normalization, "Output normalization: l1 or l2")
      ->transform(CLI::CheckedTransformer(norms, CLI::ignore_case))
      ->option_text("l1|l2");
  sub->add_option("--dangling", cfg.dangling, "Zero-tail vertices: error or uniform")
      ->transform(CLI::CheckedTransformer(danglings, CLI::ignore_case))
      ->option_text("error|uniform");
  sub->add_option("--top", cfg.top, "Rows in the ranking");
  sub->add_option("--seed", cfg.seed, "Random walk seed");
  sub->add_option("--steps", cfg.steps, "Random walk transitions");
  sub->add_option("--precision", cfg.precision, "Value precision: 4 or full")
      ->transform(CLI::CheckedTransformer(precisions, CLI::ignore_case))
      ->option_text("4|full");
  sub->add_option("-o,--output", cfg.output, "Output path (default: standard output)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed-hypergraph random walks, PageRank and Laplacians"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* ingest = app.add_subcommand("ingest", "Convert reactions or JSON into canonical JSON");
  auto* validate_cmd = app.add_subcommand("validate", "Report every structural violation");
  auto* rank = app.add_subcommand("rank", "PageRank by power iteration, top-k as TSV");
  auto* laplacian = app.add_subcommand("laplacian", "Write L or L_sym as TSV with a spectral report");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo random walk frequencies as TSV");
  for (auto* sub : {ingest, validate_cmd, rank, laplacian, simulate}) add_shared_flags(sub, cfg);

  static const std::map<std::string, LaplacianKind> kinds{{"unnormalized", LaplacianKind::Unnormalized},
                                                          {"symmetric", LaplacianKind::Symmetric}};
  laplacian->add_option("--kind", cfg.kind, "unnormalized or symmetric")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case))
      ->option_text("unnormalized|symmetric");
  simulate->add_option("--start", cfg.start, "Start vertex id (default: first vertex)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;  // usage errors
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.power.check();
    if (cfg.top < 1) throw Error(ErrorCode::InvalidArgument, "--top must be >= 1");
    if (cfg.steps < 1) throw Error(ErrorCode::InvalidArgument, "--steps must be >= 1");
    if (cfg.command == "ingest") return cmd_ingest(cfg, out, err);
    if (cfg.command == "validate") return cmd_validate(cfg, out, err);
    if (cfg.command == "rank") return cmd_rank(cfg, out, err);
    if (cfg.command == "laplacian") return cmd_laplacian(cfg, out, err);
    return cmd_simulate(cfg, out, err);
  } catch (const Error& e) {
    report_error(e, err);
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"hyperwalk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hyperwalk::cli
