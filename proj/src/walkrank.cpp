#include "hyperwalk/walkrank.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace hyperwalk {

TransitionMatrix build_transition(const DirectedHypergraph& hg, DanglingPolicy policy) {
  const Incidence inc = build_incidence(hg);
  const DegreeTables deg = compute_degrees(hg);
  const Index n = hg.num_vertices();

  Eigen::VectorXd inv_tail(n);
  for (Index v = 0; v < n; ++v) {
    if (deg.vertex_tail(v) > 0.0) {
      inv_tail(v) = 1.0 / deg.vertex_tail(v);
    } else if (policy == DanglingPolicy::Error) {
      throw Error(ErrorCode::DanglingVertex,
                  "vertex " + hg.vertices[v] + " has zero tail degree (prune the hypergraph or allow uniform jumps)");
    } else {
      inv_tail(v) = 0.0;
    }
  }
  // Arc head degrees are >= 1 on a validated hypergraph.
  const Eigen::VectorXd arc_scale = arc_weights(hg).cwiseQuotient(deg.arc_head_real());

  SparseRealMatrix P = inv_tail.asDiagonal() * inc.tail * arc_scale.asDiagonal() *
                       SparseRealMatrix(inc.head.transpose());

  if (policy == DanglingPolicy::UniformJump && (deg.vertex_tail.array() <= 0.0).any()) {
    using Triplet = Eigen::Triplet<double, Index>;
    std::vector<Triplet> entries;
    for (Index u = 0; u < n; ++u) {
      if (deg.vertex_tail(u) > 0.0) {
        for (SparseRealMatrix::InnerIterator it(P, u); it; ++it) entries.emplace_back(u, it.col(), it.value());
      } else {
        for (Index v = 0; v < n; ++v) entries.emplace_back(u, v, 1.0 / static_cast<double>(n));
      }
    }
    P.setFromTriplets(entries.begin(), entries.end());
  }
  P.prune(0.0);
  P.makeCompressed();
  return {std::move(P), hg.vertices};
}

TransitionMatrix with_damping(const TransitionMatrix& P, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::InvalidArgument, "damping must be in (0, 1]");
  if (alpha == 1.0) return P;
  const Index n = P.size();
  Eigen::MatrixXd dense = alpha * Eigen::MatrixXd(P.matrix);
  dense.array() += (1.0 - alpha) / static_cast<double>(n);
  return {dense.sparseView(), P.vertices};
}

RankVector renormalized(const RankVector& rv, Normalization norm) {
  RankVector out = rv;
  const double scale = norm == Normalization::L1 ? rv.values.lpNorm<1>() : rv.values.norm();
  if (scale > 0.0) out.values /= scale;
  out.normalization = norm;
  return out;
}

void PowerOptions::check() const {
  if (!(damping > 0.0 && damping <= 1.0)) throw Error(ErrorCode::InvalidArgument, "damping must be in (0, 1]");
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
  if (max_iterations < 1) throw Error(ErrorCode::InvalidArgument, "max iterations must be >= 1");
}

NoConvergenceError::NoConvergenceError(RankVector last)
    : Error(ErrorCode::NoConvergence,
            "power iteration did not converge after " + std::to_string(last.iterations) +
                " iterations (L1 residual " + std::to_string(last.residual) +
                "); periodic or reducible chains need damping < 1, e.g. --damping 0.85"),
      last_(std::move(last)) {}

RankVector pagerank_power(const TransitionMatrix& P, const PowerOptions& opts) {
  opts.check();
  const Index n = P.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cannot rank an empty hypergraph");

  const double jump = (1.0 - opts.damping) / static_cast<double>(n);
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  Eigen::VectorXd next(n);

  RankVector rv;
  rv.vertices = P.vertices;
  rv.residual = std::numeric_limits<double>::infinity();
  bool converged = false;
  while (rv.iterations < opts.max_iterations) {
    next.noalias() = P.matrix.transpose() * x;
    next = opts.damping * next;
    next.array() += jump;
    next /= next.sum();
    ++rv.iterations;
    rv.residual = (next - x).lpNorm<1>();
    x.swap(next);
    if (rv.residual < opts.tolerance) {
      converged = true;
      break;
    }
  }
  rv.values = std::move(x);
  rv.normalization = Normalization::L1;
  if (!converged) throw NoConvergenceError(std::move(rv));
  return opts.normalization == Normalization::L1 ? rv : renormalized(rv, opts.normalization);
}

MultipleSolutionsError::MultipleSolutionsError(Index solution_rank)
    : Error(ErrorCode::MultipleSolutions,
            "chain has " + std::to_string(solution_rank) +
                " independent stationary distributions; use damping < 1 or restrict to one component"),
      rank_(solution_rank) {}

RankVector stationary_dense_oracle(const TransitionMatrix& P, Index dense_limit) {
  const Index n = P.size();
  if (n > dense_limit) {
    throw Error(ErrorCode::DenseLimitExceeded,
                std::to_string(n) + " vertices exceed the dense limit of " + std::to_string(dense_limit));
  }
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "empty transition matrix");

  Eigen::MatrixXd A = Eigen::MatrixXd(P.matrix).transpose();
  A.diagonal().array() -= 1.0;

  Eigen::FullPivLU<Eigen::MatrixXd> rank_lu(A);
  rank_lu.setThreshold(1e-10);
  const Index nullity = n - rank_lu.rank();
  if (nullity > 1) throw MultipleSolutionsError(nullity);

  // Rows of P^T - I sum to zero, so one equation is redundant; swap it for sum(pi) = 1.
  A.row(n - 1).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;
  Eigen::VectorXd pi = A.fullPivLu().solve(rhs);

  RankVector rv;
  rv.vertices = P.vertices;
  rv.values = pi.cwiseMax(0.0);
  rv.values /= rv.values.sum();
  rv.normalization = Normalization::L1;
  rv.residual = (Eigen::VectorXd(P.matrix.transpose() * rv.values) - rv.values).lpNorm<1>();
  return rv;
}

WalkHistogram simulate_walk(const DirectedHypergraph& hg, Index start, std::uint64_t steps, std::uint64_t seed) {
  require_valid(hg);
  const Index n = hg.num_vertices();
  if (start < 0 || start >= n) throw Error(ErrorCode::InvalidArgument, "start vertex out of range");
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be >= 1");

  // Per-vertex outgoing arcs with cumulative weights for the first stage.
  std::vector<std::vector<Index>> out_arcs(n);
  std::vector<std::vector<double>> cumulative(n);
  for (Index e = 0; e < hg.num_arcs(); ++e) {
    for (Index u : hg.arcs[e].tail) {
      const double prev = cumulative[u].empty() ? 0.0 : cumulative[u].back();
      out_arcs[u].push_back(e);
      cumulative[u].push_back(prev + hg.arcs[e].weight);
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::uint64_t> visits(n, 0);
  Index here = start;
  for (std::uint64_t step = 0; step < steps; ++step) {
    const auto& cum = cumulative[here];
    if (cum.empty()) {
      throw Error(ErrorCode::DanglingVertex, "walk reached vertex " + hg.vertices[here] + " with zero tail degree");
    }
    const double r = unit(rng) * cum.back();
    auto slot = static_cast<std::size_t>(std::upper_bound(cum.begin(), cum.end(), r) - cum.begin());
    slot = std::min(slot, cum.size() - 1);
    const auto& head = hg.arcs[out_arcs[here][slot]].head;
    std::uniform_int_distribution<std::size_t> pick(0, head.size() - 1);
    here = head[pick(rng)];
    ++visits[here];
  }

  WalkHistogram hist;
  hist.vertices = hg.vertices;
  hist.steps = steps;
  hist.frequency.resize(n);
  for (Index v = 0; v < n; ++v) hist.frequency(v) = static_cast<double>(visits[v]) / static_cast<double>(steps);
  return hist;
}

TopK top_k(const RankVector& rv, Index k, double tie_tolerance) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  const Index n = rv.values.size();
  TopK out;
  if (k > n) {
    out.clamped = true;
    k = n;
  }
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return rv.values(a) > rv.values(b); });
  auto tied = [&](Index a, Index b) {
    const double x = rv.values(a);
    const double y = rv.values(b);
    return std::abs(x - y) <= tie_tolerance * std::max(std::abs(x), std::abs(y));
  };
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() && tied(order[end - 1], order[end])) ++end;
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(begin), order.begin() + static_cast<std::ptrdiff_t>(end));
    begin = end;
  }
  for (Index i = 0; i < k; ++i) out.entries.emplace_back(rv.vertices[order[i]], rv.values(order[i]));
  return out;
}

}  // namespace hyperwalk
