#include "hyperwalk/hypergraph.hpp"

#include <algorithm>
#include <unordered_set>

namespace hyperwalk {

std::optional<Index> DirectedHypergraph::find_vertex(const std::string& id) const {
  auto it = std::find(vertices.begin(), vertices.end(), id);
  if (it == vertices.end()) return std::nullopt;
  return static_cast<Index>(it - vertices.begin());
}

std::size_t canonicalize_members(std::vector<Index>& members) {
  std::sort(members.begin(), members.end());
  auto last = std::unique(members.begin(), members.end());
  auto dropped = static_cast<std::size_t>(members.end() - last);
  members.erase(last, members.end());
  return dropped;
}

namespace {

bool sorted_overlap(const std::vector<Index>& a, const std::vector<Index>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

// Everything except the empty-side rules, which pruning is allowed to repair.
void check_structure(const DirectedHypergraph& hg, ValidationReport& report) {
  std::unordered_set<std::string> seen;
  for (const auto& v : hg.vertices) {
    if (!seen.insert(v).second) report.push_back({ErrorCode::DuplicateVertexId, v, "vertex id repeated"});
  }
  const Index n = hg.num_vertices();
  for (const auto& arc : hg.arcs) {
    auto out_of_range = [n](Index i) { return i < 0 || i >= n; };
    if (std::any_of(arc.tail.begin(), arc.tail.end(), out_of_range) ||
        std::any_of(arc.head.begin(), arc.head.end(), out_of_range)) {
      report.push_back({ErrorCode::UnknownVertex, arc.id, "vertex index out of range"});
      continue;
    }
    auto tail = arc.tail;
    auto head = arc.head;
    canonicalize_members(tail);
    canonicalize_members(head);
    if (sorted_overlap(tail, head)) {
      report.push_back({ErrorCode::TailHeadOverlap, arc.id, "tail and head share a vertex"});
    }
    if (!(arc.weight > 0.0)) {
      report.push_back({ErrorCode::NonpositiveWeight, arc.id, "weight must be > 0"});
    }
  }
}

}  // namespace

ValidationReport validate(const DirectedHypergraph& hg) {
  ValidationReport report;
  check_structure(hg, report);
  for (const auto& arc : hg.arcs) {
    if (arc.tail.empty()) report.push_back({ErrorCode::EmptyTail, arc.id, "tail is empty"});
    if (arc.head.empty()) report.push_back({ErrorCode::EmptyHead, arc.id, "head is empty"});
  }
  return report;
}

void require_valid(const DirectedHypergraph& hg) {
  auto report = validate(hg);
  if (!report.empty()) throw ValidationError(std::move(report));
}

Incidence build_incidence(const DirectedHypergraph& hg) {
  require_valid(hg);
  using Triplet = Eigen::Triplet<double, Index>;
  std::vector<Triplet> tail;
  std::vector<Triplet> head;
  for (Index e = 0; e < hg.num_arcs(); ++e) {
    for (Index v : hg.arcs[e].tail) tail.emplace_back(v, e, 1.0);
    for (Index v : hg.arcs[e].head) head.emplace_back(v, e, 1.0);
  }
  Incidence inc{SparseRealMatrix(hg.num_vertices(), hg.num_arcs()),
                SparseRealMatrix(hg.num_vertices(), hg.num_arcs())};
  // Membership lists are duplicate-free, but keep the 0/1 contract even if not.
  auto keep_one = [](const double&, const double& b) { return b; };
  inc.tail.setFromTriplets(tail.begin(), tail.end(), keep_one);
  inc.head.setFromTriplets(head.begin(), head.end(), keep_one);
  inc.tail.makeCompressed();
  inc.head.makeCompressed();
  return inc;
}

namespace {

DegreeTables degrees_unchecked(const DirectedHypergraph& hg) {
  DegreeTables d;
  d.vertex_tail = Eigen::VectorXd::Zero(hg.num_vertices());
  d.vertex_head = Eigen::VectorXd::Zero(hg.num_vertices());
  d.arc_tail.resize(hg.num_arcs());
  d.arc_head.resize(hg.num_arcs());
  for (Index e = 0; e < hg.num_arcs(); ++e) {
    const auto& arc = hg.arcs[e];
    for (Index v : arc.tail) d.vertex_tail(v) += arc.weight;
    for (Index v : arc.head) d.vertex_head(v) += arc.weight;
    d.arc_tail(e) = static_cast<Index>(arc.tail.size());
    d.arc_head(e) = static_cast<Index>(arc.head.size());
  }
  return d;
}

}  // namespace

DegreeTables compute_degrees(const DirectedHypergraph& hg) {
  require_valid(hg);
  return degrees_unchecked(hg);
}

Eigen::VectorXd arc_weights(const DirectedHypergraph& hg) {
  Eigen::VectorXd w(hg.num_arcs());
  for (Index e = 0; e < hg.num_arcs(); ++e) w(e) = hg.arcs[e].weight;
  return w;
}

std::pair<DirectedHypergraph, PruneLog> prune_to_core(const DirectedHypergraph& input) {
  {
    ValidationReport report;
    check_structure(input, report);
    if (!report.empty()) throw ValidationError(std::move(report));
  }

  DirectedHypergraph hg = input;
  for (auto& arc : hg.arcs) {
    canonicalize_members(arc.tail);
    canonicalize_members(arc.head);
  }
  std::vector<bool> vertex_alive(hg.vertices.size(), true);
  std::vector<bool> arc_alive(hg.arcs.size(), true);
  PruneLog log;

  for (int round = 1;; ++round) {
    bool changed = false;

    Index arcs_left = 0;
    for (std::size_t e = 0; e < hg.arcs.size(); ++e) {
      if (!arc_alive[e]) continue;
      const auto& arc = hg.arcs[e];
      if (arc.tail.empty() || arc.head.empty()) {
        arc_alive[e] = false;
        changed = true;
        std::string reason = arc.tail.empty() && arc.head.empty() ? "empty tail and head"
                             : arc.tail.empty()                    ? "empty tail"
                                                                   : "empty head";
        log.events.push_back({round, PruneEvent::Kind::Arc, arc.id, std::move(reason)});
      } else {
        ++arcs_left;
      }
    }

    std::vector<double> tail_degree(hg.vertices.size(), 0.0);
    std::vector<double> head_degree(hg.vertices.size(), 0.0);
    for (std::size_t e = 0; e < hg.arcs.size(); ++e) {
      if (!arc_alive[e]) continue;
      for (Index v : hg.arcs[e].tail) tail_degree[v] += hg.arcs[e].weight;
      for (Index v : hg.arcs[e].head) head_degree[v] += hg.arcs[e].weight;
    }
    std::vector<bool> dropped(hg.vertices.size(), false);
    Index vertices_left = 0;
    for (std::size_t v = 0; v < hg.vertices.size(); ++v) {
      if (!vertex_alive[v]) continue;
      const bool no_tail = !(tail_degree[v] > 0.0);
      const bool no_head = !(head_degree[v] > 0.0);
      if (no_tail || no_head) {
        vertex_alive[v] = false;
        dropped[v] = true;
        changed = true;
        std::string reason = no_tail && no_head ? "zero tail and head degree"
                             : no_tail          ? "zero tail degree"
                                                : "zero head degree";
        log.events.push_back({round, PruneEvent::Kind::Vertex, hg.vertices[v], std::move(reason)});
      } else {
        ++vertices_left;
      }
    }

    if (!changed) break;
    log.rounds.push_back({round, arcs_left, vertices_left});

    auto is_dropped = [&](Index v) { return dropped[v]; };
    for (std::size_t e = 0; e < hg.arcs.size(); ++e) {
      if (!arc_alive[e]) continue;
      std::erase_if(hg.arcs[e].tail, is_dropped);
      std::erase_if(hg.arcs[e].head, is_dropped);
    }
  }

  DirectedHypergraph core;
  std::vector<Index> remap(hg.vertices.size(), -1);
  for (std::size_t v = 0; v < hg.vertices.size(); ++v) {
    if (!vertex_alive[v]) continue;
    remap[v] = core.num_vertices();
    core.vertices.push_back(hg.vertices[v]);
  }
  for (std::size_t e = 0; e < hg.arcs.size(); ++e) {
    if (!arc_alive[e]) continue;
    HyperArc arc = hg.arcs[e];
    for (auto& v : arc.tail) v = remap[v];
    for (auto& v : arc.head) v = remap[v];
    core.arcs.push_back(std::move(arc));
  }
  return {std::move(core), std::move(log)};
}

}  // namespace hyperwalk
