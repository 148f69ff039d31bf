#pragma once

// Fixtures, random generators and brute-force oracles shared by the tests.
// Nothing here calls into the code paths it is used to check.

#include <Eigen/Core>

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk::testing {

inline HyperArc arc(std::string id, std::vector<Index> tail, std::vector<Index> head, double w = 1.0) {
  return {std::move(id), std::move(tail), std::move(head), w};
}

inline DirectedHypergraph hg3() {
  return {{"v1", "v2", "v3"},
          {arc("e1", {0}, {1, 2}, 1.0), arc("e2", {1}, {2}, 2.0), arc("e3", {2}, {0}, 1.0)}};
}

/// Simple arcs v0 -> v1 -> ... -> v(k-1) -> v0.
inline DirectedHypergraph cycle(int k, const std::string& prefix = "c") {
  DirectedHypergraph hg;
  for (int i = 0; i < k; ++i) hg.vertices.push_back(prefix + std::to_string(i));
  for (int i = 0; i < k; ++i) hg.arcs.push_back(arc(prefix + "e" + std::to_string(i), {i}, {(i + 1) % k}));
  return hg;
}

inline DirectedHypergraph two_cycle() {
  return {{"a", "b"}, {arc("ab", {0}, {1}), arc("ba", {1}, {0})}};
}

/// Brute-force p(u, v) summed arc by arc straight from the definition.
inline Eigen::MatrixXd brute_force_transition(const DirectedHypergraph& hg) {
  const Index n = hg.num_vertices();
  Eigen::VectorXd d_tail = Eigen::VectorXd::Zero(n);
  for (const auto& e : hg.arcs)
    for (Index u : e.tail) d_tail(u) += e.weight;
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      double sum = 0.0;
      for (const auto& e : hg.arcs) {
        const double in_tail = std::count(e.tail.begin(), e.tail.end(), u) ? 1.0 : 0.0;
        const double in_head = std::count(e.head.begin(), e.head.end(), v) ? 1.0 : 0.0;
        sum += e.weight * in_tail / d_tail(u) * in_head / static_cast<double>(e.head.size());
      }
      P(u, v) = sum;
    }
  }
  return P;
}

/// Every vertex reaches every other along tail -> head steps.
inline bool strongly_connected(const DirectedHypergraph& hg) {
  const Index n = hg.num_vertices();
  if (n == 0) return false;
  std::vector<std::vector<Index>> fwd(n), bwd(n);
  for (const auto& e : hg.arcs)
    for (Index u : e.tail)
      for (Index v : e.head) {
        fwd[u].push_back(v);
        bwd[v].push_back(u);
      }
  auto reaches_all = [n](const std::vector<std::vector<Index>>& adj) {
    std::vector<bool> seen(n, false);
    std::queue<Index> q;
    q.push(0);
    seen[0] = true;
    Index count = 1;
    while (!q.empty()) {
      Index u = q.front();
      q.pop();
      for (Index v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          ++count;
          q.push(v);
        }
    }
    return count == n;
  };
  return reaches_all(fwd) && reaches_all(bwd);
}

inline std::vector<Index> random_subset(std::mt19937_64& rng, std::vector<Index>& pool, std::size_t k) {
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Index> out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  std::sort(out.begin(), out.end());
  return out;
}

/// Random arc with disjoint nonempty sides of size 1..3 each.
inline HyperArc random_arc(std::mt19937_64& rng, Index n, double max_weight, const std::string& id) {
  std::vector<Index> pool(n);
  std::iota(pool.begin(), pool.end(), Index{0});
  std::shuffle(pool.begin(), pool.end(), rng);
  const auto max_side = static_cast<std::size_t>(std::max<Index>(1, std::min<Index>(3, n - 1)));
  std::uniform_int_distribution<std::size_t> tail_size(1, max_side);
  const std::size_t t = tail_size(rng);
  std::uniform_int_distribution<std::size_t> head_size(1, std::min(max_side, static_cast<std::size_t>(n) - t));
  const std::size_t h = head_size(rng);
  std::vector<Index> tail(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(t));
  std::vector<Index> head(pool.begin() + static_cast<std::ptrdiff_t>(t),
                          pool.begin() + static_cast<std::ptrdiff_t>(t + h));
  std::sort(tail.begin(), tail.end());
  std::sort(head.begin(), head.end());
  // Weights in (0, max_weight].
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double w = max_weight * (1.0 - unit(rng));
  return {id, std::move(tail), std::move(head), w};
}

inline DirectedHypergraph random_hypergraph(std::mt19937_64& rng, Index min_v, Index max_v, Index min_e, Index max_e,
                                            double max_weight = 10.0) {
  std::uniform_int_distribution<Index> nv(min_v, max_v);
  std::uniform_int_distribution<Index> ne(min_e, max_e);
  DirectedHypergraph hg;
  const Index n = nv(rng);
  const Index m = ne(rng);
  for (Index i = 0; i < n; ++i) hg.vertices.push_back("v" + std::to_string(i));
  for (Index e = 0; e < m; ++e) hg.arcs.push_back(random_arc(rng, n, max_weight, "e" + std::to_string(e)));
  return hg;
}

/// Strongly connected and aperiodic: a Hamiltonian cycle plus chords closing
/// cycles of length 2 and 3 through the first cycle vertex, plus random hyper-arcs.
inline DirectedHypergraph random_ergodic(std::mt19937_64& rng, Index min_v = 3, Index max_v = 12) {
  std::uniform_int_distribution<Index> nv(std::max<Index>(3, min_v), max_v);
  const Index n = nv(rng);
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_real_distribution<double> weight(0.5, 5.0);

  DirectedHypergraph hg;
  for (Index i = 0; i < n; ++i) hg.vertices.push_back("v" + std::to_string(i));
  for (Index i = 0; i < n; ++i) {
    hg.arcs.push_back(arc("cyc" + std::to_string(i), {order[i]}, {order[(i + 1) % n]}, weight(rng)));
  }
  hg.arcs.push_back(arc("chord2", {order[1]}, {order[0]}, weight(rng)));
  hg.arcs.push_back(arc("chord3", {order[2]}, {order[0]}, weight(rng)));
  std::uniform_int_distribution<Index> extra(0, 2 * n);
  const Index m = extra(rng);
  for (Index e = 0; e < m; ++e) hg.arcs.push_back(random_arc(rng, n, 5.0, "x" + std::to_string(e)));
  return hg;
}

}  // namespace hyperwalk::testing
