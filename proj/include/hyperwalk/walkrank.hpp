#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk {

enum class DanglingPolicy {
  Error,        // a vertex with zero tail degree is rejected
  UniformJump,  // its row becomes 1/|V| everywhere
};

enum class Normalization { L1, L2 };

/// Row-stochastic random-walk matrix over `vertices` (the order it was built under).
struct TransitionMatrix {
  SparseRealMatrix matrix;
  std::vector<std::string> vertices;

  Index size() const { return matrix.rows(); }
};

/// P = Dv_tail^-1 * H_tail * W * De_head^-1 * H_head^T.
TransitionMatrix build_transition(const DirectedHypergraph& hg, DanglingPolicy policy = DanglingPolicy::Error);

/// alpha * P + (1 - alpha) / n * 1 1^T, the matrix whose stationary vector
/// pagerank_power() returns for damping alpha. alpha == 1 returns P unchanged.
TransitionMatrix with_damping(const TransitionMatrix& P, double alpha);

struct RankVector {
  std::vector<std::string> vertices;
  Eigen::VectorXd values;
  Normalization normalization = Normalization::L1;
  double residual = 0.0;  // L1 change of the last iteration
  Index iterations = 0;

  /// S = diag(pi).
  auto diagonal() const { return values.asDiagonal(); }
};

/// Same vector, rescaled to the requested norm. Order of values is unchanged.
RankVector renormalized(const RankVector& rv, Normalization norm);

struct PowerOptions {
  double damping = 1.0;
  double tolerance = 1e-10;
  Index max_iterations = 10000;
  Normalization normalization = Normalization::L1;

  /// Throws Error(InvalidArgument) naming the offending field.
  void check() const;
};

/// Thrown when the iteration cap is hit. Carries the last iterate.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(RankVector last);
  const RankVector& last() const noexcept { return last_; }

 private:
  RankVector last_;
};

/// x <- damping * P^T x + (1 - damping) / n from the uniform start, L1
/// renormalized every step, until the L1 change drops below the tolerance.
RankVector pagerank_power(const TransitionMatrix& P, const PowerOptions& opts = {});

inline constexpr Index kDefaultDenseLimit = 512;

class MultipleSolutionsError : public Error {
 public:
  explicit MultipleSolutionsError(Index solution_rank);
  Index solution_rank() const noexcept { return rank_; }

 private:
  Index rank_;
};

/// Stationary vector by dense elimination on (P^T - I) pi = 0, sum(pi) = 1.
RankVector stationary_dense_oracle(const TransitionMatrix& P, Index dense_limit = kDefaultDenseLimit);

/// Empirical visit frequencies of a random walk (state after each transition).
struct WalkHistogram {
  std::vector<std::string> vertices;
  Eigen::VectorXd frequency;
  std::uint64_t steps = 0;
};

/// Two-stage sampling: pick an arc out of the current tail with probability
/// w(e) / d_tail(u), then a head vertex uniformly. Deterministic for a seed.
WalkHistogram simulate_walk(const DirectedHypergraph& hg, Index start, std::uint64_t steps, std::uint64_t seed);

/// Half the L1 distance.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar total_variation(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a - b).template lpNorm<1>() / 2;
}

struct TopK {
  std::vector<std::pair<std::string, double>> entries;
  bool clamped = false;  // k exceeded |V|
};

/// Relative gap under which two rank values count as tied. Well above the
/// float noise left by a converged power iteration, far below 4-decimal output.
inline constexpr double kRankTieTolerance = 1e-9;

/// Descending by value; ties go to the lower vertex index. Values within
/// `tie_tolerance` (relative) of a neighbour in sorted order form one tie group.
TopK top_k(const RankVector& rv, Index k, double tie_tolerance = kRankTieTolerance);

}  // namespace hyperwalk
