#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperwalk/error.hpp"

namespace hyperwalk {

using Index = Eigen::Index;

/// Row-compressed real matrix. Holds the incidence matrices and P.
using SparseRealMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor, Index>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Directed hyper-arc. `tail` and `head` hold sorted, duplicate-free vertex
/// indices. Empty sides are representable so raw networks can be pruned;
/// validate() rejects them.
struct HyperArc {
  std::string id;
  std::vector<Index> tail;
  std::vector<Index> head;
  double weight = 1.0;

  friend bool operator==(const HyperArc&, const HyperArc&) = default;
};

/// Vertices and arcs in insertion order; that order fixes every matrix layout.
struct DirectedHypergraph {
  std::vector<std::string> vertices;
  std::vector<HyperArc> arcs;

  Index num_vertices() const { return static_cast<Index>(vertices.size()); }
  Index num_arcs() const { return static_cast<Index>(arcs.size()); }

  /// Linear lookup; fine at the sizes this library targets.
  std::optional<Index> find_vertex(const std::string& id) const;

  friend bool operator==(const DirectedHypergraph&, const DirectedHypergraph&) = default;
};

/// Sort and deduplicate a membership list. Returns the number of duplicates dropped.
std::size_t canonicalize_members(std::vector<Index>& members);

/// Empty report means the hypergraph is valid.
ValidationReport validate(const DirectedHypergraph& hg);

/// Throws ValidationError when validate() reports anything.
void require_valid(const DirectedHypergraph& hg);

struct Incidence {
  SparseRealMatrix tail;  // |V| x |E|, 1 where v is in the arc's tail
  SparseRealMatrix head;  // |V| x |E|, 1 where v is in the arc's head
};

Incidence build_incidence(const DirectedHypergraph& hg);

/// Vertex degrees are weight-summed; arc degrees are plain cardinalities.
struct DegreeTables {
  Eigen::VectorXd vertex_tail;
  Eigen::VectorXd vertex_head;
  Eigen::Matrix<Index, Eigen::Dynamic, 1> arc_tail;
  Eigen::Matrix<Index, Eigen::Dynamic, 1> arc_head;

  auto vertex_tail_diagonal() const { return vertex_tail.asDiagonal(); }
  auto vertex_head_diagonal() const { return vertex_head.asDiagonal(); }
  Eigen::VectorXd arc_tail_real() const { return arc_tail.cast<double>(); }
  Eigen::VectorXd arc_head_real() const { return arc_head.cast<double>(); }
};

DegreeTables compute_degrees(const DirectedHypergraph& hg);

/// Arc weights as a vector in arc order; W is its diagonal.
Eigen::VectorXd arc_weights(const DirectedHypergraph& hg);

struct PruneEvent {
  enum class Kind { Vertex, Arc };
  int round;
  Kind kind;
  std::string id;
  std::string reason;
};

/// Sizes after each step of one pruning round.
struct PruneRound {
  int round;
  Index arcs_after_arc_step;
  Index vertices_after_vertex_step;
};

struct PruneLog {
  std::vector<PruneEvent> events;
  std::vector<PruneRound> rounds;

  bool empty() const { return events.empty(); }
};

/// Cascading core extraction. Each round drops arcs with an empty side,
/// then vertices with zero tail or head degree, then strips dropped
/// vertices out of the surviving arcs; rounds repeat until nothing changes.
/// Accepts raw (invalid) input with empty sides.
std::pair<DirectedHypergraph, PruneLog> prune_to_core(const DirectedHypergraph& hg);

}  // namespace hyperwalk
