#include <doctest.h>

#include "hyperwalk/hypergraph.hpp"
#include "support.hpp"

using namespace hyperwalk;
using hyperwalk::testing::arc;

namespace {

bool has_rule(const ValidationReport& r, ErrorCode code, const std::string& subject) {
  return std::any_of(r.begin(), r.end(), [&](const Violation& v) { return v.rule == code && v.subject == subject; });
}

}  // namespace

TEST_CASE("validate accepts a minimal arc and reports each violation") {
  DirectedHypergraph ok{{"a", "b"}, {arc("e", {0}, {1})}};
  CHECK(validate(ok).empty());

  DirectedHypergraph overlap{{"a", "b"}, {arc("e", {0}, {0, 1})}};
  auto r = validate(overlap);
  REQUIRE(r.size() == 1);
  CHECK(r[0].rule == ErrorCode::TailHeadOverlap);
  CHECK(r[0].subject == "e");

  DirectedHypergraph empty_head{{"a"}, {arc("e", {0}, {})}};
  r = validate(empty_head);
  REQUIRE(r.size() == 1);
  CHECK(r[0].rule == ErrorCode::EmptyHead);

  DirectedHypergraph many{{"a", "b", "a"},
                          {arc("t", {}, {1}), arc("w", {0}, {1}, 0.0), arc("u", {0}, {7}), arc("n", {1}, {0}, -2.0)}};
  r = validate(many);
  CHECK(has_rule(r, ErrorCode::DuplicateVertexId, "a"));
  CHECK(has_rule(r, ErrorCode::EmptyTail, "t"));
  CHECK(has_rule(r, ErrorCode::NonpositiveWeight, "w"));
  CHECK(has_rule(r, ErrorCode::NonpositiveWeight, "n"));
  CHECK(has_rule(r, ErrorCode::UnknownVertex, "u"));
  CHECK_THROWS_AS(require_valid(many), ValidationError);
}

TEST_CASE("incidence of a single arc") {
  DirectedHypergraph hg{{"a", "b"}, {arc("e", {0}, {1})}};
  auto inc = build_incidence(hg);
  CHECK(Eigen::MatrixXd(inc.tail) == (Eigen::MatrixXd(2, 1) << 1, 0).finished());
  CHECK(Eigen::MatrixXd(inc.head) == (Eigen::MatrixXd(2, 1) << 0, 1).finished());
}

TEST_CASE("incidence column sums on HG3") {
  auto inc = build_incidence(testing::hg3());
  Eigen::RowVectorXd tail_cols = Eigen::MatrixXd(inc.tail).colwise().sum();
  Eigen::RowVectorXd head_cols = Eigen::MatrixXd(inc.head).colwise().sum();
  CHECK(tail_cols == Eigen::RowVector3d(1, 1, 1));
  CHECK(head_cols == Eigen::RowVector3d(2, 1, 1));
}

TEST_CASE("incidence propagates validation failure") {
  DirectedHypergraph bad{{"a", "b"}, {arc("e", {0}, {0})}};
  CHECK_THROWS_AS(build_incidence(bad), ValidationError);
  CHECK_THROWS_AS(compute_degrees(bad), ValidationError);
}

TEST_CASE("degrees") {
  SUBCASE("single arc") {
    auto d = compute_degrees({{"a", "b"}, {arc("e", {0}, {1})}});
    CHECK(d.vertex_tail(0) == 1.0);
    CHECK(d.vertex_head(1) == 1.0);
    CHECK(d.arc_tail(0) == 1);
    CHECK(d.arc_head(0) == 1);
  }
  SUBCASE("HG3") {
    auto d = compute_degrees(testing::hg3());
    CHECK(d.vertex_head(2) == 3.0);
    CHECK(d.arc_head(0) == 2);
  }
  SUBCASE("weights scale vertex degrees, not arc degrees") {
    auto d = compute_degrees({{"a", "b", "c"}, {arc("e", {0}, {1, 2}, 2.5)}});
    CHECK(d.vertex_tail(0) == 2.5);
    CHECK(d.vertex_head(1) == 2.5);
    CHECK(d.arc_head(0) == 2);
    Eigen::MatrixXd D = d.vertex_tail_diagonal();
    CHECK(D(0, 0) == 2.5);
  }
}

TEST_CASE("incidence and degree tables agree on random hypergraphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto hg = testing::random_hypergraph(rng, 2, 25, 1, 40);
    auto inc = build_incidence(hg);
    auto d = compute_degrees(hg);
    const Eigen::VectorXd w = arc_weights(hg);

    Eigen::VectorXd tail_rows = inc.tail * w;
    Eigen::VectorXd head_rows = inc.head * w;
    CHECK((tail_rows - d.vertex_tail).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((head_rows - d.vertex_head).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::RowVectorXd tail_cols = Eigen::MatrixXd(inc.tail).colwise().sum();
    Eigen::RowVectorXd head_cols = Eigen::MatrixXd(inc.head).colwise().sum();
    CHECK(tail_cols.transpose() == d.arc_tail_real());
    CHECK(head_cols.transpose() == d.arc_head_real());

    const double tail_total = w.dot(d.arc_tail_real());
    const double head_total = w.dot(d.arc_head_real());
    CHECK(std::abs(d.vertex_tail.sum() - tail_total) <= 1e-12 * tail_total);
    CHECK(std::abs(d.vertex_head.sum() - head_total) <= 1e-12 * head_total);

    for (int k = 0; k < inc.tail.outerSize(); ++k)
      for (SparseRealMatrix::InnerIterator it(inc.tail, k); it; ++it) CHECK(it.value() == 1.0);
  }
}

TEST_CASE("prune leaves a 3-cycle alone") {
  auto hg = testing::cycle(3);
  auto [core, log] = prune_to_core(hg);
  CHECK(core == hg);
  CHECK(log.empty());
  CHECK(log.rounds.empty());
}

TEST_CASE("prune cascades a chain down to nothing") {
  DirectedHypergraph chain{{"a", "b", "c"}, {arc("e1", {0}, {1}), arc("e2", {1}, {2})}};
  auto [core, log] = prune_to_core(chain);
  CHECK(core.vertices.empty());
  CHECK(core.arcs.empty());
  REQUIRE(log.rounds.size() == 2);
  CHECK(log.rounds[0].vertices_after_vertex_step == 1);  // a and c go first
  CHECK(log.rounds[1].arcs_after_arc_step == 0);
  CHECK(log.rounds[1].vertices_after_vertex_step == 0);
  CHECK(log.events.front().round == 1);
  CHECK(log.events.back().id == "b");
  CHECK(log.events.back().round == 2);
}

TEST_CASE("prune removes empty-sided raw arcs and remaps indices") {
  // x only feeds the exchange arc; the rest is a 2-cycle b <-> c.
  DirectedHypergraph raw{{"x", "b", "c"},
                         {arc("EX", {0}, {}), arc("bc", {1}, {2}, 3.0), arc("cb", {2}, {1}), arc("xb", {0}, {1})}};
  auto [core, log] = prune_to_core(raw);
  CHECK(core.vertices == std::vector<std::string>{"b", "c"});
  REQUIRE(core.arcs.size() == 2);
  CHECK(core.arcs[0] == arc("bc", {0}, {1}, 3.0));
  CHECK(core.arcs[1] == arc("cb", {1}, {0}));
  CHECK(log.events[0].id == "EX");
  CHECK(log.events[0].reason == "empty head");
  CHECK(validate(core).empty());
}

TEST_CASE("prune is idempotent and produces a core") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto hg = testing::random_hypergraph(rng, 2, 20, 1, 30);
    auto [core, log] = prune_to_core(hg);
    auto [again, log2] = prune_to_core(core);
    CHECK(again == core);
    CHECK(log2.empty());
    CHECK(validate(core).empty());
    if (core.num_vertices() > 0) {
      auto d = compute_degrees(core);
      CHECK(d.vertex_tail.minCoeff() > 0.0);
      CHECK(d.vertex_head.minCoeff() > 0.0);
    }
  }
}

TEST_CASE("prune rejects structural errors it cannot repair") {
  DirectedHypergraph bad{{"a", "b"}, {arc("e", {0}, {0, 1})}};
  CHECK_THROWS_AS(prune_to_core(bad), ValidationError);
}
