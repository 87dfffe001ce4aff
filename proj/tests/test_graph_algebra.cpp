#include "ratk/graph_algebra.hpp"

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratk/errors.hpp"

using namespace ratk;

TEST_CASE("the Cuntz algebra graph: one vertex, two loops") {
  DirectedGraph g;
  g.vertex_count = 1;
  g.add_edge(0, 0, 2);
  GraphKTheory k = graph_k_theory(g);
  CHECK(k.k0.is_trivial());
  CHECK(k.k1.is_trivial());
}

TEST_CASE("the 2-adic ring algebra graph") {
  DirectedGraph g;
  g.vertex_count = 2;
  g.add_edge(0, 0, 2);
  g.add_edge(1, 1, 2);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  // Symmetric graph, so the K-theory matrix is the familiar [[1,1],[1,1]].
  IntMatrix m = graph_k_matrix(g);
  REQUIRE(m.rows() == 2);
  REQUIRE(m.cols() == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 1);
  CHECK(m(1, 0) == 1);
  CHECK(m(1, 1) == 1);

  GraphKTheory k = graph_k_theory(g);
  CHECK(group_iso(k.k0, FgAbGroup::free(1)));
  CHECK(group_iso(k.k1, FgAbGroup::free(1)));
  CHECK(k.k0.unit_class() == UnitClass::Zero);
}

TEST_CASE("the infinite Cuntz algebra graph") {
  DirectedGraph g;
  g.vertex_count = 1;
  g.infinite_emitters.insert(0);
  GraphKTheory k = graph_k_theory(g);
  CHECK(group_iso(k.k0, FgAbGroup::free(1)));
  CHECK(k.k0.unit_class() == UnitClass::Generator);
  CHECK(k.k1.is_trivial());
}

TEST_CASE("the Siegel-row graph") {
  const auto table = builtin_table();
  const DirectedGraph& g = table.back().graph;
  GraphKTheory k = graph_k_theory(g);
  CHECK(group_iso(k.k0, FgAbGroup::free(2)));
  CHECK(k.k0.unit_class() == UnitClass::Generator);
  CHECK(group_iso(k.k1, FgAbGroup::free(1)));
}

TEST_CASE("builtin table rows reproduce the four quadratic cases") {
  const auto table = builtin_table();
  REQUIRE(table.size() == 4);
  CHECK(table[0].algebra == AlgebraName::O2);
  CHECK(table[1].algebra == AlgebraName::Q2);
  CHECK(table[2].algebra == AlgebraName::Oinf);
  CHECK(table[3].algebra == AlgebraName::Q2inf);

  const QuadCase cases[] = {QuadCase::Case0, QuadCase::Case1, QuadCase::Case3,
                            QuadCase::Case2};
  for (size_t i = 0; i < table.size(); ++i) {
    GraphKTheory graph_route = graph_k_theory(table[i].graph);
    CaseKTheory case_route = case_k_theory(cases[i]);
    CHECK(group_iso(graph_route.k0, case_route.k0));
    CHECK(group_iso(graph_route.k1, case_route.k1));
    CHECK(graph_route.k0.unit_class() == case_route.unit);
  }
}

TEST_CASE("finite graphs: nonzero determinant forces K1 = 0 and |K0| = |det|") {
  std::mt19937 rng(808);
  std::uniform_int_distribution<long> nverts(1, 4);
  std::uniform_int_distribution<long> mult(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    DirectedGraph g;
    g.vertex_count = nverts(rng);
    for (long v = 0; v < g.vertex_count; ++v) {
      for (long w = 0; w < g.vertex_count; ++w) {
        const long m = mult(rng);
        if (m > 0) g.add_edge(v, w, m);
      }
    }
    const IntMatrix m = graph_k_matrix(g);
    const Int det = ratk::testing::oracle_det(m);
    if (det == 0) continue;
    GraphKTheory k = graph_k_theory(g);
    CHECK(k.k1.is_trivial());
    CHECK(k.k0.free_rank == 0);
    Int order = 1;
    for (const Int& d : k.k0.torsion) order *= d;
    CHECK(order == abs(det));
  }
}

TEST_CASE("graph validation") {
  DirectedGraph empty;
  CHECK_THROWS_AS(graph_k_theory(empty), ValidationError);

  DirectedGraph bad;
  bad.vertex_count = 1;
  bad.add_edge(0, 3);
  CHECK_THROWS_AS(graph_k_theory(bad), ValidationError);
}
