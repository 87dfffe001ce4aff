#include "ratk/graph_algebra.hpp"

#include "ratk/errors.hpp"

namespace ratk {

void DirectedGraph::validate() const {
  if (vertex_count < 1) throw ValidationError("graph needs at least one vertex");
  for (const auto& [edge, count] : edges) {
    const auto& [from, to] = edge;
    if (from < 0 || from >= vertex_count || to < 0 || to >= vertex_count) {
      throw ValidationError("edge endpoint out of range");
    }
    if (count < 1) throw ValidationError("edge multiplicities must be >= 1");
  }
  for (long v : infinite_emitters) {
    if (v < 0 || v >= vertex_count) {
      throw ValidationError("infinite emitter out of range");
    }
  }
}

IntMatrix graph_k_matrix(const DirectedGraph& g) {
  g.validate();
  std::vector<long> regular;
  for (long v = 0; v < g.vertex_count; ++v) {
    if (!g.infinite_emitters.count(v)) regular.push_back(v);
  }
  IntMatrix m(g.vertex_count, static_cast<long>(regular.size()));
  for (size_t col = 0; col < regular.size(); ++col) {
    const long v = regular[col];
    for (long w = 0; w < g.vertex_count; ++w) {
      m(w, static_cast<long>(col)) = g.multiplicity(w, v) - (w == v ? 1 : 0);
    }
  }
  return m;
}

GraphKTheory graph_k_theory(const DirectedGraph& g) {
  const IntMatrix m = graph_k_matrix(g);
  GraphKTheory out;
  IntVector unit = IntVector::Constant(g.vertex_count, Int(1));
  out.k0 = cokernel(m, unit);
  out.k1 = FgAbGroup::free(kernel(m).rank);
  return out;
}

std::vector<GraphTableRow> builtin_table() {
  std::vector<GraphTableRow> rows;

  DirectedGraph o2;
  o2.vertex_count = 1;
  o2.add_edge(0, 0, 2);
  rows.push_back({"outside_mandelbrot", AlgebraName::O2, o2});

  DirectedGraph q2;
  q2.vertex_count = 2;
  q2.add_edge(0, 0, 2);
  q2.add_edge(1, 1, 2);
  q2.add_edge(0, 1);
  q2.add_edge(1, 0);
  rows.push_back({"hyperbolic_or_parabolic_in_mandelbrot", AlgebraName::Q2, q2});

  DirectedGraph oinf;
  oinf.vertex_count = 1;
  oinf.infinite_emitters.insert(0);  // infinitely many loops
  rows.push_back({"in_mandelbrot_with_connected_complement", AlgebraName::Oinf, oinf});

  // Vertex 0: two loops plus edges to both others; vertex 1: the infinite
  // loop family plus edges to 0 and 2; vertex 2: one loop plus an edge
  // back to 1.
  DirectedGraph q2inf;
  q2inf.vertex_count = 3;
  q2inf.add_edge(0, 0, 2);
  q2inf.add_edge(0, 1);
  q2inf.add_edge(0, 2);
  q2inf.infinite_emitters.insert(1);
  q2inf.add_edge(1, 0);
  q2inf.add_edge(1, 2);
  q2inf.add_edge(2, 2);
  q2inf.add_edge(2, 1);
  rows.push_back({"siegel_cycle_in_fatou_set", AlgebraName::Q2inf, q2inf});

  return rows;
}

}  // namespace ratk
