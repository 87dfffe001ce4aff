#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ratk/intlinalg.hpp"
#include "ratk/quadratic.hpp"

namespace ratk {

/// Directed multigraph. Infinite edge families (drawn as infinity-labeled
/// loops) are recorded by flagging their vertex; the finite edge map only
/// holds finite multiplicities.
struct DirectedGraph {
  long vertex_count = 0;
  std::map<std::pair<long, long>, long> edges;  // (source, target) -> count
  std::set<long> infinite_emitters;

  long multiplicity(long from, long to) const {
    const auto it = edges.find({from, to});
    return it == edges.end() ? 0 : it->second;
  }
  void add_edge(long from, long to, long count = 1) { edges[{from, to}] += count; }
  void validate() const;
};

struct GraphKTheory {
  FgAbGroup k0;  // unit = class of the sum of vertex projections
  FgAbGroup k1;
};

/// K-theory of the graph algebra in the southern convention: one column
/// per unflagged vertex v holding its incoming multiplicities minus the
/// identity; K0 is the cokernel, K1 the kernel.
GraphKTheory graph_k_theory(const DirectedGraph& g);

/// The matrix described above (rows: all vertices; columns: vertices not
/// flagged as infinite emitters).
IntMatrix graph_k_matrix(const DirectedGraph& g);

struct GraphTableRow {
  std::string region;
  AlgebraName algebra;
  DirectedGraph graph;
};

/// The four quadratic parameter regions with their graph algebras, graphs
/// transcribed as drawn.
std::vector<GraphTableRow> builtin_table();

}  // namespace ratk
