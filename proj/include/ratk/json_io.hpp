#pragma once

#include <json.hpp>

#include "ratk/cycles.hpp"
#include "ratk/graph_algebra.hpp"
#include "ratk/intlinalg.hpp"
#include "ratk/ktheory.hpp"
#include "ratk/quadratic.hpp"
#include "ratk/rational_map.hpp"

namespace ratk {

using Json = nlohmann::json;

// Finitely generated abelian groups:
// {"free_rank": n, "torsion": [d1, ...],
//  "unit": {"torsion_coords": [...], "free_coords": [...]},
//  "unit_class": "zero" | "torsion_generator" | "generator" | ...}
Json to_json(const FgAbGroup& g);
FgAbGroup group_from_json(const Json& j);

// Maps: {"num": [[re, im], ...], "den": [[re, im], ...]} with coefficients
// lowest degree first, or the shorthand {"quadratic_c": [re, im]}.
RationalMap map_from_json(const Json& j, const Tolerances& tol = {});
Json to_json(const RationalMap& r);

Json to_json(const SpherePoint& p);
Json to_json(const CriticalPoint& cp);
Json to_json(const CycleRecord& rec);

// Fatou specs:
// {"degree": d, "c_julia": k, "c_fatou": m,
//  "fatou_cycles": [{"length": n, "kind": "attracting" | ...}],
//  "herman": [{"length": n, "h_values": {"c1": 1, ...}, "phi_minus_h": t}],
//  "provenance": "declared" | "computed" | "mixed"}
Json to_json(const FatouSpec& spec);
FatouSpec fatou_spec_from_json(const Json& j);

// Graphs: {"vertices": n, "edges": [[v, w, mult], ...],
//          "infinite_emitters": [v, ...]}
Json to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const Json& j);

Json to_json(const KTheoryResult& r);
Json to_json(const Certificate& c);
Json to_json(const QuadVerdict& v);

}  // namespace ratk
