#include "ratk/json_io.hpp"

#include "ratk/errors.hpp"

namespace ratk {

namespace {

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<long>(v.get_si());
  return v.get_str();  // decimal string beyond 64 bits
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw ValidationError("expected an integer or decimal string");
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError("complex numbers are [re, im] pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Poly poly_from_json(const Json& j) {
  std::vector<Complex> coeffs;
  for (const Json& c : j) coeffs.push_back(complex_from_json(c));
  return Poly(std::move(coeffs));
}

Json poly_to_json(const Poly& p) {
  Json arr = Json::array();
  for (const Complex& c : p.coeffs()) arr.push_back(complex_to_json(c));
  return arr;
}

CycleKind kind_from_string(const std::string& s) {
  if (s == "attracting") return CycleKind::Attracting;
  if (s == "parabolic") return CycleKind::Parabolic;
  if (s == "siegel") return CycleKind::Siegel;
  if (s == "herman") return CycleKind::Herman;
  throw ValidationError("unknown cycle kind '" + s + "'");
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "computed") return Provenance::Computed;
  if (s == "declared") return Provenance::Declared;
  if (s == "mixed") return Provenance::Mixed;
  throw ValidationError("unknown provenance '" + s + "'");
}

}  // namespace

Json to_json(const FgAbGroup& g) {
  Json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = Json::array();
  for (const Int& d : g.torsion) j["torsion"].push_back(int_to_json(d));
  if (g.distinguished) {
    Json unit;
    unit["torsion_coords"] = Json::array();
    for (const Int& c : g.distinguished->torsion_coords) {
      unit["torsion_coords"].push_back(int_to_json(c));
    }
    unit["free_coords"] = Json::array();
    for (const Int& c : g.distinguished->free_coords) {
      unit["free_coords"].push_back(int_to_json(c));
    }
    j["unit"] = std::move(unit);
    j["unit_class"] = to_string(g.unit_class());
  }
  return j;
}

FgAbGroup group_from_json(const Json& j) {
  FgAbGroup g;
  g.free_rank = j.at("free_rank").get<long>();
  std::vector<Int> torsion;
  for (const Json& d : j.value("torsion", Json::array())) {
    torsion.push_back(int_from_json(d));
  }
  g = FgAbGroup::canonical(g.free_rank, torsion);
  if (j.contains("unit")) {
    FgAbGroup::Distinguished unit;
    for (const Json& c : j["unit"].value("torsion_coords", Json::array())) {
      unit.torsion_coords.push_back(int_from_json(c));
    }
    for (const Json& c : j["unit"].value("free_coords", Json::array())) {
      unit.free_coords.push_back(int_from_json(c));
    }
    if (unit.torsion_coords.size() != g.torsion.size() ||
        unit.free_coords.size() != static_cast<size_t>(g.free_rank)) {
      throw ValidationError("unit coordinates do not match the presentation");
    }
    for (size_t i = 0; i < g.torsion.size(); ++i) {
      unit.torsion_coords[i] %= g.torsion[i];
      if (unit.torsion_coords[i] < 0) unit.torsion_coords[i] += g.torsion[i];
    }
    g.distinguished = std::move(unit);
  }
  return g;
}

RationalMap map_from_json(const Json& j, const Tolerances& tol) {
  if (j.contains("quadratic_c")) {
    return RationalMap::quadratic(complex_from_json(j["quadratic_c"]), tol);
  }
  if (!j.contains("num")) throw ValidationError("map JSON needs 'num' or 'quadratic_c'");
  Poly num = poly_from_json(j.at("num"));
  Poly den = j.contains("den") ? poly_from_json(j["den"]) : Poly::constant(Complex(1));
  return RationalMap(std::move(num), std::move(den), tol);
}

Json to_json(const RationalMap& r) {
  Json j;
  j["num"] = poly_to_json(r.numerator());
  j["den"] = poly_to_json(r.denominator());
  j["degree"] = r.degree();
  return j;
}

Json to_json(const SpherePoint& p) {
  if (p.is_infinity()) return "infinity";
  return complex_to_json(p.value());
}

Json to_json(const CriticalPoint& cp) {
  Json j;
  j["location"] = to_json(cp.location);
  j["index"] = cp.index;
  j["multiplicity"] = cp.multiplicity;
  return j;
}

Json to_json(const CycleRecord& rec) {
  Json j;
  j["period"] = rec.period;
  j["points"] = Json::array();
  for (const SpherePoint& p : rec.points) j["points"].push_back(to_json(p));
  j["multiplier"] = complex_to_json(rec.multiplier);
  j["class"] = to_string(rec.cls);
  if (rec.parabolic) {
    j["rotation"] = Json::array({rec.parabolic->num, rec.parabolic->den});
  }
  if (rec.rotation_number) j["rotation_number"] = *rec.rotation_number;
  return j;
}

Json to_json(const FatouSpec& spec) {
  Json j;
  j["degree"] = spec.degree;
  j["c_julia"] = spec.c_julia;
  j["c_fatou"] = spec.c_fatou;
  j["julia_critical_labels"] = spec.julia_critical_labels;
  j["fatou_cycles"] = Json::array();
  for (const FatouCycle& fc : spec.fatou_cycles) {
    Json c;
    c["length"] = fc.length;
    c["kind"] = to_string(fc.kind);
    c["confident"] = fc.confident;
    if (!fc.attracting_criticals.empty()) {
      c["attracting_criticals"] = fc.attracting_criticals;
    }
    j["fatou_cycles"].push_back(std::move(c));
  }
  j["herman"] = Json::array();
  for (const HermanDescriptor& hd : spec.herman) {
    Json h;
    h["length"] = hd.length;
    h["h_values"] = Json::object();
    for (const auto& [label, value] : hd.h_values) h["h_values"][label] = value;
    h["phi_minus_h"] = hd.phi_minus_h;
    h["orientation"] = hd.orientation;
    j["herman"].push_back(std::move(h));
  }
  j["provenance"] = to_string(spec.provenance);
  j["complete"] = spec.complete;
  return j;
}

FatouSpec fatou_spec_from_json(const Json& j) {
  FatouSpec spec;
  spec.degree = j.at("degree").get<long>();
  spec.c_julia = j.value("c_julia", 0L);
  spec.c_fatou = j.value("c_fatou", 0L);
  for (const Json& c : j.value("fatou_cycles", Json::array())) {
    FatouCycle fc;
    fc.length = c.at("length").get<long>();
    fc.kind = kind_from_string(c.at("kind").get<std::string>());
    fc.confident = c.value("confident", true);
    spec.fatou_cycles.push_back(fc);
  }
  for (const Json& h : j.value("herman", Json::array())) {
    HermanDescriptor hd;
    hd.length = h.at("length").get<long>();
    const Json h_values = h.value("h_values", Json::object());
    for (const auto& [label, value] : h_values.items()) {
      hd.h_values[label] = value.get<long>();
    }
    hd.phi_minus_h = h.value("phi_minus_h", 0L);
    hd.orientation = h.value("orientation", std::string("positive"));
    spec.herman.push_back(std::move(hd));
  }
  if (j.contains("julia_critical_labels")) {
    spec.julia_critical_labels =
        j["julia_critical_labels"].get<std::vector<std::string>>();
  } else if (!spec.herman.empty()) {
    // Labels come from the descriptors when not given explicitly.
    for (const auto& [label, value] : spec.herman.front().h_values) {
      spec.julia_critical_labels.push_back(label);
    }
  } else {
    for (long i = 0; i < spec.c_julia; ++i) {
      spec.julia_critical_labels.push_back("c" + std::to_string(i + 1));
    }
  }
  if (static_cast<long>(spec.julia_critical_labels.size()) != spec.c_julia) {
    throw ValidationError("julia critical labels disagree with c_julia");
  }
  spec.provenance =
      provenance_from_string(j.value("provenance", std::string("declared")));
  spec.complete = j.value("complete", true);
  spec.validate();
  return spec;
}

Json to_json(const DirectedGraph& g) {
  Json j;
  j["vertices"] = g.vertex_count;
  j["edges"] = Json::array();
  for (const auto& [edge, count] : g.edges) {
    j["edges"].push_back(Json::array({edge.first, edge.second, count}));
  }
  j["infinite_emitters"] = Json::array();
  for (long v : g.infinite_emitters) j["infinite_emitters"].push_back(v);
  return j;
}

DirectedGraph graph_from_json(const Json& j) {
  DirectedGraph g;
  g.vertex_count = j.at("vertices").get<long>();
  for (const Json& e : j.value("edges", Json::array())) {
    if (!e.is_array() || e.size() != 3) {
      throw ValidationError("edges are [from, to, multiplicity] triples");
    }
    g.add_edge(e[0].get<long>(), e[1].get<long>(), e[2].get<long>());
  }
  for (const Json& v : j.value("infinite_emitters", Json::array())) {
    g.infinite_emitters.insert(v.get<long>());
  }
  g.validate();
  return g;
}

Json to_json(const KTheoryResult& r) {
  Json j;
  j["algebra"] = to_string(r.tag);
  j["k0"] = to_json(r.k0);
  j["k1"] = to_json(r.k1);
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  switch (c.kind) {
    case Certificate::Kind::EscapeCertified:
      j["escape_step"] = c.escape_step;
      break;
    case Certificate::Kind::AttractingCycle:
      j["period"] = c.period;
      j["multiplier"] = complex_to_json(c.multiplier);
      break;
    case Certificate::Kind::ParabolicCycle:
      j["period"] = c.period;
      j["multiplier"] = complex_to_json(c.multiplier);
      if (c.rotation) j["rotation"] = Json::array({c.rotation->num, c.rotation->den});
      break;
    case Certificate::Kind::SiegelMultiplier:
      j["period"] = c.period;
      j["multiplier"] = complex_to_json(c.multiplier);
      j["rotation_number"] = c.rotation_number;
      j["bounded_type_depth"] = c.bounded_type_depth;
      break;
    case Certificate::Kind::MisiurewiczExact:
      j["preperiod"] = c.preperiod;
      j["period"] = c.period;
      j["multiplier"] = complex_to_json(c.multiplier);
      break;
    case Certificate::Kind::None:
      break;
  }
  return j;
}

Json to_json(const QuadVerdict& v) {
  Json j;
  j["case"] = to_string(v.verdict);
  j["certificate"] = to_json(v.certificate);
  if (v.verdict != QuadCase::Unresolved) {
    j["k0"] = to_json(v.k0);
    j["k1"] = to_json(v.k1);
    j["algebra"] = to_string(v.algebra);
  }
  return j;
}

}  // namespace ratk
