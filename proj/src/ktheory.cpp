#include "ratk/ktheory.hpp"

#include <cstdlib>

#include "ratk/errors.hpp"

namespace ratk {

std::string to_string(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::Sphere: return "sphere";
    case AlgebraTag::Fatou: return "fatou";
    case AlgebraTag::Julia: return "julia";
  }
  return "julia";
}

HermanMatrix build_herman_matrix(const FatouSpec& spec) {
  const long rows = spec.c_julia + 1;
  const long cols = spec.h() + 1;
  HermanMatrix out;
  out.matrix = IntMatrix::Zero(rows, cols);
  out.row_labels = spec.julia_critical_labels;
  out.row_labels.push_back("u");
  for (long q = 0; q < spec.h(); ++q) {
    out.col_labels.push_back("Q" + std::to_string(q));
  }
  out.col_labels.push_back("u");

  for (long i = 0; i < spec.c_julia; ++i) {
    const std::string& label = spec.julia_critical_labels[i];
    for (long q = 0; q < spec.h(); ++q) {
      const auto it = spec.herman[q].h_values.find(label);
      if (it == spec.herman[q].h_values.end()) throw MissingHValue(label);
      out.matrix(i, q) = it->second;
    }
    out.matrix(i, spec.h()) = 1;
  }
  for (long q = 0; q < spec.h(); ++q) {
    out.matrix(spec.c_julia, q) = spec.herman[q].phi_minus_h;
  }
  out.matrix(spec.c_julia, spec.h()) = spec.degree - 1;
  return out;
}

KTheoryResult k_sphere(long degree, long c_sphere) {
  if (degree < 2) throw ValidationError("k_sphere requires degree >= 2");
  if (c_sphere < 2) {
    throw ValidationError("a map of degree >= 2 has at least two critical points");
  }
  KTheoryResult out;
  out.tag = AlgebraTag::Sphere;
  out.k0 = FgAbGroup::free(c_sphere + 1);
  FgAbGroup::Distinguished unit;
  unit.free_coords.assign(c_sphere + 1, Int(0));
  unit.free_coords[0] = 1;
  out.k0.distinguished = std::move(unit);
  out.k1 = FgAbGroup::free(1);
  return out;
}

KTheoryResult k_fatou(long c_fatou, long f, long h) {
  if (c_fatou < 0 || f < 0 || h < 0) throw ValidationError("negative counts");
  if (h > f) throw ValidationError("more Herman cycles than Fatou cycles");
  KTheoryResult out;
  out.tag = AlgebraTag::Fatou;
  out.k0 = FgAbGroup::free(c_fatou + f + h);
  out.k1 = FgAbGroup::free(f + h);
  return out;
}

KTheoryResult k_julia(const FatouSpec& spec) {
  spec.validate();
  if (spec.provenance == Provenance::Computed && !spec.complete) {
    throw IncompleteSpec("census left critical orbits undetermined");
  }
  const HermanMatrix herman = build_herman_matrix(spec);
  const long f = spec.f();
  const long h = spec.h();
  const long w = omega(spec);

  KTheoryResult out;
  out.tag = AlgebraTag::Julia;

  const long ker_rank = kernel(herman.matrix).rank;
  std::vector<Int> k1_torsion;
  if (w >= 2) k1_torsion.push_back(w);
  out.k1 = FgAbGroup::canonical(ker_rank + std::labs(f - 1), k1_torsion);

  IntVector unit = IntVector::Zero(herman.matrix.rows());
  unit(herman.matrix.rows() - 1) = 1;  // class of u
  out.k0 = cokernel(herman.matrix, unit).direct_sum_free(std::labs(f + h - 1));
  return out;
}

KTheoryResult k_polynomial(long degree, long c_julia, long f) {
  if (degree < 2) throw ValidationError("k_polynomial requires degree >= 2");
  if (f < 1) {
    throw ValidationError("a polynomial always has the basin at infinity");
  }
  if (c_julia < 0) throw ValidationError("negative critical count");

  KTheoryResult out;
  out.tag = AlgebraTag::Julia;
  out.k1 = FgAbGroup::free(f - 1);
  if (c_julia == 0) {
    out.k0 = FgAbGroup::canonical(f - 1, {Int(degree - 1)});
    FgAbGroup::Distinguished unit;
    unit.torsion_coords.assign(out.k0.torsion.size(), Int(1));
    unit.free_coords.assign(out.k0.free_rank, Int(0));
    out.k0.distinguished = std::move(unit);
  } else {
    out.k0 = FgAbGroup::free(c_julia + f - 1);
    FgAbGroup::Distinguished unit;
    unit.free_coords.assign(out.k0.free_rank, Int(0));
    unit.free_coords[0] = 1;
    out.k0.distinguished = std::move(unit);
  }
  return out;
}

bool same_polynomial_algebra(const PolynomialShape& a, const PolynomialShape& b) {
  if (a.f < 1 || b.f < 1) throw ValidationError("polynomial shapes need f >= 1");
  if (a.c_julia == 0 && b.c_julia == 0) {
    return a.degree == b.degree && a.f == b.f;
  }
  return a.c_julia == b.c_julia && a.f == b.f;
}

HermanDescriptor flip_orientation(const HermanDescriptor& d, long degree) {
  HermanDescriptor out = d;
  for (auto& [label, value] : out.h_values) value = d.length - value;
  out.phi_minus_h = (degree - 1) * d.length - d.phi_minus_h;
  out.orientation = (d.orientation == "positive") ? "negative" : "positive";
  return out;
}

}  // namespace ratk
