#pragma once

#include <string>
#include <vector>

#include "ratk/cycles.hpp"
#include "ratk/intlinalg.hpp"

namespace ratk {

enum class AlgebraTag { Sphere, Fatou, Julia };

std::string to_string(AlgebraTag t);

/// The labeled integer matrix whose kernel and cokernel carry the Julia
/// K-theory. Rows: Julia critical points then the extra index u; columns:
/// oriented Herman cycles then u.
struct HermanMatrix {
  IntMatrix matrix;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

struct KTheoryResult {
  FgAbGroup k0;  // carries the class of the unit for the unital algebras
  FgAbGroup k1;
  AlgebraTag tag;
};

/// Assembles the matrix from a Fatou spec:
///   (c, Q) = H_Q(c),  (c, u) = 1,  (u, Q) = Phi(H_Q) - H_Q,  (u, u) = d - 1.
HermanMatrix build_herman_matrix(const FatouSpec& spec);

/// Sphere algebra: K0 = Z^(c+1) with the unit a generator in a minimal
/// generating set, K1 = Z. Needs degree >= 2 and c_sphere >= 2.
KTheoryResult k_sphere(long degree, long c_sphere);

/// Fatou algebra (non-unital): K0 = Z^(c_fatou + f + h), K1 = Z^(f + h).
KTheoryResult k_fatou(long c_fatou, long f, long h);

/// Julia algebra: K1 = ker(H) + Z/omega + Z^|f-1|,
/// K0 = coker(H) + Z^|f+h-1| with the unit the class of u in coker(H).
/// The |.|s cover the empty-Fatou (J = sphere) case literally.
KTheoryResult k_julia(const FatouSpec& spec);

/// Polynomial specialization: K1 = Z^(f-1); K0 = Z/(d-1) + Z^(f-1) with
/// the unit generating the torsion when c_julia = 0, else Z^(c_julia+f-1)
/// with the unit a basis generator.
KTheoryResult k_polynomial(long degree, long c_julia, long f);

struct PolynomialShape {
  long degree;
  long c_julia;
  long f;
};

/// Isomorphism of the Julia algebras of two polynomials: equal nonzero
/// c_julia and equal f, or both c_julia zero with equal degree and f.
bool same_polynomial_algebra(const PolynomialShape& a, const PolynomialShape& b);

/// The other choice of orientation for a Herman cycle: H_Q(c) becomes
/// length - H_Q(c) and the Phi-constant becomes (d-1)*length minus itself.
HermanDescriptor flip_orientation(const HermanDescriptor& d, long degree);

}  // namespace ratk
