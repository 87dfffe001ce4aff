#pragma once

#include <vector>

#include "ratk/config.hpp"
#include "ratk/poly.hpp"
#include "ratk/sphere.hpp"

namespace ratk {

/// A point where the local winding number exceeds one, with that index.
struct CriticalPoint {
  SpherePoint location;
  int index;         // local winding number, >= 2
  int multiplicity;  // index - 1
};

/// A rational self-map of the Riemann sphere, stored as a coefficient-
/// normalized numerator/denominator pair. The coprimality invariant is
/// checked by the dynamics-facing operations (it requires root finding),
/// not silently by the constructor; evaluate reports Indeterminate
/// pointwise when both coordinates vanish.
class RationalMap {
 public:
  RationalMap(Poly numerator, Poly denominator, const Tolerances& tol = {});

  static RationalMap polynomial(Poly p, const Tolerances& tol = {});
  /// z^2 + c
  static RationalMap quadratic(Complex c, const Tolerances& tol = {});

  long degree() const { return degree_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  const Tolerances& tolerances() const { return tol_; }

  SpherePoint operator()(const SpherePoint& z) const { return evaluate(z); }
  SpherePoint evaluate(const SpherePoint& z) const;

  /// Formal derivative (P'Q - PQ')/Q^2, coefficient-exact and unreduced.
  RationalMap derivative() const;

  /// Derivative in the standard charts at z and at its image; this is the
  /// factor a cycle multiplier picks up at z.
  Complex chart_derivative(const SpherePoint& z) const;

  /// The conjugate w -> 1/R(1/w); swapping charts at both ends.
  RationalMap conjugate_by_inversion() const;

  /// Numerator of R' : P'Q - PQ'.
  Poly wronskian() const;

  /// Throws CoprimalityViolation when numerator and denominator share a
  /// root within the coincidence tolerance.
  void require_coprime() const;
  bool is_coprime() const;

  /// Throws unless degree >= 2 and the map is coprime.
  void require_dynamics_ready() const;

 private:
  Poly num_, den_;
  long degree_;
  Tolerances tol_;
};

/// All critical points with indices; total multiplicity is 2d - 2
/// (checked). Requires degree >= 2.
std::vector<CriticalPoint> critical_points(const RationalMap& r);

SpherePoint iterate(const RationalMap& r, SpherePoint z, long n);

/// The n-fold composition as a rational map, built by homogeneous
/// coefficient substitution. Degree is d^n; capped by the budget.
RationalMap iterate_map(const RationalMap& r, long n, long degree_cap = 20000);

}  // namespace ratk
