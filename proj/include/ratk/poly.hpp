#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "ratk/config.hpp"
#include "ratk/sphere.hpp"

namespace ratk {

/// Dense complex polynomial, coefficients lowest degree first. Trailing
/// coefficients below a relative trim tolerance are dropped on
/// construction; the empty coefficient list is the zero polynomial.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Complex> coeffs, double trim_tol = 1e-12);
  Poly(std::initializer_list<Complex> coeffs);

  static Poly constant(Complex c) { return Poly({c}); }
  static Poly identity() { return Poly({Complex(0), Complex(1)}); }
  /// Monic polynomial with the given roots.
  static Poly from_roots(std::span<const Complex> roots);

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(coeffs_.size())) ? coeffs_[i]
                                                             : Complex(0);
  }
  Complex leading() const { return coeffs_.empty() ? Complex(0) : coeffs_.back(); }

  /// Largest coefficient magnitude (0 for the zero polynomial).
  double coeff_norm() const;

  Complex operator()(Complex z) const;  // Horner
  Poly derivative() const;

  /// w^n p(1/w): the reversal padded to the given degree (n >= degree()).
  Poly reversed(long n) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Complex s, const Poly& p);

 private:
  std::vector<Complex> coeffs_;
};

struct RootCluster {
  Complex root;
  int multiplicity;
};

/// All roots of p with multiplicities, via Aberth-Ehrlich simultaneous
/// iteration from perturbed unit-circle starting points. Roots closer
/// than the clustering tolerance are merged and polished on the
/// appropriate derivative. Multiplicities sum to degree(p).
///
/// Throws NonConvergence when the iteration budget runs out.
std::vector<RootCluster> poly_roots(const Poly& p, double cluster_tol = 1e-8,
                                    int max_iter = 400);

}  // namespace ratk
