#include "ratk/rational_map.hpp"

#include <algorithm>
#include <cmath>

#include "ratk/errors.hpp"

namespace ratk {

RationalMap::RationalMap(Poly numerator, Poly denominator, const Tolerances& tol)
    : num_(std::move(numerator)), den_(std::move(denominator)), tol_(tol) {
  if (den_.is_zero()) throw ValidationError("denominator must be nonzero");
  if (num_.is_zero()) throw ValidationError("numerator must be nonzero");
  degree_ = std::max(num_.degree(), den_.degree());
  if (degree_ < 1) throw ValidationError("rational map must have degree >= 1");
  // Common scale normalization; the map is unchanged.
  const double s = std::max(num_.coeff_norm(), den_.coeff_norm());
  num_ = Complex(1.0 / s) * num_;
  den_ = Complex(1.0 / s) * den_;
}

RationalMap RationalMap::polynomial(Poly p, const Tolerances& tol) {
  return RationalMap(std::move(p), Poly::constant(Complex(1)), tol);
}

RationalMap RationalMap::quadratic(Complex c, const Tolerances& tol) {
  return polynomial(Poly({c, Complex(0), Complex(1)}), tol);
}

SpherePoint RationalMap::evaluate(const SpherePoint& z) const {
  Complex p, q;
  double local_scale = 1.0;
  if (z.is_infinity()) {
    p = num_.reversed(degree_)(Complex(0));
    q = den_.reversed(degree_)(Complex(0));
  } else if (std::abs(z.value()) > tol_.chart_switch) {
    const Complex w = Complex(1) / z.value();
    p = num_.reversed(degree_)(w);
    q = den_.reversed(degree_)(w);
  } else {
    p = num_(z.value());
    q = den_(z.value());
    local_scale = std::pow(std::max(1.0, std::abs(z.value())), degree_);
  }
  const double vanish = tol_.coincidence * local_scale *
                        std::max(num_.coeff_norm(), den_.coeff_norm());
  if (std::abs(p) <= vanish && std::abs(q) <= vanish) {
    throw Indeterminate("numerator and denominator both vanish; map not coprime");
  }
  if (std::abs(q) == 0.0) return SpherePoint::infinity();
  const Complex v = p / q;
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    return SpherePoint::infinity();
  }
  return SpherePoint::finite(v);
}

Poly RationalMap::wronskian() const {
  return num_.derivative() * den_ - num_ * den_.derivative();
}

RationalMap RationalMap::derivative() const {
  return RationalMap(wronskian(), den_ * den_, tol_);
}

Complex RationalMap::chart_derivative(const SpherePoint& z) const {
  const SpherePoint image = evaluate(z);
  if (!z.is_infinity()) {
    const Complex zv = z.value();
    if (!image.is_infinity()) {
      const Complex q = den_(zv);
      return wronskian()(zv) / (q * q);
    }
    // target chart 1/w: d(1/R)/dz = -W/P^2
    const Complex p = num_(zv);
    return -wronskian()(zv) / (p * p);
  }
  const Poly a = num_.reversed(degree_);
  const Poly b = den_.reversed(degree_);
  const Poly w = a.derivative() * b - a * b.derivative();
  if (!image.is_infinity()) {
    // R(1/w) near w = 0
    const Complex q = b(Complex(0));
    return w(Complex(0)) / (q * q);
  }
  // 1/R(1/w) near w = 0
  const Complex p = a(Complex(0));
  return -w(Complex(0)) / (p * p);
}

RationalMap RationalMap::conjugate_by_inversion() const {
  return RationalMap(den_.reversed(degree_), num_.reversed(degree_), tol_);
}

bool RationalMap::is_coprime() const {
  if (num_.is_constant() || den_.is_constant()) return true;
  // A common root is a root of the lower-degree factor.
  const bool num_smaller = num_.degree() <= den_.degree();
  const Poly& probe = num_smaller ? num_ : den_;
  const Poly& other = num_smaller ? den_ : num_;
  for (const RootCluster& rc : poly_roots(probe, tol_.root_cluster)) {
    const double scale =
        other.coeff_norm() * std::pow(std::max(1.0, std::abs(rc.root)), other.degree());
    if (std::abs(other(rc.root)) <= tol_.coincidence * scale) return false;
  }
  return true;
}

void RationalMap::require_coprime() const {
  if (!is_coprime()) {
    throw CoprimalityViolation("numerator and denominator share a root");
  }
}

void RationalMap::require_dynamics_ready() const {
  if (degree_ < 2) {
    throw ValidationError("dynamics operations require degree >= 2");
  }
  require_coprime();
}

std::vector<CriticalPoint> critical_points(const RationalMap& r) {
  r.require_dynamics_ready();
  const long d = r.degree();
  const Poly w = r.wronskian();
  if (w.is_zero()) throw ValidationError("degenerate map: vanishing derivative");

  std::vector<CriticalPoint> out;
  long finite_mult = 0;
  if (w.degree() >= 1) {
    for (const RootCluster& rc : poly_roots(w, r.tolerances().root_cluster)) {
      out.push_back({SpherePoint::finite(rc.root), rc.multiplicity + 1, rc.multiplicity});
      finite_mult += rc.multiplicity;
    }
  }
  // Reversal identity: ord_0 of the inverted-chart wronskian is 2d-2-deg(w),
  // so infinity carries whatever multiplicity the finite roots leave over.
  const long inf_mult = 2 * d - 2 - w.degree();
  if (inf_mult > 0) {
    out.push_back({SpherePoint::infinity(), static_cast<int>(inf_mult) + 1,
                   static_cast<int>(inf_mult)});
  }
  if (finite_mult + std::max(inf_mult, 0L) != 2 * d - 2) {
    throw NonConvergence(0, "critical multiplicities violate Riemann-Hurwitz");
  }
  return out;
}

SpherePoint iterate(const RationalMap& r, SpherePoint z, long n) {
  if (n < 0) throw ValidationError("iterate requires n >= 0");
  for (long i = 0; i < n; ++i) z = r.evaluate(z);
  return z;
}

namespace {

// Homogeneous substitution: sum_i c_i A^i B^(D-i) for the degree-D pair.
Poly substitute(const Poly& coeffs, long target_degree,
                const std::vector<Poly>& a_pow, const std::vector<Poly>& b_pow) {
  Poly acc;
  for (long i = 0; i <= coeffs.degree(); ++i) {
    const Complex ci = coeffs.coeff(i);
    if (ci == Complex(0)) continue;
    acc = acc + ci * (a_pow[i] * b_pow[target_degree - i]);
  }
  return acc;
}

}  // namespace

RationalMap iterate_map(const RationalMap& r, long n, long degree_cap) {
  if (n < 1) throw ValidationError("iterate_map requires n >= 1");
  double total = 1;
  for (long i = 0; i < n; ++i) {
    total *= static_cast<double>(r.degree());
    if (total > static_cast<double>(degree_cap)) {
      throw BudgetExceeded("iterate degree exceeds the desk-scale cap");
    }
  }
  Poly pn = r.numerator(), qn = r.denominator();
  const long d = r.degree();
  for (long step = 1; step < n; ++step) {
    std::vector<Poly> a_pow(d + 1), b_pow(d + 1);
    a_pow[0] = Poly::constant(Complex(1));
    b_pow[0] = Poly::constant(Complex(1));
    for (long i = 1; i <= d; ++i) {
      a_pow[i] = a_pow[i - 1] * pn;
      b_pow[i] = b_pow[i - 1] * qn;
    }
    Poly next_p = substitute(r.numerator(), d, a_pow, b_pow);
    Poly next_q = substitute(r.denominator(), d, a_pow, b_pow);
    const double s = std::max(next_p.coeff_norm(), next_q.coeff_norm());
    pn = Complex(1.0 / s) * next_p;
    qn = Complex(1.0 / s) * next_q;
  }
  return RationalMap(std::move(pn), std::move(qn), r.tolerances());
}

}  // namespace ratk
