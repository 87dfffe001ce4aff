#pragma once

#include <cmath>
#include <complex>

#include "ratk/errors.hpp"

namespace ratk {

using Complex = std::complex<double>;

/// A point of the Riemann sphere: either a finite complex number or the
/// point at infinity.
class SpherePoint {
 public:
  static SpherePoint infinity() { return SpherePoint(Complex(0, 0), true); }

  static SpherePoint finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ValidationError("finite sphere point requires finite coordinates");
    }
    return SpherePoint(z, false);
  }

  bool is_infinity() const { return at_infinity_; }

  Complex value() const {
    if (at_infinity_) throw ValidationError("value() of the point at infinity");
    return z_;
  }

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    if (a.at_infinity_ != b.at_infinity_) return false;
    return a.at_infinity_ || a.z_ == b.z_;
  }

 private:
  SpherePoint(Complex z, bool inf) : z_(z), at_infinity_(inf) {}
  Complex z_;
  bool at_infinity_;
};

/// Chordal metric on the sphere, range [0, 2]. Chart-independent.
inline double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() && b.is_infinity()) return 0.0;
  if (a.is_infinity() || b.is_infinity()) {
    const Complex z = a.is_infinity() ? b.value() : a.value();
    return 2.0 / std::sqrt(1.0 + std::norm(z));
  }
  const Complex z = a.value(), w = b.value();
  return 2.0 * std::abs(z - w) /
         std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

}  // namespace ratk
