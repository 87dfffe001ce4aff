#pragma once

// Test-only oracles, independent of the library's Smith-form path.

#include <vector>

#include "ratk/intlinalg.hpp"

namespace ratk::testing {

// Fraction-free (Bareiss) determinant.
inline Int oracle_det(IntMatrix m) {
  const long n = m.rows();
  if (n != m.cols()) throw std::logic_error("oracle_det: square only");
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      long p = -1;
      for (long i = k + 1; i < n; ++i) {
        if (m(i, k) != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// Adjugate via cofactor expansion; adj(m) * m = det(m) * I.
inline IntMatrix oracle_adjugate(const IntMatrix& m) {
  const long n = m.rows();
  IntMatrix adj(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (long r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (long c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Int cof = oracle_det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

// Enumerates Z^n modulo the column lattice of a square nonsingular matrix.
// Usable for |det| up to a few hundred.
class LatticeQuotientOracle {
 public:
  explicit LatticeQuotientOracle(const IntMatrix& m)
      : m_(m), det_(oracle_det(m)), adj_(oracle_adjugate(m)) {
    if (det_ == 0) throw std::logic_error("lattice oracle: singular matrix");
    enumerate();
  }

  Int order() const { return static_cast<long>(reps_.size()); }

  bool in_lattice(const IntVector& x) const {
    IntVector y = adj_ * x;
    for (long i = 0; i < y.size(); ++i) {
      if (y(i) % det_ != 0) return false;
    }
    return true;
  }

  // Number of residue classes x with k * x in the lattice.
  long count_annihilated(const Int& k) const {
    long cnt = 0;
    for (const auto& r : reps_) {
      if (in_lattice(k * r)) ++cnt;
    }
    return cnt;
  }

  const std::vector<IntVector>& representatives() const { return reps_; }

 private:
  void enumerate() {
    const long n = m_.rows();
    reps_.push_back(IntVector::Zero(n));
    for (size_t head = 0; head < reps_.size(); ++head) {
      for (long i = 0; i < n; ++i) {
        IntVector cand = reps_[head];
        cand(i) += 1;
        bool known = false;
        for (const auto& r : reps_) {
          if (in_lattice(cand - r)) {
            known = true;
            break;
          }
        }
        if (!known) reps_.push_back(cand);
      }
    }
  }

  IntMatrix m_;
  Int det_;
  IntMatrix adj_;
  std::vector<IntVector> reps_;
};

// Count of elements killed by k in the claimed group (free rank must be 0).
inline Int claimed_annihilated(const FgAbGroup& g, const Int& k) {
  Int cnt = 1;
  for (const Int& d : g.torsion) cnt *= gcd(k, d);
  return cnt;
}

}  // namespace ratk::testing
