#include "ratk/intlinalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ratk/errors.hpp"

namespace ratk {

namespace {

// dst -= q * src on rows of M, fused in place to avoid mpz temporaries.
void row_submul(IntMatrix& m, long dst, long src, const Int& q, long from_col) {
  const long n = m.cols();
  for (long k = from_col; k < n; ++k) {
    if (mpz_sgn(m(src, k).get_mpz_t()) != 0) {
      mpz_submul(m(dst, k).get_mpz_t(), q.get_mpz_t(), m(src, k).get_mpz_t());
    }
  }
}

void col_submul(IntMatrix& m, long dst, long src, const Int& q, long from_row) {
  const long n = m.rows();
  for (long k = from_row; k < n; ++k) {
    if (mpz_sgn(m(k, src).get_mpz_t()) != 0) {
      mpz_submul(m(k, dst).get_mpz_t(), q.get_mpz_t(), m(k, src).get_mpz_t());
    }
  }
}

void row_add(IntMatrix& m, long dst, long src, long from_col) {
  const long n = m.cols();
  for (long k = from_col; k < n; ++k) {
    m(dst, k) += m(src, k);
  }
}

struct SnfWorker {
  IntMatrix d;
  IntMatrix u, v;
  bool track;
  int uv_sign = 1;  // det(U) * det(V)

  explicit SnfWorker(const IntMatrix& m, bool track_uv) : d(m), track(track_uv) {
    if (track) {
      u = IntMatrix::Identity(m.rows(), m.rows());
      v = IntMatrix::Identity(m.cols(), m.cols());
    }
  }

  void swap_rows(long a, long b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    if (track) u.row(a).swap(u.row(b));
    uv_sign = -uv_sign;
  }

  void swap_cols(long a, long b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    if (track) v.col(a).swap(v.col(b));
    uv_sign = -uv_sign;
  }

  void negate_row(long a) {
    d.row(a) = -d.row(a);
    if (track) u.row(a) = -u.row(a);
    uv_sign = -uv_sign;
  }

  // Finds the entry of smallest nonzero magnitude in d(s.., s..).
  bool find_pivot(long s, long& pr, long& pc) const {
    bool found = false;
    Int best;
    for (long i = s; i < d.rows(); ++i) {
      for (long j = s; j < d.cols(); ++j) {
        if (mpz_sgn(d(i, j).get_mpz_t()) == 0) continue;
        Int a = abs(d(i, j));
        if (!found || a < best) {
          best = a;
          pr = i;
          pc = j;
          found = true;
          if (best == 1) return true;
        }
      }
    }
    return found;
  }

  bool pivot_is_lone(long s) const {
    for (long i = s + 1; i < d.rows(); ++i) {
      if (d(i, s) != 0) return false;
    }
    for (long j = s + 1; j < d.cols(); ++j) {
      if (d(s, j) != 0) return false;
    }
    return true;
  }

  void run() {
    const long nmin = std::min(d.rows(), d.cols());
    for (long s = 0; s < nmin; ++s) {
      long pr = s, pc = s;
      if (!find_pivot(s, pr, pc)) break;  // remaining submatrix is zero
      swap_rows(s, pr);
      swap_cols(s, pc);

      while (!pivot_is_lone(s)) {
        for (long i = s + 1; i < d.rows(); ++i) {
          if (d(i, s) == 0) continue;
          Int q = d(i, s) / d(s, s);
          if (q != 0) {
            row_submul(d, i, s, q, s);
            if (track) row_submul(u, i, s, q, 0);
          }
          if (d(i, s) != 0) {
            // remainder is strictly smaller; promote it to the pivot slot
            swap_rows(s, i);
          }
        }
        for (long j = s + 1; j < d.cols(); ++j) {
          if (d(s, j) == 0) continue;
          Int q = d(s, j) / d(s, s);
          if (q != 0) {
            col_submul(d, j, s, q, s);
            if (track) col_submul(v, j, s, q, 0);
          }
          if (d(s, j) != 0) {
            swap_cols(s, j);
          }
        }
      }

      // Divisibility sweep: the pivot must divide the rest of the submatrix.
      bool divides_all = true;
      for (long i = s + 1; i < d.rows() && divides_all; ++i) {
        for (long j = s + 1; j < d.cols(); ++j) {
          if (d(i, j) % d(s, s) != 0) {
            row_add(d, s, i, s);
            if (track) row_add(u, s, i, 0);
            divides_all = false;
            break;
          }
        }
      }
      if (!divides_all) {
        --s;  // redo this pivot with the offending row mixed in
        continue;
      }
      if (d(s, s) < 0) negate_row(s);
    }
  }
};

std::vector<Int> diag_factors(const IntMatrix& d) {
  std::vector<Int> out;
  const long nmin = std::min(d.rows(), d.cols());
  for (long i = 0; i < nmin; ++i) {
    if (d(i, i) != 0) out.push_back(d(i, i));
  }
  return out;
}

std::map<Int, std::vector<unsigned long>> prime_power_split(const std::vector<Int>& orders) {
  std::map<Int, std::vector<unsigned long>> exps;
  for (Int n : orders) {
    if (n < 1) throw ValidationError("cyclic order must be >= 1");
    for (Int p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      unsigned long e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      exps[p].push_back(e);
    }
    if (n > 1) exps[n].push_back(1);
  }
  return exps;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
  SnfWorker w(m, /*track_uv=*/true);
  w.run();
  return SmithNormalForm{std::move(w.u), std::move(w.d), std::move(w.v)};
}

std::vector<Int> invariant_factors(const IntMatrix& m) {
  return smith_invariants(m).factors;
}

SmithInvariants smith_invariants(const IntMatrix& m) {
  SnfWorker w(m, /*track_uv=*/false);
  w.run();
  SmithInvariants out;
  out.factors = diag_factors(w.d);
  if (m.rows() == m.cols() &&
      static_cast<long>(out.factors.size()) == m.rows()) {
    out.det_sign = w.uv_sign;  // det(m) = det(D) / (det U det V)
  }
  return out;
}

long integer_rank(const IntMatrix& m) {
  return static_cast<long>(smith_invariants(m).factors.size());
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of non-square matrix");
  SmithInvariants inv = smith_invariants(m);
  if (static_cast<long>(inv.factors.size()) < m.rows()) return 0;
  Int det = 1;
  for (const Int& f : inv.factors) det *= f;
  return det * inv.det_sign;
}

KernelResult kernel(const IntMatrix& m) {
  SmithNormalForm snf = smith_normal_form(m);
  const long r = static_cast<long>(diag_factors(snf.diag).size());
  KernelResult out;
  out.rank = m.cols() - r;
  out.basis = snf.right.rightCols(out.rank);
  return out;
}

FgAbGroup FgAbGroup::free(long rank) {
  FgAbGroup g;
  g.free_rank = rank;
  return g;
}

FgAbGroup FgAbGroup::canonical(long free_rank, const std::vector<Int>& cyclic_orders) {
  auto exps = prime_power_split(cyclic_orders);
  size_t chain_len = 0;
  for (auto& [p, es] : exps) {
    std::sort(es.begin(), es.end(), std::greater<>());
    chain_len = std::max(chain_len, es.size());
  }
  // Largest invariant factor takes the largest exponent of every prime.
  std::vector<Int> chain(chain_len, Int(1));
  for (const auto& [p, es] : exps) {
    for (size_t j = 0; j < es.size(); ++j) {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), es[j]);
      chain[chain_len - 1 - j] *= pe;
    }
  }
  FgAbGroup g;
  g.free_rank = free_rank;
  for (Int& f : chain) {
    if (f >= 2) g.torsion.push_back(std::move(f));
  }
  return g;
}

FgAbGroup FgAbGroup::direct_sum_free(long extra_free_rank) const {
  FgAbGroup g = *this;
  g.free_rank += extra_free_rank;
  if (g.distinguished) {
    g.distinguished->free_coords.resize(g.free_rank, Int(0));
  }
  return g;
}

namespace {

Int element_order(const FgAbGroup& g, const FgAbGroup::Distinguished& e) {
  Int order = 1;
  for (size_t i = 0; i < g.torsion.size(); ++i) {
    const Int& d = g.torsion[i];
    Int gc = gcd(d, e.torsion_coords[i]);
    Int cyc = d / gc;
    order = lcm(order, cyc);
  }
  return order;
}

}  // namespace

UnitClass FgAbGroup::unit_class() const {
  if (!distinguished) return UnitClass::Absent;
  const auto& e = *distinguished;
  bool torsion_zero = true;
  for (size_t i = 0; i < torsion.size(); ++i) {
    if (e.torsion_coords[i] % torsion[i] != 0) torsion_zero = false;
  }
  bool free_zero = std::all_of(e.free_coords.begin(), e.free_coords.end(),
                               [](const Int& c) { return c == 0; });
  if (torsion_zero && free_zero) return UnitClass::Zero;

  if (free_zero && !torsion.empty()) {
    Int torsion_size = 1;
    for (const Int& d : torsion) torsion_size *= d;
    if (element_order(*this, e) == torsion_size) return UnitClass::TorsionGenerator;
  }

  // Member of a minimal generating set iff quotienting by it drops the
  // minimal generator count by exactly one.
  const long n = minimal_generators();
  IntMatrix rel(n, static_cast<long>(torsion.size()) + 1);
  rel.setZero();
  for (long i = 0; i < static_cast<long>(torsion.size()); ++i) {
    rel(i, i) = torsion[i];
  }
  for (long i = 0; i < static_cast<long>(torsion.size()); ++i) {
    rel(i, rel.cols() - 1) = e.torsion_coords[i];
  }
  for (long i = 0; i < free_rank; ++i) {
    rel(static_cast<long>(torsion.size()) + i, rel.cols() - 1) = e.free_coords[i];
  }
  FgAbGroup quotient = cokernel(rel);
  if (quotient.minimal_generators() == n - 1) return UnitClass::Generator;
  return UnitClass::Other;
}

std::string to_string(UnitClass c) {
  switch (c) {
    case UnitClass::Absent: return "absent";
    case UnitClass::Zero: return "zero";
    case UnitClass::TorsionGenerator: return "torsion_generator";
    case UnitClass::Generator: return "generator";
    case UnitClass::Other: return "other";
  }
  return "other";
}

bool operator==(const FgAbGroup& a, const FgAbGroup& b) {
  if (a.free_rank != b.free_rank || a.torsion != b.torsion) return false;
  if (a.distinguished.has_value() != b.distinguished.has_value()) return false;
  if (a.distinguished) {
    if (a.distinguished->torsion_coords != b.distinguished->torsion_coords ||
        a.distinguished->free_coords != b.distinguished->free_coords) {
      return false;
    }
  }
  return true;
}

bool group_iso(const FgAbGroup& a, const FgAbGroup& b) {
  return a.free_rank == b.free_rank && a.torsion == b.torsion;
}

FgAbGroup cokernel(const IntMatrix& m, const std::optional<IntVector>& distinguished) {
  if (distinguished && distinguished->size() != m.rows()) {
    throw ValidationError("distinguished vector length must equal rows");
  }
  SmithNormalForm snf = smith_normal_form(m);
  const long rows = m.rows();
  const long nmin = std::min(m.rows(), m.cols());

  FgAbGroup g;
  long rank_m = 0;
  std::vector<long> torsion_rows;
  for (long i = 0; i < nmin; ++i) {
    if (snf.diag(i, i) == 0) continue;
    ++rank_m;
    if (snf.diag(i, i) >= 2) {
      g.torsion.push_back(snf.diag(i, i));
      torsion_rows.push_back(i);
    }
  }
  g.free_rank = rows - rank_m;

  if (distinguished) {
    IntVector y = snf.left * (*distinguished);
    FgAbGroup::Distinguished e;
    for (size_t t = 0; t < torsion_rows.size(); ++t) {
      Int c = y(torsion_rows[t]) % g.torsion[t];
      if (c < 0) c += g.torsion[t];
      e.torsion_coords.push_back(c);
    }
    for (long i = rank_m; i < rows; ++i) {
      e.free_coords.push_back(y(i));
    }
    g.distinguished = std::move(e);
  }
  return g;
}

}  // namespace ratk
