#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

namespace Eigen {

// Exact integer scalar for Eigen dense types.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  using Literal = long;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

// Allow expressions mixing plain integer literals with mpz matrices.
template <typename BinOp>
struct ScalarBinaryOpTraits<mpz_class, int, BinOp> {
  typedef mpz_class ReturnType;
};
template <typename BinOp>
struct ScalarBinaryOpTraits<int, mpz_class, BinOp> {
  typedef mpz_class ReturnType;
};
template <typename BinOp>
struct ScalarBinaryOpTraits<mpz_class, long, BinOp> {
  typedef mpz_class ReturnType;
};
template <typename BinOp>
struct ScalarBinaryOpTraits<long, mpz_class, BinOp> {
  typedef mpz_class ReturnType;
};

}  // namespace Eigen

namespace ratk {

using Int = mpz_class;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;

/// U * input * V = diag with U, V unimodular and diag's entries forming a
/// divisibility chain d1 | d2 | ..., all nonnegative.
struct SmithNormalForm {
  IntMatrix left;   // U
  IntMatrix diag;   // D
  IntMatrix right;  // V
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Nonzero diagonal entries of the Smith form, in chain order.
std::vector<Int> invariant_factors(const IntMatrix& m);

/// Invariant factors computed without accumulating U and V, plus the
/// sign of det(m) for square m (0 when singular or non-square).
struct SmithInvariants {
  std::vector<Int> factors;
  int det_sign = 0;
};

SmithInvariants smith_invariants(const IntMatrix& m);

long integer_rank(const IntMatrix& m);

/// Determinant via the Smith form; exact. Requires a square matrix.
Int determinant(const IntMatrix& m);

/// Basis of {x : m x = 0} over the integers, one column per basis vector.
/// rank equals cols(m) - integer rank.
struct KernelResult {
  long rank = 0;
  IntMatrix basis;  // cols(m) x rank
};

KernelResult kernel(const IntMatrix& m);

/// How the distinguished element sits inside its group.
enum class UnitClass {
  Absent,            // no distinguished element tracked
  Zero,              // the element is 0
  TorsionGenerator,  // nonzero, free part 0, generates the torsion subgroup
  Generator,         // member of some minimal generating set
  Other,
};

std::string to_string(UnitClass c);

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
/// d1 | d2 | ... and every di >= 2, plus an optional distinguished element
/// written in (torsion, free) coordinates.
struct FgAbGroup {
  long free_rank = 0;
  std::vector<Int> torsion;

  struct Distinguished {
    std::vector<Int> torsion_coords;  // reduced mod the matching factor
    std::vector<Int> free_coords;
  };
  std::optional<Distinguished> distinguished;

  /// Normalizes an arbitrary list of cyclic orders (>= 1 each; 1s dropped)
  /// into invariant-factor form.
  static FgAbGroup canonical(long free_rank, const std::vector<Int>& cyclic_orders);

  static FgAbGroup trivial() { return FgAbGroup{}; }
  static FgAbGroup free(long rank);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

  /// Number of elements in a minimal generating set.
  long minimal_generators() const {
    return free_rank + static_cast<long>(torsion.size());
  }

  UnitClass unit_class() const;

  /// Direct sum; keeps this group's distinguished element (padded with
  /// zero coordinates in the other summand).
  FgAbGroup direct_sum_free(long extra_free_rank) const;
};

bool operator==(const FgAbGroup& a, const FgAbGroup& b);

/// Isomorphism test: equal free ranks and equal invariant factors.
/// Distinguished elements are ignored.
bool group_iso(const FgAbGroup& a, const FgAbGroup& b);

/// Z^rows(m) / column-span(m), presented in invariant-factor form. The
/// optional distinguished vector (length rows(m)) is carried through to
/// coordinates in the quotient.
FgAbGroup cokernel(const IntMatrix& m,
                   const std::optional<IntVector>& distinguished = std::nullopt);

}  // namespace ratk
