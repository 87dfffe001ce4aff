#include "ratk/shift_model.hpp"

#include "ratk/errors.hpp"

namespace ratk {

namespace {

void check_level(int k, const Config& cfg) {
  if (k < 1) throw ValidationError("cylinder level must be >= 1");
  if (k > cfg.budget.shift_level_cap) {
    throw BudgetExceeded("cylinder level beyond the desk-scale cap");
  }
}

}  // namespace

CylinderLevel CylinderLevel::at(int k) {
  if (k < 1) throw ValidationError("cylinder level must be >= 1");
  return CylinderLevel{k, 1L << k};
}

IntMatrix phi_matrix(int k, const Config& cfg) {
  check_level(k, cfg);
  const long dim = 1L << k;
  const long tail_mask = (1L << (k - 1)) - 1;  // strips the leading letter
  IntMatrix m = IntMatrix::Zero(dim, dim);
  for (long w = 0; w < dim; ++w) {
    const long base = (w & tail_mask) << 1;
    m(base, w) += 1;
    m(base + 1, w) += 1;
  }
  return m;
}

IntMatrix refinement_matrix(int k, const Config& cfg) {
  check_level(k, cfg);
  if (k + 1 > cfg.budget.shift_level_cap) {
    throw BudgetExceeded("refined level beyond the desk-scale cap");
  }
  const long dim = 1L << k;
  IntMatrix m = IntMatrix::Zero(2 * dim, dim);
  for (long w = 0; w < dim; ++w) {
    m(2 * w, w) = 1;      // append 0
    m(2 * w + 1, w) = 1;  // append 1
  }
  return m;
}

ShiftInvariants id_minus_phi_invariants(int k, const Config& cfg) {
  const IntMatrix phi = phi_matrix(k, cfg);
  const long dim = phi.rows();
  IntMatrix m = IntMatrix::Identity(dim, dim) - phi;

  const SmithInvariants inv = smith_invariants(m);
  ShiftInvariants out;
  const long rank = static_cast<long>(inv.factors.size());
  if (rank == dim) {
    Int det = inv.det_sign;
    for (const Int& f : inv.factors) det *= f;
    out.det = det;
  } else {
    out.det = 0;
  }
  out.kernel_rank = dim - rank;
  std::vector<Int> torsion;
  for (const Int& f : inv.factors) {
    if (f >= 2) torsion.push_back(f);
  }
  out.cokernel = FgAbGroup::canonical(dim - rank, torsion);
  return out;
}

FgAbGroup connected_julia_scalar_check(long d) {
  if (d < 2) throw ValidationError("degree must be >= 2");
  IntMatrix m(1, 1);
  m(0, 0) = 1 - d;
  IntVector unit(1);
  unit(0) = 1;
  return cokernel(m, unit);
}

}  // namespace ratk
