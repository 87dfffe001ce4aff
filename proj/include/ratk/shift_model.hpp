#pragma once

#include "ratk/config.hpp"
#include "ratk/intlinalg.hpp"

namespace ratk {

/// Cylinder-function basis of the full 2-shift at word length k.
struct CylinderLevel {
  int k;
  long dim;  // 2^k
  static CylinderLevel at(int k);
};

/// Transfer matrix on level-k cylinder functions:
/// e_{w1..wk} -> e_{w2..wk 0} + e_{w2..wk 1}. Words are indexed with w1 as
/// the most significant bit. Levels run 1..12 (desk-scale cap).
IntMatrix phi_matrix(int k, const Config& cfg = {});

/// Refinement from level k to k+1: e_w -> e_{w0} + e_{w1}. Intertwines
/// the transfer matrices exactly.
IntMatrix refinement_matrix(int k, const Config& cfg = {});

struct ShiftInvariants {
  Int det;
  long kernel_rank;
  FgAbGroup cokernel;
};

/// Exact invariants of id - Phi at level k.
ShiftInvariants id_minus_phi_invariants(int k, const Config& cfg = {});

/// On a connected Julia set the transfer operator multiplies constants by
/// d; the cokernel of (1 - d) on Z is Z/(d-1) with the unit generating.
FgAbGroup connected_julia_scalar_check(long d);

}  // namespace ratk
