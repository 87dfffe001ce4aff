#pragma once

#include <optional>
#include <string>

#include "ratk/cycles.hpp"
#include "ratk/intlinalg.hpp"

namespace ratk {

enum class QuadCase { Case0, Case1, Case2, Case3, Unresolved };
enum class AlgebraName { O2, Q2, Q2inf, Oinf, Unknown };

std::string to_string(QuadCase c);
std::string to_string(AlgebraName a);

struct Certificate {
  enum class Kind {
    None,
    EscapeCertified,
    AttractingCycle,
    ParabolicCycle,
    SiegelMultiplier,
    MisiurewiczExact,
  };
  Kind kind = Kind::None;
  long escape_step = -1;                 // EscapeCertified
  long period = 0;                       // all cycle-backed kinds
  Complex multiplier{0.0, 0.0};          // cycle-backed kinds
  std::optional<RotationSnap> rotation;  // ParabolicCycle
  double rotation_number = 0.0;          // SiegelMultiplier
  int bounded_type_depth = 0;            // SiegelMultiplier (hypothesis depth)
  long preperiod = -1;                   // MisiurewiczExact
};

std::string to_string(Certificate::Kind k);

struct QuadVerdict {
  QuadCase verdict = QuadCase::Unresolved;
  Certificate certificate;
  FgAbGroup k0, k1;
  AlgebraName algebra = AlgebraName::Unknown;
};

/// Decides which of the four quadratic cases c falls into, with an
/// explicit certificate. Case 2 carries a bounded-type hypothesis (the
/// continued-fraction certificate is finite); the genuinely undecidable
/// region resolves to Unresolved rather than a guess.
QuadVerdict classify_quadratic(Complex c, const Config& cfg = {});

struct CaseKTheory {
  FgAbGroup k0, k1;
  UnitClass unit;
};

/// The exact groups of each case, hardcoded from the classification;
/// kept independent of the k_polynomial route so the two can be compared.
CaseKTheory case_k_theory(QuadCase c);

struct Membership {
  std::optional<bool> value;  // empty: unknown at this budget
  Certificate certificate;
};

/// c is in the Mandelbrot set iff K_0 of the Julia algebra is nonzero.
Membership mandelbrot_membership_by_k(Complex c, const Config& cfg = {});

}  // namespace ratk
