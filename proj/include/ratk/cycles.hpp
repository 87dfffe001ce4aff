#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratk/config.hpp"
#include "ratk/rational_map.hpp"

namespace ratk {

enum class CycleClass {
  Superattracting,
  Attracting,
  Parabolic,
  SiegelCandidate,
  CremerCandidate,  // reserved; classification refuses to guess and emits
  Unresolved,       // Unresolved for non-bounded-type neutral multipliers
  Repelling,
};

std::string to_string(CycleClass c);

struct RotationSnap {
  long num;  // p/q in lowest terms, 0 <= p < q <= 64
  long den;
};

struct CycleClassification {
  CycleClass cls;
  std::optional<RotationSnap> parabolic;   // set for Parabolic
  std::optional<double> rotation_number;   // set for SiegelCandidate
  bool bounded_type = false;               // continued-fraction certificate held
};

/// Places a multiplier in the Fatou-Julia-Sullivan taxonomy. Neutral
/// multipliers snap to a rational rotation (Parabolic) at denominators up
/// to tol.max_snap_denominator, else earn a bounded-type continued-
/// fraction certificate (SiegelCandidate), else stay Unresolved.
CycleClassification classify_cycle(Complex multiplier, const Tolerances& tol = {});

struct CycleRecord {
  std::vector<SpherePoint> points;  // orbit order; size == period
  long period = 0;
  Complex multiplier{0.0, 0.0};
  CycleClass cls = CycleClass::Unresolved;
  std::optional<RotationSnap> parabolic;
  std::optional<double> rotation_number;
  // root multiplicity each cycle point carries in the period-n equation
  int point_multiplicity = 1;
};

/// Product of chart-corrected derivatives along the cycle. Throws
/// NotACycle unless each point maps to the next within the orbit
/// tolerance (chordal).
Complex multiplier(const RationalMap& r, const std::vector<SpherePoint>& cycle);

/// Every period-n point of r grouped into cycles of exact period dividing
/// n. Total root count with multiplicity (plus the one at infinity) is
/// d^n + 1.
std::vector<CycleRecord> periodic_points(const RationalMap& r, long n,
                                         const Config& cfg = {});

enum class OrbitOutcomeKind { Escaped, ConvergedToCycle, Preperiodic, Undetermined };

struct OrbitOutcome {
  OrbitOutcomeKind kind = OrbitOutcomeKind::Undetermined;
  long escape_step = -1;             // Escaped
  std::optional<CycleRecord> cycle;  // ConvergedToCycle / Preperiodic
  long preperiod = -1;               // Preperiodic
  bool exact = false;                // resolved by the exact integer path
};

/// Follows a critical orbit. Escaped is certified (polynomials only, at a
/// bailout no smaller than the coefficient-derived radius); preperiodicity
/// is claimed only on the exact Gaussian-integer path; everything else
/// resolves to a cycle or stays Undetermined.
OrbitOutcome critical_orbit(const RationalMap& r, const SpherePoint& start,
                            long max_iter, double escape_radius,
                            const Config& cfg = {});

/// Certified escape radius: beyond it a polynomial orbit grows
/// monotonically to infinity. max(2,|c|) for z^2+c.
double certified_bailout(const RationalMap& r);

enum class CycleKind { Attracting, Parabolic, Siegel, Herman };
enum class Provenance { Computed, Declared, Mixed };

std::string to_string(CycleKind k);
std::string to_string(Provenance p);

struct HermanDescriptor {
  long length = 1;
  std::map<std::string, long> h_values;  // julia critical label -> H_Q(c)
  long phi_minus_h = 0;                  // Phi(H_Q) - H_Q, a constant
  std::string orientation = "positive";  // one of two symbolic orientations
};

struct FatouCycle {
  long length = 1;
  CycleKind kind = CycleKind::Attracting;
  bool confident = true;
  std::vector<std::string> attracting_criticals;
};

/// Combinatorial Fatou data: everything the K-theory formulas consume.
struct FatouSpec {
  long degree = 2;
  std::vector<std::string> julia_critical_labels;
  long c_julia = 0;
  long c_fatou = 0;
  std::vector<FatouCycle> fatou_cycles;
  std::vector<HermanDescriptor> herman;
  Provenance provenance = Provenance::Declared;
  bool complete = true;

  long f() const { return static_cast<long>(fatou_cycles.size()); }
  long h() const { return static_cast<long>(herman.size()); }

  /// Structural invariants: Shishikura bound, h <= f, Herman entries
  /// mirrored in fatou_cycles, H_Q values within [0, length].
  void validate() const;
};

/// Aggregates critical-orbit outcomes. Herman cycles are never claimed;
/// Siegel cycles come from a small-period multiplier scan and carry a
/// lowered confidence flag; any Undetermined orbit marks the result
/// incomplete.
FatouSpec fatou_census(const RationalMap& r, const Config& cfg = {});

/// gcd of the Fatou cycle lengths; 1 when there are none.
long omega(const FatouSpec& spec);

// Shared helpers (also used by the quadratic classifier).

/// Partial quotients of x in (0,1); stops at depth or when x is exhausted.
std::vector<long> continued_fraction(double x, int depth);

/// Nearest p/q with q <= max_den within tol, in lowest terms.
std::optional<RotationSnap> snap_rotation(double theta, double tol, int max_den);

struct RefinedCycle {
  bool ok = false;
  std::vector<Complex> points;
  Complex multiplier{0.0, 0.0};
  long period = 0;
};

/// Newton-refines a period-p point from a seed; switches to refining the
/// critical point of R^p - id when the multiplier degenerates toward 1
/// (the parabolic double-root case). Reduces to the exact period.
RefinedCycle refine_cycle(const RationalMap& r, Complex seed, long period,
                          const Config& cfg = {});

}  // namespace ratk
