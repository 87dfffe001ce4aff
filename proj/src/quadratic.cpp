#include "ratk/quadratic.hpp"

#include <cmath>

#include "ratk/errors.hpp"

namespace ratk {

std::string to_string(QuadCase c) {
  switch (c) {
    case QuadCase::Case0: return "case0";
    case QuadCase::Case1: return "case1";
    case QuadCase::Case2: return "case2";
    case QuadCase::Case3: return "case3";
    case QuadCase::Unresolved: return "unresolved";
  }
  return "unresolved";
}

std::string to_string(AlgebraName a) {
  switch (a) {
    case AlgebraName::O2: return "O2";
    case AlgebraName::Q2: return "Q2";
    case AlgebraName::Q2inf: return "Q2inf";
    case AlgebraName::Oinf: return "Oinf";
    case AlgebraName::Unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::None: return "none";
    case Certificate::Kind::EscapeCertified: return "escape_certified";
    case Certificate::Kind::AttractingCycle: return "attracting_cycle";
    case Certificate::Kind::ParabolicCycle: return "parabolic_cycle";
    case Certificate::Kind::SiegelMultiplier: return "siegel_multiplier";
    case Certificate::Kind::MisiurewiczExact: return "misiurewicz_exact";
  }
  return "none";
}

CaseKTheory case_k_theory(QuadCase c) {
  CaseKTheory out;
  switch (c) {
    case QuadCase::Case0:
      out.k0 = FgAbGroup::trivial();
      out.k0.distinguished = FgAbGroup::Distinguished{{}, {}};
      out.k1 = FgAbGroup::trivial();
      break;
    case QuadCase::Case1:
      out.k0 = FgAbGroup::free(1);
      out.k0.distinguished = FgAbGroup::Distinguished{{}, {Int(0)}};
      out.k1 = FgAbGroup::free(1);
      break;
    case QuadCase::Case2:
      out.k0 = FgAbGroup::free(2);
      out.k0.distinguished = FgAbGroup::Distinguished{{}, {Int(1), Int(0)}};
      out.k1 = FgAbGroup::free(1);
      break;
    case QuadCase::Case3:
      out.k0 = FgAbGroup::free(1);
      out.k0.distinguished = FgAbGroup::Distinguished{{}, {Int(1)}};
      out.k1 = FgAbGroup::trivial();
      break;
    case QuadCase::Unresolved:
      throw ValidationError("no K-theory for an unresolved verdict");
  }
  out.unit = out.k0.unit_class();
  return out;
}

namespace {

AlgebraName algebra_of(QuadCase c) {
  switch (c) {
    case QuadCase::Case0: return AlgebraName::O2;
    case QuadCase::Case1: return AlgebraName::Q2;
    case QuadCase::Case2: return AlgebraName::Q2inf;
    case QuadCase::Case3: return AlgebraName::Oinf;
    default: return AlgebraName::Unknown;
  }
}

QuadVerdict finish(QuadCase c, Certificate cert) {
  QuadVerdict out;
  out.verdict = c;
  out.certificate = std::move(cert);
  if (c != QuadCase::Unresolved) {
    CaseKTheory k = case_k_theory(c);
    out.k0 = std::move(k.k0);
    out.k1 = std::move(k.k1);
    out.algebra = algebra_of(c);
  }
  return out;
}

// Maps a certified bounded cycle to its case and certificate.
std::optional<QuadVerdict> from_cycle(const CycleRecord& rec, const Tolerances& tol) {
  Certificate cert;
  cert.period = rec.period;
  cert.multiplier = rec.multiplier;
  switch (rec.cls) {
    case CycleClass::Superattracting:
    case CycleClass::Attracting:
      cert.kind = Certificate::Kind::AttractingCycle;
      return finish(QuadCase::Case1, cert);
    case CycleClass::Parabolic:
      cert.kind = Certificate::Kind::ParabolicCycle;
      cert.rotation = rec.parabolic;
      return finish(QuadCase::Case1, cert);
    case CycleClass::SiegelCandidate:
      cert.kind = Certificate::Kind::SiegelMultiplier;
      cert.rotation_number = rec.rotation_number.value_or(0.0);
      cert.bounded_type_depth = tol.cf_depth;
      return finish(QuadCase::Case2, cert);
    default:
      return std::nullopt;
  }
}

bool cycle_avoids_infinity(const CycleRecord& rec) {
  for (const SpherePoint& p : rec.points) {
    if (p.is_infinity()) return false;
  }
  return true;
}

}  // namespace

QuadVerdict classify_quadratic(Complex c, const Config& cfg) {
  if (cfg.budget.max_iter < 100) {
    throw ValidationError("classify_quadratic requires max_iter >= 100");
  }
  const RationalMap r = RationalMap::quadratic(c, cfg.tol);
  const OrbitOutcome orbit = critical_orbit(r, SpherePoint::finite(Complex(0)),
                                            cfg.budget.max_iter, 0.0, cfg);
  switch (orbit.kind) {
    case OrbitOutcomeKind::Escaped: {
      Certificate cert;
      cert.kind = Certificate::Kind::EscapeCertified;
      cert.escape_step = orbit.escape_step;
      return finish(QuadCase::Case0, cert);
    }
    case OrbitOutcomeKind::Preperiodic: {
      if (orbit.exact && std::abs(orbit.cycle->multiplier) > 1.0) {
        // Strictly preperiodic onto a repelling cycle: the filled Julia
        // set has empty interior.
        Certificate cert;
        cert.kind = Certificate::Kind::MisiurewiczExact;
        cert.preperiod = orbit.preperiod;
        cert.period = orbit.cycle->period;
        cert.multiplier = orbit.cycle->multiplier;
        return finish(QuadCase::Case3, cert);
      }
      break;
    }
    case OrbitOutcomeKind::ConvergedToCycle: {
      if (auto v = from_cycle(*orbit.cycle, cfg.tol)) return *v;
      break;
    }
    case OrbitOutcomeKind::Undetermined:
      break;
  }

  // The orbit was inconclusive: solve the small periods directly and
  // look for a bounded non-repelling cycle.
  for (long p = 1; p <= cfg.budget.direct_scan_max_period; ++p) {
    double dp = std::pow(2.0, static_cast<double>(p));
    if (dp > 512) break;
    std::vector<CycleRecord> cycles;
    try {
      cycles = periodic_points(r, p, cfg);
    } catch (const NonConvergence&) {
      continue;
    }
    for (const CycleRecord& rec : cycles) {
      if (rec.period != p || !cycle_avoids_infinity(rec)) continue;
      if (auto v = from_cycle(rec, cfg.tol)) return *v;
    }
  }
  return finish(QuadCase::Unresolved, Certificate{});
}

Membership mandelbrot_membership_by_k(Complex c, const Config& cfg) {
  const QuadVerdict v = classify_quadratic(c, cfg);
  Membership out;
  out.certificate = v.certificate;
  switch (v.verdict) {
    case QuadCase::Case0:
      out.value = false;
      break;
    case QuadCase::Case1:
    case QuadCase::Case2:
    case QuadCase::Case3:
      out.value = true;
      break;
    case QuadCase::Unresolved:
      break;
  }
  return out;
}

}  // namespace ratk
