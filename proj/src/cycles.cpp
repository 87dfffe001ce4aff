#include "ratk/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <gmpxx.h>
#include <map>
#include <numeric>
#include <set>

#include "ratk/errors.hpp"

namespace ratk {

std::string to_string(CycleClass c) {
  switch (c) {
    case CycleClass::Superattracting: return "superattracting";
    case CycleClass::Attracting: return "attracting";
    case CycleClass::Parabolic: return "parabolic";
    case CycleClass::SiegelCandidate: return "siegel_candidate";
    case CycleClass::CremerCandidate: return "cremer_candidate";
    case CycleClass::Unresolved: return "unresolved";
    case CycleClass::Repelling: return "repelling";
  }
  return "unresolved";
}

std::string to_string(CycleKind k) {
  switch (k) {
    case CycleKind::Attracting: return "attracting";
    case CycleKind::Parabolic: return "parabolic";
    case CycleKind::Siegel: return "siegel";
    case CycleKind::Herman: return "herman";
  }
  return "attracting";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Declared: return "declared";
    case Provenance::Mixed: return "mixed";
  }
  return "declared";
}

std::vector<long> continued_fraction(double x, int depth) {
  x -= std::floor(x);
  std::vector<long> quotients;
  for (int k = 0; k < depth; ++k) {
    if (x < 1e-12) break;
    const double inv = 1.0 / x;
    const long a = static_cast<long>(std::floor(inv));
    quotients.push_back(a);
    x = inv - std::floor(inv);
  }
  return quotients;
}

std::optional<RotationSnap> snap_rotation(double theta, double tol, int max_den) {
  theta -= std::floor(theta);
  for (long q = 1; q <= max_den; ++q) {
    const long p = std::lround(theta * static_cast<double>(q));
    if (std::abs(theta - static_cast<double>(p) / q) <= tol) {
      const long g = std::gcd(p, q);
      return RotationSnap{(p / g) % (q / g), q / g};
    }
  }
  return std::nullopt;
}

CycleClassification classify_cycle(Complex lambda, const Tolerances& tol) {
  CycleClassification out{CycleClass::Unresolved, std::nullopt, std::nullopt, false};
  const double mod = std::abs(lambda);
  if (mod < tol.superattracting) {
    out.cls = CycleClass::Superattracting;
    return out;
  }
  if (mod < 1.0 - tol.unit_circle) {
    out.cls = CycleClass::Attracting;
    return out;
  }
  if (mod > 1.0 + tol.unit_circle) {
    out.cls = CycleClass::Repelling;
    return out;
  }
  double theta = std::arg(lambda) / (2.0 * M_PI);
  theta -= std::floor(theta);
  if (auto snap = snap_rotation(theta, tol.rational_snap, tol.max_snap_denominator)) {
    out.cls = CycleClass::Parabolic;
    out.parabolic = snap;
    return out;
  }
  const auto cf = continued_fraction(theta, tol.cf_depth);
  const bool bounded =
      static_cast<int>(cf.size()) == tol.cf_depth &&
      std::all_of(cf.begin(), cf.end(),
                  [&](long a) { return a <= tol.cf_max_quotient; });
  if (bounded) {
    out.cls = CycleClass::SiegelCandidate;
    out.rotation_number = theta;
    out.bounded_type = true;
    return out;
  }
  // Could be Cremer or unbounded-type Siegel; refuse to guess.
  out.cls = CycleClass::Unresolved;
  out.rotation_number = theta;
  return out;
}

Complex multiplier(const RationalMap& r, const std::vector<SpherePoint>& cycle) {
  if (cycle.empty()) throw NotACycle("empty cycle");
  const double tol = r.tolerances().orbit;
  Complex product(1.0, 0.0);
  for (size_t i = 0; i < cycle.size(); ++i) {
    const SpherePoint image = r.evaluate(cycle[i]);
    const SpherePoint& expected = cycle[(i + 1) % cycle.size()];
    if (chordal_distance(image, expected) > tol) {
      throw NotACycle("points do not map cyclically within the orbit tolerance");
    }
    product *= r.chart_derivative(cycle[i]);
  }
  return product;
}

namespace {

CycleRecord make_record(const RationalMap& r, std::vector<SpherePoint> points,
                        const Tolerances& tol, int point_multiplicity = 1) {
  CycleRecord rec;
  rec.period = static_cast<long>(points.size());
  rec.points = std::move(points);
  rec.multiplier = multiplier(r, rec.points);
  const CycleClassification c = classify_cycle(rec.multiplier, tol);
  rec.cls = c.cls;
  rec.parabolic = c.parabolic;
  rec.rotation_number = c.rotation_number;
  rec.point_multiplicity = point_multiplicity;
  return rec;
}

long power_capped(long base, long exp, long cap) {
  long v = 1;
  for (long i = 0; i < exp; ++i) {
    v *= base;
    if (v > cap) throw BudgetExceeded("d^n exceeds the periodic-point cap");
  }
  return v;
}

// (R^p(w), first and second derivatives of R^p at w), staying in the
// finite chart throughout.
struct ChainEval {
  bool ok = false;
  Complex value, d1, d2;
};

ChainEval chain_eval(const RationalMap& r, Complex w, long p, const Tolerances& tol) {
  const Poly& num = r.numerator();
  const Poly& den = r.denominator();
  const Poly wr = r.wronskian();
  const Poly wrp = wr.derivative();
  const Poly denp = den.derivative();

  ChainEval out;
  Complex v = w, d1(1.0, 0.0), d2(0.0, 0.0);
  for (long i = 0; i < p; ++i) {
    if (std::abs(v) > tol.chart_switch) return out;
    const Complex q = den(v);
    const double scale = den.coeff_norm() * std::pow(std::max(1.0, std::abs(v)), den.degree());
    if (std::abs(q) <= 1e-14 * std::max(scale, 1e-300)) return out;  // pole
    const Complex r1 = wr(v) / (q * q);
    const Complex r2 = (wrp(v) * q - 2.0 * wr(v) * denp(v)) / (q * q * q);
    d2 = r2 * d1 * d1 + r1 * d2;
    d1 = r1 * d1;
    v = num(v) / q;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return out;
  }
  out.ok = true;
  out.value = v;
  out.d1 = d1;
  out.d2 = d2;
  return out;
}

}  // namespace

std::vector<CycleRecord> periodic_points(const RationalMap& r, long n,
                                         const Config& cfg) {
  r.require_dynamics_ready();
  if (n < 1) throw ValidationError("periodic_points requires n >= 1");
  const long dn = power_capped(r.degree(), n, cfg.budget.periodic_point_cap);

  const RationalMap rn = iterate_map(r, n, cfg.budget.periodic_point_cap);
  // Numerator of R^n(z) - z.
  const Poly shifted = Poly::identity() * rn.denominator();
  const Poly g = rn.numerator() - shifted;
  if (g.is_zero()) throw ValidationError("R^n is the identity; not degree > 1");

  struct Entry {
    SpherePoint point;
    int mult;
  };
  std::vector<Entry> pts;
  long finite_mult = 0;
  if (g.degree() >= 1) {
    auto clusters = poly_roots(g, cfg.tol.root_cluster, cfg.budget.aberth_max_iter);

    // The composed polynomial can be ill-conditioned; re-polish simple
    // roots against the original map, which is numerically benign. A
    // correction is accepted while it stays well inside the gap to the
    // nearest other seed.
    for (size_t i = 0; i < clusters.size(); ++i) {
      if (clusters[i].multiplicity != 1) continue;
      double gap = 1e9;
      for (size_t j = 0; j < clusters.size(); ++j) {
        if (j == i) continue;
        gap = std::min(gap, std::abs(clusters[i].root - clusters[j].root));
      }
      const double accept = (gap < 1e9) ? 0.45 * gap : 1e-4;
      Complex w = clusters[i].root;
      bool good = true;
      for (int it = 0; it < 40; ++it) {
        const ChainEval e = chain_eval(r, w, n, cfg.tol);
        if (!e.ok) {
          good = false;
          break;
        }
        const Complex fp = e.d1 - Complex(1.0, 0.0);
        if (std::abs(fp) < 1e-8) break;  // neutral; keep what we have
        const Complex step = (e.value - w) / fp;
        w -= step;
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
          good = false;
          break;
        }
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
      }
      if (good && std::abs(w - clusters[i].root) <= accept) {
        clusters[i].root = w;
      }
    }

    // Polishing may reveal that two seeds belonged to one true point.
    for (size_t i = 0; i < clusters.size(); ++i) {
      for (size_t j = i + 1; j < clusters.size();) {
        if (std::abs(clusters[i].root - clusters[j].root) <=
            cfg.tol.root_cluster * (1.0 + std::abs(clusters[i].root))) {
          clusters[i].multiplicity += clusters[j].multiplicity;
          clusters.erase(clusters.begin() + j);
        } else {
          ++j;
        }
      }
    }
    // A genuine multiple period-n point is neutral with multiplier 1;
    // anything else claiming multiplicity is a conditioning artifact.
    for (const RootCluster& rc : clusters) {
      if (rc.multiplicity > 1) {
        const ChainEval e = chain_eval(r, rc.root, n, cfg.tol);
        if (!e.ok || std::abs(e.d1 - Complex(1.0, 0.0)) > 1e-3) {
          throw NonConvergence(0, "phantom multiple periodic point");
        }
      }
    }

    for (const RootCluster& rc : clusters) {
      pts.push_back({SpherePoint::finite(rc.root), rc.multiplicity});
      finite_mult += rc.multiplicity;
    }
  }
  const long inf_mult = dn + 1 - g.degree();
  if (inf_mult < 0 || finite_mult != g.degree()) {
    throw NonConvergence(0, "periodic point count mismatch");
  }
  if (inf_mult > 0) {
    if (!iterate(r, SpherePoint::infinity(), n).is_infinity()) {
      throw NonConvergence(0, "degree deficit without a fixed point at infinity");
    }
    pts.push_back({SpherePoint::infinity(), static_cast<int>(inf_mult)});
  }

  // Group into orbits; the image of a period-n point is a period-n point.
  std::vector<bool> used(pts.size(), false);
  std::vector<CycleRecord> cycles;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    std::vector<size_t> path{i};
    used[i] = true;
    size_t cur = i;
    while (true) {
      const SpherePoint image = r.evaluate(pts[cur].point);
      size_t best = pts.size();
      double best_dist = 1e9;
      for (size_t j = 0; j < pts.size(); ++j) {
        const double d = chordal_distance(image, pts[j].point);
        if (d < best_dist) {
          best_dist = d;
          best = j;
        }
      }
      if (best >= pts.size() || best_dist > cfg.tol.orbit) {
        throw NonConvergence(0, "periodic orbit left the root set");
      }
      if (best == i) break;  // cycle closed
      if (used[best]) throw NonConvergence(0, "periodic orbit grouping collision");
      used[best] = true;
      path.push_back(best);
      cur = best;
    }
    std::vector<SpherePoint> points;
    points.reserve(path.size());
    for (size_t idx : path) points.push_back(pts[idx].point);
    cycles.push_back(make_record(r, std::move(points), cfg.tol, pts[i].mult));
  }

  std::sort(cycles.begin(), cycles.end(), [](const CycleRecord& a, const CycleRecord& b) {
    return a.period < b.period;
  });
  return cycles;
}

RefinedCycle refine_cycle(const RationalMap& r, Complex seed, long period,
                          const Config& cfg) {
  RefinedCycle out;
  Complex w = seed;
  bool near_parabolic = false;

  for (int it = 0; it < 80; ++it) {
    const ChainEval e = chain_eval(r, w, period, cfg.tol);
    if (!e.ok) return out;
    const Complex f = e.value - w;
    const Complex fp = e.d1 - Complex(1.0, 0.0);
    if (std::abs(fp) < 1e-4 && std::abs(f) < 1e-2) {
      near_parabolic = true;
      break;
    }
    if (std::abs(fp) == 0.0) return out;
    const Complex step = f / fp;
    w -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
  }

  if (near_parabolic) {
    // Multiplier degenerates toward 1: the fixed-point equation has a
    // double root and plain Newton stalls at sqrt(eps). Solve
    // (R^p)'(w) = 1 instead, which is simple there.
    for (int it = 0; it < 80; ++it) {
      const ChainEval e = chain_eval(r, w, period, cfg.tol);
      if (!e.ok || std::abs(e.d2) == 0.0) return out;
      const Complex step = (e.d1 - Complex(1.0, 0.0)) / e.d2;
      w -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
  }

  const ChainEval final_eval = chain_eval(r, w, period, cfg.tol);
  if (!final_eval.ok) return out;
  const double residual_tol = (near_parabolic ? 1e-7 : 1e-9) * (1.0 + std::abs(w));
  if (std::abs(final_eval.value - w) > residual_tol) return out;

  // Walk the cycle and reduce to the exact period.
  std::vector<Complex> orbit{w};
  Complex v = w;
  for (long i = 1; i < period; ++i) {
    const Complex q = r.denominator()(v);
    v = r.numerator()(v) / q;
    orbit.push_back(v);
  }
  long exact = period;
  for (long ell = 1; ell < period; ++ell) {
    if (period % ell != 0) continue;
    if (std::abs(orbit[ell] - orbit[0]) <= cfg.tol.cycle_merge * (1.0 + std::abs(w))) {
      exact = ell;
      break;
    }
  }
  orbit.resize(exact);

  const ChainEval cycle_eval = chain_eval(r, w, exact, cfg.tol);
  if (!cycle_eval.ok) return out;
  out.ok = true;
  out.points = std::move(orbit);
  out.multiplier = cycle_eval.d1;
  out.period = exact;
  return out;
}

double certified_bailout(const RationalMap& r) {
  if (!r.is_polynomial()) {
    return std::numeric_limits<double>::infinity();
  }
  const Poly& p = r.numerator();
  const long d = p.degree();
  const double lead = std::abs(p.leading());
  if (d == 2 && std::abs(p.coeff(1)) == 0.0) {
    const double c = std::abs(p.coeff(0)) / lead;  // z^2 + c up to scale
    return std::max(2.0, c);
  }
  double lower = 0.0;
  for (long i = 0; i < d; ++i) lower += std::abs(p.coeff(i));
  return std::max(1.0, (2.0 + lower) / lead);
}

namespace {

// ---- exact Gaussian-integer path for integer-coefficient polynomials ----

struct GaussianInt {
  mpz_class re, im;
  bool operator<(const GaussianInt& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussianInt gaussian_eval(const std::vector<GaussianInt>& coeffs,
                          const GaussianInt& z) {
  GaussianInt acc{0, 0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    mpz_class re = acc.re * z.re - acc.im * z.im + it->re;
    mpz_class im = acc.re * z.im + acc.im * z.re + it->im;
    acc = GaussianInt{std::move(re), std::move(im)};
  }
  return acc;
}

struct ExactPolynomial {
  std::vector<GaussianInt> coeffs;  // true map coefficients, lowest first
  mpz_class bail_sq;
};

// Recovers the map's true coefficients from the normalized pair,
// accepting only when every division is exact in double arithmetic.
std::optional<ExactPolynomial> exact_polynomial_params(const RationalMap& r,
                                                       double escape_radius) {
  if (!r.is_polynomial() || r.degree() < 2) return std::nullopt;
  const Complex den = r.denominator().coeff(0);
  const Poly& num = r.numerator();

  ExactPolynomial out;
  for (long i = 0; i <= num.degree(); ++i) {
    const Complex a = num.coeff(i) / den;
    const double ar = std::round(a.real()), ai = std::round(a.imag());
    if (a.real() != ar || a.imag() != ai) return std::nullopt;
    if (std::abs(ar) > 1e15 || std::abs(ai) > 1e15) return std::nullopt;
    if (den * Complex(ar, ai) != num.coeff(i)) return std::nullopt;
    out.coeffs.push_back({mpz_class(static_cast<long>(ar)),
                          mpz_class(static_cast<long>(ai))});
  }

  double bail = std::max(certified_bailout(r),
                         std::isfinite(escape_radius) ? escape_radius : 0.0);
  if (r.degree() == 2 && out.coeffs[1].is_zero() && out.coeffs[2].re == 1 &&
      out.coeffs[2].im == 0) {
    // z^2 + c: the sharp bound max(4, |c|^2) stays an exact integer.
    const GaussianInt& c = out.coeffs[0];
    out.bail_sq = std::max(mpz_class(4), mpz_class(c.re * c.re + c.im * c.im));
    if (std::isfinite(escape_radius) && escape_radius > 2.0 &&
        escape_radius < 1e9) {
      mpz_class e(static_cast<long>(std::ceil(escape_radius * escape_radius)));
      out.bail_sq = std::max(out.bail_sq, e);
    }
  } else {
    if (!(bail < 1e15)) return std::nullopt;
    mpz_class b(static_cast<long>(std::ceil(bail * bail)) + 1);
    out.bail_sq = b;
  }
  return out;
}

// The start must be an exact lattice point; values that merely polished
// to within 1e-9 of one are accepted only if the exact derivative
// vanishes there (so the snapped point really is critical).
std::optional<GaussianInt> as_gaussian_start(const SpherePoint& z,
                                             const ExactPolynomial& p) {
  if (z.is_infinity()) return std::nullopt;
  const Complex v = z.value();
  const double vr = std::round(v.real()), vi = std::round(v.imag());
  if (std::abs(vr) > 1e15 || std::abs(vi) > 1e15) return std::nullopt;
  if (std::abs(v.real() - vr) > 1e-9 || std::abs(v.imag() - vi) > 1e-9) {
    return std::nullopt;
  }
  GaussianInt snapped{mpz_class(static_cast<long>(vr)),
                      mpz_class(static_cast<long>(vi))};
  if (v.real() != vr || v.imag() != vi) {
    std::vector<GaussianInt> deriv;
    for (size_t i = 1; i < p.coeffs.size(); ++i) {
      deriv.push_back({static_cast<long>(i) * p.coeffs[i].re,
                       static_cast<long>(i) * p.coeffs[i].im});
    }
    if (!gaussian_eval(deriv, snapped).is_zero()) return std::nullopt;
  }
  return snapped;
}

std::optional<OrbitOutcome> exact_polynomial_orbit(const RationalMap& r,
                                                   const SpherePoint& start,
                                                   long max_iter,
                                                   double escape_radius,
                                                   const Config& cfg) {
  const auto params = exact_polynomial_params(r, escape_radius);
  if (!params) return std::nullopt;
  const auto z0 = as_gaussian_start(start, *params);
  if (!z0) return std::nullopt;

  std::map<GaussianInt, long> seen;
  std::vector<GaussianInt> orbit;
  GaussianInt z = *z0;
  for (long step = 0; step <= max_iter; ++step) {
    mpz_class mod_sq = z.re * z.re + z.im * z.im;
    if (mod_sq > params->bail_sq) {
      OrbitOutcome out;
      out.kind = OrbitOutcomeKind::Escaped;
      out.escape_step = step;
      out.exact = true;
      return out;
    }
    if (auto it = seen.find(z); it != seen.end()) {
      const long preperiod = it->second;
      std::vector<SpherePoint> points;
      for (long i = preperiod; i < step; ++i) {
        points.push_back(SpherePoint::finite(
            Complex(orbit[i].re.get_d(), orbit[i].im.get_d())));
      }
      OrbitOutcome out;
      out.exact = true;
      out.cycle = make_record(r, std::move(points), cfg.tol);
      if (preperiod == 0) {
        out.kind = OrbitOutcomeKind::ConvergedToCycle;
      } else {
        out.kind = OrbitOutcomeKind::Preperiodic;
        out.preperiod = preperiod;
      }
      return out;
    }
    seen.emplace(z, step);
    orbit.push_back(z);
    z = gaussian_eval(params->coeffs, z);
  }
  // A bounded exact orbit always revisits; reaching here means the cap was
  // tiny relative to the escape transient.
  OrbitOutcome out;
  out.kind = OrbitOutcomeKind::Undetermined;
  return out;
}

bool sphere_points_equal(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  return a.value() == b.value();
}

}  // namespace

OrbitOutcome critical_orbit(const RationalMap& r, const SpherePoint& start,
                            long max_iter, double escape_radius, const Config& cfg) {
  if (max_iter < 1) throw ValidationError("critical_orbit requires max_iter >= 1");

  if (auto exact = exact_polynomial_orbit(r, start, max_iter, escape_radius, cfg)) {
    return *exact;
  }

  const bool poly = r.is_polynomial();
  const double bail = poly ? std::max(escape_radius, certified_bailout(r))
                           : std::numeric_limits<double>::infinity();

  std::vector<SpherePoint> orbit{start};
  long cooldown_until = 0;
  for (long step = 1; step <= max_iter; ++step) {
    const SpherePoint z = r.evaluate(orbit.back());

    if (poly && (z.is_infinity() || std::abs(z.value()) > bail)) {
      OrbitOutcome out;
      out.kind = OrbitOutcomeKind::Escaped;
      out.escape_step = step;
      return out;
    }

    if (sphere_points_equal(z, orbit.back())) {
      // Exactly fixed in floating point.
      const Complex lambda = r.chart_derivative(z);
      if (std::abs(lambda) <= 1.0 + cfg.tol.unit_circle) {
        OrbitOutcome out;
        out.kind = OrbitOutcomeKind::ConvergedToCycle;
        out.cycle = make_record(r, {z}, cfg.tol);
        return out;
      }
    }
    orbit.push_back(z);

    if (step < cooldown_until) continue;
    const long pmax = std::min<long>(cfg.budget.recurrence_max_period, step);
    for (long p = 1; p <= pmax; ++p) {
      if (chordal_distance(orbit[step], orbit[step - p]) > cfg.tol.cycle_merge) {
        continue;
      }
      // Candidate cycle of period p at the orbit tail.
      bool tail_finite = true;
      for (long i = step - p; i <= step; ++i) {
        if (orbit[i].is_infinity() ||
            std::abs(orbit[i].value()) > cfg.tol.chart_switch) {
          tail_finite = false;
          break;
        }
      }
      std::optional<CycleRecord> record;
      if (tail_finite) {
        const RefinedCycle rc = refine_cycle(r, orbit[step].value(), p, cfg);
        if (rc.ok && std::abs(rc.multiplier) <= 1.0 + cfg.tol.unit_circle) {
          std::vector<SpherePoint> points;
          for (const Complex& v : rc.points) points.push_back(SpherePoint::finite(v));
          record = make_record(r, std::move(points), cfg.tol);
        }
      } else if (chordal_distance(orbit[step], orbit[step - p]) <= 1e-11) {
        // Cycle through the infinity chart; accept only an exact-grade
        // revisit and classify from chart derivatives.
        std::vector<SpherePoint> points(orbit.begin() + (step - p),
                                        orbit.begin() + step);
        long exact = p;
        for (long ell = 1; ell < p; ++ell) {
          if (p % ell == 0 &&
              chordal_distance(points[0], orbit[step - p + ell]) <= cfg.tol.cycle_merge) {
            exact = ell;
            break;
          }
        }
        points.erase(points.begin() + exact, points.end());
        try {
          CycleRecord rec = make_record(r, std::move(points), cfg.tol);
          if (std::abs(rec.multiplier) <= 1.0 + cfg.tol.unit_circle) record = rec;
        } catch (const NotACycle&) {
          record.reset();
        }
      }
      if (record) {
        OrbitOutcome out;
        out.kind = OrbitOutcomeKind::ConvergedToCycle;
        out.cycle = std::move(record);
        return out;
      }
      cooldown_until = step + 64;
      break;
    }
  }
  OrbitOutcome out;
  out.kind = OrbitOutcomeKind::Undetermined;
  return out;
}

void FatouSpec::validate() const {
  if (degree < 2) throw ValidationError("FatouSpec requires degree >= 2");
  if (c_julia < 0 || c_fatou < 0) throw ValidationError("negative critical counts");
  if (static_cast<long>(julia_critical_labels.size()) != c_julia) {
    throw ValidationError("julia_critical_labels size must equal c_julia");
  }
  if (!fatou_cycles.empty() && f() > 2 * degree - 2) {
    throw ValidationError("Fatou cycle count exceeds the 2d-2 bound");
  }
  if (h() > f()) throw ValidationError("more Herman cycles than Fatou cycles");
  long herman_kind = 0;
  std::multiset<long> herman_cycle_lengths;
  for (const FatouCycle& fc : fatou_cycles) {
    if (fc.length < 1) throw ValidationError("cycle length must be >= 1");
    if (fc.kind == CycleKind::Herman) {
      ++herman_kind;
      herman_cycle_lengths.insert(fc.length);
    }
  }
  if (herman_kind != h()) {
    throw ValidationError("every Herman descriptor needs a Herman Fatou cycle");
  }
  std::multiset<long> descriptor_lengths;
  for (const HermanDescriptor& hd : herman) {
    if (hd.length < 1) throw ValidationError("Herman length must be >= 1");
    descriptor_lengths.insert(hd.length);
    for (const auto& [label, value] : hd.h_values) {
      if (value < 0 || value > hd.length) {
        throw ValidationError("H_Q(c) must lie in [0, cycle length]");
      }
    }
  }
  if (descriptor_lengths != herman_cycle_lengths) {
    throw ValidationError("Herman descriptor lengths disagree with cycles");
  }
}

namespace {

bool same_cycle(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b,
                double tol) {
  if (a.size() != b.size()) return false;
  for (const SpherePoint& pa : a) {
    double best = 1e9;
    for (const SpherePoint& pb : b) best = std::min(best, chordal_distance(pa, pb));
    if (best > tol) return false;
  }
  return true;
}

struct DetectedCycle {
  CycleRecord record;
  std::vector<std::string> criticals;
  bool confident = true;
};

}  // namespace

FatouSpec fatou_census(const RationalMap& r, const Config& cfg) {
  r.require_dynamics_ready();
  const auto crits = critical_points(r);

  FatouSpec spec;
  spec.degree = r.degree();
  spec.provenance = Provenance::Computed;

  std::vector<DetectedCycle> detected;
  auto absorb = [&](CycleRecord rec, const std::string& label, bool confident) {
    for (DetectedCycle& dc : detected) {
      if (same_cycle(dc.record.points, rec.points, cfg.tol.cycle_merge)) {
        if (!label.empty()) dc.criticals.push_back(label);
        dc.confident = dc.confident && confident;
        return;
      }
    }
    DetectedCycle dc;
    dc.record = std::move(rec);
    if (!label.empty()) dc.criticals.push_back(label);
    dc.confident = confident;
    detected.push_back(std::move(dc));
  };

  long undetermined = 0;
  for (size_t i = 0; i < crits.size(); ++i) {
    const std::string label = "c" + std::to_string(i);
    const OrbitOutcome out =
        critical_orbit(r, crits[i].location, cfg.budget.max_iter, 0.0, cfg);
    switch (out.kind) {
      case OrbitOutcomeKind::Escaped: {
        // Certified flight to the superattracting fixed point at infinity.
        CycleRecord rec = make_record(r, {SpherePoint::infinity()}, cfg.tol);
        absorb(std::move(rec), label, true);
        ++spec.c_fatou;
        break;
      }
      case OrbitOutcomeKind::ConvergedToCycle:
        absorb(*out.cycle, label, true);
        ++spec.c_fatou;
        break;
      case OrbitOutcomeKind::Preperiodic:
        if (std::abs(out.cycle->multiplier) > 1.0 + cfg.tol.unit_circle) {
          // Strictly preperiodic onto a repelling cycle: the critical
          // point sits in the Julia set.
          ++spec.c_julia;
          spec.julia_critical_labels.push_back(label);
        } else {
          absorb(*out.cycle, label, true);
          ++spec.c_fatou;
        }
        break;
      case OrbitOutcomeKind::Undetermined:
        ++undetermined;
        spec.complete = false;
        break;
    }
  }

  if (undetermined > 0) {
    // Sweep small periods for neutral cycles the orbits cannot certify.
    // Individual periods may fail on conditioning; the sweep is best
    // effort and the census stays flagged incomplete regardless.
    for (long p = 1; p <= cfg.budget.direct_scan_max_period; ++p) {
      double dp = std::pow(static_cast<double>(r.degree()), static_cast<double>(p));
      if (dp > 512) break;
      try {
        for (const CycleRecord& rec : periodic_points(r, p, cfg)) {
          if (rec.period != p) continue;
          if (rec.cls == CycleClass::SiegelCandidate) {
            absorb(rec, "", false);
          }
        }
      } catch (const NonConvergence&) {
        continue;
      }
    }
  }

  for (const DetectedCycle& dc : detected) {
    FatouCycle fc;
    fc.length = dc.record.period;
    fc.confident = dc.confident;
    fc.attracting_criticals = dc.criticals;
    switch (dc.record.cls) {
      case CycleClass::Superattracting:
      case CycleClass::Attracting:
        fc.kind = CycleKind::Attracting;
        break;
      case CycleClass::Parabolic:
        fc.kind = CycleKind::Parabolic;
        break;
      case CycleClass::SiegelCandidate:
        fc.kind = CycleKind::Siegel;
        fc.confident = false;
        break;
      default:
        continue;  // repelling / unresolved cycles are not Fatou cycles
    }
    spec.fatou_cycles.push_back(std::move(fc));
  }

  spec.validate();
  return spec;
}

long omega(const FatouSpec& spec) {
  long g = 0;
  for (const FatouCycle& fc : spec.fatou_cycles) g = std::gcd(g, fc.length);
  return g == 0 ? 1 : g;
}

}  // namespace ratk
