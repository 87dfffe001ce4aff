#include "ratk/cycles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ratk/errors.hpp"

using namespace ratk;

namespace {

long total_point_count(const std::vector<CycleRecord>& cycles) {
  long total = 0;
  for (const CycleRecord& c : cycles) total += c.period * c.point_multiplicity;
  return total;
}

const CycleRecord* find_cycle_through(const std::vector<CycleRecord>& cycles,
                                      const SpherePoint& p, double tol = 1e-7) {
  for (const CycleRecord& c : cycles) {
    for (const SpherePoint& q : c.points) {
      if (chordal_distance(p, q) <= tol) return &c;
    }
  }
  return nullptr;
}

const FatouCycle* find_fatou_cycle(const FatouSpec& spec, CycleKind kind) {
  for (const FatouCycle& fc : spec.fatou_cycles) {
    if (fc.kind == kind) return &fc;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("fixed points of z^2") {
  auto cycles = periodic_points(RationalMap::quadratic(Complex(0)), 1);
  CHECK(cycles.size() == 3);
  CHECK(total_point_count(cycles) == 3);  // 2^1 + 1
  CHECK(find_cycle_through(cycles, SpherePoint::finite(Complex(0))) != nullptr);
  CHECK(find_cycle_through(cycles, SpherePoint::finite(Complex(1))) != nullptr);
  CHECK(find_cycle_through(cycles, SpherePoint::infinity()) != nullptr);
}

TEST_CASE("period-2 points of z^2 include the cube-root 2-cycle") {
  auto cycles = periodic_points(RationalMap::quadratic(Complex(0)), 2);
  CHECK(total_point_count(cycles) == 5);  // 2^2 + 1
  const Complex omega = std::polar(1.0, 2.0 * M_PI / 3.0);
  const CycleRecord* two = find_cycle_through(cycles, SpherePoint::finite(omega), 1e-9);
  REQUIRE(two != nullptr);
  CHECK(two->period == 2);
  CHECK(find_cycle_through(cycles, SpherePoint::finite(std::conj(omega)), 1e-9) == two);
}

TEST_CASE("the superattracting 2-cycle of z^2 - 1") {
  auto cycles = periodic_points(RationalMap::quadratic(Complex(-1)), 2);
  const CycleRecord* cyc = find_cycle_through(cycles, SpherePoint::finite(Complex(0)), 1e-9);
  REQUIRE(cyc != nullptr);
  CHECK(cyc->period == 2);
  CHECK(std::abs(cyc->multiplier) < 1e-12);
  CHECK(cyc->cls == CycleClass::Superattracting);
}

TEST_CASE("quadratic fixed-point multipliers are 1 +- sqrt(1-4c)") {
  const Complex c(0.3, 0.2);
  RationalMap r = RationalMap::quadratic(c);
  const Complex root = std::sqrt(Complex(1) - 4.0 * c);
  for (Complex lambda : {Complex(1) + root, Complex(1) - root}) {
    const Complex fixed = lambda / 2.0;  // z^2 + c = z at z = lambda/2
    const Complex got = multiplier(r, {SpherePoint::finite(fixed)});
    CHECK(std::abs(got - lambda) <= 1e-12);
  }
}

TEST_CASE("multiplier trivial cases and validation") {
  CHECK(std::abs(multiplier(RationalMap::quadratic(Complex(0)),
                            {SpherePoint::finite(Complex(0))})) == 0.0);
  CHECK(std::abs(multiplier(RationalMap::quadratic(Complex(-1)),
                            {SpherePoint::finite(Complex(0)),
                             SpherePoint::finite(Complex(-1))})) == 0.0);
  CHECK_THROWS_AS(multiplier(RationalMap::quadratic(Complex(0)),
                             {SpherePoint::finite(Complex(0.5))}),
                  NotACycle);
}

TEST_CASE("multiplier picks up chart corrections at infinity") {
  // z^2: superattracting at infinity
  CHECK(std::abs(multiplier(RationalMap::quadratic(Complex(0)),
                            {SpherePoint::infinity()})) == 0.0);
  // z + 1/z has a parabolic fixed point at infinity with multiplier 1
  RationalMap r(Poly({Complex(1), Complex(0), Complex(1)}), Poly::identity());
  CHECK(std::abs(multiplier(r, {SpherePoint::infinity()}) - Complex(1)) < 1e-12);
}

TEST_CASE("classify_cycle taxonomy") {
  const Tolerances tol;
  CHECK(classify_cycle(Complex(0), tol).cls == CycleClass::Superattracting);
  CHECK(classify_cycle(Complex(0.5, 0.1), tol).cls == CycleClass::Attracting);
  CHECK(classify_cycle(Complex(1.2), tol).cls == CycleClass::Repelling);

  auto parabolic1 = classify_cycle(Complex(1), tol);
  CHECK(parabolic1.cls == CycleClass::Parabolic);
  REQUIRE(parabolic1.parabolic.has_value());
  CHECK(parabolic1.parabolic->num == 0);
  CHECK(parabolic1.parabolic->den == 1);

  auto parabolic_half = classify_cycle(Complex(-1), tol);
  REQUIRE(parabolic_half.parabolic.has_value());
  CHECK(parabolic_half.parabolic->num == 1);
  CHECK(parabolic_half.parabolic->den == 2);

  auto snapped = classify_cycle(std::polar(1.0, 2.0 * M_PI * 3.0 / 7.0), tol);
  REQUIRE(snapped.parabolic.has_value());
  CHECK(snapped.parabolic->num == 3);
  CHECK(snapped.parabolic->den == 7);

  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  auto siegel = classify_cycle(std::polar(1.0, 2.0 * M_PI * golden), tol);
  CHECK(siegel.cls == CycleClass::SiegelCandidate);
  CHECK(siegel.bounded_type);
  REQUIRE(siegel.rotation_number.has_value());
  CHECK(*siegel.rotation_number == doctest::Approx(golden).epsilon(1e-9));
}

TEST_CASE("modulus-determined classes ignore the multiplier phase") {
  const Tolerances tol;
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  for (double mod : {1e-9, 0.3, 0.999, 1.001, 7.0}) {
    const CycleClass base = classify_cycle(Complex(mod), tol).cls;
    for (int i = 0; i < 20; ++i) {
      CHECK(classify_cycle(std::polar(mod, angle(rng)), tol).cls == base);
    }
  }
}

TEST_CASE("continued fractions") {
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  auto cf = continued_fraction(golden, 20);
  REQUIRE(cf.size() == 20);
  CHECK(std::all_of(cf.begin(), cf.end(), [](long a) { return a == 1; }));
  auto rational = continued_fraction(3.0 / 8.0, 20);
  CHECK(rational.size() < 20);  // terminates
}

TEST_CASE("critical orbit: escape with a certificate") {
  auto out = critical_orbit(RationalMap::quadratic(Complex(1)),
                            SpherePoint::finite(Complex(0)), 100, 2.0);
  CHECK(out.kind == OrbitOutcomeKind::Escaped);
  CHECK(out.escape_step == 3);  // 0, 1, 2, 5
  CHECK(out.exact);
}

TEST_CASE("critical orbit: convergence to the fixed critical point of z^2") {
  auto out = critical_orbit(RationalMap::quadratic(Complex(0)),
                            SpherePoint::finite(Complex(0)), 100, 2.0);
  REQUIRE(out.kind == OrbitOutcomeKind::ConvergedToCycle);
  CHECK(out.cycle->period == 1);
  CHECK(out.cycle->cls == CycleClass::Superattracting);
}

TEST_CASE("critical orbit: exact preperiodicity of z^2 - 2") {
  auto out = critical_orbit(RationalMap::quadratic(Complex(-2)),
                            SpherePoint::finite(Complex(0)), 100, 2.0);
  REQUIRE(out.kind == OrbitOutcomeKind::Preperiodic);
  CHECK(out.exact);
  CHECK(out.preperiod == 2);  // 0, -2, then fixed at 2
  REQUIRE(out.cycle.has_value());
  CHECK(out.cycle->period == 1);
  CHECK(out.cycle->points[0].value() == Complex(2));
  CHECK(std::abs(out.cycle->multiplier - Complex(4)) < 1e-12);
  CHECK(out.cycle->cls == CycleClass::Repelling);
}

TEST_CASE("critical orbit: exact preperiodicity at c = i") {
  auto out = critical_orbit(RationalMap::quadratic(Complex(0, 1)),
                            SpherePoint::finite(Complex(0)), 100, 2.0);
  REQUIRE(out.kind == OrbitOutcomeKind::Preperiodic);
  CHECK(out.exact);
  CHECK(out.preperiod == 2);
  CHECK(out.cycle->period == 2);
  CHECK(std::abs(out.cycle->multiplier) > 1.0);  // repelling landing cycle
}

TEST_CASE("escape certificate soundness") {
  // If Escaped(n), re-running the iteration shows |z_n| really exceeds
  // max(2, |c|).
  for (Complex c : {Complex(1), Complex(0.26), Complex(-2.5, 0.1)}) {
    auto out = critical_orbit(RationalMap::quadratic(c),
                              SpherePoint::finite(Complex(0)),
                              20000, 2.0);
    if (out.kind != OrbitOutcomeKind::Escaped) continue;
    Complex z(0);
    for (long i = 0; i < out.escape_step; ++i) z = z * z + c;
    CHECK(std::abs(z) > std::max(2.0, std::abs(c)));
  }
}

TEST_CASE("escape certificates are monotone in the budget") {
  auto small = critical_orbit(RationalMap::quadratic(Complex(0.26)),
                              SpherePoint::finite(Complex(0)), 10000, 2.0);
  auto large = critical_orbit(RationalMap::quadratic(Complex(0.26)),
                              SpherePoint::finite(Complex(0)), 100000, 2.0);
  REQUIRE(small.kind == OrbitOutcomeKind::Escaped);
  REQUIRE(large.kind == OrbitOutcomeKind::Escaped);
  CHECK(small.escape_step == large.escape_step);
}

TEST_CASE("fatou census of z^2") {
  FatouSpec spec = fatou_census(RationalMap::quadratic(Complex(0)));
  CHECK(spec.complete);
  CHECK(spec.f() == 2);
  CHECK(spec.h() == 0);
  CHECK(spec.c_julia == 0);
  CHECK(spec.c_fatou == 2);
  for (const FatouCycle& fc : spec.fatou_cycles) {
    CHECK(fc.kind == CycleKind::Attracting);
    CHECK(fc.length == 1);
    CHECK_FALSE(fc.attracting_criticals.empty());
  }
}

TEST_CASE("fatou census of z^2 + 1: escaping critical point leaves c_julia = 0") {
  FatouSpec spec = fatou_census(RationalMap::quadratic(Complex(1)));
  CHECK(spec.complete);
  CHECK(spec.f() == 1);
  CHECK(spec.h() == 0);
  CHECK(spec.c_julia == 0);
  CHECK(spec.c_fatou == 2);
  CHECK(spec.fatou_cycles[0].kind == CycleKind::Attracting);
  CHECK(spec.fatou_cycles[0].length == 1);
}

TEST_CASE("fatou census of z^2 - 2") {
  FatouSpec spec = fatou_census(RationalMap::quadratic(Complex(-2)));
  CHECK(spec.complete);
  CHECK(spec.f() == 1);
  CHECK(spec.h() == 0);
  CHECK(spec.c_julia == 1);
  CHECK(spec.c_fatou == 1);
  REQUIRE(spec.julia_critical_labels.size() == 1);
}

TEST_CASE("fatou census of z^2 - 1: basilica") {
  FatouSpec spec = fatou_census(RationalMap::quadratic(Complex(-1)));
  CHECK(spec.complete);
  CHECK(spec.f() == 2);
  CHECK(spec.c_julia == 0);
  bool has_two_cycle = false;
  for (const FatouCycle& fc : spec.fatou_cycles) {
    if (fc.length == 2) has_two_cycle = true;
  }
  CHECK(has_two_cycle);
  CHECK(omega(spec) == 1);
}

TEST_CASE("fatou census of the parabolic quadratic c = 1/4") {
  FatouSpec spec = fatou_census(RationalMap::quadratic(Complex(0.25)));
  CHECK(spec.complete);
  CHECK(spec.f() == 2);
  const FatouCycle* parabolic = find_fatou_cycle(spec, CycleKind::Parabolic);
  REQUIRE(parabolic != nullptr);
  CHECK(parabolic->length == 1);
  CHECK_FALSE(parabolic->attracting_criticals.empty());
}

TEST_CASE("fatou census flags a Siegel candidate and stays incomplete") {
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  const Complex lambda = std::polar(1.0, 2.0 * M_PI * golden);
  const Complex c = lambda / 2.0 - lambda * lambda / 4.0;  // fixed-point relation
  FatouSpec spec = fatou_census(RationalMap::quadratic(c));
  CHECK_FALSE(spec.complete);
  const FatouCycle* siegel = find_fatou_cycle(spec, CycleKind::Siegel);
  REQUIRE(siegel != nullptr);
  CHECK(siegel->length == 1);
  CHECK_FALSE(siegel->confident);
}

TEST_CASE("census count properties over small cases") {
  for (Complex c : {Complex(0), Complex(-1), Complex(1), Complex(-2)}) {
    FatouSpec spec = fatou_census(RationalMap::quadratic(c));
    CHECK(spec.f() <= 2 * spec.degree - 2);
    for (const FatouCycle& fc : spec.fatou_cycles) {
      if (fc.kind == CycleKind::Attracting || fc.kind == CycleKind::Parabolic) {
        CHECK_FALSE(fc.attracting_criticals.empty());
      }
    }
  }
}

TEST_CASE("periodic point counts match d^n + 1") {
  for (long n = 1; n <= 5; ++n) {
    auto cycles = periodic_points(RationalMap::quadratic(Complex(-0.4, 0.3)), n);
    long dn = 1;
    for (long i = 0; i < n; ++i) dn *= 2;
    CHECK(total_point_count(cycles) == dn + 1);
  }
  RationalMap cubic = RationalMap::polynomial(
      Poly({Complex(0.1, 0.05), Complex(-0.2), Complex(0), Complex(1)}));
  for (long n = 1; n <= 3; ++n) {
    auto cycles = periodic_points(cubic, n);
    long dn = 1;
    for (long i = 0; i < n; ++i) dn *= 3;
    CHECK(total_point_count(cycles) == dn + 1);
  }
}

TEST_CASE("periodic point budget") {
  CHECK_THROWS_AS(periodic_points(RationalMap::quadratic(Complex(0)), 16),
                  BudgetExceeded);
}

TEST_CASE("omega of cycle lengths") {
  FatouSpec spec;
  spec.degree = 6;
  auto with_lengths = [&](std::vector<long> lens) {
    spec.fatou_cycles.clear();
    for (long l : lens) spec.fatou_cycles.push_back({l, CycleKind::Attracting, true, {}});
    return omega(spec);
  };
  CHECK(with_lengths({4, 6}) == 2);
  CHECK(with_lengths({}) == 1);
  CHECK(with_lengths({1, 2}) == 1);
}

TEST_CASE("FatouSpec validation") {
  FatouSpec spec;
  spec.degree = 2;
  spec.fatou_cycles = {{1, CycleKind::Attracting, true, {}},
                       {1, CycleKind::Attracting, true, {}},
                       {2, CycleKind::Attracting, true, {}}};
  CHECK_THROWS_AS(spec.validate(), ValidationError);  // f > 2d-2

  FatouSpec herman_mismatch;
  herman_mismatch.degree = 3;
  herman_mismatch.herman.push_back({2, {}, 0, "positive"});
  herman_mismatch.fatou_cycles = {{2, CycleKind::Attracting, true, {}}};
  CHECK_THROWS_AS(herman_mismatch.validate(), ValidationError);

  FatouSpec ok;
  ok.degree = 3;
  ok.c_julia = 1;
  ok.julia_critical_labels = {"c1"};
  ok.fatou_cycles = {{2, CycleKind::Herman, true, {}}};
  ok.herman.push_back({2, {{"c1", 1}}, 0, "positive"});
  CHECK_NOTHROW(ok.validate());

  ok.herman[0].h_values["c1"] = 5;  // exceeds cycle length
  CHECK_THROWS_AS(ok.validate(), ValidationError);
}
