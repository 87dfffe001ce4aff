#include "ratk/ktheory.hpp"

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratk/errors.hpp"

using namespace ratk;

namespace {

FatouSpec declared_spec(long degree, long c_julia, std::vector<long> cycle_lengths,
                        std::vector<HermanDescriptor> herman = {}) {
  FatouSpec spec;
  spec.degree = degree;
  spec.c_julia = c_julia;
  for (long i = 0; i < c_julia; ++i) {
    spec.julia_critical_labels.push_back("c" + std::to_string(i + 1));
  }
  spec.c_fatou = 2 * degree - 2 - c_julia;
  size_t herman_left = herman.size();
  for (long len : cycle_lengths) {
    FatouCycle fc;
    fc.length = len;
    fc.kind = CycleKind::Attracting;
    // Tag the first cycles whose lengths match the descriptors as Herman.
    for (const HermanDescriptor& hd : herman) {
      if (hd.length == len && herman_left > 0 && fc.kind != CycleKind::Herman) {
        fc.kind = CycleKind::Herman;
        --herman_left;
        break;
      }
    }
    spec.fatou_cycles.push_back(fc);
  }
  spec.herman = std::move(herman);
  spec.provenance = Provenance::Declared;
  return spec;
}

}  // namespace

TEST_CASE("herman matrix assembly") {
  SUBCASE("no critical points in J, no Herman cycles, degree 2") {
    FatouSpec spec = declared_spec(2, 0, {1});
    HermanMatrix m = build_herman_matrix(spec);
    REQUIRE(m.matrix.rows() == 1);
    REQUIRE(m.matrix.cols() == 1);
    CHECK(m.matrix(0, 0) == 1);  // d - 1
  }
  SUBCASE("two Julia criticals, degree 3") {
    FatouSpec spec = declared_spec(3, 2, {1});
    HermanMatrix m = build_herman_matrix(spec);
    REQUIRE(m.matrix.rows() == 3);
    REQUIRE(m.matrix.cols() == 1);
    CHECK(m.matrix(0, 0) == 1);
    CHECK(m.matrix(1, 0) == 1);
    CHECK(m.matrix(2, 0) == 2);
    CHECK(m.row_labels.back() == "u");
  }
  SUBCASE("the Herman toy matrix [[1,1],[0,2]]") {
    HermanDescriptor hd;
    hd.length = 1;
    hd.h_values = {{"c1", 1}};
    hd.phi_minus_h = 0;
    FatouSpec spec = declared_spec(3, 1, {1}, {hd});
    HermanMatrix m = build_herman_matrix(spec);
    REQUIRE(m.matrix.rows() == 2);
    REQUIRE(m.matrix.cols() == 2);
    CHECK(m.matrix(0, 0) == 1);
    CHECK(m.matrix(0, 1) == 1);
    CHECK(m.matrix(1, 0) == 0);
    CHECK(m.matrix(1, 1) == 2);
  }
  SUBCASE("missing H value is reported") {
    HermanDescriptor hd;
    hd.length = 1;
    hd.h_values = {{"wrong_label", 1}};
    FatouSpec spec = declared_spec(3, 1, {1}, {hd});
    CHECK_THROWS_AS(build_herman_matrix(spec), MissingHValue);
  }
}

TEST_CASE("sphere K-theory") {
  KTheoryResult r = k_sphere(2, 2);
  CHECK(group_iso(r.k0, FgAbGroup::free(3)));
  CHECK(group_iso(r.k1, FgAbGroup::free(1)));
  CHECK(r.k0.unit_class() == UnitClass::Generator);

  KTheoryResult cubic = k_sphere(3, 4);
  CHECK(group_iso(cubic.k0, FgAbGroup::free(5)));
  CHECK(group_iso(cubic.k1, FgAbGroup::free(1)));

  // The formula depends only on the counts.
  CHECK(group_iso(k_sphere(2, 2).k0, r.k0));
  CHECK_THROWS_AS(k_sphere(1, 2), ValidationError);
  CHECK_THROWS_AS(k_sphere(2, 1), ValidationError);
}

TEST_CASE("fatou K-theory") {
  KTheoryResult r = k_fatou(2, 2, 0);
  CHECK(group_iso(r.k0, FgAbGroup::free(4)));
  CHECK(group_iso(r.k1, FgAbGroup::free(2)));
  CHECK(r.k0.unit_class() == UnitClass::Absent);  // non-unital ideal

  CHECK(group_iso(k_fatou(0, 1, 0).k0, FgAbGroup::free(1)));
  CHECK(group_iso(k_fatou(0, 1, 0).k1, FgAbGroup::free(1)));
  CHECK(k_fatou(0, 0, 0).k0.is_trivial());
  CHECK(k_fatou(0, 0, 0).k1.is_trivial());
  CHECK_THROWS_AS(k_fatou(0, 1, 2), ValidationError);
}

TEST_CASE("julia K-theory of the classified quadratics") {
  SUBCASE("c = 1: escaping critical point, everything vanishes") {
    KTheoryResult r = k_julia(declared_spec(2, 0, {1}));
    CHECK(r.k0.is_trivial());
    CHECK(r.k1.is_trivial());
  }
  SUBCASE("c = -2: K0 = Z with the unit a generator") {
    KTheoryResult r = k_julia(declared_spec(2, 1, {1}));
    CHECK(r.k1.is_trivial());
    CHECK(group_iso(r.k0, FgAbGroup::free(1)));
    CHECK(r.k0.unit_class() == UnitClass::Generator);
  }
  SUBCASE("c = 0: K0 = K1 = Z with trivial unit") {
    KTheoryResult r = k_julia(declared_spec(2, 0, {1, 1}));
    CHECK(group_iso(r.k0, FgAbGroup::free(1)));
    CHECK(group_iso(r.k1, FgAbGroup::free(1)));
    CHECK(r.k0.unit_class() == UnitClass::Zero);
  }
}

TEST_CASE("julia K-theory of the Herman toy spec") {
  HermanDescriptor hd;
  hd.length = 1;
  hd.h_values = {{"c1", 1}};
  hd.phi_minus_h = 0;
  FatouSpec spec = declared_spec(3, 1, {1}, {hd});
  KTheoryResult r = k_julia(spec);
  // ker([[1,1],[0,2]]) = 0, omega = 1, f = h = 1
  CHECK(r.k1.is_trivial());
  FgAbGroup expected = FgAbGroup::canonical(1, {Int(2)});
  CHECK(group_iso(r.k0, expected));
  CHECK(r.k0.unit_class() == UnitClass::TorsionGenerator);

  // Cross-check the cokernel against the exhaustive lattice oracle.
  HermanMatrix m = build_herman_matrix(spec);
  ratk::testing::LatticeQuotientOracle oracle(m.matrix);
  CHECK(oracle.order() == 2);
  IntVector u(2);
  u(0) = 0;
  u(1) = 1;
  CHECK_FALSE(oracle.in_lattice(u));
  CHECK(oracle.in_lattice(Int(2) * u));
}

TEST_CASE("julia K-theory with empty Fatou set reproduces the sphere groups") {
  FatouSpec spec;
  spec.degree = 2;
  spec.c_julia = 2;
  spec.julia_critical_labels = {"c1", "c2"};
  spec.c_fatou = 0;
  spec.provenance = Provenance::Declared;
  KTheoryResult julia = k_julia(spec);
  KTheoryResult sphere = k_sphere(2, 2);
  CHECK(group_iso(julia.k0, sphere.k0));
  CHECK(group_iso(julia.k1, sphere.k1));
  CHECK(julia.k0.unit_class() == UnitClass::Generator);
}

TEST_CASE("polynomial K-theory cases") {
  SUBCASE("(2, 0, 2): Case 1 groups") {
    KTheoryResult r = k_polynomial(2, 0, 2);
    CHECK(group_iso(r.k1, FgAbGroup::free(1)));
    CHECK(group_iso(r.k0, FgAbGroup::free(1)));
    CHECK(r.k0.unit_class() == UnitClass::Zero);
  }
  SUBCASE("(2, 1, 2): Case 2 groups") {
    KTheoryResult r = k_polynomial(2, 1, 2);
    CHECK(group_iso(r.k1, FgAbGroup::free(1)));
    CHECK(group_iso(r.k0, FgAbGroup::free(2)));
    CHECK(r.k0.unit_class() == UnitClass::Generator);
  }
  SUBCASE("(3, 0, 1): torsion with generating unit") {
    KTheoryResult r = k_polynomial(3, 0, 1);
    CHECK(r.k1.is_trivial());
    CHECK(group_iso(r.k0, FgAbGroup::canonical(0, {Int(2)})));
    CHECK(r.k0.unit_class() == UnitClass::TorsionGenerator);
  }
}

TEST_CASE("polynomial algebra isomorphism predicate") {
  CHECK(same_polynomial_algebra({2, 0, 2}, {2, 0, 2}));
  CHECK_FALSE(same_polynomial_algebra({2, 0, 1}, {3, 0, 1}));
  CHECK(same_polynomial_algebra({2, 1, 1}, {5, 1, 1}));
}

TEST_CASE("k_julia matches k_polynomial and the no-Herman specialization") {
  for (long d = 2; d <= 5; ++d) {
    for (long cj = 0; cj <= d - 1; ++cj) {
      for (long f = 1; f <= 2 * d - 2; ++f) {
        std::vector<long> lengths(f, 1);
        FatouSpec spec = declared_spec(d, cj, lengths);
        KTheoryResult julia = k_julia(spec);
        KTheoryResult poly = k_polynomial(d, cj, f);
        CHECK(group_iso(julia.k0, poly.k0));
        CHECK(group_iso(julia.k1, poly.k1));
        CHECK(julia.k0.unit_class() == poly.k0.unit_class());
        // coker(H) itself: Z^c_julia when critical points exist, else Z/(d-1)
        FgAbGroup coker_part = cokernel(build_herman_matrix(spec).matrix);
        if (cj > 0) {
          CHECK(group_iso(coker_part, FgAbGroup::free(cj)));
        } else {
          CHECK(group_iso(coker_part, FgAbGroup::canonical(0, {Int(d - 1)})));
        }
      }
    }
  }
}

TEST_CASE("predicate agrees with computed groups plus unit class") {
  std::vector<PolynomialShape> shapes;
  for (long d = 2; d <= 5; ++d) {
    for (long cj = 0; cj <= d - 1; ++cj) {
      for (long f = 1; f <= 2 * d - 2; ++f) shapes.push_back({d, cj, f});
    }
  }
  for (const auto& a : shapes) {
    KTheoryResult ra = k_polynomial(a.degree, a.c_julia, a.f);
    for (const auto& b : shapes) {
      KTheoryResult rb = k_polynomial(b.degree, b.c_julia, b.f);
      const bool groups_match = group_iso(ra.k0, rb.k0) && group_iso(ra.k1, rb.k1) &&
                                ra.k0.unit_class() == rb.k0.unit_class();
      CHECK(same_polynomial_algebra(a, b) == groups_match);
    }
  }
}

namespace {

FatouSpec random_complete_spec(std::mt19937& rng) {
  std::uniform_int_distribution<long> degree_dist(2, 6);
  std::uniform_int_distribution<long> h_dist(0, 3);
  std::uniform_int_distribution<long> cj_dist(0, 4);
  std::uniform_int_distribution<long> len_dist(1, 5);
  std::uniform_int_distribution<long> extra_f(0, 3);

  const long d = degree_dist(rng);
  const long cj = std::min<long>(cj_dist(rng), 2 * d - 3);
  const long h = std::min<long>(h_dist(rng), 2 * d - 3);  // room for one more cycle

  std::vector<HermanDescriptor> herman;
  FatouSpec spec;
  spec.degree = d;
  spec.c_julia = cj;
  for (long i = 0; i < cj; ++i) {
    spec.julia_critical_labels.push_back("c" + std::to_string(i + 1));
  }
  spec.c_fatou = std::max<long>(0, 2 * d - 2 - cj);
  for (long q = 0; q < h; ++q) {
    HermanDescriptor hd;
    hd.length = len_dist(rng);
    std::uniform_int_distribution<long> hval(0, hd.length);
    for (const std::string& label : spec.julia_critical_labels) {
      hd.h_values[label] = hval(rng);
    }
    std::uniform_int_distribution<long> phi_const(-hd.length, (d - 1) * hd.length);
    hd.phi_minus_h = phi_const(rng);
    spec.fatou_cycles.push_back({hd.length, CycleKind::Herman, true, {}});
    spec.herman.push_back(std::move(hd));
  }
  const long f_extra = 1 + extra_f(rng);
  for (long i = 0; i < f_extra && spec.f() < 2 * d - 2; ++i) {
    spec.fatou_cycles.push_back({len_dist(rng), CycleKind::Attracting, true, {}});
  }
  spec.provenance = Provenance::Declared;
  spec.validate();
  return spec;
}

long rank_of(const FgAbGroup& g) { return g.free_rank; }

}  // namespace

TEST_CASE("rank identity: rank K0 - rank K1 = c_julia on random specs") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 250; ++trial) {
    FatouSpec spec = random_complete_spec(rng);
    KTheoryResult r = k_julia(spec);
    CHECK(rank_of(r.k0) - rank_of(r.k1) == spec.c_julia);
  }
}

TEST_CASE("orientation flip leaves the K-groups and unit class unchanged") {
  std::mt19937 rng(505);
  int flipped_cases = 0;
  for (int trial = 0; trial < 200; ++trial) {
    FatouSpec spec = random_complete_spec(rng);
    if (spec.h() == 0) continue;
    KTheoryResult base = k_julia(spec);
    FatouSpec flipped = spec;
    std::uniform_int_distribution<size_t> pick(0, spec.herman.size() - 1);
    const size_t q = pick(rng);
    flipped.herman[q] = flip_orientation(spec.herman[q], spec.degree);
    KTheoryResult other = k_julia(flipped);
    CHECK(group_iso(base.k0, other.k0));
    CHECK(group_iso(base.k1, other.k1));
    CHECK(base.k0.unit_class() == other.k0.unit_class());
    ++flipped_cases;
  }
  CHECK(flipped_cases > 50);
}

TEST_CASE("incomplete computed specs are refused") {
  FatouSpec spec = declared_spec(2, 0, {1});
  spec.provenance = Provenance::Computed;
  spec.complete = false;
  CHECK_THROWS_AS(k_julia(spec), IncompleteSpec);
}
