#include "ratk/json_io.hpp"

#include <doctest.h>

#include "ratk/errors.hpp"
#include "ratk/render.hpp"

using namespace ratk;

TEST_CASE("group JSON round trip") {
  FgAbGroup g = FgAbGroup::canonical(2, {Int(2), Int(6)});
  g.distinguished = FgAbGroup::Distinguished{{Int(1), Int(3)}, {Int(0), Int(-2)}};
  Json j = to_json(g);
  FgAbGroup back = group_from_json(j);
  CHECK(back.free_rank == 2);
  CHECK(back.torsion == g.torsion);
  REQUIRE(back.distinguished.has_value());
  CHECK(back.distinguished->torsion_coords == g.distinguished->torsion_coords);
  // negative free coordinates survive
  CHECK(back.distinguished->free_coords[1] == -2);
  CHECK(j["unit_class"] == to_string(g.unit_class()));
  CHECK(back.unit_class() == g.unit_class());
}

TEST_CASE("huge torsion factors serialize as strings") {
  FgAbGroup g;
  g.free_rank = 0;
  g.torsion = {Int("123456789012345678901234567890")};
  Json j = to_json(g);
  CHECK(j["torsion"][0].is_string());
  CHECK(group_from_json(j).torsion[0] == g.torsion[0]);
}

TEST_CASE("map JSON forms") {
  Json quadratic = {{"quadratic_c", {0.25, 0.0}}};
  RationalMap q = map_from_json(quadratic);
  CHECK(q.degree() == 2);
  CHECK(q.is_polynomial());

  Json full;
  full["num"] = Json::array({Json::array({1.0, 0.0})});
  full["den"] = Json::array({Json::array({0.0, 0.0}), Json::array({1.0, 0.0})});
  RationalMap recip = map_from_json(full);  // 1/z
  CHECK(recip.degree() == 1);
  CHECK(recip.evaluate(SpherePoint::finite(Complex(2))).value() == Complex(0.5));

  CHECK_THROWS_AS(map_from_json(Json::object()), ValidationError);
}

TEST_CASE("fatou spec JSON round trip with Herman data") {
  Json j;
  j["degree"] = 3;
  j["c_julia"] = 1;
  j["c_fatou"] = 2;
  Json cycle;
  cycle["length"] = 1;
  cycle["kind"] = "herman";
  j["fatou_cycles"] = Json::array({cycle});
  Json hd;
  hd["length"] = 1;
  hd["h_values"]["c1"] = 1;
  hd["phi_minus_h"] = 0;
  j["herman"] = Json::array({hd});
  j["provenance"] = "declared";

  FatouSpec spec = fatou_spec_from_json(j);
  CHECK(spec.degree == 3);
  CHECK(spec.h() == 1);
  CHECK(spec.julia_critical_labels == std::vector<std::string>{"c1"});
  CHECK(spec.herman[0].h_values.at("c1") == 1);

  FatouSpec back = fatou_spec_from_json(to_json(spec));
  CHECK(back.degree == spec.degree);
  CHECK(back.h() == spec.h());
  CHECK(back.herman[0].phi_minus_h == spec.herman[0].phi_minus_h);
}

TEST_CASE("fatou spec validation failures surface as errors") {
  Json j;
  j["degree"] = 2;
  j["c_julia"] = 0;
  Json cycle;
  cycle["length"] = 1;
  cycle["kind"] = "attracting";
  j["fatou_cycles"] = Json::array({cycle});
  // An orphan Herman descriptor with no matching Herman cycle.
  Json hd;
  hd["length"] = 1;
  hd["h_values"] = Json::object();
  j["herman"] = Json::array({hd});
  CHECK_THROWS_AS(fatou_spec_from_json(j), ValidationError);
}

TEST_CASE("graph JSON round trip") {
  Json j;
  j["vertices"] = 3;
  j["edges"] = Json::array({Json::array({0, 0, 2}), Json::array({0, 1, 1}),
                            Json::array({2, 1, 1})});
  j["infinite_emitters"] = Json::array({1});
  DirectedGraph g = graph_from_json(j);
  CHECK(g.vertex_count == 3);
  CHECK(g.multiplicity(0, 0) == 2);
  CHECK(g.infinite_emitters.count(1) == 1);

  DirectedGraph back = graph_from_json(to_json(g));
  CHECK(back.edges == g.edges);
  CHECK(back.infinite_emitters == g.infinite_emitters);
}

TEST_CASE("render output is a deterministic P6 image") {
  RenderSpec spec;
  spec.x0 = 5.0;
  spec.y0 = 5.0;
  spec.x1 = 6.0;
  spec.y1 = 6.0;
  spec.width = 2;
  spec.height = 2;
  spec.max_iter = 64;
  auto a = render_ppm(spec);
  auto b = render_ppm(spec);
  CHECK(a == b);
  const std::string header(a.begin(), a.begin() + 9);
  CHECK(header == "P6\n2 2\n25");  // "P6\n2 2\n255\n"
  // Rect far outside the Mandelbrot set: all four pixels escape alike.
  REQUIRE(a.size() == 11 + 12);
  for (int px = 1; px < 4; ++px) {
    CHECK(a[11 + 3 * px + 0] == a[11]);
    CHECK(a[11 + 3 * px + 1] == a[12]);
    CHECK(a[11 + 3 * px + 2] == a[13]);
  }
}

TEST_CASE("the center of the parameter plane does not escape") {
  RenderSpec spec;
  spec.x0 = -0.1;
  spec.y0 = -0.1;
  spec.x1 = 0.1;
  spec.y1 = 0.1;
  spec.width = 1;
  spec.height = 1;
  spec.max_iter = 500;
  auto img = render_ppm(spec);
  REQUIRE(img.size() == 11 + 3);
  CHECK(img[11] == 0);
  CHECK(img[12] == 0);
  CHECK(img[13] == 0);
}

TEST_CASE("render input validation") {
  RenderSpec bad;
  bad.x1 = bad.x0;  // empty rect
  CHECK_THROWS_AS(render_ppm(bad), ValidationError);
  RenderSpec huge;
  huge.width = 9000;
  CHECK_THROWS_AS(render_ppm(huge), ValidationError);
}
