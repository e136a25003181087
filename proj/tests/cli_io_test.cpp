#include <doctest.h>

#include "helpers.hpp"
#include "zeroloc/json_io.hpp"
#include "zeroloc/svg.hpp"

using namespace zeroloc;

TEST_CASE("polynomial_from_json accepts pairs and plain reals") {
  const ojson j = ojson::parse(R"({"coeffs": [[2.0, 0.0], 0.0, [-8.0, 0.0]]})");
  const Polynomial p = polynomial_from_json(j);
  CHECK(p.degree() == 2);
  CHECK(p.coeffs[0] == cx(1.0));  // normalized on load
  CHECK(p.coeffs[2] == cx(-4.0));

  CHECK_THROWS_AS(polynomial_from_json(ojson::parse(R"({"coeffs": "nope"})")), Error);
  CHECK_THROWS_AS(polynomial_from_json(ojson::parse(R"({"coeffs": [[1.0]]})")), Error);
  CHECK_THROWS_AS(polynomial_from_json(ojson::parse(R"({})")), Error);
}

TEST_CASE("reports serialize with regions in both planes") {
  const Polynomial p = normalize_monic({1.0, 0.0, 10.0, 0.0, 0.5});
  const IsolationReport rep = tmgp(prepare_even(p));
  const ojson j = to_json(rep);
  CHECK(j["method"] == "tmgp");
  CHECK(j["case"] == "tmgp-a");
  CHECK(j["fired"] == true);
  CHECK(j["groups"].size() == 2);
  CHECK(j["groups"][0]["discs"][0]["plane"] == "squared");
  CHECK(j["groups"][0]["z_plane_regions"][0]["type"] == "cassini");
  CHECK(j["modulus_gap"].contains("lo"));
  CHECK(j.dump() == to_json(tmgp(prepare_even(p))).dump());
}

TEST_CASE("svg output is well formed and deterministic") {
  const Polynomial p = normalize_monic({1.0, 0.0, 10.0, 0.0, 0.5});
  const IsolationReport rep = tmgp(prepare_even(p));
  const RootSet oracle = all_roots(p);
  const std::string svg = render_svg(rep, oracle);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);  // Cassini curves
  CHECK(svg == render_svg(rep, oracle));
}
