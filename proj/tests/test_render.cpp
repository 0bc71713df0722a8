#include <doctest.h>

#include "cgseries/cartan_eta.hpp"
#include "cgseries/render.hpp"

using namespace cgs;

TEST_SUITE("render") {

TEST_CASE("formats") {
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS(parse_format("yaml"));
}

TEST_CASE("matrix rendering") {
  GroupAnalysis a(make_cyclic_su2(3));
  const CycloMatrix inv = cartan_inverse(a, InverseMethod::Direct);
  CHECK(to_json(inv) == Json::parse(R"([["2/3", "1/3"], ["1/3", "2/3"]])"));
  const std::string tex = render_matrix(inv, Format::Latex);
  CHECK(tex.find("\\begin{pmatrix}") != std::string::npos);
  CHECK(tex.find("\\frac{2}{3}") != std::string::npos);
  const std::string text = render_matrix(inv, Format::Text, {"1", "2"}, {"1", "2"});
  CHECK(text.find("2/3") != std::string::npos);
}

TEST_CASE("values") {
  CHECK(render_value(Cyclo::zeta(3), Format::Text) == Cyclo::zeta(3).to_string());
  CHECK(render_value(RatQ(QPoly::from_ints({1}), QPoly::from_ints({1, -1})), Format::Text) == "(1) / (1 - q)");
}

TEST_CASE("checks") {
  const IdentityCheck ok{"A = B", true, {-1, -1}}, bad{"C = D", false, {0, 1}};
  CHECK(render_checks({ok, bad}, Format::Text) == "A = B: PASS\nC = D: FAIL at (0, 1)\n");
  const Json j = check_to_json(bad);
  CHECK(j["pass"] == false);
  CHECK(j["witness"] == Json::array({0, 1}));
  CHECK(check_to_json(ok)["witness"].is_null());
}

}
