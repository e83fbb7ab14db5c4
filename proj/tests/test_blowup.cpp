#include <catch2/catch_amalgamated.hpp>

#include "charkummer/blowup.hpp"

using namespace ck;

namespace {
InvolutionData data2(const std::string& a, const std::string& b, int prec = 14) {
  RingPtr r = make_ring(Field::make(2, 1), {"x", "y"});
  return InvolutionData::make(parse_series(r, a, prec), parse_series(r, b, prec));
}
}  // namespace

TEST_CASE("a-chart relations for the split quotient") {
  InvolutionData d = data2("x", "y");
  BlowupResult br = blowup_invariant(d);
  REQUIRE(br.center_length == 1);
  REQUIRE(br.point_blowup_equivalent);
  REQUIRE(br.z_chart_exceptional_empty);
  RingPtr ra = br.a_chart.ring;
  REQUIRE(ra->vars == std::vector<std::string>{"x", "y", "B", "W"});
  Series x = Series::variable(ra, 0, 14), y = Series::variable(ra, 1, 14);
  Series B = Series::variable(ra, 2, 14), W = Series::variable(ra, 3, 14);
  REQUIRE(br.a_chart.relations[0] == W * W + x * B * W + x * B * B + y);
  REQUIRE(br.a_chart.relations[1] == B * x - y);
}

TEST_CASE("chart consistency on the named quotient data") {
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"x", "y"}, {"x", "y^2"}, {"x", "y^3"}, {"y", "x^2"}, {"x^2", "y^2"}}) {
    InvolutionData d = data2(a, b);
    INFO(a << ", " << b);
    REQUIRE(chart_consistency_check(d, Chart::A).ok);
    REQUIRE(chart_consistency_check(d, Chart::B).ok);
  }
}

TEST_CASE("exceptional fiber is a doubled projective line") {
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"x", "y"}, {"x", "y^2"}, {"y", "x^2"}}) {
    FiberReport fr = exceptional_fiber_data(data2(a, b));
    INFO(a << ", " << b);
    REQUIRE(fr.fiber_ok);
    REQUIRE(fr.multiplicity == 2);
    REQUIRE(fr.transition_ok);
    REQUIRE(fr.transition_degree == 1);
  }
}

TEST_CASE("chart singularity lengths for the cyclic family") {
  for (int r = 1; r <= 3; ++r) {
    InvolutionData d = data2("x", "y^" + std::to_string(r));
    ChartSingularities sa = chart_singularities(d, Chart::A);
    ChartSingularities sb = chart_singularities(d, Chart::B);
    INFO("r = " << r);
    REQUIRE(sa.origin_length == 2 * r);
    REQUIRE(sb.chart_total == 4 * r);
  }
  // the nonnormal quotient has no isolated chart singularities
  REQUIRE_THROWS_AS(chart_singularities(data2("x^2", "y^2"), Chart::A), domain_error);
}

TEST_CASE("strict transform of the exceptional quotient equation") {
  RingPtr r3 = make_ring(Field::make(2, 1), {"x", "y", "z"});
  Series f = parse_series(r3, "z^2 + x^2*y*z + x^5 + y^3", 20);
  StrictTransform st = point_blowup_chart(f, 0);  // x-chart
  REQUIRE(st.multiplicity == 2);
  REQUIRE(to_string(st.transform) == "z^2 + x^3 + x*y^3 + x^2*y*z");
}

TEST_CASE("point blow-up of a node chart") {
  RingPtr r2 = make_ring(Field::make(2, 1), {"x", "y"});
  Series f = parse_series(r2, "x*y", 12);
  StrictTransform st = point_blowup_chart(f, 0);
  REQUIRE(st.multiplicity == 2);
  REQUIRE(to_string(st.transform) == "y");
  REQUIRE_THROWS_AS(point_blowup_chart(parse_series(r2, "1 + x", 12), 0), domain_error);
}

TEST_CASE("cartier multiplicity bound doubles the center length") {
  REQUIRE(cartier_multiple_check(data2("x", "y")) == 2);
  REQUIRE(cartier_multiple_check(data2("x", "y^2")) == 4);
  REQUIRE(cartier_multiple_check(data2("x^2", "y^2")) == 8);
}
