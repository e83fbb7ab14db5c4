#include <catch2/catch_amalgamated.hpp>

#include "charkummer/involution.hpp"

using namespace ck;

namespace {
InvolutionData data2(const std::string& a, const std::string& b, int prec = 14) {
  RingPtr r = make_ring(Field::make(2, 1), {"x", "y"});
  return InvolutionData::make(parse_series(r, a, prec), parse_series(r, b, prec));
}
}  // namespace

TEST_CASE("invariant equations of the standard quotient data") {
  auto eq = [](const std::string& a, const std::string& b) {
    InvolutionData d = data2(a, b);
    return to_string(invariant_equation(d, 10));
  };
  REQUIRE(eq("x", "y") == "z^2 + x*y*z + x*y^2 + x^2*y");
  REQUIRE(eq("x", "y^2") == "z^2 + x^2*y + x*y^2*z + x*y^4");
  REQUIRE(eq("y", "x^2") == "z^2 + y^3 + x^2*y*z + x^5");
}

TEST_CASE("invariant identity holds to working precision") {
  for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"x", "y"}, {"x", "y^2"}, {"y", "x^2"}, {"x^2", "y^2"}}) {
    InvolutionData d = data2(a, b);
    IdentityReport rep = verify_invariant_identity(d, 10);
    INFO(a << ", " << b);
    REQUIRE(rep.ok);
    REQUIRE(rep.residual_f.is_zero());
    REQUIRE(rep.residual_x.is_zero());
    REQUIRE(rep.residual_y.is_zero());
    REQUIRE(rep.residual_z.is_zero());
  }
}

TEST_CASE("fiber ideal above the origin is the Frobenius power") {
  InvolutionData d = data2("x", "y");
  FiberFixedReport rep = fiber_and_fixed_ideals(d, 12);
  REQUIRE(rep.fiber_is_frobenius);
}

TEST_CASE("center length matches the colength of (a, b)") {
  REQUIRE(data2("x", "y").center_length == 1);
  REQUIRE(data2("x", "y^2").center_length == 2);
  REQUIRE(data2("y", "x^2").center_length == 2);
  REQUIRE(data2("x^2", "y^2").center_length == 4);
  // (a, b) must be m-primary
  RingPtr r = make_ring(Field::make(2, 1), {"x", "y"});
  REQUIRE_THROWS_AS(
      InvolutionData::make(parse_series(r, "x", 12), parse_series(r, "x^2", 12)),
      domain_error);
}

TEST_CASE("singular point census on the exceptional line") {
  auto census = [](const std::string& a, const std::string& b) {
    return count_singular_chart_points(data2(a, b));
  };
  SingularPointCount c1 = census("x", "y");
  REQUIRE_FALSE(c1.nonnormal);
  REQUIRE(c1.count == 3);
  SingularPointCount c2 = census("x", "y^2");
  REQUIRE_FALSE(c2.nonnormal);
  REQUIRE(c2.count == 2);
  SingularPointCount c3 = census("y", "x^2");
  REQUIRE_FALSE(c3.nonnormal);
  REQUIRE(c3.count == 1);
  SingularPointCount c4 = census("x^2", "y^2");
  REQUIRE(c4.nonnormal);
}

TEST_CASE("embedded component appears exactly when linear parts vanish") {
  EmbeddedComponentReport e1 = has_embedded_component(data2("x", "y"));
  REQUIRE_FALSE(e1.embedded);
  EmbeddedComponentReport e2 = has_embedded_component(data2("x^2", "y^2"));
  REQUIRE(e2.embedded);
  REQUIRE(e2.witness_ok);
}

TEST_CASE("tangent images at the superspecial point") {
  InvolutionData d = data2("x^2", "y^2");
  TangentVectorPoint pt{Chart::A, 0};
  auto img = [&](std::array<FF, 4> psi) { return tangent_image(d, pt, psi); };
  // the three independent deformation directions of the length-2 fiber ideal
  auto r1 = img({0, 0, 0, 1});
  REQUIRE(r1[0] == std::array<FF, 2>{0, 0});
  REQUIRE(r1[1] == std::array<FF, 2>{1, 0});
  auto r2 = img({0, 0, 1, 0});
  REQUIRE(r2[0] == std::array<FF, 2>{0, 0});
  REQUIRE(r2[1] == std::array<FF, 2>{0, 1});
  auto r3 = img({1, 0, 0, 0});
  REQUIRE(r3[0] == std::array<FF, 2>{1, 0});
  REQUIRE(r3[1] == std::array<FF, 2>{0, 0});
}

TEST_CASE("tangent dimension of the equivariant Hilbert scheme") {
  TangentVectorPoint pt{Chart::A, 0};
  REQUIRE(gh_tangent_dimension(data2("x^2", "y^2"), pt) == 4);
  REQUIRE(gh_tangent_dimension(data2("x", "y"), pt) == 3);
}
