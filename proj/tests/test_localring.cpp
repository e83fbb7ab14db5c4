#include <catch2/catch_amalgamated.hpp>

#include "charkummer/localring.hpp"

using namespace ck;

namespace {
RingPtr ring2(int /*unused*/ = 0) { return make_ring(Field::make(2, 1), {"x", "y"}); }
Series P(const RingPtr& r, const std::string& s, int prec = 12) {
  return parse_series(r, s, prec);
}
}  // namespace

TEST_CASE("artinian lengths of monomial and binomial ideals") {
  RingPtr r = ring2();
  // (x, y)^k has colength k(k+1)/2
  for (int k = 1; k <= 5; ++k) {
    std::vector<Series> gens;
    for (int i = 0; i <= k; ++i) {
      std::vector<unsigned> e = {static_cast<unsigned>(k - i), static_cast<unsigned>(i)};
      gens.push_back(Series::monomial(r, e, 1, 12));
    }
    REQUIRE(artinian_length(LocalIdeal(r, gens)) == k * (k + 1) / 2);
  }
  REQUIRE(artinian_length(LocalIdeal(r, {P(r, "x"), P(r, "y^3")})) == 3);
  REQUIRE(artinian_length(LocalIdeal(r, {P(r, "x^2 + y^3"), P(r, "x*y")})) == 5);
  // a non m-primary ideal has infinite length
  REQUIRE(artinian_length(LocalIdeal(r, {P(r, "x")})) == kInfiniteLength);
  // the unit ideal has length zero
  REQUIRE(artinian_length(LocalIdeal(r, {P(r, "1 + x")})) == 0);
}

TEST_CASE("containment and ideal equality") {
  RingPtr r = ring2();
  LocalIdeal I(r, {P(r, "x^2"), P(r, "y^2")});
  REQUIRE(contains(I, P(r, "x^2 + x^2*y^5")) == Containment::Yes);
  REQUIRE(contains(I, P(r, "x*y")) == Containment::No);
  LocalIdeal J(r, {P(r, "x^2 + y^2"), P(r, "y^2")});
  REQUIRE(ideals_equal(I, J));
  LocalIdeal K(r, {P(r, "x^2"), P(r, "x*y"), P(r, "y^2")});
  REQUIRE_FALSE(ideals_equal(I, K));
}

TEST_CASE("frobenius powers of the maximal ideal") {
  RingPtr r = ring2();
  // m^[q] = (x^q, y^q) has colength q^2
  REQUIRE(artinian_length(frobenius_power(r, 2, 12)) == 4);
  REQUIRE(artinian_length(frobenius_power(r, 4, 12)) == 16);
  REQUIRE_THROWS_AS(frobenius_power(r, 3, 12), domain_error);
}

TEST_CASE("tjurina numbers of rational double point equations") {
  RingPtr r3 = make_ring(Field::make(2, 1), {"x", "y", "z"});
  auto tau = [&](const std::string& eq) { return tjurina_number(P(r3, eq, 20)); };
  REQUIRE(tau("z^2 + x*y") == 2);                               // A1
  REQUIRE(tau("z^2 + x*y*z + x*y^2 + x^2*y") == 6);             // D4^1
  REQUIRE(tau("z^2 + x^2*y*z + x^5 + y^3") == 12);              // E8^2
  REQUIRE(tau("z^2 + x^5 + y^3") == 16);                        // E8^0
  // smooth point: infinite by convention is never returned; tau = 0
  REQUIRE(tau("z + x^2") == 0);
}

TEST_CASE("nonsmoothness length of a relation system") {
  RingPtr r4 = make_ring(Field::make(2, 1), {"x", "y", "B", "W"});
  // a pair of relations cutting out a smooth surface germ reports zero
  std::vector<Series> smooth = {P(r4, "W + x^2", 12), P(r4, "B + y^2", 12)};
  REQUIRE(nonsmoothness_length(smooth) == 0);
  // the a-chart relations of the split quotient have an isolated
  // nonsmooth point of length two at the origin
  std::vector<Series> a_chart = {P(r4, "W^2 + x*B*W + x*B^2 + y", 12),
                                 P(r4, "B*x + y", 12)};
  REQUIRE(nonsmoothness_length(a_chart) == 2);
}

TEST_CASE("implicit pair solution solves the defining equations") {
  RingPtr r = ring2();
  Series a = P(r, "x"), b = P(r, "y");
  ImplicitPair ip = solve_implicit_pair(a, b, 10);
  Series u = Series::variable(ip.uv_ring, 0, 10);
  Series v = Series::variable(ip.uv_ring, 1, 10);
  REQUIRE((ip.x - (u * u + ip.x * u)).is_zero());
  REQUIRE((ip.y - (v * v + ip.y * v)).is_zero());
  REQUIRE(ip.z == u * ip.y + v * ip.x);
  // degenerate data is rejected
  REQUIRE_THROWS_AS(solve_implicit_pair(P(r, "x"), P(r, "x^2"), 8), domain_error);
  REQUIRE_THROWS_AS(solve_implicit_pair(P(r, "1 + x"), P(r, "y"), 8), domain_error);
}

TEST_CASE("quotient basis dimensions are stable under extra precision") {
  RingPtr r = ring2();
  for (int prec : {10, 13}) {
    auto len = [&](const std::string& f, const std::string& g) {
      return artinian_length(LocalIdeal(r, {P(r, f, prec), P(r, g, prec)}));
    };
    REQUIRE(len("x", "y") == 1);
    REQUIRE(len("x", "y^3") == 3);
    REQUIRE(len("x^2", "y^2") == 4);
    REQUIRE(len("x^2 + y^3", "x*y") == 5);
  }
}
