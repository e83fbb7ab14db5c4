#include <catch2/catch_amalgamated.hpp>

#include "charkummer/series.hpp"

using namespace ck;

namespace {
RingPtr ring2() { return make_ring(Field::make(2, 1), {"x", "y"}); }
}  // namespace

TEST_CASE("packed monomials") {
  Mono m = mono_make({2, 3});
  REQUIRE(mono_deg(m) == 5);
  REQUIRE(mono_exp(m, 0) == 2);
  REQUIRE(mono_exp(m, 1) == 3);
  Mono n = mono_var(1, 4);
  REQUIRE(mono_divides(n, mono_mul(m, n)));
  REQUIRE_FALSE(mono_divides(mono_var(0, 3), m));
  REQUIRE(mono_div(mono_mul(m, n), n) == m);
  REQUIRE(mono_deg(mono_one()) == 0);
}

TEST_CASE("series arithmetic in characteristic 2") {
  RingPtr r = ring2();
  Series x = Series::variable(r, 0, 12);
  Series y = Series::variable(r, 1, 12);
  REQUIRE((x + x).is_zero());
  Series s = (x + y) * (x + y);
  REQUIRE(s == x * x + y * y);  // Frobenius: cross terms cancel
  REQUIRE(s.order() == 2);
  REQUIRE((x * y).coeff(mono_make({1, 1})) == 1);
  REQUIRE(x.pow(5).order() == 5);
  REQUIRE(x.pow(0).constant_term() == 1);
}

TEST_CASE("precision propagation") {
  RingPtr r = ring2();
  Series x = Series::variable(r, 0, 10);
  Series y = Series::variable(r, 1, 6);
  REQUIRE((x + y).precision() == 6);
  // product precision: min over operands of (own precision + other's order)
  REQUIRE((x * y).precision() == 7);
  Series z = Series::zero(r, 8);
  REQUIRE(z.order() == 8);
  REQUIRE(x.truncate(4).precision() == 4);
  REQUIRE(x.truncate(4).degree_bound() == 1);
  REQUIRE_THROWS_AS(Series::zero(r, -1), domain_error);
}

TEST_CASE("derivative") {
  RingPtr r = ring2();
  Series x = Series::variable(r, 0, 12);
  Series y = Series::variable(r, 1, 12);
  Series f = x * x * y + x * y;  // d/dx = y (the x^2 y term dies mod 2)
  REQUIRE(f.derivative(0) == y.truncate(11));
  REQUIRE(f.derivative(1) == (x * x + x).truncate(11));
  REQUIRE_THROWS_AS(f.derivative(5), domain_error);
}

TEST_CASE("substitution is a local homomorphism") {
  RingPtr r = ring2();
  Series x = Series::variable(r, 0, 12);
  Series y = Series::variable(r, 1, 12);
  Series f = x * x + x * y + y * y * y;
  Series g = f.substitute({y, x});  // swap the variables
  REQUIRE(g == y * y + x * y + x * x * x);
  // composite of two substitutions agrees with the direct one
  Series img0 = x + y * y, img1 = x * y;
  Series h1 = f.substitute({img0, img1}).substitute({y, x});
  Series h2 = f.substitute({img0.substitute({y, x}), img1.substitute({y, x})});
  REQUIRE(h1 == h2);
  Series one = Series::constant(r, 1, 12);
  REQUIRE_THROWS_AS(f.substitute({x + one, y}), domain_error);
  REQUIRE_THROWS_AS(f.substitute({x}), domain_error);
}

TEST_CASE("monomial division and variable shift") {
  RingPtr r = ring2();
  Series x = Series::variable(r, 0, 10);
  Series y = Series::variable(r, 1, 10);
  Series f = x * x * y + x * y * y;
  Series q = f.divide_by_monomial(mono_make({1, 1}));
  REQUIRE(q == (x + y).truncate(8));
  REQUIRE_THROWS_AS(f.divide_by_monomial(mono_var(0, 3)), domain_error);

  FieldPtr F4 = Field::make(2, 2);
  RingPtr r4 = make_ring(F4, {"t"});
  Series t = Series::variable(r4, 0, 10);
  FF g = F4->generator();
  Series p = t * t * t + Series::constant(r4, 1, 10);
  Series sh = p.shift_var(0, g);
  REQUIRE(sh.coeff(mono_var(0, 2)) == g);  // binomial coefficient 3 is odd
  // shifting back by the same amount is the identity (characteristic 2)
  REQUIRE(sh.shift_var(0, g) == p.truncate(4));
}

TEST_CASE("series parse and print round trip") {
  RingPtr r4 = make_ring(Field::make(2, 2), {"x", "y"});
  Series f = parse_series(r4, "x^2*y + g*x + g^2*y^3 + 1", 12);
  REQUIRE(f.coeff(mono_make({2, 1})) == 1);
  REQUIRE(f.coeff(mono_var(0)) == r4->field->generator());
  REQUIRE(parse_series(r4, to_string(f), 12) == f);
  REQUIRE(parse_series(r4, "0", 12).is_zero());
  REQUIRE_THROWS_AS(parse_series(r4, "x + w", 12), parse_error);
  REQUIRE_THROWS_AS(parse_series(r4, "x +", 12), parse_error);
}

TEST_CASE("embedding and extension between rings") {
  FieldPtr F4 = Field::make(2, 2);
  FieldPtr F16 = Field::make(2, 4);
  RingPtr small = make_ring(F4, {"x", "y"});
  RingPtr big = make_ring(F16, {"x", "y"});
  Series f = parse_series(small, "g*x + y^2", 10);
  Series fe = embed_series(f, big);
  REQUIRE(fe.coeff(mono_var(0)) == F4->embed_into(F4->generator(), *F16));
  RingPtr wide = make_ring(F4, {"x", "y", "z"});
  Series fw = extend_series(f, wide);
  REQUIRE(fw.coeff(mono_var(1, 2)) == 1);
  REQUIRE(fw.ring()->nvars() == 3);
}
