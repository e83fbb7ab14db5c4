#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "charkummer/field.hpp"

using namespace ck;

TEST_CASE("field construction and modulus table") {
  for (unsigned k = 1; k <= 8; ++k) {
    FieldPtr F = Field::make(2, k);
    REQUIRE(F->q() == (1u << k));
    // the generator has full multiplicative order
    FF g = F->generator();
    FF acc = F->one();
    for (unsigned i = 1; i < F->q() - 1; ++i) {
      acc = F->mul(acc, g);
      REQUIRE(acc != F->one());
    }
    REQUIRE(F->mul(acc, g) == F->one());
  }
  REQUIRE_THROWS_AS(Field::make(2, 9), domain_error);
  REQUIRE_THROWS_AS(Field::make(4, 1), domain_error);
  REQUIRE_THROWS_AS(Field::make(3, 2), domain_error);
  REQUIRE(Field::make(3, 1)->p() == 3);  // prime fields exist for every p
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(99);
  for (unsigned k : {1u, 2u, 4u}) {
    FieldPtr Fp = Field::make(2, k);
    const Field& F = *Fp;
    std::uniform_int_distribution<unsigned> pick(0, F.q() - 1);
    for (int t = 0; t < 1000; ++t) {
      FF a = static_cast<FF>(pick(rng));
      FF b = static_cast<FF>(pick(rng));
      FF c = static_cast<FF>(pick(rng));
      REQUIRE(F.add(a, b) == F.add(b, a));
      REQUIRE(F.mul(a, b) == F.mul(b, a));
      REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      REQUIRE(F.add(a, a) == 0);  // characteristic 2
      if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == F.one());
      // Frobenius is additive
      REQUIRE(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
    }
  }
}

TEST_CASE("field embedding is a ring homomorphism") {
  FieldPtr F4 = Field::make(2, 2);
  FieldPtr F16 = Field::make(2, 4);
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      FF ea = F4->embed_into(static_cast<FF>(a), *F16);
      FF eb = F4->embed_into(static_cast<FF>(b), *F16);
      REQUIRE(F4->embed_into(F4->add(static_cast<FF>(a), static_cast<FF>(b)), *F16) ==
              F16->add(ea, eb));
      REQUIRE(F4->embed_into(F4->mul(static_cast<FF>(a), static_cast<FF>(b)), *F16) ==
              F16->mul(ea, eb));
    }
  // GF(4) generator maps to the norm-compatible power of the GF(16) generator
  REQUIRE(F4->embed_into(F4->generator(), *F16) == F16->pow(F16->generator(), 5));
}

TEST_CASE("element print and parse round trip") {
  FieldPtr F = Field::make(2, 4);
  for (unsigned v = 0; v < 16; ++v) {
    FF a = static_cast<FF>(v);
    REQUIRE(F->parse_element(F->to_string(a)) == a);
  }
  REQUIRE_THROWS_AS(F->parse_element("h^2"), parse_error);
}
