#include <catch2/catch_amalgamated.hpp>

#include "charkummer/serre.hpp"

using namespace ck;

TEST_CASE("symmetric powers of abelian surfaces in characteristic 2") {
  // g = 3, n = 2, p = 2: depth exactly 5 on a 6-dimensional ring
  SymDepthReport r = sym_depth_report({3, 2, 2});
  REQUIRE(r.dimension == 6);
  REQUIRE(r.depth == 5);
  REQUIRE(r.cohen_macaulay == Verdict::No);
  REQUIRE(r.serre_level == 5);
  REQUIRE(r.fails_next_level);
}

TEST_CASE("small cases are cohen-macaulay") {
  // g = 2, n = 2, p = 2: dimension 4 = g + 2, so the Serre level saturates
  SymDepthReport r = sym_depth_report({2, 2, 2});
  REQUIRE(r.dimension == 4);
  REQUIRE(r.cohen_macaulay == Verdict::Yes);
  REQUIRE(r.depth == 4);
  // curves and trivial powers are smooth
  for (SymDepthQuery q : {SymDepthQuery{1, 9, 2}, SymDepthQuery{5, 1, 3},
                          SymDepthQuery{4, 0, 7}}) {
    SymDepthReport s = sym_depth_report(q);
    REQUIRE(s.cohen_macaulay == Verdict::Yes);
    REQUIRE(s.depth == s.dimension);
  }
}

TEST_CASE("kemper range gives the exact depth") {
  // g = 4, n = 5, p = 3: depth min(g+2, ng) = 6 < 20
  SymDepthReport r = sym_depth_report({4, 5, 3});
  REQUIRE(r.dimension == 20);
  REQUIRE(r.depth == 6);
  REQUIRE(r.cohen_macaulay == Verdict::No);
  REQUIRE(r.fails_next_level);
  bool noted = false;
  for (auto& n : r.notes) noted = noted || n == "canonical, but not rational";
  REQUIRE(noted);
}

TEST_CASE("characteristic zero or large is always cohen-macaulay") {
  for (int g = 2; g <= 5; ++g)
    for (int n = 2; n <= 6; ++n) {
      SymDepthReport r0 = sym_depth_report({g, n, 0});
      REQUIRE(r0.cohen_macaulay == Verdict::Yes);
      SymDepthReport r1 = sym_depth_report({g, n, 7});
      if (7 > n) REQUIRE(r1.cohen_macaulay == Verdict::Yes);
    }
}

TEST_CASE("report grid is internally coherent") {
  for (int g = 1; g <= 6; ++g)
    for (int n = 0; n <= 8; ++n)
      for (int p : {0, 2, 3, 5, 7}) {
        SymDepthReport r = sym_depth_report({g, n, p});
        INFO("g=" << g << " n=" << n << " p=" << p);
        REQUIRE(r.dimension == n * g);
        REQUIRE(r.serre_level <= r.dimension);
        if (r.depth) {
          REQUIRE(*r.depth <= r.dimension);
          REQUIRE(r.serre_level <= *r.depth);
          REQUIRE((r.cohen_macaulay == Verdict::Yes) == (*r.depth == r.dimension));
        }
        if (r.cohen_macaulay == Verdict::Yes && r.depth)
          REQUIRE_FALSE(r.fails_next_level);
      }
}

TEST_CASE("helper formulas and preconditions") {
  REQUIRE(ellingsrud_skjelbred_depth(3) == 5);
  REQUIRE_THROWS_AS(ellingsrud_skjelbred_depth(-1), domain_error);
  REQUIRE(kemper_depth(4, 5, 3) == 6);
  REQUIRE(kemper_depth(1, 3, 2) == 3);
  REQUIRE_THROWS_AS(kemper_depth(4, 6, 3), domain_error);
  REQUIRE_THROWS_AS(kemper_depth(4, 2, 3), domain_error);
  REQUIRE_THROWS_AS(sym_depth_report({3, 2, 4}), domain_error);
  REQUIRE_THROWS_AS(sym_depth_report({0, 2, 2}), domain_error);
}
