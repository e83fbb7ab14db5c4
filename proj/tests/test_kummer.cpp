#include <catch2/catch_amalgamated.hpp>

#include "charkummer/kummer.hpp"

using namespace ck;

TEST_CASE("scenario construction by p-rank") {
  ScenarioCase s2 = ScenarioCase::make(2);
  REQUIRE(s2.fixed_points == 4);
  REQUIRE(s2.field->q() == 2);
  ScenarioCase s1 = ScenarioCase::make(1);
  REQUIRE(s1.fixed_points == 2);
  ScenarioCase s0 = ScenarioCase::make(0, 1);
  REQUIRE(s0.field->q() == 16);
  REQUIRE(s0.fixed_points == 1);
  REQUIRE(s0.a_number == 2);  // 1 is fixed by the fourth-power Frobenius
  FF g = Field::make(2, 4)->generator();
  REQUIRE(ScenarioCase::make(0, g).a_number == 1);
  REQUIRE_THROWS_AS(ScenarioCase::make(3), domain_error);
}

TEST_CASE("expected singularity table") {
  auto rows = expected_table();
  REQUIRE(rows.size() == 4);
  REQUIRE(rows[0].column == "sigma=2");
  REQUIRE(rows[0].below == "4 D4^1");
  REQUIRE(rows[0].above == "12 A1");
  REQUIRE(rows[1].below == "2 D8^2");
  REQUIRE(rows[1].above == "2 A3 + 2 D4^0");
  REQUIRE(rows[2].below == "elliptic double point");
  REQUIRE(rows[3].above == "nonnormal");
}

TEST_CASE("ordinary and semi-ordinary pipelines") {
  for (int sigma : {2, 1}) {
    ScenarioReport rep = run_pipeline(ScenarioCase::make(sigma));
    INFO("sigma = " << sigma);
    REQUIRE(all_pass(rep.records));
  }
}

TEST_CASE("supersingular pipeline over every parameter") {
  FieldPtr F16 = Field::make(2, 4);
  for (unsigned q = 0; q < 16; ++q) {
    ScenarioReport rep = run_pipeline(ScenarioCase::make(0, static_cast<FF>(q)));
    INFO("q = " << F16->to_string(static_cast<FF>(q)));
    REQUIRE(all_pass(rep.records));
  }
}

TEST_CASE("quartic model reduces to the local normal form") {
  FieldPtr F16 = Field::make(2, 4);
  for (unsigned q = 0; q < 16; ++q) {
    ResidualReport rep = katsura_to_artin_check(static_cast<FF>(q));
    INFO("q = " << F16->to_string(static_cast<FF>(q)));
    REQUIRE(all_pass(rep.records));
  }
}

TEST_CASE("supersingular lattice walkthrough") {
  auto recs = supersingular_lattice_walkthrough();
  REQUIRE_FALSE(recs.empty());
  for (auto& r : recs) {
    INFO(format_record(r));
    REQUIRE(r.pass);
  }
}

TEST_CASE("superspecial chart identities and census") {
  ResidualReport rep = superspecial_chart_checks();
  for (auto& r : rep.records) {
    INFO(format_record(r));
    REQUIRE(r.pass);
  }
}

TEST_CASE("pipeline output is deterministic") {
  ScenarioReport a = run_pipeline(ScenarioCase::make(2));
  ScenarioReport b = run_pipeline(ScenarioCase::make(2));
  auto sa = sorted_records(a.records);
  auto sb = sorted_records(b.records);
  REQUIRE(sa.size() == sb.size());
  for (size_t i = 0; i < sa.size(); ++i)
    REQUIRE(format_record(sa[i]) == format_record(sb[i]));
  // ids arrive sorted
  for (size_t i = 1; i < sa.size(); ++i) REQUIRE(sa[i - 1].id <= sa[i].id);
}
