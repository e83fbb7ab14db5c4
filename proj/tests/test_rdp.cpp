#include <fstream>
#include <set>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "charkummer/rdp.hpp"

using namespace ck;

TEST_CASE("default database loads and self-checks") {
  RDPDatabase db = RDPDatabase::load();
  REQUIRE(db.classes().size() == 13);
  auto tau = [&](const std::string& name) {
    const RDPClass* c = db.find(name);
    REQUIRE(c != nullptr);
    return tjurina_of_class(*c);
  };
  REQUIRE(tau("A1") == 2);
  REQUIRE(tau("A3") == 4);
  REQUIRE(tau("A5") == 6);
  REQUIRE(tau("D2^0") == 4);
  REQUIRE(tau("D4^0") == 8);
  REQUIRE(tau("D4^1") == 6);
  REQUIRE(tau("D6^0") == 12);
  REQUIRE(tau("D7^0") == 12);
  REQUIRE(tau("D7^1") == 10);
  REQUIRE(tau("D7^2") == 8);
  REQUIRE(tau("D8^2") == 12);
  REQUIRE(tau("D12^3") == 18);
  REQUIRE(tau("E8^2") == 12);
  REQUIRE(db.find("E8^2")->pi1_order2);
  REQUIRE_FALSE(db.find("D4^1")->pi1_order2);
}

TEST_CASE("the shipped database file matches the built-in copy") {
  std::ifstream in("data/rdp_classes.txt");
  if (!in.good()) in.open("../data/rdp_classes.txt");
  if (in.good()) {
    std::stringstream ss;
    ss << in.rdbuf();
    REQUIRE(ss.str() == rdp_default_database());
  } else {
    WARN("data/rdp_classes.txt not found from the test working directory");
  }
}

TEST_CASE("family, index and tjurina number identify a class uniquely") {
  RDPDatabase db = RDPDatabase::load();
  std::set<std::tuple<char, int, int>> keys;
  for (auto& c : db.classes()) {
    REQUIRE(c.tau.has_value());
    REQUIRE(keys.emplace(c.family, c.n, *c.tau).second);
  }
}

TEST_CASE("classification by dynkin type and tjurina number") {
  RDPDatabase db = RDPDatabase::load();
  auto cls = db.classify_by_tjurina(DynkinType{'D', 7}, 12);
  REQUIRE(cls.unique != nullptr);
  REQUIRE(cls.unique->name == "D7^0");
  auto cls2 = db.classify_by_tjurina(DynkinType{'A', 3}, 4);
  REQUIRE(cls2.unique != nullptr);
  REQUIRE(cls2.unique->name == "A3");
  auto cls3 = db.classify_by_tjurina(DynkinType{'D', 4}, 8);
  REQUIRE(cls3.unique != nullptr);
  REQUIRE(cls3.unique->name == "D4^0");
  // an impossible pair yields no candidates
  REQUIRE(db.classify_by_tjurina(DynkinType{'E', 8}, 3).candidates.empty());
  REQUIRE_THROWS_AS(db.classify_by_tjurina(DynkinType{'A', 1}, kInfiniteLength),
                    domain_error);
}

TEST_CASE("corrupted tjurina entries are rejected at load time") {
  std::string text = rdp_default_database();
  size_t pos = text.find("A1");
  REQUIRE(pos != std::string::npos);
  // bump the stored tau of A1 from 2 to 3
  size_t tau_pos = text.find(" 2 ", pos);
  REQUIRE(tau_pos != std::string::npos);
  text.replace(tau_pos, 3, " 3 ");
  REQUIRE_THROWS_AS(RDPDatabase::load(text), domain_error);
  REQUIRE_THROWS_AS(RDPDatabase::load(""), parse_error);
  REQUIRE_THROWS_AS(RDPDatabase::load("A1 Q 1 - 2 no z^2 + x*y"), parse_error);
}

TEST_CASE("involution quotient classes carry validated equations") {
  auto qs = involution_quotient_classes(3);
  REQUIRE(qs.size() == 4);  // D4^1, D8^2, D12^3, E8^2
  std::vector<std::string> names;
  for (auto& q : qs) names.push_back(q.rdp.name);
  REQUIRE(names == std::vector<std::string>{"D4^1", "D8^2", "D12^3", "E8^2"});
}

TEST_CASE("closed tjurina formulas") {
  REQUIRE(tjurina_A(1) == 2);
  REQUIRE(tjurina_A(3) == 4);
  REQUIRE(tjurina_A(4) == 4);
  REQUIRE(tjurina_D_even0(2) == 4);
  REQUIRE(tjurina_D_even0(4) == 8);
  REQUIRE_THROWS_AS(tjurina_D_even0(3), domain_error);
  REQUIRE(tjurina_D7(0) == 12);
  REQUIRE(tjurina_D7(2) == 8);
}
