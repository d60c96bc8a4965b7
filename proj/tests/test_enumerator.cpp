#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>
#include <vector>

#include "t2orbit/enumerator.hpp"

using namespace t2orbit;

TEST_CASE("enumeration at the smallest bounds") {
  const auto spaces = enumerate_canonical({2, 1});
  REQUIRE(spaces.size() == 1);
  CHECK(spaces[0].edges() == std::vector<WeightVector>{{1, 0}, {0, 1}});
}

TEST_CASE("enumeration contains the projective class at t_max = 3") {
  const auto spaces = enumerate_canonical({3, 1});
  const auto target =
      canonical_form(WeightedOrbitSpace::validate({{1, 0}, {0, 1}, {-1, 1}}));
  CHECK(std::find(spaces.begin(), spaces.end(), target) != spaces.end());
}

TEST_CASE("yielded spaces are valid canonical representatives in bounds") {
  const EnumBounds bounds{5, 2};
  for (const auto& x : enumerate_canonical(bounds)) {
    CHECK_NOTHROW(WeightedOrbitSpace::validate(x.edges()));
    CHECK(canonical_form(x) == x);
    CHECK(x.size() <= bounds.t_max);
    for (const auto& e : x.edges()) {
      CHECK(std::llabs(e.m) <= bounds.w_max);
      CHECK(std::llabs(e.n) <= bounds.w_max);
    }
  }
}

TEST_CASE("no duplicate canonical forms") {
  const auto spaces = enumerate_canonical({6, 2});
  std::set<std::vector<WeightVector>> seen;
  for (const auto& x : spaces) CHECK(seen.insert(x.edges()).second);
}

TEST_CASE("monotonicity in the bounds") {
  const auto small = enumerate_canonical({4, 1});
  const auto bigger_t = enumerate_canonical({5, 1});
  const auto bigger_w = enumerate_canonical({4, 2});
  const std::set<std::vector<WeightVector>> in_t = [&] {
    std::set<std::vector<WeightVector>> s;
    for (const auto& x : bigger_t) s.insert(x.edges());
    return s;
  }();
  const std::set<std::vector<WeightVector>> in_w = [&] {
    std::set<std::vector<WeightVector>> s;
    for (const auto& x : bigger_w) s.insert(x.edges());
    return s;
  }();
  for (const auto& x : small) {
    CHECK(in_t.count(x.edges()) == 1);
    CHECK(in_w.count(x.edges()) == 1);
  }
}

TEST_CASE("enumeration order is deterministic") {
  const auto a = enumerate_canonical({5, 2});
  const auto b = enumerate_canonical({5, 2});
  CHECK(a == b);
}

TEST_CASE("bounds are validated") {
  CHECK_THROWS_AS(enumerate_canonical({1, 1}), DomainError);
  CHECK_THROWS_AS(enumerate_canonical({3, 0}), DomainError);
}

TEST_CASE("survey at the smallest bounds") {
  const SurveyReport report = survey({2, 1});
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].t == 2);
  CHECK(report.rows[0].cls == ManifoldClass{{{Atom::S4, 1}}});
  CHECK(report.rows[0].count == 1);
  CHECK(report.rows[0].admissible_count == 1);
  CHECK(report.incidents.empty());
  CHECK(report.theorem_dim4_holds);
}

TEST_CASE("survey pipeline consequences at (4, 2)") {
  const SurveyReport report = survey({4, 2});
  CHECK(report.incidents.empty());
  CHECK(report.theorem_dim4_holds);
  // spaces classified S2xS2 or CP2 # CP2bar are never admissible
  for (const SurveyRow& row : report.rows) {
    const bool obstructed =
        row.cls.summands.count(Atom::S2xS2) > 0 ||
        row.cls.summands.count(Atom::CP2ConnSumCP2bar) > 0;
    if (obstructed) CHECK(row.admissible_count == 0);
  }
}

TEST_CASE("survey is deterministic and jobs-insensitive") {
  const SurveyReport a = survey({5, 2}, 1);
  const SurveyReport b = survey({5, 2}, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].t == b.rows[i].t);
    CHECK(a.rows[i].cls == b.rows[i].cls);
    CHECK(a.rows[i].count == b.rows[i].count);
    CHECK(a.rows[i].admissible_count == b.rows[i].admissible_count);
  }
  CHECK(a.theorem_dim4_holds == b.theorem_dim4_holds);
  const nlohmann::json ja = a, jb = b;
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("survey report serialization shape") {
  const nlohmann::json j = survey({3, 1});
  CHECK(j["bounds"]["t_max"] == 3);
  CHECK(j["bounds"]["w_max"] == 1);
  CHECK(j["theorem_dim4_holds"] == true);
  CHECK(j["incidents"].is_array());
  REQUIRE(j["classes"].is_array());
  for (const auto& row : j["classes"]) {
    CHECK(row.contains("t"));
    CHECK(row.contains("class"));
    CHECK(row.contains("count"));
    CHECK(row.contains("admissible_count"));
  }
}
