#include <set>

#include "doctest.h"
#include "linearr/arrangement.hpp"
#include "linearr/json_io.hpp"
#include "linearr/random_arrangement.hpp"
#include "test_support.hpp"

using namespace linearr;
using Kind = ArrangementError::Kind;

namespace {

Kind error_kind(int lines, const std::vector<std::vector<int>>& points) {
  try {
    Arrangement::validate(lines, points);
  } catch (const ArrangementError& e) {
    return e.kind();
  }
  FAIL("validate accepted an invalid arrangement");
  return Kind::InvalidLineCount;
}

std::vector<std::pair<int, int>> pairs_of(const std::vector<NbcPair>& nbc) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : nbc) out.emplace_back(p.j, p.k);
  return out;
}

void check_axioms(const Arrangement& arr) {
  for (int j = 0; j < arr.n_lines(); ++j)
    for (int k = j + 1; k < arr.n_lines(); ++k) {
      int hits = 0;
      for (const auto& p : arr.points())
        if (std::binary_search(p.begin(), p.end(), j) && std::binary_search(p.begin(), p.end(), k)) ++hits;
      CHECK(hits == 1);
    }
  for (const auto& p : arr.points()) {
    CHECK(p.size() >= 2);
    CHECK(std::is_sorted(p.begin(), p.end()));
  }
  CHECK(std::is_sorted(arr.points().begin(), arr.points().end()));
}

}  // namespace

TEST_CASE("fig2 nbc set and incidence graph") {
  const Arrangement arr = testing::load_fixture("fig2.json");
  CHECK(arr.n() == 4);
  CHECK(arr.points().size() == 6);
  CHECK(pairs_of(nbc_set(arr)) == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 4}});
  CHECK(arr.points()[arr.point_of(1, 2)] == Point{1, 2, 3});
  CHECK(arr.points()[arr.point_of(3, 4)] == Point{0, 3, 4});
  CHECK(arr.point_of(4, 3) == arr.point_of(3, 4));

  const IncidenceGraph g = incidence_graph(arr);
  CHECK(g.vertex_count() == 11);
  CHECK(g.edges.size() == 14);
  CHECK(g.b1() == 4);
}

TEST_CASE("fig2 spanning tree complement follows nbc order") {
  const Arrangement arr = testing::load_fixture("fig2.json");
  const auto comp = spanning_tree_complement(arr);
  REQUIRE(comp.size() == 4);
  const std::vector<std::pair<int, Point>> expected = {{2, {1, 2, 3}}, {3, {1, 2, 3}}, {4, {1, 4}}, {4, {2, 4}}};
  for (std::size_t i = 0; i < comp.size(); ++i) {
    CHECK(comp[i].line == expected[i].first);
    CHECK(arr.points()[comp[i].point] == expected[i].second);
  }
  const auto tree = spanning_tree(arr);
  CHECK(tree.size() == incidence_graph(arr).vertex_count() - 1);
}

TEST_CASE("triangle") {
  const Arrangement arr = testing::load_fixture("triangle.json");
  CHECK(arr.auto_inserted_count() == 3);
  CHECK(pairs_of(nbc_set(arr)) == std::vector<std::pair<int, int>>{{1, 2}});
  const auto comp = spanning_tree_complement(arr);
  REQUIRE(comp.size() == 1);
  CHECK(comp[0].line == 2);
  CHECK(arr.points()[comp[0].point] == Point{1, 2});
  const Classification c = classify(arr);
  CHECK(c.kind == ArrangementClass::NearPencil);
  CHECK(c.beta == 0);
}

TEST_CASE("classification of fixtures") {
  CHECK(classify(testing::load_fixture("fig2.json")).kind == ArrangementClass::General);
  CHECK(classify(testing::load_fixture("fig2.json")).beta == 1);
  for (int n = 2; n <= 4; ++n) {
    const Classification c = classify(testing::load_fixture("pencil_n" + std::to_string(n) + ".json"));
    CHECK(c.kind == ArrangementClass::Pencil);
    CHECK(c.beta == 1 - n);
  }
  for (int n = 3; n <= 5; ++n) {
    const Classification c = classify(testing::load_fixture("nearpencil_n" + std::to_string(n) + ".json"));
    CHECK(c.kind == ArrangementClass::NearPencil);
    CHECK(c.beta == 0);
  }
  CHECK(classify(testing::load_fixture("pappus_violating.json")).kind == ArrangementClass::General);
}

TEST_CASE("validation errors") {
  CHECK(error_kind(1, {}) == Kind::InvalidLineCount);
  CHECK(error_kind(3, {{0, 3}}) == Kind::IndexOutOfRange);
  CHECK(error_kind(3, {{-1, 2}}) == Kind::IndexOutOfRange);
  CHECK(error_kind(3, {{1}}) == Kind::PointTooSmall);
  CHECK(error_kind(3, {{1, 1}}) == Kind::PointTooSmall);
  CHECK(error_kind(4, {{0, 1, 2}, {0, 1, 3}}) == Kind::PairCoveredTwice);

  try {
    Arrangement::validate(4, {{0, 1, 2}, {0, 1, 3}});
  } catch (const ArrangementError& e) {
    CHECK(e.j() == 0);
    CHECK(e.k() == 1);
    CHECK(e.first() == Point{0, 1, 2});
    CHECK(e.second() == Point{0, 1, 3});
  }
}

TEST_CASE("normalization") {
  const Arrangement a = Arrangement::validate(4, {{3, 1, 2}, {2, 1, 3}});
  const Arrangement b = Arrangement::validate(4, {{1, 2, 3}});
  CHECK(a == b);
  CHECK(a.points().front() == Point{0, 1});
  CHECK(a.auto_inserted_count() == 3);
  CHECK_THROWS_AS(a.point_of(1, 1), std::out_of_range);
}

TEST_CASE("random arrangements satisfy the axioms") {
  for (const Arrangement& arr : testing::audit_corpus(12)) {
    check_axioms(arr);
    CHECK(incidence_graph(arr).b1() == static_cast<std::int64_t>(nbc_set(arr).size()));
    CHECK(spanning_tree(arr).size() + spanning_tree_complement(arr).size() == incidence_graph(arr).edges.size());
  }
}

TEST_CASE("generator edge cases") {
  std::mt19937_64 rng = trial_engine(1, 0);
  const Arrangement generic = random_arrangement(7, 0.0, rng);
  for (const auto& p : generic.points()) CHECK(p.size() == 2);

  std::set<std::string> seen;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Arrangement a = random_arrangements(3, 1.0, seed, 1).front();
    const bool pencil = a.points().size() == 1;
    const bool triangle = a.points().size() == 3;
    CHECK((pencil || triangle));
    seen.insert(pencil ? "pencil" : "triangle");
  }
  CHECK(seen.count("pencil") == 1);

  CHECK(random_arrangements(6, 0.5, 1, 3) == random_arrangements(6, 0.5, 1, 3));
  CHECK_THROWS_AS(random_arrangements(2, 0.5, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_arrangements(5, 1.5, 1, 1), std::invalid_argument);
}

TEST_CASE("json round trip") {
  for (const auto& name : testing::fixture_names()) {
    const Arrangement arr = testing::load_fixture(name);
    CHECK(arrangement_from_json(arrangement_to_json(arr)) == arr);
  }
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"points": []})")), SchemaError);
  CHECK_THROWS_AS(arrangement_from_json(Json::parse(R"({"lines": 3, "points": [[0, "a"]]})")), SchemaError);
}

TEST_CASE("pencil and triangle graphs") {
  const Arrangement pencil = testing::load_fixture("pencil_n2.json");
  const IncidenceGraph star = incidence_graph(pencil);
  CHECK(star.vertex_count() == 4);
  CHECK(star.edges.size() == 3);
  CHECK(star.b1() == 0);
  CHECK(nbc_set(pencil).empty());
  CHECK(spanning_tree(pencil) == star.edges);
  CHECK(pencil.point_of(1, 2) == 0);

  const IncidenceGraph tri = incidence_graph(testing::load_fixture("triangle.json"));
  CHECK(tri.vertex_count() == 6);
  CHECK(tri.edges.size() == 6);
  CHECK(tri.b1() == 1);

  CHECK(classify(Arrangement::validate(4, {{0, 1, 2, 3}})).kind == ArrangementClass::Pencil);
  CHECK(classify(Arrangement::validate(4, {{1, 2, 3}})).kind == ArrangementClass::NearPencil);
  CHECK(Arrangement::validate(5, {{0, 1}, {0, 2}, {0, 3, 4}, {1, 2, 3}, {1, 4}, {2, 4}}).auto_inserted_count() == 0);
}
