#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "schub/root_system.hpp"

using namespace schub;

namespace {

const std::vector<SimpleType> kSurveyTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'B', 2}, {'B', 3},
    {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 3}, {'D', 4}, {'E', 6},
    {'F', 4}, {'G', 2}};

std::set<Coeffs> library_positive_set(const RootSystem& rs) {
  std::set<Coeffs> out;
  for (int id = 0; id < rs.positive_count(); ++id) out.insert(rs.root(id));
  return out;
}

}  // namespace

TEST_CASE("positive roots match the closure enumeration") {
  for (const SimpleType& t : kSurveyTypes) {
    CAPTURE(t.family);
    CAPTURE(t.rank);
    const RootSystem& rs = root_system(t);
    const auto expect = oracle::positive_roots(t.family, t.rank);
    CHECK(rs.positive_count() == static_cast<int>(expect.size()));
    CHECK(rs.positive_count() == oracle::positive_count(t.family, t.rank));
    const std::set<Coeffs> got = library_positive_set(rs);
    CHECK(got == std::set<Coeffs>(expect.begin(), expect.end()));
  }
}

TEST_CASE("Cartan matrices match the per-family tables") {
  for (const SimpleType& t : kSurveyTypes) {
    CAPTURE(t.family);
    CAPTURE(t.rank);
    const RootSystem& rs = root_system(t);
    const auto C = oracle::cartan(t.family, t.rank);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) CHECK(rs.cartan(i, j) == C[i][j]);
  }
}

TEST_CASE("frozen G2 positive root table") {
  const RootSystem& rs = root_system({'G', 2});
  // By (height, lex): a2, a1, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2.
  const std::vector<Coeffs> expect = {{0, 1}, {1, 0}, {1, 1},
                                      {2, 1}, {3, 1}, {3, 2}};
  REQUIRE(rs.positive_count() == 6);
  for (int id = 0; id < 6; ++id) CHECK(rs.root(id) == expect[id]);
  // Short/long split: half squared lengths 1 and 3.
  CHECK(rs.norm2_half(rs.simple_id(0)) == 1);
  CHECK(rs.norm2_half(rs.simple_id(1)) == 3);
  CHECK(rs.norm2_half(rs.require_root({3, 2})) == 3);
  CHECK(rs.norm2_half(rs.require_root({2, 1})) == 1);
}

TEST_CASE("frozen B2 positive root table") {
  const RootSystem& rs = root_system({'B', 2});
  const std::vector<Coeffs> expect = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  REQUIRE(rs.positive_count() == 4);
  for (int id = 0; id < 4; ++id) CHECK(rs.root(id) == expect[id]);
  CHECK(rs.norm2_half(0) == 1);  // a2 short
  CHECK(rs.norm2_half(1) == 2);  // a1 long
  CHECK(rs.norm2_half(2) == 1);  // a1+a2 short
  CHECK(rs.norm2_half(3) == 2);  // a1+2a2 long
}

TEST_CASE("ids are ordered by height then lexicographically") {
  for (const SimpleType& t : kSurveyTypes) {
    const RootSystem& rs = root_system(t);
    for (int id = 0; id + 1 < rs.positive_count(); ++id) {
      const int ha = rs.height(id), hb = rs.height(id + 1);
      CHECK(ha <= hb);
      if (ha == hb) CHECK(rs.root(id) < rs.root(id + 1));
    }
  }
}

TEST_CASE("negation pairs ids across the positive block") {
  const RootSystem& rs = root_system({'F', 4});
  const int m = rs.positive_count();
  for (int id = 0; id < 2 * m; ++id) {
    CHECK(rs.negate(rs.negate(id)) == id);
    CHECK(rs.is_positive(id) == (id < m));
    Coeffs neg = rs.root(rs.negate(id));
    for (int i = 0; i < rs.rank(); ++i) CHECK(neg[i] == -rs.root(id)[i]);
  }
}

TEST_CASE("id_of round-trips and rejects non-roots") {
  const RootSystem& rs = root_system({'C', 3});
  for (int id = 0; id < rs.root_count(); ++id)
    CHECK(rs.id_of(rs.root(id)) == id);
  CHECK(rs.id_of({5, 5, 5}) == -1);
  CHECK(rs.id_of({1, -1, 0}) == -1);
  CHECK(rs.require_root({1, 0, 0}) == rs.simple_id(0));
  CHECK_THROWS_AS(rs.require_root({5, 5, 5}), input_error);
}

TEST_CASE("simple ids and indices are inverse to each other") {
  const RootSystem& rs = root_system({'D', 4});
  for (int i = 0; i < rs.rank(); ++i) {
    CHECK(rs.simple_index(rs.simple_id(i)) == i);
    CHECK(rs.simple_index(rs.negate(rs.simple_id(i))) == i);
    CHECK(rs.height(rs.simple_id(i)) == 1);
  }
  int nonsimple = 0;
  for (int id = 0; id < rs.positive_count(); ++id)
    if (rs.simple_index(id) == -1) ++nonsimple;
  CHECK(nonsimple == rs.positive_count() - rs.rank());
}

TEST_CASE("reflection is an involution preserving lengths") {
  for (const SimpleType& t : {SimpleType{'B', 3}, SimpleType{'G', 2}}) {
    const RootSystem& rs = root_system(t);
    for (int a = 0; a < rs.positive_count(); ++a)
      for (int b = 0; b < rs.root_count(); ++b) {
        const int image = rs.reflect(b, a);
        CHECK(rs.reflect(image, a) == b);
        CHECK(rs.norm2_half(image) == rs.norm2_half(b));
      }
  }
}

TEST_CASE("pairing agrees with the symmetrized form") {
  const RootSystem& rs = root_system({'F', 4});
  for (int b = 0; b < rs.root_count(); ++b)
    for (int a = 0; a < rs.root_count(); ++a) {
      const long long form = rs.bilinear(rs.root(b), rs.root(a));
      CHECK(rs.pair(b, a) * rs.norm2_half(a) == form);
      // Integrality and the reflection formula.
      const Root img = rs.reflect(Root{rs.root(b)}, Root{rs.root(a)});
      Coeffs expect = rs.root(b);
      for (int i = 0; i < rs.rank(); ++i)
        expect[i] -= rs.pair(b, a) * rs.root(a)[i];
      CHECK(img.coeffs == expect);
    }
}

TEST_CASE("simple_reflect matches the generic reflection") {
  const RootSystem& rs = root_system({'C', 3});
  for (int i = 0; i < rs.rank(); ++i)
    for (int id = 0; id < rs.root_count(); ++id)
      CHECK(rs.simple_reflect(i, id) == rs.reflect(id, rs.simple_id(i)));
}

TEST_CASE("adjacency mirrors the Cartan matrix off-diagonal") {
  const RootSystem& rs = root_system({'D', 4});
  CHECK(rs.adjacent(0, 1));
  CHECK(rs.adjacent(1, 2));
  CHECK(rs.adjacent(1, 3));
  CHECK_FALSE(rs.adjacent(2, 3));
  CHECK_FALSE(rs.adjacent(0, 0));
}

TEST_CASE("rank bounds are enforced per family") {
  CHECK_THROWS_AS(RootSystem::build({'A', 0}), input_error);
  CHECK_THROWS_AS(RootSystem::build({'B', 1}), input_error);
  CHECK_THROWS_AS(RootSystem::build({'C', 1}), input_error);
  CHECK_THROWS_AS(RootSystem::build({'D', 2}), input_error);
  CHECK_THROWS_AS(RootSystem::build({'E', 5}), input_error);
  CHECK_THROWS_AS(RootSystem::build({'E', 9}), input_error);
  CHECK_THROWS_AS(RootSystem::build({'F', 3}), input_error);
  CHECK_THROWS_AS(RootSystem::build({'G', 3}), input_error);
  CHECK_THROWS_AS(RootSystem::build({'X', 2}), input_error);
  CHECK_NOTHROW(RootSystem::build({'A', 1}));
  CHECK_NOTHROW(RootSystem::build({'D', 3}));
}

TEST_CASE("closed-form counts match the library for the survey") {
  for (const SimpleType& t : kSurveyTypes) {
    CHECK(positive_root_count(t) == oracle::positive_count(t.family, t.rank));
    CHECK(weyl_order(t) == oracle::weyl_order(t.family, t.rank));
  }
}

TEST_CASE("memoized accessor returns a stable reference") {
  const RootSystem& a = root_system({'B', 3});
  const RootSystem& b = root_system({'B', 3});
  CHECK(&a == &b);
}
