#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "schub/address.hpp"
#include "schub/torus.hpp"

using namespace schub;

namespace {

BigCellChart line_chart() {
  // Ambient: the three-dimensional quadric, chart at the extreme point of
  // the line through the base point, cocharacter vanishing on node 2.
  const MarkedDiagram d{{'B', 2}, 0};
  const RootSystem& rs = root_system(d.type);
  return chart(d, from_word(rs, {0}), canonical_cocharacter(rs, {1}));
}

}  // namespace

TEST_CASE("rational parsing: canonical forms") {
  CHECK(format_rational(parse_rational("3")) == "3");
  CHECK(format_rational(parse_rational("-4/6")) == "-2/3");
  CHECK(format_rational(parse_rational("2/4")) == "1/2");
  CHECK(format_rational(parse_rational("0/5")) == "0");
  CHECK(format_rational(parse_rational("007")) == "7");
  CHECK(parse_rational("10/2") == Rat(5));
}

TEST_CASE("rational parsing: rejected shapes") {
  CHECK_THROWS_AS(parse_rational(""), input_error);
  CHECK_THROWS_AS(parse_rational("1/0"), input_error);
  CHECK_THROWS_AS(parse_rational("a/2"), input_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), input_error);
  CHECK_THROWS_AS(parse_rational("+3"), input_error);
  CHECK_THROWS_AS(parse_rational("1.5"), input_error);
  CHECK_THROWS_AS(parse_rational("1/"), input_error);
  CHECK_THROWS_AS(parse_rational("/2"), input_error);
}

TEST_CASE("cocharacters: canonical and explicit") {
  const RootSystem& rs = root_system({'A', 3});
  const Cocharacter lambda = canonical_cocharacter(rs, {1, 2});
  CHECK(lambda.coeffs == std::vector<int>{1, 0, 0});
  CHECK(weight(rs, lambda, rs.require_root({1, 1, 1})) == 1);
  CHECK(weight(rs, lambda, rs.require_root({0, 1, 1})) == 0);
  CHECK(weight(rs, lambda, rs.negate(rs.require_root({1, 0, 0}))) == -1);
  // Empty node set: strictly positive on every node.
  CHECK(canonical_cocharacter(rs, {}).coeffs == std::vector<int>{1, 1, 1});
  // The full node set would give the zero cocharacter.
  CHECK_THROWS_AS(canonical_cocharacter(rs, {0, 1, 2}), input_error);
  CHECK_THROWS_AS(canonical_cocharacter(rs, {0, 0}), input_error);
  CHECK_THROWS_AS(canonical_cocharacter(rs, {5}), input_error);

  CHECK(cocharacter_with_coeffs(rs, {3, 0, 2}, {1}).coeffs ==
        std::vector<int>{3, 0, 2});
  CHECK_THROWS_AS(cocharacter_with_coeffs(rs, {3, 1, 2}, {1}), input_error);
  CHECK_THROWS_AS(cocharacter_with_coeffs(rs, {0, 0, 2}, {1}), input_error);
  CHECK_THROWS_AS(cocharacter_with_coeffs(rs, {3, 0}, {1}), input_error);
}

TEST_CASE("frozen chart of the line in the three-dimensional quadric") {
  const BigCellChart ch = line_chart();
  CHECK(ch.roots == std::vector<int>{1, 4, 7});
  CHECK(ch.weights == std::vector<int>{1, 0, -1});
  CHECK(ch.plus == std::vector<int>{1});
  CHECK(ch.zero == std::vector<int>{4});
  CHECK(ch.minus == std::vector<int>{7});
  CHECK(ch.weight_of(4) == 0);
  CHECK_THROWS_AS(ch.weight_of(0), input_error);
}

TEST_CASE("chart construction validates its inputs") {
  const MarkedDiagram d{{'B', 2}, 0};
  const RootSystem& rs = root_system(d.type);
  // Not a minimal representative.
  CHECK_THROWS_AS(chart(d, from_word(rs, {1}), canonical_cocharacter(rs, {1})),
                  input_error);
  // Chart coordinate count is the ambient dimension.
  const BigCellChart top =
      chart(d, from_word(rs, {0, 1, 0}), canonical_cocharacter(rs, {}));
  CHECK(top.roots.size() == 3);
}

TEST_CASE("points drop zeros and reject foreign coordinates") {
  const BigCellChart ch = line_chart();
  const RationalPoint p = make_point(ch, {{4, Rat(0)}, {7, Rat(5)}});
  CHECK(p.coords.size() == 1);
  CHECK(p.coords.count(7) == 1);
  CHECK_THROWS_AS(make_point(ch, {{0, Rat(1)}}), input_error);
  CHECK_THROWS_AS(make_point(ch, {{99, Rat(1)}}), input_error);
}

TEST_CASE("action: group law, identity, and zero rejection") {
  const BigCellChart ch = line_chart();
  const RationalPoint p =
      make_point(ch, {{1, Rat(2)}, {4, Rat(1, 2)}, {7, Rat(-7, 3)}});
  CHECK(act(ch, Rat(1), p) == p);
  CHECK(act(ch, Rat(2), act(ch, Rat(3), p)) == act(ch, Rat(6), p));
  CHECK(act(ch, Rat(-1), act(ch, Rat(-1), p)) == p);
  CHECK_THROWS_AS(act(ch, Rat(0), p), input_error);
  // Weights act coordinate-wise: t^{+1}, t^{0}, t^{-1} here.
  const RationalPoint q = act(ch, Rat(5), p);
  CHECK(q.coords.at(1) == Rat(10));
  CHECK(q.coords.at(4) == Rat(1, 2));
  CHECK(q.coords.at(7) == Rat(-7, 15));
}

TEST_CASE("limits kill decaying coordinates and keep invariant ones") {
  const BigCellChart ch = line_chart();
  const RationalPoint p = make_point(ch, {{4, Rat(1, 2)}, {7, Rat(5)}});
  const RationalPoint lim = limit_at_infinity(ch, p);
  CHECK(lim.coords.size() == 1);
  CHECK(lim.coords.at(4) == Rat(1, 2));
  CHECK(limit_at_infinity(ch, lim) == lim);  // idempotent
  // A growing coordinate forbids the limit, and the diagnostic names it.
  const RationalPoint bad = make_point(ch, {{1, Rat(1)}});
  try {
    limit_at_infinity(ch, bad);
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("root id 1") != std::string::npos);
  }
}

TEST_CASE("transversality and the limit multiset") {
  const BigCellChart ch = line_chart();
  const RationalPoint p1 = make_point(ch, {{4, Rat(1, 2)}, {7, Rat(5)}});
  const RationalPoint p2 = make_point(ch, {{4, Rat(1, 2)}, {7, Rat(-3)}});
  const RationalPoint p3 = make_point(ch, {{4, Rat(1, 3)}});
  // p1 and p2 differ only in a decaying coordinate: same limit.
  CHECK_FALSE(is_transverse_wrt_lambda(ch, {p1, p2, p3}));
  CHECK(is_transverse_wrt_lambda(ch, {p1, p3}));
  const auto collided = degenerate(ch, {p1, p2, p3});
  long long mass = 0;
  bool found_double = false;
  for (const auto& [limit, mult] : collided) {
    mass += mult;
    if (mult == 2) {
      found_double = true;
      CHECK(limit.coords.at(4) == Rat(1, 2));
    }
  }
  CHECK(mass == 3);
  CHECK(found_double);
  CHECK(collided.size() == 2);
  const auto clean = degenerate(ch, {p1, p3});
  for (const auto& [limit, mult] : clean) CHECK(mult == 1);
  // Duplicate points are not transverse either.
  CHECK_FALSE(is_transverse_wrt_lambda(ch, {p3, p3}));
}

TEST_CASE("frozen two-cell decomposition of projective 3-space") {
  const MarkedDiagram d{{'A', 3}, 0};
  const auto cells = bb_cells(d, {1, 2});
  REQUIRE(cells.size() == 2);
  const RootSystem& rs = root_system(d.type);
  CHECK(cells[0].rep == identity_element(rs));
  CHECK(cells[0].plus_dim == 0);
  CHECK(cells[0].fixed_dim == 0);
  CHECK(cells[0].minus_dim == 3);
  CHECK_FALSE(cells[0].minus_closed);
  CHECK_FALSE(cells[0].plus_open);
  CHECK(cells[1].rep == from_word(rs, {0}));
  CHECK(cells[1].plus_dim == 1);
  CHECK(cells[1].fixed_dim == 2);
  CHECK(cells[1].minus_dim == 0);
  CHECK(cells[1].minus_closed);
  CHECK(cells[1].plus_open);
}

TEST_CASE("cell counts fill the ambient dimension with one closed cell") {
  struct Case {
    MarkedDiagram d;
    std::vector<int> I;
  };
  const std::vector<Case> cases = {
      {{{'A', 3}, 0}, {1, 2}}, {{{'A', 3}, 1}, {0}},    {{{'B', 3}, 1}, {0, 2}},
      {{{'F', 4}, 3}, {0, 1}}, {{{'G', 2}, 1}, {0}},    {{{'C', 3}, 2}, {}},
      {{{'B', 2}, 0}, {1}},    {{{'D', 4}, 0}, {1, 3}}};
  for (const Case& c : cases) {
    CAPTURE(to_string(c.d));
    const auto ctx = MarkedContext::get(c.d);
    const auto cells = bb_cells(c.d, c.I);
    CHECK(!cells.empty());
    int closed = 0;
    for (const BBCell& cell : cells) {
      CHECK(cell.plus_dim + cell.fixed_dim + cell.minus_dim ==
            ctx->space_dim());
      CHECK(cell.minus_closed == (cell.minus_dim == 0));
      CHECK(cell.plus_open ==
            (cell.plus_dim + cell.fixed_dim == ctx->space_dim()));
      if (cell.minus_closed) {
        ++closed;
        CHECK(cell.plus_open);
      }
    }
    CHECK(closed == 1);
  }
}

TEST_CASE("cell decomposition rejects the full node set") {
  CHECK_THROWS_AS(bb_cells({{'A', 3}, 0}, {0, 1, 2}), input_error);
}
