#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "schub/address.hpp"
#include "schub/schubert.hpp"

using namespace schub;

namespace {

std::vector<long long> degrees_in_order(const MarkedDiagram& d) {
  const auto ctx = MarkedContext::get(d);
  std::vector<long long> out;
  for (size_t i = 0; i < ctx->cosets().size(); ++i)
    out.push_back(ctx->degree(static_cast<int>(i)));
  return out;
}

bool is_palindrome(const std::vector<long long>& v) {
  return std::equal(v.begin(), v.end(), v.rbegin());
}

}  // namespace

TEST_CASE("coset counts and ambient dimensions") {
  struct Row {
    MarkedDiagram d;
    int cosets;
    int space_dim;
  };
  const std::vector<Row> rows = {
      {{{'A', 3}, 0}, 4, 3},   {{{'A', 3}, 1}, 6, 4},  {{{'B', 2}, 0}, 4, 3},
      {{{'B', 2}, 1}, 4, 3},   {{{'B', 3}, 1}, 12, 7}, {{{'C', 3}, 2}, 8, 6},
      {{{'B', 3}, 2}, 8, 6},   {{{'G', 2}, 0}, 6, 5},  {{{'G', 2}, 1}, 6, 5},
      {{{'F', 4}, 2}, 96, 20}, {{{'F', 4}, 3}, 24, 15}};
  for (const Row& r : rows) {
    CAPTURE(to_string(r.d));
    const auto ctx = MarkedContext::get(r.d);
    CHECK(static_cast<int>(ctx->cosets().size()) == r.cosets);
    CHECK(ctx->space_dim() == r.space_dim);
    // Unipotent roots are exactly the positive roots with marked support.
    for (int id : ctx->unipotent_roots())
      CHECK(ctx->rs().coeff(id, r.d.k) > 0);
    // The shared instance is memoized.
    CHECK(MarkedContext::get(r.d).get() == ctx.get());
  }
}

TEST_CASE("cover graph: grading, weights, and mirrored adjacency") {
  for (const MarkedDiagram d :
       {MarkedDiagram{{'F', 4}, 3}, MarkedDiagram{{'B', 3}, 1}}) {
    const auto ctx = MarkedContext::get(d);
    const int n = static_cast<int>(ctx->cosets().size());
    for (const Cover& c : ctx->covers()) {
      CHECK(ctx->length_of(c.to) == ctx->length_of(c.from) + 1);
      CHECK(c.weight > 0);
      CHECK(ctx->rs().coeff(c.root, d.k) > 0);
      // The step really is right multiplication by the root's reflection.
      CHECK(compose(ctx->cosets()[c.from], reflection(ctx->rs(), c.root)) ==
            ctx->cosets()[c.to]);
    }
    for (int i = 0; i < n; ++i) {
      for (int ci : ctx->covers_up()[i]) CHECK(ctx->covers()[ci].from == i);
      for (int ci : ctx->covers_down()[i]) CHECK(ctx->covers()[ci].to == i);
    }
  }
}

TEST_CASE("degrees match the memoless chain-count oracle") {
  for (const MarkedDiagram d :
       {MarkedDiagram{{'G', 2}, 0}, MarkedDiagram{{'G', 2}, 1},
        MarkedDiagram{{'B', 3}, 1}, MarkedDiagram{{'A', 3}, 1}}) {
    CAPTURE(to_string(d));
    const auto ctx = MarkedContext::get(d);
    for (size_t i = 0; i < ctx->cosets().size(); ++i)
      CHECK(ctx->degree(static_cast<int>(i)) ==
            oracle::chain_degree(*ctx, static_cast<int>(i)));
  }
}

TEST_CASE("frozen degree tables") {
  CHECK(degrees_in_order({{'G', 2}, 0}) ==
        std::vector<long long>{1, 1, 1, 2, 2, 2});
  CHECK(degrees_in_order({{'G', 2}, 1}) ==
        std::vector<long long>{1, 1, 3, 6, 18, 18});
  CHECK(degrees_in_order({{'A', 3}, 1}) ==
        std::vector<long long>{1, 1, 1, 1, 2, 2});
  CHECK(degrees_in_order({{'B', 2}, 0}) == std::vector<long long>{1, 1, 2, 2});
  // The spin presentation of a projective 3-space: everything is linear.
  CHECK(degrees_in_order({{'B', 2}, 1}) == std::vector<long long>{1, 1, 1, 1});
  CHECK(degrees_in_order({{'A', 3}, 0}) == std::vector<long long>{1, 1, 1, 1});
  // Lagrangian 3-planes in a 6-space: top degree 16.
  const auto lg = MarkedContext::get({{'C', 3}, 2});
  CHECK(lg->degree(static_cast<int>(lg->cosets().size()) - 1) == 16);
  // Spin presentation of the 6-dimensional quadric: top degree 2.
  const auto sp = MarkedContext::get({{'B', 3}, 2});
  CHECK(sp->degree(static_cast<int>(sp->cosets().size()) - 1) == 2);
}

TEST_CASE("construction validates minimal representatives") {
  const MarkedDiagram d{{'B', 2}, 0};
  CHECK_NOTHROW(make_schubert(d, std::vector<int>{}));
  CHECK_NOTHROW(make_schubert(d, std::vector<int>{0}));
  CHECK_NOTHROW(make_schubert(d, std::vector<int>{1, 0}));
  // s2 inverts only a root with no marked support: not a minimal rep.
  CHECK_THROWS_AS(make_schubert(d, std::vector<int>{1}), input_error);
  const RootSystem& rs = root_system(d.type);
  CHECK_THROWS_AS(make_schubert(d, from_word(rs, {1})), input_error);
  CHECK(make_schubert(d, from_word(rs, {0})).w == from_word(rs, {0}));
}

TEST_CASE("dimension, cells, and extreme-point tangents agree") {
  const MarkedDiagram d{{'F', 4}, 3};
  const auto ctx = MarkedContext::get(d);
  const RootSystem& rs = ctx->rs();
  long long cells_by_dim = 0;
  for (size_t i = 0; i < ctx->cosets().size(); ++i) {
    const SchubertVariety sv{d, ctx->cosets()[i]};
    CHECK(dim(sv) == length(rs, sv.w));
    const auto cell = tangent_roots(sv);
    CHECK(static_cast<int>(cell.size()) == dim(sv));
    for (int id : cell) CHECK(rs.is_positive(id));
    ++cells_by_dim;
  }
  CHECK(cells_by_dim == 24);
}

TEST_CASE("curve directions bound the dimension from below") {
  for (const MarkedDiagram d :
       {MarkedDiagram{{'B', 3}, 1}, MarkedDiagram{{'F', 4}, 3},
        MarkedDiagram{{'G', 2}, 1}, MarkedDiagram{{'A', 3}, 1}}) {
    CAPTURE(to_string(d));
    const auto ctx = MarkedContext::get(d);
    for (size_t i = 0; i < ctx->cosets().size(); ++i) {
      const SchubertVariety sv{d, ctx->cosets()[i]};
      const auto curves = tangent_curve_roots(sv);
      CHECK(static_cast<int>(curves.size()) >= dim(sv));
      // Rationally smooth varieties meet the bound.
      if (is_rationally_smooth(sv))
        CHECK(static_cast<int>(curves.size()) == dim(sv));
      for (int id : curves) CHECK(ctx->rs().coeff(id, d.k) > 0);
    }
  }
}

TEST_CASE("the curve-count bound is not an equivalence") {
  // A variety with exactly dim-many curve directions that still fails the
  // palindromicity test; the equality criterion only runs one way here.
  const MarkedDiagram d{{'B', 3}, 1};
  const RootSystem& rs = root_system(d.type);
  const SchubertVariety sv = make_schubert(d, parse_word("3 1 2 3 1 2", 3));
  CHECK(dim(sv) == 6);
  CHECK(tangent_curve_roots(sv).size() == 6);
  CHECK_FALSE(is_rationally_smooth(sv));
  (void)rs;
}

TEST_CASE("frozen base-point tangent profiles of the linear 4- and 5-spaces") {
  const MarkedDiagram d{{'F', 4}, 3};
  const RootSystem& rs = root_system(d.type);
  auto profile = [&](const SchubertVariety& sv) {
    std::vector<int> out;
    for (int id : tangent_curve_roots(sv)) out.push_back(rs.coeff(id, d.k));
    std::sort(out.begin(), out.end());
    return out;
  };
  // The unique maximal linear 4-space lies entirely in the coefficient-1
  // summand at the base point, although its open cell reaches coefficient 2.
  const SchubertVariety p4 = make_schubert(d, parse_word("1 2 3 4", 4));
  CHECK(is_linear(p4));
  CHECK(is_maximal_linear(p4));
  CHECK(profile(p4) == std::vector<int>{1, 1, 1, 1});
  std::vector<int> cell_profile;
  for (int id : inversion_set(rs, p4.w)) cell_profile.push_back(rs.coeff(id, d.k));
  std::sort(cell_profile.begin(), cell_profile.end());
  CHECK(cell_profile == std::vector<int>{1, 1, 2, 2});
  // The 5-space is a subdiagram variety: a cone reaching the coefficient-2
  // summand in one direction.
  const SchubertVariety p5 = make_schubert(d, parse_word("4 3 2 3 4", 4));
  CHECK(is_maximal_linear(p5));
  CHECK(profile(p5) == std::vector<int>{1, 1, 1, 1, 2});
  // The non-maximal 4-space sits inside the 5-space.
  const SchubertVariety hyp = make_schubert(d, parse_word("3 2 3 4", 4));
  CHECK(is_linear(hyp));
  CHECK_FALSE(is_maximal_linear(hyp));
}

TEST_CASE("stabilizer node sets satisfy their definition") {
  for (const MarkedDiagram d :
       {MarkedDiagram{{'B', 3}, 0}, MarkedDiagram{{'F', 4}, 3}}) {
    const auto ctx = MarkedContext::get(d);
    const RootSystem& rs = ctx->rs();
    for (size_t i = 0; i < ctx->cosets().size(); ++i) {
      const SchubertVariety sv{d, ctx->cosets()[i]};
      const auto I = stabilizer_levi_set(sv);
      const WeylElement winv = inverse(sv.w);
      std::set<int> got(I.begin(), I.end());
      for (int node = 0; node < rs.rank(); ++node) {
        const int img = winv.apply(rs.simple_id(node));
        const bool in_opposite =
            !rs.is_positive(img) || rs.coeff(img, d.k) == 0;
        CHECK(got.count(node) == static_cast<size_t>(in_opposite));
      }
      if (length(rs, sv.w) > 0) {
        bool has_negative = false;
        for (int node : I)
          if (!rs.is_positive(winv.apply(rs.simple_id(node))))
            has_negative = true;
        CHECK(has_negative);
      }
    }
  }
}

TEST_CASE("frozen stabilizer and opposite data for a projective-space cell") {
  const SchubertVariety sv = make_schubert({{'A', 3}, 0}, parse_word("1", 3));
  CHECK(format_nodes(stabilizer_levi_set(sv)) == "1,3");
  const OppositeVariety op = opposite(sv);
  CHECK(op.dimension == 2);
  CHECK(format_nodes(op.stabilizer_levi) == "2,3");
  CHECK(op.w == sv.w);
}

TEST_CASE("a variety and its opposite fill the ambient dimension") {
  const MarkedDiagram d{{'C', 3}, 2};
  const auto ctx = MarkedContext::get(d);
  for (size_t i = 0; i < ctx->cosets().size(); ++i) {
    const SchubertVariety sv{d, ctx->cosets()[i]};
    CHECK(dim(sv) + opposite(sv).dimension == ctx->space_dim());
  }
}

TEST_CASE("counting polynomial: bottom coefficient, degree, total mass") {
  const MarkedDiagram d{{'F', 4}, 3};
  const auto ctx = MarkedContext::get(d);
  for (size_t i = 0; i < ctx->cosets().size(); ++i) {
    const SchubertVariety sv{d, ctx->cosets()[i]};
    const auto p = poincare_polynomial(sv);
    CHECK(p.front() == 1);
    CHECK(static_cast<int>(p.size()) == dim(sv) + 1);
    long long mass = 0;
    for (long long c : p) mass += c;
    CHECK(mass == static_cast<long long>(ctx->lower_interval(
                      static_cast<int>(i)).size()));
  }
}

TEST_CASE("frozen counting polynomials") {
  const SchubertVariety gr = make_schubert({{'A', 3}, 1},
                                           parse_word("2 1 3 2", 3));
  CHECK(poincare_polynomial(gr) == std::vector<long long>{1, 1, 2, 1, 1});
  CHECK(is_rationally_smooth(gr));
  const SchubertVariety cone = make_schubert({{'B', 2}, 0},
                                             parse_word("2 1", 2));
  CHECK(poincare_polynomial(cone) == std::vector<long long>{1, 1, 1});
  CHECK(is_rationally_smooth(cone));
  CHECK(degree(cone) == 2);
  CHECK(is_palindrome(poincare_polynomial(cone)));
}

TEST_CASE("linearity is degree one; maximality needs linear input") {
  const MarkedDiagram d{{'G', 2}, 1};
  const auto ctx = MarkedContext::get(d);
  for (size_t i = 0; i < ctx->cosets().size(); ++i) {
    const SchubertVariety sv{d, ctx->cosets()[i]};
    CHECK(is_linear(sv) == (degree(sv) == 1));
    if (!is_linear(sv))
      CHECK_THROWS_AS(is_maximal_linear(sv), input_error);
  }
  // The line is maximal linear here (no linear surface above it).
  const SchubertVariety line = make_schubert(d, parse_word("2", 2));
  CHECK(is_maximal_linear(line));
}

TEST_CASE("subdiagram validation and canonical form") {
  const MarkedDiagram d{{'A', 3}, 0};
  CHECK(make_subdiagram(d, {2, 1}).nodes == std::vector<int>{1, 2});
  CHECK(make_subdiagram(d, {0, 0}).nodes == std::vector<int>{0});  // dedup
  CHECK_THROWS_AS(make_subdiagram(d, {0, 2}), input_error);   // disconnected
  CHECK_THROWS_AS(make_subdiagram(d, {3}), input_error);      // out of range
  CHECK_THROWS_AS(make_subdiagram(d, {}), input_error);       // empty
  // A subdiagram missing the marked node is allowed: it carries the point.
  const Subdiagram away = make_subdiagram(d, {1, 2});
  CHECK(subdiagram_to_weyl(d, away).w == identity_element(root_system(d.type)));
}

TEST_CASE("frozen connected subdiagram lists") {
  auto names = [](const MarkedDiagram& d) {
    std::vector<std::string> out;
    for (const Subdiagram& s : connected_subdiagrams(d))
      out.push_back(format_nodes(s.nodes));
    return out;
  };
  CHECK(names({{'A', 3}, 1}) ==
        std::vector<std::string>{"2", "1,2", "2,3"});
  CHECK(names({{'F', 4}, 2}) ==
        std::vector<std::string>{"3", "2,3", "3,4", "1,2,3", "2,3,4"});
  CHECK(names({{'D', 4}, 0}) ==
        std::vector<std::string>{"1", "1,2", "1,2,3", "1,2,4"});
}

TEST_CASE("subdiagram realizations invert exactly the supported roots") {
  for (const MarkedDiagram d :
       {MarkedDiagram{{'F', 4}, 2}, MarkedDiagram{{'F', 4}, 3},
        MarkedDiagram{{'B', 3}, 1}, MarkedDiagram{{'D', 4}, 0}}) {
    const RootSystem& rs = root_system(d.type);
    for (const Subdiagram& s : connected_subdiagrams(d)) {
      const SchubertVariety sv = subdiagram_to_weyl(d, s);
      std::set<int> want;
      for (int id : tangent_roots_subdiagram(d, s))
        want.insert(rs.negate(id));  // stored negated, base-point convention
      const auto inv = inversion_set(rs, sv.w);
      CHECK(std::set<int>(inv.begin(), inv.end()) == want);
      CHECK(dim(sv) == static_cast<int>(want.size()));
      // For these homogeneous subvarieties the curve set agrees with the
      // inversion set.
      const auto curves = tangent_curve_roots(sv);
      CHECK(std::set<int>(curves.begin(), curves.end()) == want);
    }
  }
}

TEST_CASE("adjacent outside nodes of a subdiagram") {
  const MarkedDiagram d{{'F', 4}, 2};
  CHECK(lambda_adjacent(d, make_subdiagram(d, {1, 2})) ==
        std::vector<int>{0, 3});
  CHECK(lambda_adjacent(d, make_subdiagram(d, {0, 1, 2})) ==
        std::vector<int>{3});
  const MarkedDiagram gr{{'A', 3}, 1};
  CHECK(lambda_adjacent(gr, make_subdiagram(gr, {1})) ==
        std::vector<int>{0, 2});
}

TEST_CASE("lower intervals agree with pairwise order tests") {
  const MarkedDiagram d{{'B', 3}, 1};
  const auto ctx = MarkedContext::get(d);
  const RootSystem& rs = ctx->rs();
  for (size_t i = 0; i < ctx->cosets().size(); ++i) {
    const auto below = ctx->lower_interval(static_cast<int>(i));
    std::set<int> got(below.begin(), below.end());
    for (size_t j = 0; j < ctx->cosets().size(); ++j)
      CHECK(got.count(static_cast<int>(j)) ==
            static_cast<size_t>(
                bruhat_leq(rs, ctx->cosets()[j], ctx->cosets()[i])));
  }
}
