#include "schub/torus.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "schub/weyl.hpp"

namespace schub {

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string num_digits = num;
  if (!num_digits.empty() && num_digits[0] == '-') num_digits.erase(0, 1);
  if (!digits_only(num_digits) || !digits_only(den))
    throw input_error("malformed rational '" + text + "', expected p or p/q");
  Rat q{mpz_class(num), mpz_class(den)};
  if (q.get_den() == 0)
    throw input_error("zero denominator in rational '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rat& value) { return value.get_str(); }

static void check_node_set(const RootSystem& rs, const std::vector<int>& I) {
  std::set<int> seen;
  for (int i : I) {
    rs.check_node(i);
    if (!seen.insert(i).second)
      throw input_error("duplicate node in node set");
  }
}

Cocharacter canonical_cocharacter(const RootSystem& rs,
                                  const std::vector<int>& I) {
  check_node_set(rs, I);
  if (static_cast<int>(I.size()) == rs.rank())
    throw input_error(
        "node set covers the whole diagram; the attached cocharacter would "
        "be zero");
  Cocharacter lambda;
  lambda.coeffs.assign(rs.rank(), 1);
  for (int i : I) lambda.coeffs[i] = 0;
  return lambda;
}

Cocharacter cocharacter_with_coeffs(const RootSystem& rs,
                                    std::vector<int> coeffs,
                                    const std::vector<int>& I) {
  check_node_set(rs, I);
  if (static_cast<int>(coeffs.size()) != rs.rank())
    throw input_error("cocharacter coefficient count does not match rank");
  std::vector<bool> in_I(rs.rank(), false);
  for (int i : I) in_I[i] = true;
  for (int j = 0; j < rs.rank(); ++j) {
    if (in_I[j] && coeffs[j] != 0)
      throw input_error("cocharacter must vanish on node " +
                        std::to_string(j + 1));
    if (!in_I[j] && coeffs[j] <= 0)
      throw input_error("cocharacter must be positive on node " +
                        std::to_string(j + 1));
  }
  return Cocharacter{std::move(coeffs)};
}

int weight(const RootSystem& rs, const Cocharacter& lambda, int root_id) {
  if (static_cast<int>(lambda.coeffs.size()) != rs.rank())
    throw input_error("cocharacter coefficient count does not match rank");
  int w = 0;
  for (int j = 0; j < rs.rank(); ++j)
    w += lambda.coeffs[j] * rs.coeff(root_id, j);
  return w;
}

std::vector<BBCell> bb_cells(const MarkedDiagram& d, const std::vector<int>& I) {
  const auto ctx_ptr = MarkedContext::get(d);
  const MarkedContext& ctx = *ctx_ptr;
  const RootSystem& rs = ctx.rs();
  Cocharacter lambda = canonical_cocharacter(rs, I);

  std::vector<BBCell> cells;
  const int dim_space = ctx.space_dim();
  for (const WeylElement& rep : double_coset_min_reps(rs, I, d.k)) {
    BBCell cell;
    cell.rep = rep;
    for (int beta : ctx.unipotent_roots()) {
      int alpha = rep.apply(rs.negate(beta));
      int w = weight(rs, lambda, alpha);
      if (w > 0)
        ++cell.plus_dim;
      else if (w < 0)
        ++cell.minus_dim;
      else
        ++cell.fixed_dim;
    }
    cell.minus_closed = cell.minus_dim == 0;
    cell.plus_open = cell.plus_dim + cell.fixed_dim == dim_space;
    cells.push_back(std::move(cell));
  }

  int closed = 0;
  for (const BBCell& cell : cells) {
    if (!cell.minus_closed) continue;
    ++closed;
    if (!cell.plus_open)
      throw internal_error("the minus-closed cell is not plus-open");
  }
  if (closed != 1)
    throw internal_error("expected exactly one minus-closed cell, found " +
                         std::to_string(closed));
  return cells;
}

int BigCellChart::weight_of(int root_id) const {
  auto it = std::lower_bound(roots.begin(), roots.end(), root_id);
  if (it == roots.end() || *it != root_id)
    throw input_error("root id " + std::to_string(root_id) +
                      " is not a coordinate of this chart");
  return weights[it - roots.begin()];
}

BigCellChart chart(const MarkedDiagram& d, const WeylElement& w,
                   const Cocharacter& lambda) {
  const auto ctx_ptr = MarkedContext::get(d);
  const MarkedContext& ctx = *ctx_ptr;
  const RootSystem& rs = ctx.rs();
  if (!is_minimal_rep(rs, w, d.k))
    throw input_error("chart center must be a minimal coset representative");
  if (static_cast<int>(lambda.coeffs.size()) != rs.rank())
    throw input_error("cocharacter coefficient count does not match rank");
  for (int c : lambda.coeffs)
    if (c < 0) throw input_error("cocharacter coefficients must be >= 0");

  BigCellChart ch;
  ch.d = d;
  ch.w = w;
  ch.lambda = lambda;
  for (int beta : ctx.unipotent_roots())
    ch.roots.push_back(w.apply(rs.negate(beta)));
  std::sort(ch.roots.begin(), ch.roots.end());

  bool any_nonzero = false;
  for (int alpha : ch.roots) {
    int wt = weight(rs, lambda, alpha);
    ch.weights.push_back(wt);
    if (wt > 0)
      ch.plus.push_back(alpha);
    else if (wt < 0)
      ch.minus.push_back(alpha);
    else
      ch.zero.push_back(alpha);
    any_nonzero = any_nonzero || wt != 0;
  }
  if (!any_nonzero)
    throw input_error("cocharacter acts trivially on every chart coordinate");
  return ch;
}

bool RationalPoint::operator<(const RationalPoint& o) const {
  auto a = coords.begin(), b = o.coords.begin();
  for (; a != coords.end() && b != o.coords.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first;
    int c = cmp(a->second, b->second);
    if (c != 0) return c < 0;
  }
  return a == coords.end() && b != o.coords.end();
}

RationalPoint make_point(const BigCellChart& ch,
                         const std::map<int, Rat>& coords) {
  RationalPoint p;
  for (const auto& [id, value] : coords) {
    ch.weight_of(id);  // validates membership
    if (value != 0) p.coords.emplace(id, value);
  }
  return p;
}

namespace {

/// t^n for exact rationals, n possibly negative (t != 0 then).
Rat rat_pow(const Rat& t, int n) {
  if (n == 0) return Rat(1);
  const unsigned long e = n < 0 ? -static_cast<long>(n) : n;
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), t.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), t.get_den().get_mpz_t(), e);
  if (n < 0) std::swap(num, den);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

RationalPoint act(const BigCellChart& ch, const Rat& t,
                  const RationalPoint& p) {
  if (t == 0) throw input_error("torus parameter must be nonzero");
  RationalPoint q;
  for (const auto& [id, value] : p.coords) {
    if (value == 0) continue;
    q.coords.emplace(id, value * rat_pow(t, ch.weight_of(id)));
  }
  return q;
}

RationalPoint limit_at_infinity(const BigCellChart& ch,
                                const RationalPoint& p) {
  RationalPoint q;
  for (const auto& [id, value] : p.coords) {
    if (value == 0) continue;
    int wt = ch.weight_of(id);
    if (wt > 0)
      throw input_error("coordinate at root id " + std::to_string(id) +
                        " grows without bound; no limit exists");
    if (wt == 0) q.coords.emplace(id, value);
  }
  return q;
}

bool is_transverse_wrt_lambda(const BigCellChart& ch,
                              const std::vector<RationalPoint>& points) {
  std::set<RationalPoint> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) return false;
  std::set<RationalPoint> limits;
  for (const RationalPoint& p : points) limits.insert(limit_at_infinity(ch, p));
  return limits.size() == points.size();
}

std::vector<std::pair<RationalPoint, int>> degenerate(
    const BigCellChart& ch, const std::vector<RationalPoint>& points) {
  std::map<RationalPoint, int> counts;
  for (const RationalPoint& p : points) ++counts[limit_at_infinity(ch, p)];
  return {counts.begin(), counts.end()};
}

}  // namespace schub
