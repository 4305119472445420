#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "schub/schubert.hpp"

namespace schub {

/// Exact rational scalar; every coordinate computation in this module is
/// exact, no floating point anywhere.
using Rat = mpq_class;

/// Parses "p" or "p/q" (base 10, q != 0) into canonical form.
Rat parse_rational(const std::string& text);
/// Canonical rendering: "p" for integers, "p/q" otherwise, q > 0.
std::string format_rational(const Rat& value);

/// One-parameter subgroup of the maximal torus, stored as non-negative
/// multiplicities of the fundamental coweights. Its pairing with a root is
/// the coefficient sum selected by the support.
struct Cocharacter {
  std::vector<int> coeffs;
};

/// The canonical cocharacter of a node subset I: multiplicity one on every
/// node outside I, zero on I. I must be a proper subset (the full set would
/// give the zero cocharacter) with valid, duplicate-free entries.
Cocharacter canonical_cocharacter(const RootSystem& rs,
                                  const std::vector<int>& I);

/// Override with explicit multiplicities; positive exactly off I.
Cocharacter cocharacter_with_coeffs(const RootSystem& rs,
                                    std::vector<int> coeffs,
                                    const std::vector<int>& I);

/// Pairing of a root with the cocharacter.
int weight(const RootSystem& rs, const Cocharacter& lambda, int root_id);

/// Fixed-point cell attached to one coset class: direction counts of the
/// tangent space at the representative's extreme point, split by the sign
/// of the cocharacter pairing. The three counts sum to the ambient
/// dimension. The class whose minus count vanishes is the one closed orbit
/// of the opposite parabolic, and its plus cell is open.
struct BBCell {
  WeylElement rep;
  int plus_dim = 0;
  int fixed_dim = 0;
  int minus_dim = 0;
  bool minus_closed = false;
  bool plus_open = false;
};

/// Cells of the decomposition induced by the canonical cocharacter of I,
/// one per left coset class of the minimal representatives. Postcondition
/// (enforced): exactly one cell is minus-closed, and that cell is plus-open.
std::vector<BBCell> bb_cells(const MarkedDiagram& d, const std::vector<int>& I);

/// Coordinate chart on the open cell through x_w: coordinates are indexed
/// by the roots w(-beta) over the unipotent roots beta, and the cocharacter
/// splits them into decaying (minus), invariant (zero) and growing (plus)
/// directions under the action t.z_alpha = t^{<alpha,lambda>} z_alpha.
struct BigCellChart {
  MarkedDiagram d;
  WeylElement w;
  Cocharacter lambda;
  std::vector<int> roots;    // chart root ids, ascending
  std::vector<int> weights;  // cocharacter pairings, aligned with roots
  std::vector<int> plus, zero, minus;  // id subsets by weight sign

  int weight_of(int root_id) const;
};

BigCellChart chart(const MarkedDiagram& d, const WeylElement& w,
                   const Cocharacter& lambda);

/// Point of a chart with exact rational coordinates; absent keys are zero.
struct RationalPoint {
  std::map<int, Rat> coords;

  bool operator==(const RationalPoint& o) const { return coords == o.coords; }
  bool operator<(const RationalPoint& o) const;
};

/// Validates support against the chart and drops explicit zeros.
RationalPoint make_point(const BigCellChart& ch,
                         const std::map<int, Rat>& coords);

/// Torus action on chart coordinates for t != 0; exact.
RationalPoint act(const BigCellChart& ch, const Rat& t,
                  const RationalPoint& p);

/// Limit of t.p as t grows without bound. Defined only when p has no
/// growing coordinate (rejected otherwise): decaying coordinates vanish,
/// invariant ones persist. Idempotent.
RationalPoint limit_at_infinity(const BigCellChart& ch,
                                const RationalPoint& p);

/// True when the points are pairwise distinct and so are their limits.
bool is_transverse_wrt_lambda(const BigCellChart& ch,
                              const std::vector<RationalPoint>& points);

/// Multiset of limits with multiplicities, in canonical coordinate order.
/// Multiplicities sum to the number of points, and are all one exactly when
/// the configuration is transverse.
std::vector<std::pair<RationalPoint, int>> degenerate(
    const BigCellChart& ch, const std::vector<RationalPoint>& points);

}  // namespace schub
