#pragma once

#include <memory>
#include <vector>

#include "schub/weyl.hpp"

namespace schub {

/// A diagram with one marked node (0-based); the ambient space it describes
/// has Picard rank one, and the marked node determines the parabolic.
struct MarkedDiagram {
  SimpleType type;
  int k = 0;

  bool operator==(const MarkedDiagram& o) const {
    return type == o.type && k == o.k;
  }
  bool operator<(const MarkedDiagram& o) const {
    return type != o.type ? type < o.type : k < o.k;
  }
};

std::string to_string(const MarkedDiagram& d);

/// Connected node subset of the diagram. It need not contain the marked
/// node; a subset away from it carries only the base point.
struct Subdiagram {
  std::vector<int> nodes;  // 0-based, strictly increasing
};

/// A Bruhat cover u -> u * s_root inside the minimal representatives, with
/// its hyperplane-section coefficient (always positive).
struct Cover {
  int from = 0;
  int to = 0;
  int root = 0;
  long long weight = 0;
};

/// Memoized per-marked-diagram machine: the minimal coset representatives,
/// their cover graph weighted by hyperplane-section coefficients, and the
/// point-class degrees derived from it. Immutable once built; the factory
/// keeps one shared instance per diagram (single writer, many readers).
class MarkedContext {
 public:
  static std::shared_ptr<const MarkedContext> get(const MarkedDiagram& d);

  const MarkedDiagram& diagram() const { return d_; }
  const RootSystem& rs() const { return *rs_; }

  /// Positive root ids with positive coefficient on the marked node; their
  /// count is the dimension of the ambient space.
  const std::vector<int>& unipotent_roots() const { return upos_; }
  int space_dim() const { return static_cast<int>(upos_.size()); }

  /// Minimal coset representatives, sorted by (length, permutation).
  const std::vector<WeylElement>& cosets() const { return cosets_; }
  /// Index into cosets(), or -1 when w is not a minimal representative.
  int index_of(const WeylElement& w) const;
  int length_of(int idx) const { return lengths_[idx]; }

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<std::vector<int>>& covers_up() const { return up_; }
  const std::vector<std::vector<int>>& covers_down() const { return down_; }

  /// Degree of the Schubert variety of cosets()[idx] under the minimal
  /// embedding: the weighted count of saturated chains down to the point.
  long long degree(int idx) const { return degrees_[idx]; }

  /// Indices of all representatives below idx (inclusive) in Bruhat order.
  std::vector<int> lower_interval(int idx) const;

 private:
  MarkedContext() = default;

  MarkedDiagram d_;
  const RootSystem* rs_ = nullptr;
  std::vector<int> upos_;
  std::vector<WeylElement> cosets_;
  std::vector<int> lengths_;
  std::vector<Cover> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<long long> degrees_;
};

/// Schubert variety of a minimal coset representative; its dimension is the
/// length of w. Construction validates membership.
struct SchubertVariety {
  MarkedDiagram d;
  WeylElement w;
};

SchubertVariety make_schubert(const MarkedDiagram& d, const WeylElement& w);
SchubertVariety make_schubert(const MarkedDiagram& d,
                              const std::vector<int>& word);
int dim(const SchubertVariety& sv);

/// Nodes whose parabolic subgroup stabilizes the variety: node i belongs to
/// the set exactly when w^{-1}(alpha_i) is negative or supported away from
/// the marked node. For w != id the set contains a node with
/// w^{-1}(alpha_i) < 0, and the marked node always qualifies via the Levi
/// complement when w = id.
std::vector<int> stabilizer_levi_set(const SchubertVariety& sv);

/// Root index set of the open cell through the extreme point x_w: the
/// positive roots inverted by w^{-1}. Exactly dim(sv) of them, and all lie
/// in w applied to the negated unipotent roots.
std::vector<int> tangent_roots(const SchubertVariety& sv);

/// Directions at the base point of the torus-stable curves contained in the
/// variety: the unipotent roots beta whose reflection has its coset below w.
/// When the variety is smooth at the base point these are exactly the
/// weights of its tangent space there; in general they bound it from below.
std::vector<int> tangent_curve_roots(const SchubertVariety& sv);

/// Tangent directions at the base point of the homogeneous submanifold cut
/// out by a subdiagram: the negatives of the unipotent roots supported on
/// the subdiagram's nodes.
std::vector<int> tangent_roots_subdiagram(const MarkedDiagram& d,
                                          const Subdiagram& sd);

/// Nodes outside the subdiagram joined to it by a diagram edge.
std::vector<int> lambda_adjacent(const MarkedDiagram& d, const Subdiagram& sd);

/// The Schubert variety whose cell realizes the subdiagram submanifold: the
/// unique minimal representative whose inversion set is exactly the set of
/// unipotent roots supported on the subdiagram.
SchubertVariety subdiagram_to_weyl(const MarkedDiagram& d,
                                   const Subdiagram& sd);

/// Cell counts of the Bruhat-order lower interval, indexed by dimension;
/// coeffs[0] = 1 and the degree of the polynomial is dim(sv).
std::vector<long long> poincare_polynomial(const SchubertVariety& sv);

/// Degree under the minimal embedding of the ambient space.
long long degree(const SchubertVariety& sv);

/// True when the variety is embedded as a linear subspace (degree one).
bool is_linear(const SchubertVariety& sv);

/// Among linear Schubert varieties only: true when no cover of w inside the
/// minimal representatives is again linear. Rejects non-linear input.
bool is_maximal_linear(const SchubertVariety& sv);

/// Palindromicity of the Poincare coefficients.
bool is_rationally_smooth(const SchubertVariety& sv);

/// The opposite-cell variety through the same extreme point, with its own
/// stabilizer node set; dimensions of a variety and its opposite sum to the
/// ambient dimension.
struct OppositeVariety {
  MarkedDiagram d;
  WeylElement w;
  int dimension = 0;
  std::vector<int> stabilizer_levi;  // its stabilizer is the opposite
                                     // parabolic of this node set
};

OppositeVariety opposite(const SchubertVariety& sv);

/// Validates the node set (non-empty, in range, connected) and returns the
/// canonical form: sorted, duplicates removed.
Subdiagram make_subdiagram(const MarkedDiagram& d, std::vector<int> nodes);

/// All proper connected subdiagrams containing the marked node, ordered by
/// (size, nodes).
std::vector<Subdiagram> connected_subdiagrams(const MarkedDiagram& d);

}  // namespace schub
