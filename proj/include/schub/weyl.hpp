#pragma once

#include <vector>

#include "schub/root_system.hpp"

namespace schub {

/*
  Reflection group machinery.

  Group elements are carried as permutations of the full root set of a fixed
  RootSystem: w is the vector of images w(beta) over all root ids. This makes
  equality canonical (no dependence on the word used to build the element),
  composition a table lookup, and the inversion set

      N(w) = { beta > 0 : w(beta) < 0 },   |N(w)| = length(w)

  a single scan. Words in the simple reflections are kept only as input and
  display artifacts; 0-based node indices internally, 1-based at the CLI
  boundary.
*/
class WeylElement {
 public:
  /// Empty permutation: a placeholder, not a group element.
  WeylElement() = default;

  /// Wraps a full-root-set permutation; images are root ids.
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {}

  int apply(int id) const { return perm_[id]; }
  int size() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator!=(const WeylElement& o) const { return perm_ != o.perm_; }
  bool operator<(const WeylElement& o) const { return perm_ < o.perm_; }

 private:
  std::vector<int> perm_;
};

WeylElement identity_element(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
/// Reflection in an arbitrary root, as a group element.
WeylElement reflection(const RootSystem& rs, int root_id);

/// (a * b)(beta) = a(b(beta)).
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);

/// Product s_{i1} s_{i2} ... s_{ik} for a word of 0-based node indices.
/// Rejects out-of-range letters. The word need not be reduced.
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

/// Positive root ids sent to negative roots by w; its size is length(w).
std::vector<int> inversion_set(const RootSystem& rs, const WeylElement& w);
int length(const RootSystem& rs, const WeylElement& w);

/// A reduced word for w (0-based letters), obtained by stripping right
/// descents; empty for the identity.
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

/// Bruhat order on the full group, by the descent recursion: strip a left
/// descent of w and recurse on the lifted pair. Reflexive.
bool bruhat_leq(const RootSystem& rs, const WeylElement& v,
                const WeylElement& w);

/// All group elements, identity first, sorted by length then by permutation.
/// Types whose group order exceeds 10^6 are rejected with a diagnostic.
std::vector<WeylElement> enumerate_group(const RootSystem& rs);

/// True if no positive root of the Levi complement of node k is inverted,
/// i.e. w is the minimal-length representative of its coset w W_P.
bool is_minimal_rep(const RootSystem& rs, const WeylElement& w, int k);

/// Minimal coset representatives for the parabolic that drops node k,
/// sorted by length then by permutation. Every inversion of a returned
/// element has positive coefficient on node k.
std::vector<WeylElement> minimal_reps(const RootSystem& rs, int k);

/// The shortest element of W_I * w (left coset under the subgroup generated
/// by the nodes in I), found by stripping left descents in I.
WeylElement min_in_left_coset(const RootSystem& rs, const std::vector<int>& I,
                              const WeylElement& w);

/// One minimal-length representative per left W_I-coset within the minimal
/// representatives of node k; the classes partition minimal_reps(rs, k).
/// Deterministic order: by (length, permutation) of the representative.
std::vector<WeylElement> double_coset_min_reps(const RootSystem& rs,
                                               const std::vector<int>& I,
                                               int k);

}  // namespace schub
