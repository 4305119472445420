#pragma once

#include <map>
#include <vector>

#include "schub/types.hpp"

namespace schub {

/// A root expressed in the basis of simple roots.
struct Root {
  Coeffs coeffs;

  bool operator==(const Root& o) const { return coeffs == o.coeffs; }
};

/// Finite root system of a simple type, with roots stored as integer vectors
/// in the simple-root basis.
///
/// Root ids: the m positive roots get ids 0..m-1, ordered by height and then
/// lexicographically by coefficients; the negative of the root with id r has
/// id r + m. All group and cell computations work on these ids.
///
/// Conventions: cartan(i, j) is the pairing of the i-th simple root with the
/// j-th simple coroot; squared lengths are normalized so short roots have
/// norm2_half = 1 (long roots have 2, or 3 in the doubly-laced G family).
class RootSystem {
 public:
  /// Constructs the root system of type t. Rank bounds per family:
  /// A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2;
  /// anything else is rejected with a diagnostic.
  static RootSystem build(SimpleType t);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }

  /// <alpha_i, alpha_j^vee> for simple roots, 0-based.
  int cartan(int i, int j) const { return cartan_[i][j]; }

  /// Number of positive roots.
  int positive_count() const { return m_; }
  /// Total number of roots (positives and their negatives).
  int root_count() const { return 2 * m_; }

  const Coeffs& root(int id) const { return roots_[check_id(id)]; }
  /// Id of a coefficient vector, or -1 if it is not a root.
  int id_of(const Coeffs& c) const;
  /// Id lookup that rejects non-root input with a diagnostic.
  int require_root(const Coeffs& c) const;

  bool is_positive(int id) const { return check_id(id) < m_; }
  int negate(int id) const { return check_id(id) < m_ ? id + m_ : id - m_; }

  /// Id of the i-th simple root (0-based node index).
  int simple_id(int i) const;
  /// Index i if id is +/- the i-th simple root, else -1.
  int simple_index(int id) const;

  /// Sum of coefficients (negative for negative roots).
  int height(int id) const { return heights_[check_id(id)]; }
  /// Half the squared length: 1 for short roots, 2 or 3 for long ones.
  int norm2_half(int id) const { return norm2h_[check_id(id)]; }
  int coeff(int id, int i) const { return roots_[check_id(id)][check_node(i)]; }

  /// Pairing <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha), by root id.
  int pair(int beta, int alpha) const;
  /// Pairing on explicit coefficient vectors; both must be roots.
  int pair(const Root& beta, const Root& alpha) const;

  /// Image of beta under the reflection in alpha, as a root id.
  /// s_alpha(beta) = beta - <beta, alpha^vee> alpha is again a root.
  int reflect(int beta, int alpha) const;
  Root reflect(const Root& beta, const Root& alpha) const;

  /// Image of root id under the reflection in the i-th simple root
  /// (precomputed table; the workhorse for group enumeration).
  int simple_reflect(int i, int id) const {
    return sref_[check_node(i)][check_id(id)];
  }

  /// True if nodes i and j are joined by an edge of the diagram.
  bool adjacent(int i, int j) const {
    return i != j && cartan_[check_node(i)][check_node(j)] != 0;
  }

  /// Symmetrized form (beta, alpha) on arbitrary coefficient vectors.
  long long bilinear(const Coeffs& a, const Coeffs& b) const;

  int check_node(int i) const;

 private:
  RootSystem() = default;
  int check_id(int id) const;

  SimpleType type_;
  int m_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> dsim_;  // norm2_half of each simple root
  std::vector<Coeffs> roots_;
  std::vector<int> heights_;
  std::vector<int> norm2h_;
  std::vector<std::vector<int>> sref_;
  std::map<Coeffs, int> index_;
};

/// Process-wide memoized access; reference stays valid for program lifetime.
const RootSystem& root_system(SimpleType t);

/// Closed-form number of positive roots of type t.
long long positive_root_count(SimpleType t);
/// Closed-form order of the reflection group of type t.
long long weyl_order(SimpleType t);

}  // namespace schub
