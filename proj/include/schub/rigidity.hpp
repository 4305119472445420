#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schub/schubert.hpp"

namespace schub {

enum class RigidityStatus { SchurRigid, NotSchurRigid, OutOfScope };

std::string to_string(RigidityStatus s);

/// A pair (ambient space, subvariety), with the subvariety given either by
/// the nodes of a connected subdiagram, by a minimal coset representative,
/// or by a frozen catalog tag for the entries that have no subdiagram
/// presentation.
struct PairDescriptor {
  enum class Kind { Subdiagram, Element, Exceptional };

  MarkedDiagram d;
  Kind kind = Kind::Subdiagram;
  Subdiagram sub;   // valid when kind == Subdiagram
  WeylElement w;    // valid when kind == Element
  std::string tag;  // valid when kind == Exceptional
};

PairDescriptor subdiagram_pair(const MarkedDiagram& d, Subdiagram sub);
PairDescriptor element_pair(const MarkedDiagram& d, WeylElement w);
PairDescriptor exceptional_pair(const MarkedDiagram& d, std::string tag);

/// Human-readable address, 1-based: "F4:3 / sub=2,3".
std::string to_string(const PairDescriptor& pair);

/// Per-node count of tangent roots pairing nonzero with the node's root.
struct Codim2Row {
  int gamma = -1;  // node index
  int count = 0;
};

struct Codim2Report {
  std::vector<Codim2Row> rows;  // one per node of lambda, in input order
  bool pass = true;             // every count >= 2 (vacuous on empty lambda)
};

/// For each node gamma of `lambda_nodes`, counts the tangent roots alpha
/// with (alpha, gamma) != 0. Intersecting a translated copy drops the
/// dimension by at least two exactly when every count is >= 2.
Codim2Report codim2_criterion(const RootSystem& rs,
                              const std::vector<int>& tangent_roots,
                              const std::vector<int>& lambda_nodes);

/// True when reflecting any tangent root that pairs nonzero with gamma
/// lands outside the tangent set — the mechanism behind the codimension
/// drop (the reflected root acquires support on gamma).
bool reflection_escape_check(const RootSystem& rs,
                             const std::vector<int>& tangent_roots, int gamma);

struct Reason {
  std::string criterion;
  std::string result;
  std::string source;  // a tag from provenance_table()
};

struct VerdictFlags {
  bool smooth = false;
  bool linear = false;
  bool maximal_linear = false;
  bool codim2_pass = false;
  bool catalog_exception = false;
};

struct Verdict {
  PairDescriptor pair;
  RigidityStatus status = RigidityStatus::OutOfScope;
  std::vector<Reason> reasons;
  VerdictFlags flags;
};

/// One row of the frozen exception data.
struct CatalogEntry {
  std::string pair;  // pattern, human-readable
  std::string kind;  // smooth-nonlinear-exceptional | maximal-linear-exception
                     // | schubert-rigidity-open
  std::string source;
  std::string description;
};

/// Every source tag a Verdict reason may carry, with a one-line meaning.
const std::vector<std::pair<std::string, std::string>>& provenance_table();

/// Smooth non-linear subvarieties of d: the non-linear subdiagram pairs
/// (computed), followed by the frozen exceptional entries whose ambient
/// pattern matches d. Deterministic order.
std::vector<PairDescriptor> catalog_smooth_nonlinear(const MarkedDiagram& d);

/// The frozen list of maximal-linear exceptions, plus the marker recording
/// that the rigidity of the G2 line in the stronger differential-system
/// sense remains open.
std::vector<CatalogEntry> catalog_linear_exceptions();

/// Decision procedure:
///   (i)   smooth and non-linear (subdiagram or frozen entry) -> SchurRigid;
///   (ii)  linear, not maximal among linear Schubert varieties -> NotSchurRigid;
///   (iii) maximal linear matching a frozen exception -> NotSchurRigid;
///   (iv)  maximal linear otherwise -> SchurRigid;
///   (v)   anything else (e.g. a singular representative) -> OutOfScope.
/// Ambients presented for a short root are re-presented for the full
/// automorphism group first: (B_l,a_l) -> (D_{l+1},a_{l+1}),
/// (C_l,a_1) -> (A_{2l-1},a_1), (G2,a1) -> (B3,a1). Pure: identical input
/// yields an identical Verdict, reasons included.
Verdict classify(const PairDescriptor& pair);

/// Cross-validation of the catalog against the computed criterion, one row
/// per connected subdiagram of d.
struct VerifyRow {
  Subdiagram sub;
  int dim = 0;
  bool linear = false;
  bool maximal_linear = false;
  Codim2Report criterion;
  bool escape = true;
  std::string exception_source;  // long-root pattern tag, or empty
  RigidityStatus verdict = RigidityStatus::OutOfScope;
  bool consistent = true;
};

/// Consistency rules: non-linear rows must pass the criterion and the
/// escape check; maximal linear rows must fail the criterion exactly when
/// a long-root exception pattern matches. Other rows carry data only.
std::vector<VerifyRow> verify_catalog(const MarkedDiagram& d);

}  // namespace schub
