#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schub/rigidity.hpp"
#include "schub/torus.hpp"

namespace schub {

/// All machine output uses insertion-ordered JSON so that identical inputs
/// yield byte-identical documents.
using Json = nlohmann::ordered_json;

Json roots_json(const RootSystem& rs);
void roots_text(std::ostream& out, const RootSystem& rs);

Json weyl_json(const RootSystem& rs, const std::optional<WeylElement>& w);
void weyl_text(std::ostream& out, const RootSystem& rs,
               const std::optional<WeylElement>& w);

Json schubert_json(const SchubertVariety& sv);
void schubert_text(std::ostream& out, const SchubertVariety& sv);

Json bb_cells_json(const MarkedDiagram& d, const std::vector<int>& levi,
                   const std::vector<BBCell>& cells);
void bb_cells_text(std::ostream& out, const MarkedDiagram& d,
                   const std::vector<int>& levi,
                   const std::vector<BBCell>& cells);

Json point_json(const RationalPoint& p);

/// Chart, point count, transversality flag, and the limit multiset.
Json degenerate_json(const BigCellChart& ch,
                     const std::vector<RationalPoint>& points, bool transverse,
                     const std::vector<std::pair<RationalPoint, int>>& limits);
void degenerate_text(std::ostream& out, const BigCellChart& ch,
                     const std::vector<RationalPoint>& points, bool transverse,
                     const std::vector<std::pair<RationalPoint, int>>& limits);

Json pair_json(const PairDescriptor& pair);
Json verdict_json(const Verdict& v);
void verdict_text(std::ostream& out, const Verdict& v);

Json catalog_pairs_json(const std::vector<PairDescriptor>& pairs);
void catalog_pairs_text(std::ostream& out,
                        const std::vector<PairDescriptor>& pairs);
Json catalog_entries_json(const std::vector<CatalogEntry>& entries);
void catalog_entries_text(std::ostream& out,
                          const std::vector<CatalogEntry>& entries);

Json verify_json(const MarkedDiagram& d, const std::vector<VerifyRow>& rows);
void verify_text(std::ostream& out, const MarkedDiagram& d,
                 const std::vector<VerifyRow>& rows);

}  // namespace schub
