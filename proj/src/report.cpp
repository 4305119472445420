#include "schub/report.hpp"

#include <ostream>

#include "schub/address.hpp"
#include "schub/weyl.hpp"

namespace schub {

namespace {

std::string coeff_string(const Coeffs& c) {
  std::string s = "[";
  for (size_t t = 0; t < c.size(); ++t)
    s += (t ? " " : "") + std::to_string(c[t]);
  return s + "]";
}

Json coords_json(const RationalPoint& p) {
  Json coords = Json::object();
  for (const auto& [root, value] : p.coords)
    coords[std::to_string(root)] = format_rational(value);
  return coords;
}

std::string coords_string(const RationalPoint& p) {
  if (p.coords.empty()) return "origin";
  std::string s;
  for (const auto& [root, value] : p.coords) {
    if (!s.empty()) s += " ";
    s += "x" + std::to_string(root) + "=" + format_rational(value);
  }
  return s;
}

Json criterion_json(const Codim2Report& rep) {
  Json rows = Json::array();
  for (const Codim2Row& row : rep.rows)
    rows.push_back(Json{{"node", row.gamma + 1}, {"count", row.count}});
  return Json{{"rows", rows}, {"pass", rep.pass}};
}

}  // namespace

Json roots_json(const RootSystem& rs) {
  Json roots = Json::array();
  for (int id = 0; id < rs.positive_count(); ++id)
    roots.push_back(Json{{"id", id},
                         {"coeffs", rs.root(id)},
                         {"height", rs.height(id)},
                         {"norm2_half", rs.norm2_half(id)}});
  return Json{{"type", to_string(rs.type())},
              {"rank", rs.rank()},
              {"positive_count", rs.positive_count()},
              {"roots", roots}};
}

void roots_text(std::ostream& out, const RootSystem& rs) {
  out << to_string(rs.type()) << ": " << rs.positive_count()
      << " positive roots\n";
  for (int id = 0; id < rs.positive_count(); ++id)
    out << "  " << id << ": " << coeff_string(rs.root(id)) << " height "
        << rs.height(id) << " norm2/2 " << rs.norm2_half(id) << "\n";
}

Json weyl_json(const RootSystem& rs, const std::optional<WeylElement>& w) {
  Json j{{"type", to_string(rs.type())},
         {"order", weyl_order(rs.type())},
         {"longest_length", rs.positive_count()}};
  if (w) {
    Json inv = Json::array();
    for (int id : inversion_set(rs, *w)) inv.push_back(id);
    j["element"] = Json{{"word", format_word(reduced_word(rs, *w))},
                        {"length", length(rs, *w)},
                        {"inversions", inv}};
  }
  return j;
}

void weyl_text(std::ostream& out, const RootSystem& rs,
               const std::optional<WeylElement>& w) {
  out << "W(" << to_string(rs.type()) << "): order " << weyl_order(rs.type())
      << ", longest length " << rs.positive_count() << "\n";
  if (w) {
    out << "  word: " << format_word(reduced_word(rs, *w)) << "\n";
    out << "  length: " << length(rs, *w) << "\n";
    out << "  inversions:";
    for (int id : inversion_set(rs, *w)) out << " " << id;
    out << "\n";
  }
}

Json schubert_json(const SchubertVariety& sv) {
  const RootSystem& rs = root_system(sv.d.type);
  const bool linear = is_linear(sv);
  Json j{{"diagram", to_string(sv.d)},
         {"word", format_word(reduced_word(rs, sv.w))},
         {"dim", dim(sv)},
         {"degree", degree(sv)},
         {"poincare", poincare_polynomial(sv)},
         {"tangent_roots", tangent_roots(sv)},
         {"stabilizer_levi", Json::array()},
         {"linear", linear},
         {"maximal_linear", linear && is_maximal_linear(sv)},
         {"rationally_smooth", is_rationally_smooth(sv)}};
  for (int i : stabilizer_levi_set(sv)) j["stabilizer_levi"].push_back(i + 1);
  const OppositeVariety opp = opposite(sv);
  Json levi = Json::array();
  for (int i : opp.stabilizer_levi) levi.push_back(i + 1);
  j["opposite"] = Json{{"word", format_word(reduced_word(rs, opp.w))},
                       {"dim", opp.dimension},
                       {"stabilizer_levi", levi}};
  return j;
}

void schubert_text(std::ostream& out, const SchubertVariety& sv) {
  const Json j = schubert_json(sv);
  out << j["diagram"].get<std::string>() << " w=[" << j["word"].get<std::string>()
      << "]\n";
  out << "  dim " << j["dim"] << ", degree " << j["degree"] << "\n";
  out << "  poincare";
  for (const auto& c : j["poincare"]) out << " " << c;
  out << "\n  tangent roots";
  for (const auto& r : j["tangent_roots"]) out << " " << r;
  out << "\n  stabilizer levi nodes";
  if (j["stabilizer_levi"].empty()) out << " (none)";
  for (const auto& i : j["stabilizer_levi"]) out << " " << i;
  out << "\n  linear " << (j["linear"].get<bool>() ? "yes" : "no")
      << ", maximal linear "
      << (j["maximal_linear"].get<bool>() ? "yes" : "no")
      << ", rationally smooth "
      << (j["rationally_smooth"].get<bool>() ? "yes" : "no") << "\n";
  out << "  opposite w=[" << j["opposite"]["word"].get<std::string>()
      << "] dim " << j["opposite"]["dim"] << "\n";
}

Json bb_cells_json(const MarkedDiagram& d, const std::vector<int>& levi,
                   const std::vector<BBCell>& cells) {
  const RootSystem& rs = root_system(d.type);
  Json rows = Json::array();
  for (const BBCell& cell : cells)
    rows.push_back(Json{{"word", format_word(reduced_word(rs, cell.rep))},
                        {"plus", cell.plus_dim},
                        {"fixed", cell.fixed_dim},
                        {"minus", cell.minus_dim},
                        {"minus_closed", cell.minus_closed},
                        {"plus_open", cell.plus_open}});
  Json nodes = Json::array();
  for (int i : levi) nodes.push_back(i + 1);
  return Json{{"diagram", to_string(d)}, {"levi", nodes}, {"cells", rows}};
}

void bb_cells_text(std::ostream& out, const MarkedDiagram& d,
                   const std::vector<int>& levi,
                   const std::vector<BBCell>& cells) {
  out << to_string(d) << " cells for levi nodes " << format_nodes(levi) << ": "
      << cells.size() << "\n";
  const RootSystem& rs = root_system(d.type);
  for (const BBCell& cell : cells) {
    out << "  [" << format_word(reduced_word(rs, cell.rep)) << "] +"
        << cell.plus_dim << " 0:" << cell.fixed_dim << " -" << cell.minus_dim;
    if (cell.minus_closed) out << " closed";
    if (cell.plus_open) out << " open";
    out << "\n";
  }
}

Json point_json(const RationalPoint& p) {
  return Json{{"coords", coords_json(p)}};
}

Json degenerate_json(const BigCellChart& ch,
                     const std::vector<RationalPoint>& points, bool transverse,
                     const std::vector<std::pair<RationalPoint, int>>& limits) {
  Json weights = Json::object();
  for (size_t t = 0; t < ch.roots.size(); ++t)
    weights[std::to_string(ch.roots[t])] = ch.weights[t];
  Json rows = Json::array();
  for (const auto& [p, mult] : limits)
    rows.push_back(Json{{"coords", coords_json(p)}, {"multiplicity", mult}});
  return Json{{"diagram", to_string(ch.d)},
              {"chart", Json{{"roots", ch.roots},
                             {"weights", weights},
                             {"plus", ch.plus},
                             {"zero", ch.zero},
                             {"minus", ch.minus}}},
              {"points", points.size()},
              {"transverse", transverse},
              {"limits", rows}};
}

void degenerate_text(std::ostream& out, const BigCellChart& ch,
                     const std::vector<RationalPoint>& points, bool transverse,
                     const std::vector<std::pair<RationalPoint, int>>& limits) {
  out << to_string(ch.d) << " chart roots";
  for (size_t t = 0; t < ch.roots.size(); ++t)
    out << " " << ch.roots[t] << "(w=" << ch.weights[t] << ")";
  out << "\n" << points.size() << " points, transverse "
      << (transverse ? "yes" : "no") << "\n";
  for (const auto& [p, mult] : limits)
    out << "  x" << mult << "  " << coords_string(p) << "\n";
}

Json pair_json(const PairDescriptor& pair) {
  Json j{{"diagram", to_string(pair.d)}};
  switch (pair.kind) {
    case PairDescriptor::Kind::Subdiagram: {
      j["kind"] = "subdiagram";
      Json nodes = Json::array();
      for (int i : pair.sub.nodes) nodes.push_back(i + 1);
      j["sub"] = nodes;
      break;
    }
    case PairDescriptor::Kind::Element:
      j["kind"] = "element";
      j["w"] = format_word(reduced_word(root_system(pair.d.type), pair.w));
      break;
    case PairDescriptor::Kind::Exceptional:
      j["kind"] = "exceptional";
      j["tag"] = pair.tag;
      break;
  }
  j["text"] = to_string(pair);
  return j;
}

Json verdict_json(const Verdict& v) {
  Json reasons = Json::array();
  for (const Reason& r : v.reasons)
    reasons.push_back(Json{
        {"criterion", r.criterion}, {"result", r.result}, {"source", r.source}});
  return Json{{"pair", pair_json(v.pair)},
              {"status", to_string(v.status)},
              {"reasons", reasons},
              {"flags", Json{{"smooth", v.flags.smooth},
                             {"linear", v.flags.linear},
                             {"maximal_linear", v.flags.maximal_linear},
                             {"codim2_pass", v.flags.codim2_pass},
                             {"catalog_exception",
                              v.flags.catalog_exception}}}};
}

void verdict_text(std::ostream& out, const Verdict& v) {
  out << to_string(v.pair) << " -> " << to_string(v.status) << "\n";
  for (const Reason& r : v.reasons)
    out << "  - " << r.criterion << ": " << r.result << " [" << r.source
        << "]\n";
  out << "  flags: smooth=" << v.flags.smooth << " linear=" << v.flags.linear
      << " maximal_linear=" << v.flags.maximal_linear
      << " codim2_pass=" << v.flags.codim2_pass
      << " catalog_exception=" << v.flags.catalog_exception << "\n";
}

Json catalog_pairs_json(const std::vector<PairDescriptor>& pairs) {
  Json rows = Json::array();
  for (const PairDescriptor& p : pairs) rows.push_back(pair_json(p));
  return rows;
}

void catalog_pairs_text(std::ostream& out,
                        const std::vector<PairDescriptor>& pairs) {
  for (const PairDescriptor& p : pairs) out << to_string(p) << "\n";
}

Json catalog_entries_json(const std::vector<CatalogEntry>& entries) {
  Json rows = Json::array();
  for (const CatalogEntry& e : entries)
    rows.push_back(Json{{"pair", e.pair},
                        {"kind", e.kind},
                        {"source", e.source},
                        {"description", e.description}});
  return rows;
}

void catalog_entries_text(std::ostream& out,
                          const std::vector<CatalogEntry>& entries) {
  for (const CatalogEntry& e : entries)
    out << e.pair << "\n  " << e.kind << " [" << e.source << "]\n  "
        << e.description << "\n";
}

Json verify_json(const MarkedDiagram& d, const std::vector<VerifyRow>& rows) {
  Json out_rows = Json::array();
  bool all = true;
  for (const VerifyRow& row : rows) {
    Json nodes = Json::array();
    for (int i : row.sub.nodes) nodes.push_back(i + 1);
    out_rows.push_back(Json{{"sub", nodes},
                            {"dim", row.dim},
                            {"linear", row.linear},
                            {"maximal_linear", row.maximal_linear},
                            {"criterion", criterion_json(row.criterion)},
                            {"escape", row.escape},
                            {"exception_source", row.exception_source},
                            {"verdict", to_string(row.verdict)},
                            {"consistent", row.consistent}});
    all = all && row.consistent;
  }
  return Json{
      {"diagram", to_string(d)}, {"rows", out_rows}, {"all_consistent", all}};
}

void verify_text(std::ostream& out, const MarkedDiagram& d,
                 const std::vector<VerifyRow>& rows) {
  out << to_string(d) << " catalog cross-check\n";
  out << "  sub | dim | linear | maxlin | criterion | escape | exception | "
         "verdict | consistent\n";
  for (const VerifyRow& row : rows) {
    out << "  " << format_nodes(row.sub.nodes) << " | " << row.dim << " | "
        << (row.linear ? "yes" : "no") << " | "
        << (row.maximal_linear ? "yes" : "no") << " | ";
    if (row.criterion.rows.empty()) {
      out << "vacuous";
    } else {
      for (size_t t = 0; t < row.criterion.rows.size(); ++t)
        out << (t ? " " : "") << "a" << row.criterion.rows[t].gamma + 1 << ":"
            << row.criterion.rows[t].count;
    }
    out << (row.criterion.pass ? " pass" : " fail") << " | "
        << (row.escape ? "yes" : "no") << " | "
        << (row.exception_source.empty() ? "-" : row.exception_source) << " | "
        << to_string(row.verdict) << " | "
        << (row.consistent ? "ok" : "MISMATCH") << "\n";
  }
}

}  // namespace schub
