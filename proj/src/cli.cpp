#include "schub/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "schub/address.hpp"
#include "schub/report.hpp"
#include "schub/weyl.hpp"

namespace schub {

namespace {

std::vector<RationalPoint> read_points(const BigCellChart& ch,
                                       const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open points file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error("points file '" + path + "': " + std::string(e.what()));
  }
  if (!doc.is_array())
    throw input_error("points file '" + path + "': expected a JSON array");
  std::vector<RationalPoint> points;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("coords") ||
        !item["coords"].is_object())
      throw input_error("points file '" + path +
                        "': each entry needs a \"coords\" object");
    std::map<int, Rat> coords;
    for (const auto& [key, value] : item["coords"].items()) {
      int root = -1;
      try {
        size_t pos = 0;
        root = std::stoi(key, &pos);
        if (pos != key.size() || root < 0) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw input_error("points file '" + path + "': bad root id '" + key +
                          "'");
      }
      if (!value.is_string())
        throw input_error("points file '" + path + "': coordinate of root " +
                          key + " must be a \"p/q\" string");
      coords[root] = parse_rational(value.get<std::string>());
    }
    points.push_back(make_point(ch, coords));
  }
  return points;
}

void emit(std::ostream& out, bool json, const Json& doc,
          const std::function<void()>& text) {
  if (json)
    out << doc.dump(2) << "\n";
  else
    text();
}

struct Args {
  std::string address;
  std::string w;
  std::string sub;
  std::string exc;
  std::string levi;
  std::string points;
  bool has_w = false;
  bool has_sub = false;
  bool has_exc = false;
  bool json = false;
};

int dispatch(const std::string& verb, const Args& a, std::ostream& out) {
  if (verb == "roots") {
    const Address addr = parse_address(a.address);
    const RootSystem& rs = root_system(addr.type);
    emit(out, a.json, roots_json(rs), [&] { roots_text(out, rs); });
    return 0;
  }

  if (verb == "weyl") {
    const Address addr = parse_address(a.address);
    const RootSystem& rs = root_system(addr.type);
    std::optional<WeylElement> w;
    if (a.has_w) w = from_word(rs, parse_word(a.w, rs.rank()));
    emit(out, a.json, weyl_json(rs, w), [&] { weyl_text(out, rs, w); });
    return 0;
  }

  if (verb == "schubert") {
    const MarkedDiagram d = parse_marked(a.address);
    const RootSystem& rs = root_system(d.type);
    SchubertVariety sv = [&] {
      if (a.has_sub == a.has_w)
        throw input_error("schubert needs exactly one of --w or --sub");
      if (a.has_sub)
        return subdiagram_to_weyl(
            d, make_subdiagram(d, parse_nodes(a.sub, rs.rank())));
      return make_schubert(d, parse_word(a.w, rs.rank()));
    }();
    emit(out, a.json, schubert_json(sv), [&] { schubert_text(out, sv); });
    return 0;
  }

  if (verb == "bb-cells") {
    const MarkedDiagram d = parse_marked(a.address);
    const RootSystem& rs = root_system(d.type);
    const std::vector<int> levi = parse_nodes(a.levi, rs.rank());
    const std::vector<BBCell> cells = bb_cells(d, levi);
    emit(out, a.json, bb_cells_json(d, levi, cells),
         [&] { bb_cells_text(out, d, levi, cells); });
    return 0;
  }

  if (verb == "degenerate") {
    const MarkedDiagram d = parse_marked(a.address);
    const RootSystem& rs = root_system(d.type);
    const SchubertVariety sv = make_schubert(d, parse_word(a.w, rs.rank()));
    const Cocharacter lambda =
        canonical_cocharacter(rs, parse_nodes(a.levi, rs.rank()));
    const BigCellChart ch = chart(d, sv.w, lambda);
    const std::vector<RationalPoint> points =
        a.points.empty() ? std::vector<RationalPoint>{}
                         : read_points(ch, a.points);
    const bool transverse = is_transverse_wrt_lambda(ch, points);
    const auto limits = degenerate(ch, points);
    emit(out, a.json, degenerate_json(ch, points, transverse, limits),
         [&] { degenerate_text(out, ch, points, transverse, limits); });
    return 0;
  }

  if (verb == "classify") {
    const MarkedDiagram d = parse_marked(a.address);
    const RootSystem& rs = root_system(d.type);
    const int given = int(a.has_w) + int(a.has_sub) + int(a.has_exc);
    if (given != 1)
      throw input_error("classify needs exactly one of --w, --sub, --exc");
    PairDescriptor pair = [&] {
      if (a.has_sub)
        return subdiagram_pair(d,
                               make_subdiagram(d, parse_nodes(a.sub, rs.rank())));
      if (a.has_w)
        return element_pair(d, from_word(rs, parse_word(a.w, rs.rank())));
      return exceptional_pair(d, a.exc);
    }();
    const Verdict v = classify(pair);
    emit(out, a.json, verdict_json(v), [&] { verdict_text(out, v); });
    return 0;
  }

  if (verb == "catalog") {
    if (a.address.empty() || a.address == "exceptions") {
      const auto entries = catalog_linear_exceptions();
      emit(out, a.json, catalog_entries_json(entries),
           [&] { catalog_entries_text(out, entries); });
      return 0;
    }
    const MarkedDiagram d = parse_marked(a.address);
    const auto pairs = catalog_smooth_nonlinear(d);
    emit(out, a.json, catalog_pairs_json(pairs),
         [&] { catalog_pairs_text(out, pairs); });
    return 0;
  }

  if (verb == "verify") {
    const MarkedDiagram d = parse_marked(a.address);
    const auto rows = verify_catalog(d);
    emit(out, a.json, verify_json(d, rows),
         [&] { verify_text(out, d, rows); });
    for (const VerifyRow& row : rows)
      if (!row.consistent)
        throw internal_error("catalog cross-check failed for " + to_string(d));
    return 0;
  }

  throw input_error("unknown verb '" + verb + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact engine for Schubert varieties in rational homogeneous "
               "spaces: root systems, Weyl cosets, torus degenerations, and "
               "Schur-rigidity classification."};
  app.require_subcommand(1);

  Args a;
  struct Verb {
    CLI::App* cmd;
    std::string name;
  };
  std::vector<Verb> verbs;
  auto add_verb = [&](const std::string& name, const std::string& help,
                      bool needs_address) {
    CLI::App* cmd = app.add_subcommand(name, help);
    if (needs_address)
      cmd->add_option("address", a.address,
                      "diagram address, e.g. F4:3 or B3")
          ->required();
    cmd->add_flag("--json", a.json, "machine-readable output");
    verbs.push_back({cmd, name});
    return cmd;
  };

  add_verb("roots", "list the positive roots of a diagram", true);
  auto* weyl = add_verb("weyl", "Weyl group facts, optionally one element",
                        true);
  weyl->add_option("--w", a.w, "reduced word, 1-based letters")
      ->expected(1);
  auto* schubert = add_verb(
      "schubert", "Schubert variety facts for a coset representative", true);
  schubert->add_option("--w", a.w, "reduced word, 1-based letters");
  schubert->add_option("--sub", a.sub, "subdiagram nodes, e.g. 2,3");
  auto* cells =
      add_verb("bb-cells", "fixed-locus cells of a one-parameter action", true);
  cells->add_option("--I", a.levi, "Levi node subset, e.g. 2,3")->required();
  auto* degen = add_verb(
      "degenerate", "limits of configured points under the torus flow", true);
  degen->add_option("--w", a.w, "chart representative word")->required();
  degen->add_option("--I", a.levi, "Levi node subset")->required();
  degen->add_option("--points", a.points, "JSON points file");
  auto* classify_cmd =
      add_verb("classify", "Schur-rigidity verdict for a pair", true);
  classify_cmd->add_option("--w", a.w, "coset representative word");
  classify_cmd->add_option("--sub", a.sub, "subdiagram nodes");
  classify_cmd->add_option("--exc", a.exc, "frozen exceptional-entry tag");
  auto* catalog_cmd = add_verb(
      "catalog", "frozen catalogs: smooth non-linear entries or exceptions",
      false);
  catalog_cmd->add_option("address", a.address,
                          "diagram address, or 'exceptions'");
  add_verb("verify", "cross-check catalog against the criterion", true);

  try {
    std::vector<const char*> argv;
    argv.push_back("schub");
    for (const std::string& s : args) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto option_given = [](CLI::App* cmd, const std::string& name) {
    const CLI::Option* opt = cmd->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };

  try {
    for (const Verb& v : verbs) {
      if (v.cmd->parsed()) {
        a.has_w = option_given(v.cmd, "--w");
        a.has_sub = option_given(v.cmd, "--sub");
        a.has_exc = option_given(v.cmd, "--exc");
        return dispatch(v.name, a, out);
      }
    }
    throw input_error("no verb given");
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace schub
