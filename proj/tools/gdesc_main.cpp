#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdesc/acceptance.hpp"
#include "gdesc/catalog.hpp"
#include "gdesc/cohomology.hpp"
#include "gdesc/descent.hpp"
#include "gdesc/descent_data.hpp"
#include "gdesc/document.hpp"
#include "gdesc/equivalence.hpp"
#include "gdesc/group.hpp"
#include "gdesc/weak_action.hpp"

namespace {

using nlohmann::json;

// exit codes: 0 pass, 1 semantic failure, 2 structural error, 3 undecided
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kStructural = 2;
constexpr int kUndecided = 3;

struct Output {
  bool machine = false;
  json j;

  void field(const std::string& key, const json& value) { j[key] = value; }
  void line(const std::string& text) {
    if (!machine) std::cout << text << "\n";
  }
  void flush(int code) {
    if (machine) {
      j["exit"] = code;
      std::cout << j.dump(2) << "\n";
    }
  }
};

int report_code(const gdesc::Report& r) {
  if (r.ok()) return kPass;
  return r.structural() ? kStructural : kFail;
}

gdesc::Document load(const std::string& path) {
  return gdesc::parse_document(gdesc::read_file(path));
}

std::string classes_summary(const gdesc::FiniteGroupoid& g) {
  const gdesc::SkeletonResult sk = gdesc::skeleton(gdesc::share(g));
  std::string out = std::to_string(sk.skeleton.num_objects) + " class" +
                    (sk.skeleton.num_objects == 1 ? "" : "es") + ", |Aut|=";
  for (int c = 0; c < sk.skeleton.num_objects; ++c) {
    if (c) out += ",";
    out += std::to_string(
        static_cast<int>(g.hom(sk.rep[c], sk.rep[c]).size()));
  }
  return out;
}

int cmd_validate(const std::string& path, Output& out) {
  const gdesc::Document doc = load(path);
  gdesc::Report r;
  if (doc.kind == "groupoid")
    r = gdesc::validate_groupoid(std::get<gdesc::FiniteGroupoid>(doc.value));
  else if (doc.kind == "group")
    r = gdesc::validate_group(std::get<gdesc::FiniteGroup>(doc.value));
  else if (doc.kind == "weak_action")
    r = gdesc::validate_weak_action(std::get<gdesc::WeakAction>(doc.value));
  else if (doc.kind == "galois_datum")
    r = gdesc::validate_galois_datum(
        std::get<gdesc::GaloisDescentDatum>(doc.value));
  else if (doc.kind == "cover_datum")
    r = gdesc::validate_cover_datum(
        std::get<gdesc::CoverDescentDatum>(doc.value));
  else
    r = gdesc::validate_descent_morphism(
        std::get<gdesc::DescentMorphism>(doc.value));
  out.field("kind", doc.kind);
  out.field("result", r.to_string());
  out.line(doc.kind + ": " + r.to_string());
  return report_code(r);
}

int cmd_descend(const std::string& path, const std::string& out_path,
                Output& out) {
  const gdesc::Document doc = load(path);
  if (doc.kind != "galois_datum")
    throw gdesc::DocumentError("descend expects a galois_datum document");
  const auto& d = std::get<gdesc::GaloisDescentDatum>(doc.value);
  const gdesc::Report r = gdesc::validate_galois_datum(d);
  if (!r.ok()) {
    out.field("result", r.to_string());
    out.line("datum: " + r.to_string());
    return report_code(r);
  }
  const gdesc::DescendedGroupoid desc = gdesc::descend(d);
  const std::string text = gdesc::serialize(gdesc::wrap_descended(desc));
  if (!out_path.empty())
    gdesc::write_file(out_path, text);
  else if (!out.machine)
    std::cout << text;
  const std::string summary = classes_summary(desc.gpd);
  out.field("objects", desc.gpd.num_objects);
  out.field("morphisms", desc.gpd.num_morphisms());
  out.field("summary", summary);
  out.line("descended: " + std::to_string(desc.gpd.num_objects) +
           " objects, " + std::to_string(desc.gpd.num_morphisms()) +
           " morphisms; " + summary);
  return kPass;
}

int cmd_convert(const std::string& path, const std::string& to,
                const std::string& out_path, Output& out) {
  const gdesc::Document doc = load(path);
  gdesc::Document converted;
  if (to == "cover") {
    if (doc.kind != "galois_datum")
      throw gdesc::DocumentError("convert --to cover expects a galois_datum");
    converted = gdesc::wrap(
        gdesc::galois_to_cover(std::get<gdesc::GaloisDescentDatum>(doc.value)));
  } else if (to == "galois") {
    if (doc.kind != "cover_datum")
      throw gdesc::DocumentError("convert --to galois expects a cover_datum");
    converted = gdesc::wrap(
        gdesc::cover_to_galois(std::get<gdesc::CoverDescentDatum>(doc.value)));
  } else {
    throw gdesc::DocumentError("convert: --to must be galois or cover");
  }
  const std::string text = gdesc::serialize(converted);
  if (!out_path.empty())
    gdesc::write_file(out_path, text);
  else if (!out.machine)
    std::cout << text;
  out.field("kind", converted.kind);
  return kPass;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, int budget,
              Output& out) {
  const gdesc::Document da = load(path_a), db = load(path_b);
  if (da.kind != "groupoid" || db.kind != "groupoid")
    throw gdesc::DocumentError("equiv expects two groupoid documents");
  const auto& a = std::get<gdesc::FiniteGroupoid>(da.value);
  const auto& b = std::get<gdesc::FiniteGroupoid>(db.value);
  const gdesc::EquivResult r =
      gdesc::are_equivalent(gdesc::share(a), gdesc::share(b), budget);
  if (r.undecided()) {
    out.field("result", "undecided");
    out.line("UNDECIDED: over budget");
    return kUndecided;
  }
  if (!r.equivalent()) {
    out.field("result", "inequivalent");
    out.line("NOT EQUIVALENT");
    return kFail;
  }
  out.field("result", "equivalent");
  out.line("EQUIVALENT (" + classes_summary(a) + ")");
  return kPass;
}

int cmd_h1(const std::string& gamma_path, const std::string& a_path,
           const std::string& action_spec, Output& out) {
  const gdesc::Document dg = load(gamma_path), da = load(a_path);
  if (dg.kind != "group" || da.kind != "group")
    throw gdesc::DocumentError("h1 expects two group documents");
  const auto& gamma = std::get<gdesc::FiniteGroup>(dg.value);
  const auto& a = std::get<gdesc::FiniteGroup>(da.value);
  gdesc::GroupAction action{gamma, a, {}};
  if (action_spec == "trivial") {
    action = gdesc::trivial_action(gamma, a);
  } else if (action_spec == "inversion") {
    if (gamma.order != 2)
      throw gdesc::DocumentError("inversion shorthand needs |group| = 2");
    action = gdesc::inversion_action(gamma, a, {0, 1});
  } else {
    json j;
    try {
      j = json::parse(gdesc::read_file(action_spec));
    } catch (const json::exception& e) {
      throw gdesc::DocumentError(std::string("action table: ") + e.what());
    }
    if (!j.is_array())
      throw gdesc::DocumentError("action table must be an array of arrays");
    for (const auto& row : j)
      action.aut.push_back(row.get<std::vector<int>>());
  }
  {
    const gdesc::Report r = gdesc::validate_action(action);
    if (!r.ok()) {
      out.field("result", r.to_string());
      out.line("action: " + r.to_string());
      return report_code(r);
    }
  }
  const gdesc::CocycleSet cs = gdesc::h1(action);
  out.field("cocycles", cs.cocycles.size());
  out.field("classes", cs.classes.size());
  json table = json::array();
  out.line("cocycles: " + std::to_string(cs.cocycles.size()));
  out.line("class  representative (z per group element)  |stabilizer|");
  for (std::size_t c = 0; c < cs.classes.size(); ++c) {
    const auto& rep = cs.cocycles[cs.classes[c][0]];
    std::string line = "  " + std::to_string(c) + "     [";
    for (std::size_t i = 0; i < rep.size(); ++i)
      line += (i ? " " : "") + std::to_string(rep[i]);
    line += "]  " + std::to_string(cs.stabilizers[c].size());
    out.line(line);
    table.push_back({{"representative", rep},
                     {"stabilizer_order", cs.stabilizers[c].size()}});
  }
  out.field("table", table);
  return kPass;
}

int cmd_roundtrip(const std::string& gpd_path, const std::string& grp_path,
                  int budget, Output& out) {
  const gdesc::Document dg = load(gpd_path), dh = load(grp_path);
  if (dg.kind != "groupoid" || dh.kind != "group")
    throw gdesc::DocumentError("roundtrip expects a groupoid and a group");
  const auto& h = std::get<gdesc::FiniteGroupoid>(dg.value);
  const auto& gamma = std::get<gdesc::FiniteGroup>(dh.value);
  const gdesc::RoundtripResult r = gdesc::roundtrip_check(h, gamma, budget);
  out.field("descended_objects", r.descended_objects);
  if (r.equivalence.undecided()) {
    out.field("result", "undecided");
    out.line("UNDECIDED: over budget");
    return kUndecided;
  }
  if (!r.equivalence.equivalent()) {
    out.field("result", "inequivalent");
    out.line("NOT EQUIVALENT");
    return kFail;
  }
  out.field("result", "equivalent");
  out.line("EQUIVALENT (descended: " + std::to_string(r.descended_objects) +
           " objects; " + classes_summary(h) + ")");
  return kPass;
}

int cmd_selftest(Output& out) {
  const auto results = gdesc::run_acceptance();
  json rows = json::array();
  for (const auto& r : results) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%6.2fs", r.seconds);
    out.line(std::string(r.pass ? "PASS" : "FAIL") + "  [" +
             std::to_string(r.id) + "] " + r.name + " (" + buf + ") - " +
             r.detail);
    rows.push_back({{"id", r.id},
                    {"name", r.name},
                    {"pass", r.pass},
                    {"detail", r.detail},
                    {"seconds", r.seconds}});
  }
  out.field("criteria", rows);
  const bool ok = gdesc::all_passed(results);
  out.line(ok ? "selftest: all criteria passed"
              : "selftest: FAILURES present");
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-descent engine for groupoid-valued covers"};
  app.require_subcommand(1);

  std::string report = "text";
  app.add_option("--report", report, "report style: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));

  std::string path, path_b, out_path, to, action_spec = "trivial";
  int budget = 64;

  auto* validate = app.add_subcommand("validate", "validate a document");
  validate->add_option("path", path)->required();

  auto* descend = app.add_subcommand("descend", "descend a galois datum");
  descend->add_option("path", path)->required();
  descend->add_option("--out", out_path, "write the descended document here");

  auto* convert = app.add_subcommand("convert", "convert between encodings");
  convert->add_option("path", path)->required();
  convert->add_option("--to", to, "target encoding: galois or cover")
      ->required();
  convert->add_option("--out", out_path);

  auto* equiv = app.add_subcommand("equiv", "decide equivalence of groupoids");
  equiv->add_option("pathA", path)->required();
  equiv->add_option("pathB", path_b)->required();
  equiv->add_option("--budget", budget, "skeleton morphism budget");

  auto* h1cmd = app.add_subcommand("h1", "nonabelian H^1 oracle");
  h1cmd->add_option("gamma", path)->required();
  h1cmd->add_option("coefficients", path_b)->required();
  h1cmd->add_option("--action", action_spec,
                    "trivial, inversion, or a JSON table path");

  auto* roundtrip =
      app.add_subcommand("roundtrip", "torsor base change and descent");
  roundtrip->add_option("groupoid", path)->required();
  roundtrip->add_option("group", path_b)->required();
  roundtrip->add_option("--budget", budget);

  auto* selftest = app.add_subcommand("selftest", "run the full catalog");

  CLI11_PARSE(app, argc, argv);

  Output out;
  out.machine = (report == "machine");
  int code = kStructural;
  try {
    if (app.got_subcommand(validate)) code = cmd_validate(path, out);
    else if (app.got_subcommand(descend)) code = cmd_descend(path, out_path, out);
    else if (app.got_subcommand(convert)) code = cmd_convert(path, to, out_path, out);
    else if (app.got_subcommand(equiv)) code = cmd_equiv(path, path_b, budget, out);
    else if (app.got_subcommand(h1cmd)) code = cmd_h1(path, path_b, action_spec, out);
    else if (app.got_subcommand(roundtrip)) code = cmd_roundtrip(path, path_b, budget, out);
    else if (app.got_subcommand(selftest)) code = cmd_selftest(out);
  } catch (const gdesc::DocumentError& e) {
    out.field("error", e.what());
    out.line(std::string("error: ") + e.what());
    code = kStructural;
  } catch (const std::exception& e) {
    out.field("error", e.what());
    out.line(std::string("error: ") + e.what());
    code = kStructural;
  }
  out.flush(code);
  return code;
}
