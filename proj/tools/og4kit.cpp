// og4kit: construct, analyze, and classify 4-valent oriented graph--group
// pairs; enumerate their cyclic normal quotients; check metacirculant
// structure; run the verification suites.
//
// Exit codes: 0 success, 1 check failure, 2 bad parameters/usage,
// 3 enumeration bound exceeded, 4 classification found no matching line.

#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "og4/classify.hpp"
#include "og4/errors.hpp"
#include "og4/families.hpp"
#include "og4/metacirc.hpp"
#include "og4/pairdoc.hpp"
#include "og4/quotient.hpp"
#include "og4/verify.hpp"

namespace {

using nlohmann::ordered_json;

og4::OrientedPair load_pair(const std::string& path) {
  return og4::PairDocument::read_file(path).to_pair();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw og4::Error("cannot write " + out_path);
  out << text;
}

ordered_json og4_report_json(const og4::OG4Report& rep) {
  ordered_json j;
  j["member"] = rep.member();
  j["connected"] = rep.connected;
  j["quartic"] = rep.quartic;
  j["vertex_transitive"] = rep.vertex_transitive;
  j["edge_transitive"] = rep.edge_transitive;
  j["delta_is_single_orbit"] = rep.delta_is_single_orbit;
  j["orientation_preserved"] = rep.orientation_preserved;
  j["arc_transitive"] = rep.arc_transitive;
  j["stabilizer_order"] = rep.stabilizer_order;
  j["vertex_orbits"] = rep.vertex_orbit_count;
  j["edge_orbits"] = rep.edge_orbit_count;
  j["arc_orbits"] = rep.arc_orbit_count;
  return j;
}

int cmd_construct(const std::string& family, int r, int s, const std::string& group,
                  const std::string& orient, const std::string& out_path) {
  og4::FamilySpec spec;
  spec.family = og4::family_from_string(family);
  spec.r = r;
  spec.s = s;
  spec.variant = og4::variant_from_string(group);
  spec.orientation = og4::orientation_from_string(orient);
  if (spec.family == og4::Family::GammaDouble) spec.orientation = og4::Orientation::Con2a;
  const og4::OrientedPair pair = og4::build(spec);
  write_output(og4::PairDocument::from_pair(pair, spec, og4::vertex_labels(spec)).dump(),
               out_path);
  return 0;
}

int cmd_analyze(const std::string& path, bool json, const std::string& dot_path) {
  const og4::OrientedPair pair = load_pair(path);
  const og4::OG4Report rep = og4::check_og4(pair);
  if (!dot_path.empty()) write_output(og4::to_dot(pair.graph()), dot_path);
  if (json) {
    std::cout << og4_report_json(rep).dump(2) << "\n";
  } else {
    std::cout << "OG(4): " << (rep.member() ? "yes" : "no")
              << "; |G_x| = " << rep.stabilizer_order << "\n"
              << "  vertices " << pair.graph().vertex_count() << ", edges "
              << pair.graph().edge_count() << ", |G| = " << pair.group().order() << "\n"
              << "  connected=" << rep.connected << " quartic=" << rep.quartic
              << " vertex-transitive=" << rep.vertex_transitive
              << " edge-transitive=" << rep.edge_transitive << "\n"
              << "  delta-single-orbit=" << rep.delta_is_single_orbit
              << " orientation-preserved=" << rep.orientation_preserved
              << " arc-transitive=" << rep.arc_transitive << "\n";
  }
  return 0;
}

int cmd_quotients(const std::string& path, bool json, const std::string& csv_path,
                  std::size_t bound) {
  const og4::PairDocument doc = og4::PairDocument::read_file(path);
  const og4::OrientedPair pair = doc.to_pair();
  const auto rows = og4::cyclic_quotient_census(pair, bound);

  std::string family = doc.family ? og4::to_string(doc.family->family) : "";
  const int r = doc.family ? doc.family->r : 0;
  const int s = doc.family ? doc.family->s : 0;

  if (!csv_path.empty()) {
    std::string csv = "family,r,s,subgroup_id,length,oriented,maximal\n";
    for (const auto& row : rows)
      csv += family + "," + std::to_string(r) + "," + std::to_string(s) + "," +
             std::to_string(row.subgroup_id) + "," + std::to_string(row.length) + "," +
             (row.oriented ? "true" : "false") + "," + (row.maximal ? "true" : "false") + "\n";
    write_output(csv, csv_path);
  }
  if (json) {
    ordered_json j = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json rj;
      rj["subgroup_id"] = row.subgroup_id;
      rj["subgroup_order"] = row.subgroup.order();
      rj["length"] = row.length;
      rj["oriented"] = row.oriented;
      rj["maximal"] = row.maximal;
      j.push_back(std::move(rj));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::map<std::pair<int, bool>, int> distinct;
    for (const auto& row : rows) distinct[{row.length, row.oriented}]++;
    std::cout << distinct.size() << " distinct cyclic normal quotient(s), " << rows.size()
              << " subgroup row(s)\n";
    for (auto it = distinct.rbegin(); it != distinct.rend(); ++it)
      std::cout << "  C" << it->first.first << "  "
                << (it->first.second ? "oriented" : "unoriented") << "  (" << it->second
                << " subgroup" << (it->second == 1 ? "" : "s") << ")\n";
    for (const auto& row : rows)
      std::cout << "    C" << row.length << "  " << (row.oriented ? "oriented  " : "unoriented")
                << "  subgroup #" << row.subgroup_id << " of order " << row.subgroup.order()
                << (row.maximal ? "  maximal" : "") << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path, bool json, std::size_t bound, bool strict_delta) {
  const og4::OrientedPair pair = load_pair(path);
  const og4::ClassificationReport rep = og4::classify_independent(pair, bound, strict_delta);
  if (json) {
    ordered_json j;
    j["table_line"] = rep.table_line;
    j["r"] = rep.r;
    j["s"] = rep.s;
    j["params_swapped"] = rep.params_swapped;
    j["stabilizer_order"] = rep.stabilizer_order;
    j["reference"] = {{"family", og4::to_string(rep.reference.family)},
                      {"r", rep.reference.r},
                      {"s", rep.reference.s},
                      {"variant", og4::to_string(rep.reference.variant)},
                      {"orientation", og4::to_string(rep.reference.orientation)}};
    j["witness"] = rep.witness.images();
    j["reduction_order"] = rep.reduction.meet.order();
    ordered_json found = ordered_json::array();
    for (const auto& e : rep.found)
      found.push_back({{"r", e.r},
                       {"s", e.s},
                       {"n_oriented", e.n_oriented},
                       {"m_oriented", e.m_oriented},
                       {"line_hint", e.line_hint}});
    j["found"] = std::move(found);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Table 1 line " << rep.table_line << "  (r,s) = (" << rep.r << "," << rep.s
              << ")" << (rep.params_swapped ? "  [parameters transposed]" : "") << "\n"
              << "  reference: " << og4::to_string(rep.reference.family) << "("
              << rep.reference.r << "," << rep.reference.s << ") group "
              << og4::to_string(rep.reference.variant) << " orientation "
              << og4::to_string(rep.reference.orientation) << "\n"
              << "  reduction subgroup order " << rep.reduction.meet.order()
              << ", |G_x| = " << rep.stabilizer_order << "\n"
              << "  independent quotient pairs found: " << rep.found.size() << "\n";
    for (const auto& e : rep.found)
      std::cout << "    C" << e.r << (e.n_oriented ? " oriented" : " unoriented") << " + C"
                << e.s << (e.m_oriented ? " oriented" : " unoriented") << "  -> line "
                << e.line_hint << "\n";
    std::cout << "  witness:";
    for (int x : rep.witness.images()) std::cout << " " << x;
    std::cout << "\n";
  }
  return 0;
}

og4::Permutation element_from(const og4::OrientedPair& pair, int index,
                              const std::string& image_json, const char* which) {
  if (!image_json.empty()) {
    const auto arr = nlohmann::json::parse(image_json).get<std::vector<int>>();
    og4::Permutation p(arr);
    if (!pair.group().contains(p))
      throw og4::BadParam(std::string(which) + " image array is not a group element");
    return p;
  }
  const auto& gens = pair.group().generators();
  if (index < 0 || index >= static_cast<int>(gens.size()))
    throw og4::BadParam(std::string(which) + " generator index out of range");
  return gens[index];
}

int cmd_meta(const std::string& path, int rho_index, int lambda_index,
             const std::string& rho_image, const std::string& lambda_image, bool json) {
  const og4::OrientedPair pair = load_pair(path);
  const og4::Permutation rho = element_from(pair, rho_index, rho_image, "rho");
  const og4::Permutation lambda = element_from(pair, lambda_index, lambda_image, "lambda");
  const og4::MetaReport rep = og4::check_weak_metacirculant(pair, rho, lambda);
  if (json) {
    ordered_json j;
    j["is_weak"] = rep.is_weak;
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["r_exp"] = rep.r_exp;
    j["is_metacirculant"] = rep.is_metacirculant;
    j["rho_cycles_uniform"] = rep.rho_cycles_uniform;
    j["exponent_found"] = rep.exponent_found;
    j["lambda_transitive_on_cells"] = rep.lambda_transitive_on_cells;
    j["h_vertex_transitive"] = rep.h_vertex_transitive;
    j["lambda_power_fixes_vertex"] = rep.lambda_power_fixes_vertex;
    j["rho_quotient"] = og4::to_string(rep.rho_quotient);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "weak metacirculant: " << (rep.is_weak ? "yes" : "no") << "  (m,n) = ("
              << rep.m << "," << rep.n << ")  exponent " << rep.r_exp << "\n"
              << "metacirculant: " << (rep.is_metacirculant ? "yes" : "no") << "\n"
              << "rho-quotient: " << og4::to_string(rep.rho_quotient) << "\n"
              << "H vertex-transitive: " << (rep.h_vertex_transitive ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_verify(std::vector<std::string> suites) {
  if (suites.empty()) suites = og4::verify_suite_names();
  for (const auto& name : suites)
    if (!og4::is_verify_suite(name)) {
      std::cerr << "unknown suite: " << name << "\n";
      return 2;
    }
  bool all_pass = true;
  for (const auto& name : suites) {
    const og4::CriterionResult r = og4::run_verify_suite(name);
    all_pass = all_pass && r.pass;
    std::cout << "[" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << " ("
              << static_cast<long>(r.ms) << " ms)";
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << "\n" << std::flush;
  }
  return all_pass ? 0 : 1;
}

int cmd_export(const std::string& path, const std::string& dot_path) {
  const og4::PairDocument doc = og4::PairDocument::read_file(path);
  const og4::OrientedPair pair = doc.to_pair();
  const std::vector<std::string>* labels = doc.labels.empty() ? nullptr : &doc.labels;
  write_output(og4::to_dot(pair.graph(), labels), dot_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented 4-valent graph--group pair toolkit"};
  app.require_subcommand(1);

  std::string family, group = "G", orient = "con1", out_path, path;
  std::string csv_path, dot_path, rho_image, lambda_image;
  int r = 0, s = 0, rho_index = 0, lambda_index = 1;
  bool json = false, strict_delta = false;
  std::size_t bound = og4::kDefaultOrderBound;
  std::vector<std::string> suites;

  auto* construct = app.add_subcommand("construct", "build a family pair document");
  construct->add_option("family", family, "lex | gamma | gamma-plus | double")->required();
  construct->add_option("r", r, "first parameter")->required();
  construct->add_option("s", s, "second parameter (not used by lex)");
  construct->add_option("--group", group, "G | H");
  construct->add_option("--orient", orient, "con1 | con2c | con2a");
  construct->add_option("-o,--out", out_path, "output path (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "membership report for a pair document");
  analyze->add_option("pair", path, "pair document path")->required();
  analyze->add_flag("--json", json);
  analyze->add_option("--dot", dot_path, "also write a DOT rendering");

  auto* quotients = app.add_subcommand("quotients", "cyclic normal quotient census");
  quotients->add_option("pair", path)->required();
  quotients->add_flag("--json", json);
  quotients->add_option("--csv", csv_path, "write census rows as CSV");
  quotients->add_option("--bound", bound, "group order bound for enumeration");

  auto* classify = app.add_subcommand("classify", "match independent cyclic quotients");
  classify->add_option("pair", path)->required();
  classify->add_flag("--json", json);
  classify->add_option("--bound", bound);
  classify->add_flag("--strict-delta", strict_delta, "witness must match the arc set exactly");

  auto* meta = app.add_subcommand("meta", "weak metacirculant check for (rho, lambda)");
  meta->add_option("pair", path)->required();
  meta->add_option("rho", rho_index, "generator index for rho");
  meta->add_option("lambda", lambda_index, "generator index for lambda");
  meta->add_option("--rho-image", rho_image, "explicit image array for rho (JSON)");
  meta->add_option("--lambda-image", lambda_image, "explicit image array for lambda (JSON)");
  meta->add_flag("--json", json);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suites, "suite names (default: all)");

  auto* exp = app.add_subcommand("export", "write a DOT rendering of a pair document");
  exp->add_option("pair", path)->required();
  exp->add_option("--dot", dot_path, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(family, r, s, group, orient, out_path);
    if (analyze->parsed()) return cmd_analyze(path, json, dot_path);
    if (quotients->parsed()) return cmd_quotients(path, json, csv_path, bound);
    if (classify->parsed()) return cmd_classify(path, json, bound, strict_delta);
    if (meta->parsed()) return cmd_meta(path, rho_index, lambda_index, rho_image, lambda_image, json);
    if (verify->parsed()) return cmd_verify(suites);
    if (exp->parsed()) return cmd_export(path, dot_path);
  } catch (const og4::BadParam& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const og4::Disconnected& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const og4::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const og4::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const og4::NoMatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const og4::TheoremViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
