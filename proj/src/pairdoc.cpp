#include "og4/pairdoc.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "og4/errors.hpp"

namespace og4 {

using ordered_json = nlohmann::ordered_json;

PairDocument PairDocument::from_pair(const OrientedPair& pair, std::optional<FamilySpec> family,
                                     std::vector<std::string> labels) {
  PairDocument doc;
  doc.n = pair.graph().vertex_count();
  for (const auto& g : pair.group().generators()) doc.generators.push_back(g.images());
  doc.arcs = pair.graph().arcs();
  doc.family = std::move(family);
  doc.labels = std::move(labels);
  return doc;
}

OrientedPair PairDocument::to_pair(DeltaPolicy policy) const {
  std::vector<Permutation> gens;
  for (const auto& images : generators) {
    if (static_cast<int>(images.size()) != n)
      throw ParseError("generator image table length does not match n");
    gens.emplace_back(images);
  }
  OrientedGraph g = OrientedGraph::from_arcs(n, arcs);
  return OrientedPair::make(std::move(g), PermGroup::from_generators(n, std::move(gens)),
                            policy);
}

std::string PairDocument::dump() const {
  ordered_json j;
  j["version"] = version;
  j["n"] = n;
  j["generators"] = generators;
  ordered_json arcs_json = ordered_json::array();
  for (auto [u, v] : arcs) arcs_json.push_back({u, v});
  j["arcs"] = std::move(arcs_json);
  if (family) {
    ordered_json f;
    f["family"] = to_string(family->family);
    f["r"] = family->r;
    if (family->family != Family::LexCycle) {
      f["s"] = family->s;
      f["variant"] = to_string(family->variant);
      f["orientation"] = to_string(family->orientation);
    }
    j["family"] = std::move(f);
  }
  if (!labels.empty()) j["labels"] = labels;
  return j.dump(2) + "\n";
}

PairDocument PairDocument::parse(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("pair document: ") + e.what());
  }
  try {
    PairDocument doc;
    doc.version = j.at("version").get<int>();
    if (doc.version != 1) throw ParseError("unsupported pair document version");
    doc.n = j.at("n").get<int>();
    doc.generators = j.at("generators").get<std::vector<std::vector<int>>>();
    for (const auto& arc : j.at("arcs")) {
      if (!arc.is_array() || arc.size() != 2) throw ParseError("arc is not a pair");
      doc.arcs.emplace_back(arc[0].get<int>(), arc[1].get<int>());
    }
    if (j.contains("family")) {
      const auto& f = j.at("family");
      FamilySpec spec;
      spec.family = family_from_string(f.at("family").get<std::string>());
      spec.r = f.at("r").get<int>();
      if (f.contains("s")) spec.s = f.at("s").get<int>();
      if (f.contains("variant")) spec.variant = variant_from_string(f.at("variant"));
      if (f.contains("orientation"))
        spec.orientation = orientation_from_string(f.at("orientation"));
      doc.family = spec;
    }
    if (j.contains("labels")) doc.labels = j.at("labels").get<std::vector<std::string>>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("pair document: ") + e.what());
  }
}

PairDocument PairDocument::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void PairDocument::write_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << dump();
}

}  // namespace og4
