#include "edom/analysis.hpp"

namespace edom {

std::shared_ptr<const Analysis> analyze(Tree t, std::optional<Vertex> root) {
  auto a = std::make_shared<Analysis>();
  a->diameter = diameter(t);
  a->rooted = root_at(std::move(t), root);
  auto [edn, trace] = compute_edn(a->rooted);
  a->edn = edn;
  a->trace = std::move(trace);
  a->neocol = build_nice_neocol(a->rooted, a->trace);
  a->classes = classify_vertices(a->neocol, a->rooted);
  return a;
}

Json neocol_to_json(const Analysis& a) {
  const NeoColonization& nc = a.neocol;
  Json j;
  j["root"] = a.rooted.root();
  j["edn"] = a.edn;
  Json parts = Json::array();
  for (PartId p = 0; p < nc.part_count(); ++p) {
    Json pj;
    pj["id"] = p;
    pj["vertices"] = std::vector<Vertex>(nc.part(p).begin(), nc.part(p).end());
    pj["top"] = nc.top(p);
    pj["weight"] = nc.weight(p);
    parts.push_back(std::move(pj));
  }
  j["parts"] = std::move(parts);
  Json classes = Json::array();
  for (Vertex v = 0; v < a.rooted.size(); ++v) classes.push_back(std::string(1, class_letter(a.classes[v])));
  j["classes"] = std::move(classes);
  return j;
}

}  // namespace edom
