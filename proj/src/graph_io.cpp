#include "json.hpp"

#include "crystalvor/error.hpp"
#include "crystalvor/graph.hpp"

namespace crystalvor {

MultiGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Malformed, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc["vertices"].is_array() || !doc["edges"].is_array())
    throw Error(ErrorKind::Malformed, "expected an object with 'vertices' and 'edges' arrays");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(ErrorKind::Malformed, "vertex labels must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object()) throw Error(ErrorKind::Malformed, "edges must be objects");
    for (const char* key : {"id", "source", "target"})
      if (!e.contains(key) || !e[key].is_string())
        throw Error(ErrorKind::Malformed, std::string("edge field '") + key + "' must be a string");
    edges.push_back({e["id"].get<std::string>(), e["source"].get<std::string>(),
                     e["target"].get<std::string>()});
  }
  return MultiGraph::create(std::move(vertices), std::move(edges));
}

std::string graph_to_json(const MultiGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_labels();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    doc["edges"].push_back(
        {{"id", e.id}, {"source", g.vertex_label(e.source)}, {"target", g.vertex_label(e.target)}});
  return doc.dump();
}

}  // namespace crystalvor
