#include "crystalvor/examples.hpp"

#include "crystalvor/error.hpp"

namespace crystalvor {

namespace {

MultiGraph make(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  return MultiGraph::create(std::move(vertices), std::move(edges));
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"graphene", "diamond", "k4", "lonsdaleite"};
  return names;
}

Chain chain_from_ids(const MultiGraph& g, const std::vector<std::pair<std::string, long>>& terms) {
  Chain c(g.edge_count());
  for (const auto& [id, k] : terms) {
    auto j = g.find_edge(id);
    if (!j) throw Error(ErrorKind::Malformed, "unknown edge " + id);
    c[*j] += k;
  }
  return c;
}

Example load_example(std::string_view name) {
  if (name == "graphene") {
    return {"graphene",
            make({"v0", "v1"}, {{"e1", "v0", "v1"}, {"e2", "v0", "v1"}, {"e3", "v1", "v0"}}),
            0, {}, std::nullopt, {}};
  }
  if (name == "diamond") {
    return {"diamond",
            make({"v0", "v1"},
                 {{"e1", "v0", "v1"}, {"e2", "v0", "v1"}, {"e3", "v0", "v1"}, {"e4", "v1", "v0"}}),
            0, {}, std::nullopt, {}};
  }
  if (name == "k4") {
    return {"k4",
            make({"v0", "v1", "v2", "v3"}, {{"e1", "v3", "v1"},
                                            {"e2", "v3", "v2"},
                                            {"e3", "v0", "v3"},
                                            {"f1", "v2", "v0"},
                                            {"f2", "v0", "v1"},
                                            {"f3", "v1", "v2"}}),
            0, {}, std::nullopt, {}};
  }
  if (name == "lonsdaleite") {
    Example ex{"lonsdaleite",
               make({"v0", "v1", "v2", "v3"}, {{"l1", "v0", "v1"},
                                               {"l2", "v2", "v3"},
                                               {"m1", "v1", "v2"},
                                               {"m2", "v1", "v2"},
                                               {"m3", "v2", "v1"},
                                               {"n1", "v0", "v3"},
                                               {"n2", "v0", "v3"},
                                               {"n3", "v3", "v0"}}),
               0, {}, std::nullopt, {}};
    ex.vanishing = {chain_from_ids(ex.graph, {{"m1", 1}, {"m3", 1}, {"n1", -1}, {"n3", -1}}),
                    chain_from_ids(ex.graph, {{"m2", 1}, {"m3", 1}, {"n2", -1}, {"n3", -1}})};
    // q1 + q2 + 3 q3 with q1 = -m2' + n3', q2 = -m1' + n3', q3 = q1 + q2 - m3'.
    ex.center_chain = chain_from_ids(ex.graph, {{"m1", -4}, {"m2", -4}, {"m3", -3}, {"n3", 8}});
    ex.named_chains = {
        {"q1", chain_from_ids(ex.graph, {{"m2", -1}, {"n3", 1}})},
        {"q2", chain_from_ids(ex.graph, {{"m1", -1}, {"n3", 1}})},
        {"q3", chain_from_ids(ex.graph, {{"m1", -1}, {"m2", -1}, {"m3", -1}, {"n3", 2}})}};
    ex.quoted_image_cycles = {{2, 2, 0}, {1, 2, 0}, {0, 0, 4}};
    return ex;
  }
  throw Error(ErrorKind::UnknownExample, "unknown example '" + std::string(name) + "'");
}

}  // namespace crystalvor
