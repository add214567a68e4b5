#include "crystalvor/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "crystalvor/error.hpp"
#include "crystalvor/examples.hpp"
#include "crystalvor/io.hpp"

namespace crystalvor {

namespace {

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string example;
  std::string base_vertex;
  std::string orient = "auto";
  std::string out_path;
  std::string format = "json";
  std::string window;
  std::size_t max_trails = default_trail_guard;
  std::size_t max_orientations = default_orientation_guard;
  std::string vanishing;
  bool search_centers = false;
};

struct Source {
  MultiGraph graph;
  std::optional<Example> example;
};

Source load_source(const RunConfig& c) {
  if (c.graph_path.empty() == c.example.empty())
    throw Error(ErrorKind::Usage, "give exactly one of --graph and --example");
  if (!c.example.empty()) {
    Example ex = load_example(c.example);
    MultiGraph g = ex.graph;
    return {std::move(g), std::move(ex)};
  }
  std::ifstream in(c.graph_path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IO, "cannot read " + c.graph_path);
  std::stringstream text;
  text << in.rdbuf();
  return {parse_graph(text.str()), std::nullopt};
}

std::vector<std::pair<long, long>> parse_window(const std::string& text, std::size_t dim) {
  std::vector<std::pair<long, long>> box;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        const long v = std::stol(part);
        box.emplace_back(v, v);
      } else {
        box.emplace_back(std::stol(part.substr(0, dots)), std::stol(part.substr(dots + 2)));
      }
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "bad window range '" + part + "'");
    }
  }
  if (box.size() == 1) box.assign(dim, box.front());
  if (box.size() != dim)
    throw Error(ErrorKind::Usage, "window needs 1 or " + std::to_string(dim) + " ranges");
  return box;
}

std::vector<IntegerVector> parse_vanishing(const std::string& text) {
  std::vector<IntegerVector> out;
  std::stringstream ss(text);
  std::string generator;
  while (std::getline(ss, generator, ';')) {
    IntegerVector v;
    std::stringstream gs(generator);
    std::string x;
    while (std::getline(gs, x, ',')) {
      try {
        v.emplace_back(x);
      } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, "bad integer '" + x + "' in --vanishing");
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

Json canonical_json(const MultiGraph& g) {
  const auto k = canonical_divisors(g);
  Json plus = Json::object(), minus = Json::object(), total = Json::object();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    plus[g.vertex_label(v)] = k.k_plus[v];
    minus[g.vertex_label(v)] = k.k_minus[v];
    total[g.vertex_label(v)] = k.k[v];
  }
  return {{"K_plus", plus},
          {"K_minus", minus},
          {"K", total},
          {"degree_K_plus", k.degree_plus()},
          {"degree_K_minus", k.degree_minus()},
          {"degree_K", k.degree()}};
}

Json choice_json(const MultiGraph& g, const BaseVertexChoice& c) {
  Json j;
  j["kind"] = c.kind == WitnessKind::TwoCircuits ? "two_circuits" : "three_paths";
  j["v_star"] = g.vertex_label(c.v_star);
  if (c.kind == WitnessKind::TwoCircuits) {
    j["circuits"] = Json::array();
    for (const auto& w : c.circuits) j["circuits"].push_back(walk_json(g, w));
  } else {
    j["v_star_star"] = g.vertex_label(c.v_star_star);
    j["p1"] = walk_json(g, c.p1);
    j["p2"] = walk_json(g, c.p2);
    j["p3"] = walk_json(g, c.p3);
  }
  return j;
}

class Runner {
 public:
  Runner(RunConfig config, std::ostream& out) : c_(std::move(config)), out_(out) {}

  int execute() {
    Source src = load_source(c_);
    const MultiGraph& g = src.graph;
    if (c_.command == "info") return emit(info(g));
    if (c_.command == "bridges") {
      Json ids = Json::array();
      for (auto j : find_bridges(g)) ids.push_back(g.edge(j).id);
      return emit(Json{{"bridges", ids}});
    }
    if (c_.command == "orient") {
      const Orientation o = strongly_connected_orientation(g);
      return emit(Json{{"orientation", orientation_json(g, o)}, {"strongly_connected", true}});
    }
    if (c_.command == "cycles") return emit(cycles(g));
    if (c_.command == "cell") return cell(g);
    if (c_.command == "crystal") return crystal(src);
    if (c_.command == "verify") return verify(g);
    if (c_.command == "subcover") return subcover(src);
    if (c_.command == "export") return export_geometry(src);
    throw Error(ErrorKind::Usage, "unknown command " + c_.command);
  }

 private:
  void require_format(std::initializer_list<const char*> allowed) const {
    for (const char* f : allowed)
      if (c_.format == f) return;
    throw Error(ErrorKind::Usage, "format " + c_.format + " is not available for " + c_.command);
  }

  int emit(const Json& j) { return write(dump(j)); }

  int write(const std::string& text) {
    if (c_.out_path.empty()) {
      out_ << text;
    } else {
      write_atomic(c_.out_path, text);
    }
    return 0;
  }

  PipelineOptions pipeline(const Source& src, bool use_preset_base) const {
    PipelineOptions o;
    o.orient = c_.orient == "stored" ? OrientMode::Stored : OrientMode::Auto;
    o.orientation_guard = c_.max_orientations;
    if (!c_.base_vertex.empty()) {
      o.base_vertex = c_.base_vertex;
    } else if (use_preset_base && src.example) {
      o.base_vertex = src.example->graph.vertex_label(src.example->base);
    }
    return o;
  }

  MultiGraph oriented(const MultiGraph& g) const {
    if (c_.orient == "stored") return g;
    return reorient(g, strongly_connected_orientation(g));
  }

  Json info(const MultiGraph& g) {
    require_format({"json"});
    Json j;
    j["graph"] = graph_json(g);
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    j["genus"] = g.genus();
    Json bridges = Json::array();
    for (auto e : find_bridges(g)) bridges.push_back(g.edge(e).id);
    j["bridges"] = bridges;
    const bool strong = is_strongly_connected(g, Orientation::stored(g));
    j["strongly_connected"] = strong;
    j["canonical_divisors"] = canonical_json(g);
    j["cycle_basis"] = basis_json(g, cycle_basis(g));
    if (strong && g.genus() >= 2) j["base_vertex_choice"] = choice_json(g, choose_base_vertex(g));
    return j;
  }

  Json cycles(const MultiGraph& g) {
    require_format({"json"});
    Json list = Json::array();
    for (const auto& c : enumerate_elementary_cycles(g)) list.push_back(cycle_json(g, c));
    Json j;
    j["count"] = list.size();
    j["cycles"] = std::move(list);
    if (find_bridges(g).empty())
      j["strong_orientations"] = enumerate_strong_orientations(g, c_.max_orientations).size();
    return j;
  }

  int cell(const MultiGraph& input) {
    require_format({"json", "obj"});
    const MultiGraph g = oriented(input);
    const VoronoiCell cell = build_cell(g, c_.max_orientations);
    if (c_.format == "json") return emit(cell_json(g, cell));
    std::vector<Chain> points, normals;
    std::vector<Rational> offsets;
    for (const auto& v : cell.vertices) points.push_back(v.point);
    for (const auto& h : cell.halfspaces) {
      normals.push_back(h.normal.chain);
      offsets.emplace_back(h.offset);
    }
    return write(polytope_obj(orthogonal_frame(cell.basis.cycles), points, normals, offsets, {}));
  }

  std::vector<Segment> crystal_segments(const HiddenTilingSetup& s) const {
    if (!c_.window.empty())
      return window(s.model, s.graph, parse_window(c_.window, s.cell.dim));
    return crystal_in_cell(s.graph, s.cell, s.base, c_.max_trails);
  }

  int crystal(const Source& src) {
    require_format({"json", "obj", "csv"});
    const HiddenTilingSetup s = prepare_hidden_tiling(src.graph, pipeline(src, true));
    const auto segments = crystal_segments(s);
    const Frame frame = orthogonal_frame(s.cell.basis.cycles);
    if (c_.format == "csv") return write(segments_csv(s.graph, frame, segments));
    if (c_.format == "obj") {
      if (frame.axes.size() > 3) throw Error(ErrorKind::Usage, "OBJ export needs dimension at most 3");
      return write(segments_obj(frame, segments));
    }
    Json j;
    j["graph"] = graph_json(s.graph);
    j["orientation"] = orientation_json(s.graph, s.orientation);
    j["base_vertex"] = s.graph.vertex_label(s.base);
    Json offsets = Json::object(), edges = Json::object();
    for (VertexIndex v = 0; v < s.graph.vertex_count(); ++v)
      offsets[s.graph.vertex_label(v)] = dense_chain_json(s.graph, s.model.offsets[v]);
    for (EdgeIndex e = 0; e < s.graph.edge_count(); ++e)
      edges[s.graph.edge(e).id] = dense_chain_json(s.graph, s.model.edge_vectors[e]);
    j["offsets"] = offsets;
    j["edge_vectors"] = edges;
    j["period"] = basis_json(s.graph, s.cell.basis)["cycles"];
    j["segments"] = Json::array();
    for (const auto& seg : segments) j["segments"].push_back(segment_json(s.graph, seg));
    return emit(j);
  }

  int verify(const MultiGraph& g) {
    require_format({"json"});
    Source src{g, std::nullopt};
    const HiddenTilingSetup s = prepare_hidden_tiling(g, pipeline(src, false));
    const PeriodicTiling tiling = cell_tiling(s.cell);
    VerificationReport r = verify_segments(tiling, fundamental_segments(s.model, s.graph));
    r.base_vertex = s.graph.vertex_label(s.base);
    emit(report_json(s.graph, tiling, r));
    return r.ok ? 0 : 1;
  }

  struct SubcoverData {
    CycleBasis basis;
    std::vector<Chain> generators;
    Subspace space;
    LatticeTriple triple;
    Chain center;
    VertexIndex base = 0;
  };

  SubcoverData subcover_data(const Source& src) const {
    const MultiGraph& g = src.graph;
    SubcoverData d;
    d.basis = cycle_basis(g);
    if (!c_.vanishing.empty()) {
      d.generators = generators_from_coordinates(d.basis, parse_vanishing(c_.vanishing));
    } else if (src.example) {
      d.generators = src.example->vanishing;
    }
    d.space = complement(d.basis, d.generators);
    d.triple = lattice_triple(d.basis, d.space);
    if (src.example && src.example->center_chain && c_.vanishing.empty()) {
      d.center = project_prime(*src.example->center_chain, d.space);
    } else {
      Chain half(g.edge_count());
      for (EdgeIndex j = 0; j < g.edge_count(); ++j) half[j] = Rational(1, 2);
      d.center = project_prime(half, d.space);
    }
    if (!c_.base_vertex.empty()) {
      d.base = g.vertex_or_throw(c_.base_vertex);
    } else if (src.example) {
      d.base = src.example->base;
    } else if (is_strongly_connected(g, Orientation::stored(g)) && g.genus() >= 2) {
      d.base = choose_base_vertex(g).v_star;
    }
    return d;
  }

  int subcover(const Source& src) {
    require_format({"json", "obj"});
    const MultiGraph& g = src.graph;
    const SubcoverData d = subcover_data(src);
    const LatticeCell cell = lattice_voronoi_cell(d.triple.image_cycles, d.center);
    const PeriodicTiling tiling = lattice_cell_tiling(cell);
    const CrystalModel model = projected_crystal(g, d.basis, d.base, d.space, d.triple);
    VerificationReport report;
    if (d.space.dimension() < 2)
      throw Error(ErrorKind::GenusTooSmall, "dim E' = " + std::to_string(d.space.dimension()) + "; need at least 2");
    report = verify_segments(tiling, fundamental_segments(model, g));
    report.base_vertex = g.vertex_label(d.base);
    if (c_.format == "obj") {
      write(polytope_obj(orthogonal_frame(d.space.basis), cell.vertices, cell.relevant, cell.offsets,
                         pieces_in_cell(tiling, report)));
      return report.ok ? 0 : 1;
    }
    Json j;
    j["dimension"] = d.space.dimension();
    j["vanishing"] = Json::array();
    for (const auto& l : d.generators) j["vanishing"].push_back(sparse_chain_json(g, l));
    j["basis"] = Json::array();
    for (const auto& v : d.space.basis) j["basis"].push_back(sparse_chain_json(g, v));
    auto chains = [&](const std::vector<Chain>& vs) {
      Json a = Json::array();
      for (const auto& v : vs) a.push_back(sparse_chain_json(g, v));
      return a;
    };
    j["lattices"] = {{"intersection", chains(d.triple.intersection)},
                     {"image_cycles", chains(d.triple.image_cycles)},
                     {"image_chains", chains(d.triple.image_chains)},
                     {"gram_intersection", matrix_json(d.triple.gram_intersection)},
                     {"gram_image_cycles", matrix_json(d.triple.gram_image_cycles)},
                     {"gram_image_chains", matrix_json(d.triple.gram_image_chains)},
                     {"index_lower", d.triple.index_lower.get_str()},
                     {"index_upper", d.triple.index_upper.get_str()},
                     {"dual", d.triple.dual}};
    if (src.example && !src.example->named_chains.empty() && c_.vanishing.empty())
      j["named_coordinates"] = named_coordinates(g, *src.example, d);
    Json edges = Json::object();
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) edges[g.edge(e).id] = dense_chain_json(g, model.edge_vectors[e]);
    j["projected_edges"] = edges;
    j["cell"] = lattice_cell_json(g, cell);
    const auto bij = quotient_bijectivity(g, d.generators);
    j["quotient"] = {{"bijective", bij.bijective},
                     {"vertex_orbits", bij.vertex_orbits},
                     {"edge_orbits", bij.edge_orbits},
                     {"vertices", bij.vertices},
                     {"edges", bij.edges}};
    j["report"] = report_json(g, tiling, report);
    if (c_.search_centers) {
      Json centers = Json::array();
      for (const auto& x : search_centers(g, d.generators, d.base)) centers.push_back(dense_chain_json(g, x));
      j["heuristic_center_search"] = centers;
    }
    emit(j);
    return report.ok ? 0 : 1;
  }

  static Json named_coordinates(const MultiGraph& g, const Example& ex, const SubcoverData& d) {
    std::vector<Chain> frame;
    Json names = Json::array(), vectors = Json::object();
    for (const auto& [name, chain] : ex.named_chains) {
      frame.push_back(project_prime(chain, d.space));
      names.push_back(name);
      vectors[name] = dense_chain_json(g, frame.back());
    }
    auto coords = [&](const std::vector<Chain>& vs) {
      Json a = Json::array();
      for (const auto& v : vs) {
        Json row = Json::array();
        auto c = span_coordinates(v, frame);
        if (!c) throw Error(ErrorKind::Malformed, "named vectors do not span E'");
        for (const auto& x : *c) row.push_back(rational_json(x));
        a.push_back(row);
      }
      return a;
    };
    Json out = {{"names", names},
                {"vectors", vectors},
                {"intersection", coords(hermite_in(frame, d.triple.intersection))},
                {"image_cycles", coords(hermite_in(frame, d.triple.image_cycles))},
                {"image_chains", coords(hermite_in(frame, d.triple.image_chains))},
                {"center", coords({d.center})[0]}};
    if (!ex.quoted_image_cycles.empty()) {
      std::vector<Chain> quoted;
      Json rows = Json::array();
      for (const auto& row : ex.quoted_image_cycles) {
        Chain c(g.edge_count());
        Json r = Json::array();
        for (std::size_t k = 0; k < row.size() && k < frame.size(); ++k) {
          c += Rational(row[k]) * frame[k];
          r.push_back(row[k].get_str());
        }
        quoted.push_back(std::move(c));
        rows.push_back(r);
      }
      out["quoted_image_cycles"] = {{"basis", rows},
                                    {"agrees", same_lattice(quoted, d.triple.image_cycles)}};
    }
    return out;
  }

  static bool same_lattice(const std::vector<Chain>& a, const std::vector<Chain>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& v : a)
      if (!lattice_coordinates(v, b)) return false;
    for (const auto& v : b)
      if (!lattice_coordinates(v, a)) return false;
    return true;
  }

  // The same lattice with a Hermite basis relative to the named vectors.
  static std::vector<Chain> hermite_in(const std::vector<Chain>& frame, const std::vector<Chain>& lattice) {
    Subspace named{{}, frame, gram_of(frame), *inverse(gram_of(frame))};
    return image_lattice_basis(lattice, named);
  }

  static std::vector<Segment> pieces_in_cell(const PeriodicTiling& tiling, const VerificationReport& r) {
    std::vector<Segment> out;
    for (const auto& p : r.segments) {
      const Chain h = tiling.lattice_vector(p.translate);
      out.push_back({p.a - h, p.b - h, p.edge});
    }
    return out;
  }

  int export_geometry(const Source& src) {
    require_format({"json", "obj", "csv"});
    const HiddenTilingSetup s = prepare_hidden_tiling(src.graph, pipeline(src, true));
    const auto segments = crystal_segments(s);
    const Frame frame = orthogonal_frame(s.cell.basis.cycles);
    if (c_.format == "csv") return write(segments_csv(s.graph, frame, segments));
    if (c_.format == "json") {
      Json j;
      j["cell"] = cell_json(s.graph, s.cell);
      j["segments"] = Json::array();
      for (const auto& seg : segments) j["segments"].push_back(segment_json(s.graph, seg));
      return emit(j);
    }
    std::vector<Chain> points, normals;
    std::vector<Rational> offsets;
    for (const auto& v : s.cell.vertices) points.push_back(v.point);
    for (const auto& h : s.cell.halfspaces) {
      normals.push_back(h.normal.chain);
      offsets.emplace_back(h.offset);
    }
    return write(polytope_obj(frame, points, normals, offsets, segments));
  }

  RunConfig c_;
  std::ostream& out_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Voronoi tilings hidden in crystals: exact computations on multigraphs", "crystalvor"};
  app.add_option("command", config.command, "info | bridges | orient | cycles | cell | crystal | verify | subcover | export")
      ->required()
      ->check(CLI::IsMember({"info", "bridges", "orient", "cycles", "cell", "crystal", "verify", "subcover", "export"}));
  app.add_option("--graph", config.graph_path, "graph file (JSON)");
  app.add_option("--example", config.example, "bundled example: graphene | diamond | k4 | lonsdaleite");
  app.add_option("--base-vertex", config.base_vertex, "base vertex label");
  app.add_option("--orient", config.orient, "stored | auto")->check(CLI::IsMember({"stored", "auto"}));
  app.add_option("--out", config.out_path, "output file (default stdout)");
  app.add_option("--format", config.format, "json | obj | csv")->check(CLI::IsMember({"json", "obj", "csv"}));
  app.add_option("--window", config.window, "period-coordinate ranges a..b,c..d (one range applies to all)");
  app.add_option("--max-trails", config.max_trails, "directed trail guard");
  app.add_option("--max-orientations", config.max_orientations, "orientation scan guard");
  app.add_option("--vanishing", config.vanishing,
                 "vanishing subgroup generators in cycle-basis coordinates, e.g. 1,0,-1;0,1,1");
  app.add_flag("--search-centers", config.search_centers, "heuristic search over half-lattice centers");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    return Runner(std::move(config), out).execute();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace crystalvor
