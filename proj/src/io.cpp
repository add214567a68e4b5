#include "crystalvor/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "crystalvor/error.hpp"

namespace crystalvor {

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::Malformed, "expected a rational");
}

Json dense_chain_json(const MultiGraph& g, const Chain& c) {
  Json out = Json::object();
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) out[g.edge(j).id] = rational_json(c[j]);
  return out;
}

Json sparse_chain_json(const MultiGraph& g, const Chain& c) {
  Json out = Json::object();
  for (EdgeIndex j = 0; j < g.edge_count(); ++j)
    if (sgn(c[j]) != 0) out[g.edge(j).id] = rational_json(c[j]);
  return out;
}

Chain chain_from_json(const MultiGraph& g, const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Malformed, "expected an edge-coefficient map");
  Chain c(g.edge_count());
  for (const auto& [id, value] : j.items()) {
    auto e = g.find_edge(id);
    if (!e) throw Error(ErrorKind::Malformed, "unknown edge " + id);
    c[*e] = rational_from_json(value);
  }
  return c;
}

Json integer_vector_json(const IntegerVector& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) {
      out.push_back(x.get_si());
    } else {
      out.push_back(x.get_str());
    }
  }
  return out;
}

Json graph_json(const MultiGraph& g) {
  Json out;
  out["vertices"] = g.vertex_labels();
  out["edges"] = Json::array();
  for (const auto& e : g.edges())
    out["edges"].push_back(
        {{"id", e.id}, {"source", g.vertex_label(e.source)}, {"target", g.vertex_label(e.target)}});
  return out;
}

MultiGraph graph_from_json(const Json& j) { return parse_graph(j.dump()); }

namespace {

Json ids(const MultiGraph& g, const std::vector<EdgeIndex>& edges) {
  Json out = Json::array();
  for (auto j : edges) out.push_back(g.edge(j).id);
  return out;
}

std::vector<EdgeIndex> ids_from_json(const MultiGraph& g, const Json& j) {
  std::vector<EdgeIndex> out;
  for (const auto& id : j) {
    auto e = g.find_edge(id.get<std::string>());
    if (!e) throw Error(ErrorKind::Malformed, "unknown edge " + id.get<std::string>());
    out.push_back(*e);
  }
  return out;
}

}  // namespace

Json cycle_json(const MultiGraph& g, const ElementaryCycle& c) {
  return {{"cycle", sparse_chain_json(g, c.chain)},
          {"plus", ids(g, c.plus)},
          {"zero", ids(g, c.zero)},
          {"minus", ids(g, c.minus)}};
}

Json orientation_json(const MultiGraph& g, const Orientation& o) {
  Json out = Json::object();
  for (EdgeIndex j = 0; j < g.edge_count(); ++j) out[g.edge(j).id] = o.signs[j];
  return out;
}

Json walk_json(const MultiGraph& g, const Walk& w) {
  Json steps = Json::array();
  for (const auto& s : w.steps) steps.push_back({{"edge", g.edge(s.edge).id}, {"sign", s.sign}});
  return {{"start", g.vertex_label(w.start)}, {"steps", steps}};
}

Json basis_json(const MultiGraph& g, const CycleBasis& b) {
  Json cycles = Json::array();
  for (const auto& c : b.cycles) cycles.push_back(sparse_chain_json(g, c));
  return {{"tree", ids(g, b.tree)}, {"cycles", cycles}, {"gram", matrix_json(b.gram)}};
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_json(x));
    out.push_back(r);
  }
  return out;
}

Json cell_json(const MultiGraph& g, const VoronoiCell& cell) {
  Json out;
  out["graph"] = graph_json(g);
  out["genus"] = cell.dim;
  out["center"] = dense_chain_json(g, cell.center);
  out["lattice_basis"] = Json::array();
  for (const auto& c : cell.basis.cycles) out["lattice_basis"].push_back(sparse_chain_json(g, c));
  out["halfspaces"] = Json::array();
  for (const auto& h : cell.halfspaces) {
    Json j = cycle_json(g, h.normal);
    j["offset"] = h.offset;
    out["halfspaces"].push_back(std::move(j));
  }
  out["vertices"] = Json::array();
  for (const auto& v : cell.vertices)
    out["vertices"].push_back({{"point", dense_chain_json(g, v.point)},
                               {"q", ids(g, v.q_set)},
                               {"orientation", orientation_json(g, v.orientation)}});
  return out;
}

ParsedCell cell_from_json(const Json& j) {
  try {
    MultiGraph g = graph_from_json(j.at("graph"));
    VoronoiCell cell;
    cell.basis = cycle_basis(g);
    cell.dim = j.at("genus").get<std::size_t>();
    if (cell.dim != cell.basis.genus()) throw Error(ErrorKind::Malformed, "genus does not match graph");
    const auto& stored = j.at("lattice_basis");
    if (stored.size() != cell.basis.cycles.size())
      throw Error(ErrorKind::Malformed, "lattice basis does not match graph");
    for (std::size_t a = 0; a < stored.size(); ++a)
      if (!(chain_from_json(g, stored[a]) == cell.basis.cycles[a]))
        throw Error(ErrorKind::Malformed, "lattice basis does not match graph");
    cell.center = chain_from_json(g, j.at("center"));
    for (const auto& h : j.at("halfspaces")) {
      ElementaryCycle c = cycle_parts(g, chain_from_json(g, h.at("cycle")));
      if (ids_from_json(g, h.at("plus")) != c.plus || ids_from_json(g, h.at("minus")) != c.minus ||
          ids_from_json(g, h.at("zero")) != c.zero)
        throw Error(ErrorKind::Malformed, "sign classes do not match cycle");
      const long offset = h.at("offset").get<long>();
      if (offset != static_cast<long>(c.plus.size()))
        throw Error(ErrorKind::Malformed, "halfspace offset does not match cycle");
      cell.halfspaces.push_back({std::move(c), offset});
    }
    for (const auto& v : j.at("vertices")) {
      CellVertex cv;
      cv.point = chain_from_json(g, v.at("point"));
      cv.q_set = ids_from_json(g, v.at("q"));
      cv.orientation.signs.assign(g.edge_count(), 1);
      for (const auto& [id, s] : v.at("orientation").items()) {
        auto e = g.find_edge(id);
        if (!e) throw Error(ErrorKind::Malformed, "unknown edge " + id);
        cv.orientation.signs[*e] = s.get<int>();
      }
      cell.vertices.push_back(std::move(cv));
    }
    return {std::move(g), std::move(cell)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Malformed, e.what());
  }
}

bool same_cell(const VoronoiCell& a, const VoronoiCell& b) {
  if (a.dim != b.dim || !(a.center == b.center) || a.basis.cycles != b.basis.cycles) return false;
  if (a.halfspaces.size() != b.halfspaces.size() || a.vertices.size() != b.vertices.size()) return false;
  for (std::size_t k = 0; k < a.halfspaces.size(); ++k)
    if (!(a.halfspaces[k].normal.chain == b.halfspaces[k].normal.chain) ||
        a.halfspaces[k].offset != b.halfspaces[k].offset)
      return false;
  for (std::size_t k = 0; k < a.vertices.size(); ++k)
    if (!(a.vertices[k].point == b.vertices[k].point) || a.vertices[k].q_set != b.vertices[k].q_set ||
        !(a.vertices[k].orientation == b.vertices[k].orientation))
      return false;
  return true;
}

Json segment_json(const MultiGraph& g, const Segment& s) {
  return {{"a", dense_chain_json(g, s.a)}, {"b", dense_chain_json(g, s.b)}, {"edge", g.edge(s.edge).id}};
}

Json report_json(const MultiGraph& g, const PeriodicTiling& tiling, const VerificationReport& r) {
  Json out;
  out["ok"] = r.ok;
  out["genus"] = r.genus;
  out["base_vertex"] = r.base_vertex;
  out["r"] = r.r;
  out["segments"] = Json::array();
  for (const auto& p : r.segments) {
    Json j = segment_json(g, {p.a, p.b, p.edge});
    j["translate"] = integer_vector_json(p.translate);
    j["face_dimension"] = p.face_dimension;
    if (p.witness) {
      j["witness_cycle"] = sparse_chain_json(g, tiling.normals()[*p.witness]);
      j["witness_offset"] = rational_json(tiling.offsets()[*p.witness]);
    } else {
      j["violation"] = {{"reason", "piece meets the interior of a top-dimensional cell"},
                        {"midpoint", dense_chain_json(g, Rational(1, 2) * (p.a + p.b))}};
    }
    out["segments"].push_back(std::move(j));
  }
  return out;
}

Json lattice_cell_json(const MultiGraph& g, const LatticeCell& cell) {
  Json out;
  out["center"] = dense_chain_json(g, cell.center);
  out["lattice_basis"] = Json::array();
  for (const auto& v : cell.lattice_basis) out["lattice_basis"].push_back(sparse_chain_json(g, v));
  out["halfspaces"] = Json::array();
  for (std::size_t k = 0; k < cell.relevant.size(); ++k)
    out["halfspaces"].push_back(
        {{"normal", sparse_chain_json(g, cell.relevant[k])}, {"offset", rational_json(cell.offsets[k])}});
  out["vertices"] = Json::array();
  for (const auto& v : cell.vertices) out["vertices"].push_back(dense_chain_json(g, v));
  return out;
}

Frame orthogonal_frame(const std::vector<Chain>& basis) {
  Frame f;
  for (const auto& b : basis) {
    Chain v = b;
    for (const auto& w : f.axes) v -= (inner(b, w) / inner(w, w)) * w;
    if (!v.is_zero()) f.axes.push_back(std::move(v));
  }
  return f;
}

std::vector<double> frame_coordinates(const Frame& f, const Chain& x) {
  std::vector<double> out;
  for (const auto& w : f.axes) {
    const double v = inner(x, w).get_d() / std::sqrt(inner(w, w).get_d());
    out.push_back(v == 0.0 ? 0.0 : v);
  }
  return out;
}

namespace {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string vertex_line(const std::vector<double>& c) {
  std::string s = "v";
  for (std::size_t k = 0; k < 3; ++k) s += " " + format_number(k < c.size() ? c[k] : 0.0);
  return s + "\n";
}

// Orders the points of a planar convex polygon around its centroid.
std::vector<std::size_t> polygon_order(const std::vector<std::vector<double>>& pts,
                                       const std::vector<std::size_t>& idx,
                                       const std::vector<double>& normal) {
  const std::size_t d = pts[idx[0]].size();
  std::vector<double> c(d, 0.0);
  for (auto i : idx)
    for (std::size_t k = 0; k < d; ++k) c[k] += pts[i][k] / static_cast<double>(idx.size());
  std::vector<double> u(d), w(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) u[k] = pts[idx[0]][k] - c[k];
  if (d == 2) {
    w = {-u[1], u[0]};
  } else {
    w = {normal[1] * u[2] - normal[2] * u[1], normal[2] * u[0] - normal[0] * u[2],
         normal[0] * u[1] - normal[1] * u[0]};
  }
  std::vector<std::pair<double, std::size_t>> keyed;
  for (auto i : idx) {
    double x = 0, y = 0;
    for (std::size_t k = 0; k < d; ++k) {
      x += (pts[i][k] - c[k]) * u[k];
      y += (pts[i][k] - c[k]) * w[k];
    }
    double angle = i == idx[0] ? 0.0 : std::atan2(y, x);
    if (angle < 0) angle += 2 * M_PI;
    keyed.emplace_back(angle, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  for (auto& [a, i] : keyed) out.push_back(i);
  return out;
}

struct ObjPoints {
  std::map<Chain, std::size_t> index;
  std::string text;
  std::size_t add(const Frame& f, const Chain& x) {
    auto it = index.find(x);
    if (it != index.end()) return it->second;
    text += vertex_line(frame_coordinates(f, x));
    const std::size_t id = index.size() + 1;
    index.emplace(x, id);
    return id;
  }
};

std::string lines_text(ObjPoints& points, const Frame& f, const std::vector<Segment>& segments) {
  std::string lines;
  for (const auto& s : segments) {
    const std::size_t a = points.add(f, s.a), b = points.add(f, s.b);
    if (a != b) lines += "l " + std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return lines;
}

}  // namespace

std::string polytope_obj(const Frame& f, const std::vector<Chain>& vertices,
                         const std::vector<Chain>& normals, const std::vector<Rational>& offsets,
                         const std::vector<Segment>& segments) {
  const std::size_t dim = f.axes.size();
  if (dim != 2 && dim != 3)
    throw Error(ErrorKind::Usage, "OBJ export needs a 2- or 3-dimensional cell, got " + std::to_string(dim));
  ObjPoints points;
  std::vector<std::vector<double>> coords;
  for (const auto& v : vertices) {
    points.add(f, v);
    coords.push_back(frame_coordinates(f, v));
  }
  std::vector<std::vector<std::size_t>> faces;
  if (dim == 2) {
    std::vector<std::size_t> all(vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    faces.push_back(polygon_order(coords, all, {}));
  } else {
    for (std::size_t k = 0; k < normals.size(); ++k) {
      std::vector<std::size_t> on;
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (inner(normals[k], vertices[i]) == offsets[k]) on.push_back(i);
      if (on.size() < 3) continue;
      faces.push_back(polygon_order(coords, on, frame_coordinates(f, normals[k])));
    }
  }
  std::string faces_text;
  for (const auto& face : faces)
    for (std::size_t i = 1; i + 1 < face.size(); ++i)
      faces_text += "f " + std::to_string(face[0] + 1) + " " + std::to_string(face[i] + 1) + " " +
                    std::to_string(face[i + 1] + 1) + "\n";
  const std::string lines = lines_text(points, f, segments);
  return points.text + faces_text + lines;
}

std::string segments_obj(const Frame& f, const std::vector<Segment>& segments) {
  ObjPoints points;
  const std::string lines = lines_text(points, f, segments);
  return points.text + lines;
}

std::string segments_csv(const MultiGraph& g, const Frame& f, const std::vector<Segment>& segments) {
  const std::size_t dim = f.axes.size();
  std::string out = "edge";
  for (std::size_t k = 1; k <= dim; ++k) out += ",a" + std::to_string(k);
  for (std::size_t k = 1; k <= dim; ++k) out += ",b" + std::to_string(k);
  out += "\n";
  for (const auto& s : segments) {
    out += g.edge(s.edge).id;
    for (double v : frame_coordinates(f, s.a)) out += "," + format_number(v);
    for (double v : frame_coordinates(f, s.b)) out += "," + format_number(v);
    out += "\n";
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IO, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::IO, "cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorKind::IO, "cannot move output into place: " + ec.message());
  }
}

}  // namespace crystalvor
