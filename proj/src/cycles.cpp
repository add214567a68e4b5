#include "crystalvor/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

#include "crystalvor/error.hpp"
#include "crystalvor/homology.hpp"

namespace crystalvor {

std::vector<EdgeIndex> ElementaryCycle::support() const {
  std::vector<EdgeIndex> s(plus);
  s.insert(s.end(), minus.begin(), minus.end());
  std::sort(s.begin(), s.end());
  return s;
}

ElementaryCycle ElementaryCycle::negated() const {
  return ElementaryCycle{-chain, minus, zero, plus};
}

ElementaryCycle cycle_parts(const MultiGraph& g, const Chain& c) {
  if (c.size() != g.edge_count()) throw Error(ErrorKind::Malformed, "chain length mismatch");
  ElementaryCycle out;
  out.chain = c;
  for (EdgeIndex j = 0; j < c.size(); ++j) {
    if (c[j] == 1) {
      out.plus.push_back(j);
    } else if (c[j] == -1) {
      out.minus.push_back(j);
    } else if (c[j] == 0) {
      out.zero.push_back(j);
    } else {
      throw Error(ErrorKind::NotUnit, "coefficient outside {-1, 0, 1}");
    }
  }
  if (!in_cycle_space(g, c)) throw Error(ErrorKind::NotACycle, "chain has nonzero boundary");
  return out;
}

namespace {

class CircuitSearch {
 public:
  CircuitSearch(const MultiGraph& g, std::size_t guard)
      : g_(g), guard_(guard), on_path_(g.vertex_count(), false) {}

  std::vector<Chain> run() {
    for (EdgeIndex j = 0; j < g_.edge_count(); ++j) {
      if (!g_.edge(j).is_loop()) continue;
      Chain c(g_.edge_count());
      c[j] = 1;
      emit(std::move(c));
    }
    for (VertexIndex r = 0; r < g_.vertex_count(); ++r) {
      root_ = r;
      on_path_[r] = true;
      extend(r);
      on_path_[r] = false;
    }
    return std::move(found_);
  }

 private:
  void emit(Chain c) {
    if (found_.size() >= guard_)
      throw Error(ErrorKind::TooLarge, "more than " + std::to_string(guard_) + " circuits");
    found_.push_back(std::move(c));
  }

  void extend(VertexIndex v) {
    for (EdgeIndex j : g_.incident(v)) {
      const Edge& e = g_.edge(j);
      if (e.is_loop()) continue;
      if (!steps_.empty() && j == steps_.back().edge) continue;
      const VertexIndex w = g_.other_end(j, v);
      const int sign = e.source == v ? 1 : -1;
      if (w == root_) {
        // Each circuit is found in two directions; keep the one whose first
        // edge has the smaller index.
        if (steps_.empty() || steps_.front().edge > j) continue;
        Chain c(g_.edge_count());
        for (const auto& s : steps_) c[s.edge] = s.sign;
        c[j] = sign;
        emit(std::move(c));
        continue;
      }
      if (w < root_ || on_path_[w]) continue;
      on_path_[w] = true;
      steps_.push_back({j, sign});
      extend(w);
      steps_.pop_back();
      on_path_[w] = false;
    }
  }

  const MultiGraph& g_;
  std::size_t guard_;
  VertexIndex root_ = 0;
  std::vector<bool> on_path_;
  std::vector<Step> steps_;
  std::vector<Chain> found_;
};

struct CycleOrder {
  bool operator()(const ElementaryCycle& a, const ElementaryCycle& b) const {
    const auto sa = a.support(), sb = b.support();
    if (sa != sb) return sa < sb;
    return a.chain[sa.front()] > b.chain[sb.front()];
  }
};

}  // namespace

std::vector<ElementaryCycle> enumerate_elementary_cycles(const MultiGraph& g, std::size_t guard) {
  auto circuits = CircuitSearch(g, guard).run();
  std::vector<ElementaryCycle> out;
  out.reserve(2 * circuits.size());
  for (auto& c : circuits) {
    out.push_back(cycle_parts(g, c));
    out.push_back(out.back().negated());
  }
  std::sort(out.begin(), out.end(), CycleOrder{});
  return out;
}

std::size_t configured_threads() {
  const char* text = std::getenv("CRYSTALVOR_THREADS");
  if (text == nullptr) return 1;
  char* end = nullptr;
  const long n = std::strtol(text, &end, 10);
  if (end == text || n < 1) return 1;
  return static_cast<std::size_t>(std::min<long>(n, 256));
}

namespace {

// Reachability with vertex bit masks; the graph has at most 64 vertices.
class OrientationScanner {
 public:
  explicit OrientationScanner(const MultiGraph& g) : g_(g) {
    for (EdgeIndex j = 0; j < g.edge_count(); ++j)
      if (!g.edge(j).is_loop()) links_.push_back(j);
  }

  bool strong(std::uint64_t flipped) const {
    const std::size_t n = g_.vertex_count();
    std::vector<std::uint64_t> out(n, 0), in(n, 0);
    for (EdgeIndex j : links_) {
      VertexIndex s = g_.edge(j).source, t = g_.edge(j).target;
      if ((flipped >> j) & 1U) std::swap(s, t);
      out[s] |= std::uint64_t{1} << t;
      in[t] |= std::uint64_t{1} << s;
    }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return closure(out) == all && closure(in) == all;
  }

 private:
  static std::uint64_t closure(const std::vector<std::uint64_t>& adj) {
    std::uint64_t reached = 1, frontier = 1;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= next;
    }
    return reached;
  }

  const MultiGraph& g_;
  std::vector<EdgeIndex> links_;
};

}  // namespace

std::vector<Orientation> enumerate_strong_orientations(const MultiGraph& g, std::size_t guard) {
  if (auto bridges = find_bridges(g); !bridges.empty()) {
    std::string ids;
    for (auto j : bridges) ids += (ids.empty() ? "" : ", ") + g.edge(j).id;
    throw Error(ErrorKind::BridgeExists, "bridges: " + ids);
  }
  const std::size_t m = g.edge_count();
  if (m >= 63 || (std::size_t{1} << m) > guard || g.vertex_count() > 64)
    throw Error(ErrorKind::TooLarge, "orientation scan exceeds guard of " + std::to_string(guard));
  const std::uint64_t total = std::uint64_t{1} << m;
  const OrientationScanner scanner(g);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::uint64_t>(configured_threads(), total / 4096 + 1));
  std::vector<std::vector<std::uint64_t>> hits(workers);
  auto scan = [&](std::size_t w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    for (std::uint64_t mask = lo; mask < hi; ++mask)
      if (scanner.strong(mask)) hits[w].push_back(mask);
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Orientation> out;
  for (const auto& part : hits) {
    for (auto mask : part) {
      Orientation o{std::vector<int>(m)};
      for (EdgeIndex j = 0; j < m; ++j) o.signs[j] = ((mask >> j) & 1U) ? -1 : 1;
      out.push_back(std::move(o));
    }
  }
  return out;
}

std::vector<L1Vertex> l1_ball_vertices(const MultiGraph& g) {
  if (!find_bridges(g).empty()) throw Error(ErrorKind::BridgeExists, "graph has a bridge");
  std::vector<L1Vertex> out;
  for (auto& c : enumerate_elementary_cycles(g)) {
    const Rational norm = static_cast<long>(c.plus.size() + c.minus.size());
    if (norm != inner(c.chain, c.chain))
      throw Error(ErrorKind::Malformed, "internal error: l1 norm differs from (gamma, gamma)");
    RationalVector p = c.chain.values();
    for (auto& v : p) v /= norm;
    out.push_back({std::move(c), std::move(p)});
  }
  return out;
}

}  // namespace crystalvor
