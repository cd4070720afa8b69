#pragma once

// Natural graph of a duplicated genome: one vertex per adjacency, and per
// marker id one edge joining the two adjacencies holding a copy of it on
// their left, one edge joining the two holding a copy on their right.
// Every vertex has degree 1 (telomeric) or 2, so the graph splits into
// paths and cycles.

#include <numeric>
#include <sstream>

#include "bihalve/genome.hpp"

namespace bihalve {

namespace detail {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Attaches the root of `child` below the root of `root`.
  void attach(std::size_t child, std::size_t root) { parent_[find(child)] = find(root); }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

enum class EdgeSide : std::uint8_t { left, right };

struct NaturalEdge {
  std::size_t a = 0, b = 0;  // vertex indices
  std::uint32_t id = 0;
  EdgeSide side = EdgeSide::left;
};

enum class ComponentKind : std::uint8_t { path, cycle };

struct Component {
  ComponentKind kind = ComponentKind::path;
  std::size_t edges = 0;
  std::vector<std::size_t> vertices;  // ascending

  bool is_even() const noexcept { return edges % 2 == 0; }
};

struct NaturalGraph {
  std::vector<Adjacency> vertices;
  std::vector<NaturalEdge> edges;
  // Paths first, then cycles by increasing length; ties by smallest vertex.
  std::vector<Component> components;
  std::size_t markers = 0;
};

inline NaturalGraph build_natural_graph(const Genome& g) {
  NaturalGraph ng;
  ng.vertices = adjacencies(g);

  // For every occurrence, the vertex where it sits on the left and on the right.
  struct Slots {
    std::size_t left[2];
    std::size_t right[2];
  };
  std::unordered_map<std::uint32_t, Slots> slots;
  std::vector<std::uint32_t> order;
  std::size_t base = 0;
  for (const auto& c : g.chromosomes) {
    const std::size_t m = c.size();
    for (std::size_t p = 0; p < m; ++p) {
      const auto& occ = c.markers[p];
      auto [it, fresh] = slots.try_emplace(occ.id);
      if (fresh) order.push_back(occ.id);
      // Gap p holds the marker on its right, gap p+1 on its left (mod m if circular).
      it->second.right[occ.copy] = base + p;
      it->second.left[occ.copy] = base + (c.is_linear() ? p + 1 : (p + 1) % m);
    }
    base += c.adjacency_count();
  }
  ng.markers = order.size();
  ng.edges.reserve(2 * order.size());
  for (std::uint32_t id : order) {
    const Slots& s = slots.at(id);
    ng.edges.push_back({s.left[0], s.left[1], id, EdgeSide::left});
    ng.edges.push_back({s.right[0], s.right[1], id, EdgeSide::right});
  }

  const std::size_t n_vertices = ng.vertices.size();
  detail::UnionFind uf(n_vertices);
  std::vector<unsigned> degree(n_vertices, 0);
  for (const auto& e : ng.edges) {
    uf.unite(e.a, e.b);
    ++degree[e.a];
    ++degree[e.b];
  }
  std::unordered_map<std::size_t, std::size_t> slot_of_root;
  for (std::size_t v = 0; v < n_vertices; ++v) {
    const std::size_t r = uf.find(v);
    auto [it, fresh] = slot_of_root.try_emplace(r, ng.components.size());
    if (fresh) ng.components.push_back(Component{ComponentKind::cycle, 0, {}});
    Component& comp = ng.components[it->second];
    comp.vertices.push_back(v);
    if (degree[v] < 2) comp.kind = ComponentKind::path;
  }
  for (const auto& e : ng.edges) ++ng.components[slot_of_root.at(uf.find(e.a))].edges;
  std::stable_sort(ng.components.begin(), ng.components.end(),
                   [](const Component& x, const Component& y) {
                     if (x.kind != y.kind) return x.kind == ComponentKind::path;
                     return x.edges < y.edges;
                   });
  return ng;
}

struct HalvingSummary {
  std::size_t n = 0;            // distinct markers
  std::size_t cycles = 0;       // C
  std::size_t even_cycles = 0;  // EC
  std::size_t odd_paths = 0;    // OP
  std::int64_t d_dcj_p = 0;     // n - EC - floor(OP / 2)
  std::int64_t d_bi_t = 0;      // floor((n - C) / 2)
};

inline HalvingSummary halving_summary(const NaturalGraph& ng) {
  HalvingSummary s;
  s.n = ng.markers;
  for (const auto& c : ng.components) {
    if (c.kind == ComponentKind::cycle) {
      ++s.cycles;
      if (c.is_even()) ++s.even_cycles;
    } else if (!c.is_even()) {
      ++s.odd_paths;
    }
  }
  const auto n = static_cast<std::int64_t>(s.n);
  s.d_dcj_p = n - static_cast<std::int64_t>(s.even_cycles) - static_cast<std::int64_t>(s.odd_paths / 2);
  s.d_bi_t = (n - static_cast<std::int64_t>(s.cycles)) / 2;
  return s;
}

inline HalvingSummary halving_summary(const Genome& g) { return halving_summary(build_natural_graph(g)); }

inline std::string to_string(const HalvingSummary& s) {
  std::ostringstream os;
  os << "n=" << s.n << " C=" << s.cycles << " d_dcj=" << s.d_dcj_p << " d_bi=" << s.d_bi_t;
  return os.str();
}

// Cycle count of the natural graph of one linear chromosome, without
// materializing the adjacencies. Vertex g is the adjacency at gap g.
inline std::size_t cycle_count(std::span<const MarkerOccurrence> seq, std::span<const std::size_t> partner) {
  const std::size_t len = seq.size();
  // Vertex g (0 < g < len) has its left-edge to partner[g] + 1 and its
  // right-edge to partner[g - 1]; following them alternately walks a component.
  std::vector<char> seen(len + 1, 0);
  std::size_t cycles = 0;
  // The path holds both telomeric vertices; mark it first.
  {
    std::size_t v = 0;
    bool via_right = true;  // vertex 0 only has a right marker
    seen[0] = 1;
    while (true) {
      const std::size_t next = via_right ? partner[v] : partner[v - 1] + 1;
      v = next;
      seen[v] = 1;
      if (v == 0 || v == len) break;
      via_right = !via_right;
    }
  }
  for (std::size_t start = 1; start < len; ++start) {
    if (seen[start]) continue;
    ++cycles;
    std::size_t v = start;
    bool via_right = true;
    do {
      seen[v] = 1;
      v = via_right ? partner[v] : partner[v - 1] + 1;
      via_right = !via_right;
    } while (v != start);
  }
  return cycles;
}

inline std::size_t cycle_count(std::span<const MarkerOccurrence> seq) {
  return cycle_count(seq, partner_positions(seq));
}

// "path(2) cycle(2) cycle(4)"
inline std::string component_summary(const NaturalGraph& ng) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : ng.components) {
    if (!first) os << ' ';
    first = false;
    os << (c.kind == ComponentKind::path ? "path(" : "cycle(") << c.edges << ')';
  }
  return os.str();
}

inline std::string export_dot(const NaturalGraph& ng) {
  std::ostringstream os;
  os << "graph natural_graph {\n";
  os << "  // " << component_summary(ng) << "\n";
  for (std::size_t k = 0; k < ng.components.size(); ++k) {
    const Component& c = ng.components[k];
    os << "  subgraph cluster_" << k << " {\n";
    os << "    label=\"" << (c.kind == ComponentKind::path ? "path(" : "cycle(") << c.edges << ")\";\n";
    for (std::size_t v : c.vertices)
      os << "    v" << v << " [label=\"" << to_string(ng.vertices[v]) << "\"];\n";
    os << "  }\n";
  }
  for (const auto& e : ng.edges)
    os << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.id
       << (e.side == EdgeSide::left ? " L" : " R") << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace bihalve
