#pragma once

// Undirected multigraph with parallel-edge multiplicities, plus the
// reductions and structural primitives every other module builds on.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mimic {

using Vertex = int;

inline constexpr Vertex kNoVertex = -1;
inline constexpr Vertex kDeleted = -1;

/// Thrown for inputs that violate an operation's preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;
using TerminalSet = VertexSet;

inline VertexSet make_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline std::vector<char> mask_of(int n, std::span<const Vertex> vs) {
  std::vector<char> mask(static_cast<std::size_t>(n), 0);
  for (Vertex v : vs) mask[static_cast<std::size_t>(v)] = 1;
  return mask;
}

inline VertexSet set_of(std::span<const char> mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

inline bool disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

/// One record per unordered vertex pair; u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  int multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct CapacitatedEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::int64_t capacity = 1;
};

struct Incidence {
  Vertex neighbor;
  int multiplicity;
  int edge;
};

class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int num_vertices) : MultiGraph(num_vertices, {}) {}

  /// Parallel records between the same pair are merged by summing.
  MultiGraph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices) {
    if (num_vertices < 0) throw InputError("negative vertex count");
    for (Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_) {
        throw InputError("edge endpoint out of range");
      }
      if (e.u == e.v) throw InputError("self-loops are not stored");
      if (e.multiplicity < 1) throw InputError("edge multiplicity must be >= 1");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (const Edge& e : edges) {
      if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
        edges_.back().multiplicity += e.multiplicity;
      } else {
        edges_.push_back(e);
      }
    }
    build_adjacency();
  }

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  std::int64_t total_multiplicity() const noexcept {
    std::int64_t total = 0;
    for (const Edge& e : edges_) total += e.multiplicity;
    return total;
  }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  /// Incident records sorted by ascending neighbor id.
  std::span<const Incidence> neighbors(Vertex v) const {
    auto b = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v)]);
    auto e = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(v) + 1]);
    return std::span<const Incidence>(adjacency_).subspan(b, e - b);
  }

  int degree(Vertex v) const {
    int d = 0;
    for (const Incidence& inc : neighbors(v)) d += inc.multiplicity;
    return d;
  }

  int multiplicity(Vertex u, Vertex v) const {
    for (const Incidence& inc : neighbors(u)) {
      if (inc.neighbor == v) return inc.multiplicity;
      if (inc.neighbor > v) break;
    }
    return 0;
  }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    std::vector<int> deg(static_cast<std::size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (int v = 0; v < n_; ++v) {
      offsets_[static_cast<std::size_t>(v) + 1] =
          offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    }
    adjacency_.resize(edges_.size() * 2);
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    for (int id = 0; id < num_edges(); ++id) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.u)]++)] =
          Incidence{e.v, e.multiplicity, id};
      adjacency_[static_cast<std::size_t>(fill[static_cast<std::size_t>(e.v)]++)] =
          Incidence{e.u, e.multiplicity, id};
    }
    for (int v = 0; v < n_; ++v) {
      auto b = adjacency_.begin() + offsets_[static_cast<std::size_t>(v)];
      auto e = adjacency_.begin() + offsets_[static_cast<std::size_t>(v) + 1];
      std::sort(b, e, [](const Incidence& x, const Incidence& y) {
        return x.neighbor < y.neighbor;
      });
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> adjacency_;
};

/// Ordered vertex bipartition with its crossing edges.
struct Cut {
  VertexSet side0;
  VertexSet side1;
  std::vector<Edge> cutset;

  int size() const noexcept {
    int s = 0;
    for (const Edge& e : cutset) s += e.multiplicity;
    return s;
  }
};

inline int crossing_size(const MultiGraph& g, std::span<const char> side0_mask) {
  int s = 0;
  for (const Edge& e : g.edges()) {
    if (side0_mask[static_cast<std::size_t>(e.u)] !=
        side0_mask[static_cast<std::size_t>(e.v)]) {
      s += e.multiplicity;
    }
  }
  return s;
}

inline Cut make_cut(const MultiGraph& g, std::span<const char> side0_mask) {
  Cut cut;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    (side0_mask[static_cast<std::size_t>(v)] ? cut.side0 : cut.side1).push_back(v);
  }
  for (const Edge& e : g.edges()) {
    if (side0_mask[static_cast<std::size_t>(e.u)] !=
        side0_mask[static_cast<std::size_t>(e.v)]) {
      cut.cutset.push_back(e);
    }
  }
  return cut;
}

inline Cut make_cut(const MultiGraph& g, const VertexSet& side0) {
  auto mask = mask_of(g.num_vertices(), side0);
  return make_cut(g, mask);
}

/// Total map from the vertices of a graph to the vertices of its contraction.
struct ContractionMap {
  std::vector<Vertex> image;

  Vertex operator()(Vertex v) const { return image[static_cast<std::size_t>(v)]; }
};

struct Contraction {
  MultiGraph graph;
  ContractionMap map;
};

/// Capacitated edges become min(capacity, c) parallel copies; merged parallel
/// records are capped at c again. Self-loops never cross a cut and are dropped.
inline MultiGraph from_capacitated(int num_vertices,
                                   std::span<const CapacitatedEdge> edge_list,
                                   int c) {
  if (c < 1) throw InputError("threshold c must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const CapacitatedEdge& e : edge_list) {
    if (e.capacity < 1) throw InputError("edge capacity must be >= 1");
    if (e.u == e.v) continue;
    int copies = static_cast<int>(std::min<std::int64_t>(e.capacity, c));
    edges.push_back(Edge{e.u, e.v, copies});
  }
  MultiGraph merged(num_vertices, std::move(edges));
  std::vector<Edge> capped(merged.edges().begin(), merged.edges().end());
  for (Edge& e : capped) e.multiplicity = std::min(e.multiplicity, c);
  return MultiGraph(num_vertices, std::move(capped));
}

inline MultiGraph from_capacitated(std::span<const CapacitatedEdge> edge_list, int c) {
  int n = 0;
  for (const CapacitatedEdge& e : edge_list) n = std::max({n, e.u + 1, e.v + 1});
  return from_capacitated(n, edge_list, c);
}

struct NormalizedTerminals {
  MultiGraph graph;
  TerminalSet terminals;
  /// copies[i] are the pendant terminals created for the i-th original terminal.
  std::vector<std::vector<Vertex>> copies;
};

/// Every original terminal receives c pendant neighbors, which become the
/// terminals. Pendants of the i-th terminal are n + i*c .. n + i*c + c - 1.
inline NormalizedTerminals normalize_terminals(const MultiGraph& g,
                                               const TerminalSet& terminals,
                                               int c) {
  if (c < 1) throw InputError("threshold c must be >= 1");
  const int n = g.num_vertices();
  for (Vertex t : terminals) {
    if (t < 0 || t >= n) throw InputError("terminal is not a vertex of the graph");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  NormalizedTerminals out;
  int next = n;
  for (Vertex t : terminals) {
    std::vector<Vertex> mine;
    for (int j = 0; j < c; ++j) {
      edges.push_back(Edge{t, next, 1});
      mine.push_back(next);
      out.terminals.push_back(next);
      ++next;
    }
    out.copies.push_back(std::move(mine));
  }
  out.graph = MultiGraph(next, std::move(edges));
  return out;
}

/// Edges with exactly one endpoint in x.
inline std::vector<Edge> boundary(const MultiGraph& g, const VertexSet& x) {
  auto in = mask_of(g.num_vertices(), x);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)]) {
      out.push_back(e);
    }
  }
  return out;
}

inline int boundary_size(const MultiGraph& g, const VertexSet& x) {
  int s = 0;
  for (const Edge& e : boundary(g, x)) s += e.multiplicity;
  return s;
}

/// Component id per vertex of g restricted to `active` (-1 outside).
inline std::vector<int> components(const MultiGraph& g, std::span<const char> active,
                                   int* count = nullptr) {
  std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (!active[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) {
      continue;
    }
    comp[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbors(u)) {
        auto w = static_cast<std::size_t>(inc.neighbor);
        if (active[w] && comp[w] < 0) {
          comp[w] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

/// Connected components of g[x], each as a sorted vertex set, ordered by
/// smallest member.
inline std::vector<VertexSet> component_sets(const MultiGraph& g, const VertexSet& x) {
  auto active = mask_of(g.num_vertices(), x);
  int count = 0;
  auto comp = components(g, active, &count);
  std::vector<VertexSet> out(static_cast<std::size_t>(count));
  for (Vertex v : x) out[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])].push_back(v);
  return out;
}

/// Contracts every connected component of g[s] for each s in `sets` into one
/// vertex. Sets must be pairwise disjoint. Contracted vertices are numbered by
/// their smallest member.
inline Contraction contract_sets(const MultiGraph& g, const std::vector<VertexSet>& sets) {
  const int n = g.num_vertices();
  std::vector<Vertex> leader(static_cast<std::size_t>(n));
  std::iota(leader.begin(), leader.end(), 0);
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex v : sets[i]) {
      if (v < 0 || v >= n) throw InputError("contraction set vertex out of range");
      if (owner[static_cast<std::size_t>(v)] >= 0) {
        throw InputError("contraction sets must be disjoint");
      }
      owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
  }
  for (const VertexSet& s : sets) {
    for (const VertexSet& comp : component_sets(g, s)) {
      for (Vertex v : comp) leader[static_cast<std::size_t>(v)] = comp.front();
    }
  }
  Contraction out;
  out.map.image.assign(static_cast<std::size_t>(n), kNoVertex);
  std::vector<Vertex> id_of_leader(static_cast<std::size_t>(n), kNoVertex);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex l = leader[static_cast<std::size_t>(v)];
    if (id_of_leader[static_cast<std::size_t>(l)] == kNoVertex) {
      id_of_leader[static_cast<std::size_t>(l)] = next++;
    }
    out.map.image[static_cast<std::size_t>(v)] = id_of_leader[static_cast<std::size_t>(l)];
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = out.map(e.u);
    Vertex b = out.map(e.v);
    if (a != b) edges.push_back(Edge{a, b, e.multiplicity});
  }
  out.graph = MultiGraph(next, std::move(edges));
  return out;
}

inline Contraction contract(const MultiGraph& g, const VertexSet& x) {
  return contract_sets(g, {x});
}

struct Subgraph {
  MultiGraph graph;
  /// Local vertex i is parent vertex to_parent[i].
  std::vector<Vertex> to_parent;
};

inline Subgraph induced_subgraph(const MultiGraph& g, const VertexSet& x) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  for (std::size_t i = 0; i < x.size(); ++i) {
    local[static_cast<std::size_t>(x[i])] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = local[static_cast<std::size_t>(e.u)];
    Vertex b = local[static_cast<std::size_t>(e.v)];
    if (a != kNoVertex && b != kNoVertex) edges.push_back(Edge{a, b, e.multiplicity});
  }
  return Subgraph{MultiGraph(static_cast<int>(x.size()), std::move(edges)), x};
}

struct PendantView {
  MultiGraph graph;
  /// The pendants, one per unit of boundary multiplicity.
  TerminalSet terminals;
  /// Local vertex i < |x| is parent vertex x[i]; pendants map to kNoVertex.
  std::vector<Vertex> to_parent;
  /// For each pendant (in terminal order), the outside endpoint in the parent.
  std::vector<Vertex> pendant_source;
};

/// g[x] plus one fresh degree-1 terminal per unit of boundary multiplicity.
inline PendantView pendant_view(const MultiGraph& g, const VertexSet& x) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  for (std::size_t i = 0; i < x.size(); ++i) {
    local[static_cast<std::size_t>(x[i])] = static_cast<Vertex>(i);
  }
  PendantView out;
  out.to_parent = x;
  std::vector<Edge> edges;
  int next = static_cast<int>(x.size());
  for (const Edge& e : g.edges()) {
    Vertex a = local[static_cast<std::size_t>(e.u)];
    Vertex b = local[static_cast<std::size_t>(e.v)];
    if (a != kNoVertex && b != kNoVertex) {
      edges.push_back(Edge{a, b, e.multiplicity});
    } else if (a != kNoVertex || b != kNoVertex) {
      Vertex inside = a != kNoVertex ? a : b;
      Vertex outside = a != kNoVertex ? e.v : e.u;
      for (int j = 0; j < e.multiplicity; ++j) {
        edges.push_back(Edge{inside, next, 1});
        out.terminals.push_back(next);
        out.to_parent.push_back(kNoVertex);
        out.pendant_source.push_back(outside);
        ++next;
      }
    }
  }
  out.graph = MultiGraph(next, std::move(edges));
  return out;
}

}  // namespace mimic
