#pragma once

// Linked-set decomposition and the end-to-end sparsifier.
//
// A vertex set X is connectivity-q linked when every bipartition (A, B) of X
// is crossed by at least min(|dA n dX|, |dB n dX|, q) edges. Contracting a
// linked set preserves all terminal cuts thresholded at q, so the sparsifier
// splits the non-terminal part of the graph into linked clusters and
// contracts each of them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mimic/constrained_cut.hpp"
#include "mimic/graph.hpp"

namespace mimic {

struct ViolatingCut {
  Cut cut;
  int q = 0;
};

struct Decomposition {
  std::vector<VertexSet> clusters;
  int certified_q = 0;
};

namespace detail {

inline VertexSet inner_vertices(const MultiGraph& g, const TerminalSet& terminals) {
  auto is_terminal = mask_of(g.num_vertices(), terminals);
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!is_terminal[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

/// Moves every pendant terminal to the side of its neighbor.
inline Cut pendants_follow(const MultiGraph& g, const TerminalSet& terminals, const Cut& cut) {
  auto side0 = mask_of(g.num_vertices(), cut.side0);
  for (Vertex t : terminals) {
    auto nb = g.neighbors(t);
    if (!nb.empty()) side0[static_cast<std::size_t>(t)] = side0[static_cast<std::size_t>(nb[0].neighbor)];
  }
  return make_cut(g, side0);
}

}  // namespace detail

/// Searches a pendant graph (inner vertices X plus degree-1 terminals) for a
/// bipartition of X crossed by fewer than min(pendants on A, pendants on B, q)
/// edges.
inline std::optional<ViolatingCut> find_violating_cut(const MultiGraph& g,
                                                      const TerminalSet& terminals, int q) {
  if (q < 1) throw InputError("q must be >= 1");
  const int k = static_cast<int>(terminals.size());
  for (int l = 0; l < q && 2 * (l + 1) <= k; ++l) {
    ConstrainedSpec spec{{}, {}, l + 1, l + 1, l};
    if (auto cut = find_constrained_cut(g, terminals, spec)) {
      return ViolatingCut{detail::pendants_follow(g, terminals, *cut), q};
    }
  }
  return std::nullopt;
}

/// N_q(k): the cluster count bound of MarkClusters.
inline std::int64_t cluster_count_bound(int q, int k) {
  std::int64_t p = 1;
  for (int i = 0; i < q - 2; ++i) p *= 3;
  if (k > 2 * (q - 1)) return p * (k - 2 * (q - 1));
  return p;
}

namespace detail {

/// Bridges of a multigraph (records of multiplicity 1 whose removal
/// disconnects their component), as edge ids.
inline std::vector<char> bridge_mask(const MultiGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> order(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> bridge(static_cast<std::size_t>(g.num_edges()), 0);
  int clock = 0;
  struct Frame {
    Vertex v;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (order[static_cast<std::size_t>(root)] >= 0) continue;
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    stack.push_back(Frame{root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Incidence inc = nb[f.next++];
        if (inc.edge == f.parent_edge) continue;
        const auto w = static_cast<std::size_t>(inc.neighbor);
        if (order[w] < 0) {
          order[w] = low[w] = clock++;
          stack.push_back(Frame{inc.neighbor, inc.edge, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], order[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const auto v = static_cast<std::size_t>(done.v);
        const auto p = static_cast<std::size_t>(stack.back().v);
        low[p] = std::min(low[p], low[v]);
        if (low[v] > order[p] && g.edge(done.parent_edge).multiplicity == 1) {
          bridge[static_cast<std::size_t>(done.parent_edge)] = 1;
        }
      }
    }
  }
  return bridge;
}

}  // namespace detail

/// Connectivity-2 clusters of a pendant graph whose inner part is connected:
/// 2-edge-connected components are contracted into nodes of a tree, then
/// nodes of degree at most 2 (tree edges plus pendants) are merged into their
/// lowest-id neighbor until none is left.
inline Decomposition connectivity2_decompose(const MultiGraph& g, const TerminalSet& terminals) {
  const VertexSet inner = detail::inner_vertices(g, terminals);
  Decomposition out;
  out.certified_q = 2;
  if (inner.empty()) return out;
  if (component_sets(g, inner).size() != 1) {
    throw InputError("connectivity-2 decomposition needs a connected inner part");
  }
  Subgraph sub = induced_subgraph(g, inner);
  const MultiGraph& h = sub.graph;
  const int n = h.num_vertices();
  auto bridge = detail::bridge_mask(h);

  // Nodes: connected components of h without its bridges.
  std::vector<int> node(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (node[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    node[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (const Incidence& inc : h.neighbors(u)) {
        if (bridge[static_cast<std::size_t>(inc.edge)]) continue;
        if (node[static_cast<std::size_t>(inc.neighbor)] < 0) {
          node[static_cast<std::size_t>(inc.neighbor)] = count;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++count;
  }

  std::vector<int> pendants(static_cast<std::size_t>(count), 0);
  auto local = std::vector<Vertex>(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  for (std::size_t i = 0; i < inner.size(); ++i) local[static_cast<std::size_t>(inner[i])] = static_cast<Vertex>(i);
  for (Vertex t : terminals) {
    for (const Incidence& inc : g.neighbors(t)) {
      const Vertex at = local[static_cast<std::size_t>(inc.neighbor)];
      if (at != kNoVertex) pendants[static_cast<std::size_t>(node[static_cast<std::size_t>(at)])] += inc.multiplicity;
    }
  }
  // Tree adjacency between nodes; bridges have multiplicity 1.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(count));
  for (int id = 0; id < h.num_edges(); ++id) {
    if (!bridge[static_cast<std::size_t>(id)]) continue;
    const Edge& e = h.edge(id);
    const int a = node[static_cast<std::size_t>(e.u)];
    const int b = node[static_cast<std::size_t>(e.v)];
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }

  std::vector<int> into(static_cast<std::size_t>(count));
  std::iota(into.begin(), into.end(), 0);
  std::vector<char> alive(static_cast<std::size_t>(count), 1);
  auto degree = [&](int x) {
    return static_cast<int>(adj[static_cast<std::size_t>(x)].size()) + pendants[static_cast<std::size_t>(x)];
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < count; ++x) {
      if (!alive[static_cast<std::size_t>(x)] || adj[static_cast<std::size_t>(x)].empty() ||
          degree(x) > 2) {
        continue;
      }
      const int y = *std::min_element(adj[static_cast<std::size_t>(x)].begin(),
                                      adj[static_cast<std::size_t>(x)].end());
      alive[static_cast<std::size_t>(x)] = 0;
      into[static_cast<std::size_t>(x)] = y;
      pendants[static_cast<std::size_t>(y)] += pendants[static_cast<std::size_t>(x)];
      auto& ay = adj[static_cast<std::size_t>(y)];
      ay.erase(std::remove(ay.begin(), ay.end(), x), ay.end());
      for (int z : adj[static_cast<std::size_t>(x)]) {
        if (z == y) continue;
        ay.push_back(z);
        auto& az = adj[static_cast<std::size_t>(z)];
        std::replace(az.begin(), az.end(), x, y);
      }
      adj[static_cast<std::size_t>(x)].clear();
      changed = true;
      break;
    }
  }
  auto root = [&](int x) {
    while (into[static_cast<std::size_t>(x)] != x) x = into[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<int> slot(static_cast<std::size_t>(count), -1);
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const int r = root(node[i]);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.clusters.size());
      out.clusters.emplace_back();
    }
    out.clusters[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(inner[i]);
  }
  return out;
}

namespace detail {

inline void mark_clusters_into(const MultiGraph& g, const TerminalSet& terminals, int q,
                               std::vector<VertexSet>& out);

/// Runs MarkClusters on g[x] with its boundary as pendants; clusters are
/// reported in g's ids.
inline void mark_clusters_on(const MultiGraph& g, const VertexSet& x, int q,
                             std::vector<VertexSet>& out) {
  PendantView pv = pendant_view(g, x);
  std::vector<VertexSet> local;
  mark_clusters_into(pv.graph, pv.terminals, q, local);
  for (const VertexSet& c : local) {
    VertexSet mapped;
    for (Vertex v : c) mapped.push_back(pv.to_parent[static_cast<std::size_t>(v)]);
    out.push_back(make_set(std::move(mapped)));
  }
}

inline void mark_clusters_into(const MultiGraph& g, const TerminalSet& terminals, int q,
                               std::vector<VertexSet>& out) {
  const VertexSet inner = inner_vertices(g, terminals);
  if (inner.empty()) return;
  auto parts = component_sets(g, inner);
  if (parts.size() > 1) {
    for (const VertexSet& part : parts) mark_clusters_on(g, part, q, out);
    return;
  }
  const int k = static_cast<int>(terminals.size());
  if (k <= 1 || q <= 1) {
    out.push_back(inner);
    return;
  }
  if (q == 2) {
    for (VertexSet& c : connectivity2_decompose(g, terminals).clusters) out.push_back(std::move(c));
    return;
  }
  auto violating = find_violating_cut(g, terminals, q);
  if (!violating) {
    out.push_back(inner);
    return;
  }
  if (k <= 2 * q - 1) {
    mark_clusters_into(g, terminals, q - 1, out);
    return;
  }
  auto side0 = mask_of(g.num_vertices(), violating->cut.side0);
  VertexSet a;
  VertexSet b;
  for (Vertex v : inner) (side0[static_cast<std::size_t>(v)] ? a : b).push_back(v);
  mark_clusters_on(g, a, q, out);
  mark_clusters_on(g, b, q, out);
}

}  // namespace detail

/// Partitions the inner vertices of a pendant graph into connectivity-q
/// linked clusters.
inline Decomposition mark_clusters(const MultiGraph& g, const TerminalSet& terminals, int q) {
  if (q < 2) throw InputError("MarkClusters needs q >= 2");
  Decomposition d;
  d.certified_q = q;
  detail::mark_clusters_into(g, terminals, q, d.clusters);
  return d;
}

struct ComponentReport {
  /// Pendant terminals attached to this component.
  int terminals = 0;
  int clusters = 0;
};

struct MimickingNetwork {
  MultiGraph graph;
  int c = 0;
  /// terminal_map[i]: the vertices of `graph` that copy the i-th original terminal.
  std::vector<std::vector<Vertex>> terminal_map;
  /// Original vertex -> vertex of `graph`, or kDeleted for dropped components.
  ContractionMap provenance;
  std::vector<ComponentReport> components;

  /// All terminal copies, in terminal_map order.
  TerminalSet terminals() const {
    TerminalSet out;
    for (const auto& copies : terminal_map) out.insert(out.end(), copies.begin(), copies.end());
    return out;
  }
  int num_clusters() const {
    int s = 0;
    for (const ComponentReport& r : components) s += r.clusters;
    return s;
  }
};

inline std::int64_t size_bound(int c, int k) {
  std::int64_t p = 1;
  for (int i = 0; i < c; ++i) p *= 3;
  return p * c * k;
}

/// Builds a connectivity-c mimicking network for the given terminals.
/// Original terminals are listed in `terminals` (distinct vertex ids).
inline MimickingNetwork build_mimicking_network(int num_vertices,
                                                std::span<const CapacitatedEdge> edges,
                                                const std::vector<Vertex>& terminals, int c) {
  if (c < 1) throw InputError("threshold c must be >= 1");
  if (terminals.empty()) throw InputError("at least one terminal is required");
  if (make_set(terminals).size() != terminals.size()) throw InputError("terminals must be distinct");
  for (const CapacitatedEdge& e : edges) {
    if (e.u < 0 || e.u >= num_vertices || e.v < 0 || e.v >= num_vertices) {
      throw InputError("edge endpoint out of range");
    }
  }
  MultiGraph g = from_capacitated(num_vertices, edges, c);
  NormalizedTerminals norm = normalize_terminals(g, terminals, c);
  const MultiGraph& ng = norm.graph;

  VertexSet originals(static_cast<std::size_t>(num_vertices));
  std::iota(originals.begin(), originals.end(), 0);
  auto is_original_terminal = mask_of(num_vertices, terminals);

  MimickingNetwork out;
  out.c = c;
  std::vector<VertexSet> clusters;
  VertexSet kept;
  for (const VertexSet& comp : component_sets(ng, originals)) {
    const bool has_terminal = std::any_of(comp.begin(), comp.end(), [&](Vertex v) {
      return is_original_terminal[static_cast<std::size_t>(v)] != 0;
    });
    if (!has_terminal) continue;
    kept.insert(kept.end(), comp.begin(), comp.end());
    const std::size_t before = clusters.size();
    if (c == 1) {
      clusters.push_back(comp);
    } else {
      detail::mark_clusters_on(ng, comp, c, clusters);
    }
    ComponentReport report;
    report.terminals = boundary_size(ng, comp);
    report.clusters = static_cast<int>(clusters.size() - before);
    if (c >= 2 && report.clusters > cluster_count_bound(c, report.terminals)) {
      throw std::logic_error("cluster count exceeds the MarkClusters bound");
    }
    out.components.push_back(report);
  }
  for (Vertex t : norm.terminals) kept.push_back(t);
  kept = make_set(std::move(kept));

  Subgraph sub = induced_subgraph(ng, kept);
  std::vector<Vertex> local(static_cast<std::size_t>(ng.num_vertices()), kNoVertex);
  for (std::size_t i = 0; i < kept.size(); ++i) local[static_cast<std::size_t>(kept[i])] = static_cast<Vertex>(i);
  std::vector<VertexSet> local_clusters;
  for (const VertexSet& cl : clusters) {
    VertexSet m;
    for (Vertex v : cl) m.push_back(local[static_cast<std::size_t>(v)]);
    local_clusters.push_back(make_set(std::move(m)));
  }
  Contraction contracted = contract_sets(sub.graph, local_clusters);
  out.graph = std::move(contracted.graph);
  out.provenance.image.assign(static_cast<std::size_t>(num_vertices), kDeleted);
  for (Vertex v = 0; v < num_vertices; ++v) {
    const Vertex l = local[static_cast<std::size_t>(v)];
    if (l != kNoVertex) out.provenance.image[static_cast<std::size_t>(v)] = contracted.map(l);
  }
  for (const auto& copies : norm.copies) {
    std::vector<Vertex> mapped;
    for (Vertex p : copies) mapped.push_back(contracted.map(local[static_cast<std::size_t>(p)]));
    out.terminal_map.push_back(std::move(mapped));
  }
  if (out.graph.num_vertices() > size_bound(c, static_cast<int>(terminals.size()))) {
    throw std::logic_error("mimicking network exceeds the 3^c * c * k size bound");
  }
  return out;
}

}  // namespace mimic
