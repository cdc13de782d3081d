#pragma once

#include <vector>

#include "mimic/mimic.hpp"

namespace mimic::testing {

/// Random multigraph: a random spanning tree (when `connected`) plus extra
/// random edges, multiplicities in [1, max_mult].
inline MultiGraph random_graph(Rng& rng, int n, int m, int max_mult, bool connected = true) {
  std::vector<Edge> edges;
  if (connected) {
    for (int v = 1; v < n; ++v) {
      edges.push_back(Edge{static_cast<Vertex>(rng.uniform(0, v - 1)), v,
                           static_cast<int>(rng.uniform(1, max_mult))});
    }
  }
  while (static_cast<int>(edges.size()) < m && n >= 2) {
    const auto u = static_cast<Vertex>(rng.uniform(0, n - 1));
    const auto v = static_cast<Vertex>(rng.uniform(0, n - 1));
    if (u != v) edges.push_back(Edge{u, v, static_cast<int>(rng.uniform(1, max_mult))});
  }
  return MultiGraph(n, std::move(edges));
}

struct PendantGraph {
  MultiGraph graph;
  TerminalSet terminals;
};

/// `inner` vertices forming a random connected graph with `extra` additional
/// edges, plus `pendants` degree-1 terminals at random inner vertices.
inline PendantGraph random_pendant_graph(Rng& rng, int inner, int extra, int pendants,
                                         int max_mult = 1, bool connected = true) {
  MultiGraph core = random_graph(rng, inner, (connected ? inner - 1 : 0) + extra, max_mult, connected);
  std::vector<Edge> edges(core.edges().begin(), core.edges().end());
  PendantGraph out;
  for (int i = 0; i < pendants; ++i) {
    const Vertex t = inner + i;
    edges.push_back(Edge{static_cast<Vertex>(rng.uniform(0, inner - 1)), t, 1});
    out.terminals.push_back(t);
  }
  out.graph = MultiGraph(inner + pendants, std::move(edges));
  return out;
}

inline std::vector<CapacitatedEdge> capacitated(const std::vector<std::tuple<int, int, int>>& list) {
  std::vector<CapacitatedEdge> out;
  for (auto [u, v, w] : list) out.push_back(CapacitatedEdge{u, v, w});
  return out;
}

inline MultiGraph simple(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back(Edge{u, v, 1});
  return MultiGraph(n, std::move(edges));
}

inline MultiGraph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return simple(n, pairs);
}

}  // namespace mimic::testing
