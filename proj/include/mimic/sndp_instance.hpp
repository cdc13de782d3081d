#pragma once

#include <cstdint>
#include <vector>

#include "mimic/graph.hpp"

namespace mimic {

struct Demand {
  Vertex vertex = 0;
  int requirement = 1;

  friend bool operator==(const Demand&, const Demand&) = default;
};

/// Rooted survivable network design instance. Edges are simple records with
/// a cost each; parallel records are separate purchasable edges.
struct SndpInstance {
  int num_vertices = 0;
  std::vector<CapacitatedEdge> edges;  // capacity holds the edge cost
  Vertex root = 0;
  std::vector<Demand> demands;
};

struct SndpSolution {
  std::int64_t cost = 0;
  /// Indices into SndpInstance::edges, ascending.
  std::vector<int> edges;
};

/// The multigraph formed by the chosen edge records, one unit each.
inline MultiGraph selected_graph(const SndpInstance& inst, const std::vector<int>& chosen) {
  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (int i : chosen) {
    const CapacitatedEdge& e = inst.edges[static_cast<std::size_t>(i)];
    if (e.u != e.v) edges.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v), 1});
  }
  return MultiGraph(inst.num_vertices, std::move(edges));
}

inline void validate_sndp(const SndpInstance& inst, int c) {
  if (c < 1) throw InputError("threshold c must be >= 1");
  const int n = inst.num_vertices;
  if (inst.root < 0 || inst.root >= n) throw InputError("root is not a vertex");
  for (const CapacitatedEdge& e : inst.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loops are not allowed");
    if (e.capacity < 0) throw InputError("edge costs must be >= 0");
  }
  for (const Demand& d : inst.demands) {
    if (d.vertex < 0 || d.vertex >= n) throw InputError("demand vertex out of range");
    if (d.requirement < 1) throw InputError("demand requirement must be >= 1");
    if (d.requirement > c) throw InputError("demand requirement exceeds c");
  }
}

}  // namespace mimic
