#pragma once

// Rooted binary tree decompositions with per-node introduced edges, in the
// shape the SNDP dynamic program expects: every internal node has two
// children, leaves carry no edges, and the root vertex sits in every bag.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mimic/graph.hpp"

namespace mimic {

/// An unrooted decomposition as supplied by a caller.
struct RawDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
};

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  /// Either empty (leaf) or exactly two node ids.
  std::vector<std::vector<int>> children;
  /// Indices into the instance edge list introduced at each node.
  std::vector<std::vector<int>> edges;
  int root = 0;

  int num_nodes() const noexcept { return static_cast<int>(bags.size()); }
  int width() const {
    std::size_t w = 0;
    for (const VertexSet& b : bags) w = std::max(w, b.size());
    return static_cast<int>(w) - 1;
  }
  /// Node ids with every child listed before its parent.
  std::vector<int> post_order() const {
    std::vector<int> order;
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [t, expanded] = stack.back();
      stack.pop_back();
      if (expanded) {
        order.push_back(t);
        continue;
      }
      stack.emplace_back(t, true);
      const auto& ch = children[static_cast<std::size_t>(t)];
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, false);
    }
    return order;
  }
};

/// Throws InputError naming the first violated axiom.
inline void validate_raw_decomposition(int num_vertices,
                                       const std::vector<std::pair<Vertex, Vertex>>& graph_edges,
                                       const RawDecomposition& raw) {
  const int nodes = static_cast<int>(raw.bags.size());
  if (nodes == 0) throw InputError("tree decomposition axiom violated: no bags");
  if (static_cast<int>(raw.tree_edges.size()) != nodes - 1) {
    throw InputError("tree decomposition axiom violated: bag graph is not a tree");
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : raw.tree_edges) {
    if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) {
      throw InputError("tree decomposition axiom violated: bag graph is not a tree");
    }
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> seen(static_cast<std::size_t>(nodes), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int s : adj[static_cast<std::size_t>(t)]) {
      if (!seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        ++reached;
        stack.push_back(s);
      }
    }
  }
  if (reached != nodes) throw InputError("tree decomposition axiom violated: bag graph is not a tree");

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(num_vertices));
  for (int t = 0; t < nodes; ++t) {
    for (Vertex v : raw.bags[static_cast<std::size_t>(t)]) {
      if (v < 0 || v >= num_vertices) throw InputError("bag vertex out of range");
      holders[static_cast<std::size_t>(v)].push_back(t);
    }
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (holders[static_cast<std::size_t>(v)].empty()) {
      throw InputError("tree decomposition axiom violated: vertex " + std::to_string(v + 1) +
                       " is in no bag");
    }
  }
  for (auto [u, v] : graph_edges) {
    bool covered = false;
    for (const VertexSet& bag : raw.bags) {
      if (contains(bag, u) && contains(bag, v)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw InputError("tree decomposition axiom violated: edge " + std::to_string(u + 1) + "-" +
                       std::to_string(v + 1) + " is in no bag");
    }
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    const auto& hs = holders[static_cast<std::size_t>(v)];
    std::vector<char> in(static_cast<std::size_t>(nodes), 0);
    for (int t : hs) in[static_cast<std::size_t>(t)] = 1;
    std::vector<char> vis(static_cast<std::size_t>(nodes), 0);
    std::vector<int> st{hs.front()};
    vis[static_cast<std::size_t>(hs.front())] = 1;
    std::size_t count = 1;
    while (!st.empty()) {
      int t = st.back();
      st.pop_back();
      for (int s : adj[static_cast<std::size_t>(t)]) {
        if (in[static_cast<std::size_t>(s)] && !vis[static_cast<std::size_t>(s)]) {
          vis[static_cast<std::size_t>(s)] = 1;
          ++count;
          st.push_back(s);
        }
      }
    }
    if (count != hs.size()) {
      throw InputError("tree decomposition axiom violated: bags holding vertex " +
                       std::to_string(v + 1) + " are not connected");
    }
  }
}

/// Min-degree elimination decomposition; optimal for treewidth <= 2.
inline RawDecomposition elimination_decomposition(
    int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& graph_edges) {
  if (num_vertices > 40) throw InputError("built-in decomposition is limited to 40 vertices");
  if (num_vertices == 0) throw InputError("graph has no vertices");
  const auto n = static_cast<std::size_t>(num_vertices);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [u, v] : graph_edges) {
    if (u == v) continue;
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  std::vector<VertexSet> bag_of(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (gone[v]) continue;
      int deg = 0;
      for (std::size_t w = 0; w < n; ++w) deg += (!gone[w] && adj[v][w]) ? 1 : 0;
      if (best == n || deg < best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    VertexSet nb;
    for (std::size_t w = 0; w < n; ++w) {
      if (!gone[w] && adj[best][w]) nb.push_back(static_cast<Vertex>(w));
    }
    for (Vertex a : nb) {
      for (Vertex b : nb) {
        if (a != b) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
      }
    }
    gone[best] = 1;
    order.push_back(static_cast<Vertex>(best));
    VertexSet bag = nb;
    bag.push_back(static_cast<Vertex>(best));
    bag_of[best] = make_set(std::move(bag));
  }
  std::vector<int> position(n);
  for (std::size_t i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  RawDecomposition raw;
  for (std::size_t i = 0; i < n; ++i) raw.bags.push_back(bag_of[static_cast<std::size_t>(order[i])]);
  // The bag of the i-th eliminated vertex hangs below the bag of its earliest
  // eliminated later neighbor; bags without one are chained to the last bag.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    int parent = static_cast<int>(n) - 1;
    int best = static_cast<int>(n);
    for (Vertex w : raw.bags[i]) {
      const int p = position[static_cast<std::size_t>(w)];
      if (p > static_cast<int>(i) && p < best) best = p;
    }
    if (best < static_cast<int>(n)) parent = best;
    raw.tree_edges.emplace_back(static_cast<int>(i), parent);
  }
  return raw;
}

/// Normalizes a decomposition for the SNDP dynamic program. Without a raw
/// decomposition one is built by min-degree elimination.
inline TreeDecomposition prepare_decomposition(
    int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& graph_edges, Vertex root_vertex,
    const std::optional<RawDecomposition>& supplied = std::nullopt) {
  if (root_vertex < 0 || root_vertex >= num_vertices) throw InputError("root is not a vertex");
  RawDecomposition raw = supplied ? *supplied : elimination_decomposition(num_vertices, graph_edges);
  for (const VertexSet& bag : raw.bags) {
    if (!std::is_sorted(bag.begin(), bag.end())) throw InputError("bags must be sorted");
  }
  validate_raw_decomposition(num_vertices, graph_edges, raw);

  const int nodes = static_cast<int>(raw.bags.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (auto [a, b] : raw.tree_edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  const int raw_root = supplied ? 0 : nodes - 1;

  TreeDecomposition td;
  auto add_node = [&](VertexSet bag) {
    td.bags.push_back(set_union(bag, VertexSet{root_vertex}));
    td.children.emplace_back();
    td.edges.emplace_back();
    return td.num_nodes() - 1;
  };
  // Copy the raw tree rooted at raw_root, binarizing on the way.
  std::vector<std::pair<int, int>> stack{{raw_root, -1}};
  std::vector<int> image(static_cast<std::size_t>(nodes), -1);
  std::vector<int> raw_parent(static_cast<std::size_t>(nodes), -1);
  std::vector<int> order;
  while (!stack.empty()) {
    auto [t, parent] = stack.back();
    stack.pop_back();
    raw_parent[static_cast<std::size_t>(t)] = parent;
    order.push_back(t);
    for (int s : adj[static_cast<std::size_t>(t)]) {
      if (s != parent) stack.emplace_back(s, t);
    }
  }
  for (int t : order) image[static_cast<std::size_t>(t)] = add_node(raw.bags[static_cast<std::size_t>(t)]);
  td.root = image[static_cast<std::size_t>(raw_root)];
  for (int t : order) {
    std::vector<int> kids;
    for (int s : adj[static_cast<std::size_t>(t)]) {
      if (s != raw_parent[static_cast<std::size_t>(t)]) kids.push_back(image[static_cast<std::size_t>(s)]);
    }
    std::sort(kids.begin(), kids.end());
    int at = image[static_cast<std::size_t>(t)];
    while (kids.size() > 2) {
      const int copy = add_node(td.bags[static_cast<std::size_t>(at)]);
      td.children[static_cast<std::size_t>(at)] = {kids.front(), copy};
      kids.erase(kids.begin());
      at = copy;
    }
    if (kids.size() == 1) kids.push_back(add_node(td.bags[static_cast<std::size_t>(at)]));
    td.children[static_cast<std::size_t>(at)] = kids;
  }

  // Each edge goes to the shallowest node whose bag holds both endpoints.
  std::vector<int> depth(static_cast<std::size_t>(td.num_nodes()), 0);
  std::vector<int> bfs{td.root};
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    for (int s : td.children[static_cast<std::size_t>(bfs[i])]) {
      depth[static_cast<std::size_t>(s)] = depth[static_cast<std::size_t>(bfs[i])] + 1;
      bfs.push_back(s);
    }
  }
  for (std::size_t i = 0; i < graph_edges.size(); ++i) {
    auto [u, v] = graph_edges[i];
    int best = -1;
    for (int t : bfs) {
      const VertexSet& bag = td.bags[static_cast<std::size_t>(t)];
      if (contains(bag, u) && contains(bag, v)) {
        best = t;
        break;
      }
    }
    td.edges[static_cast<std::size_t>(best)].push_back(static_cast<int>(i));
  }
  // Leaves must not introduce edges: hang two edge-free copies below them.
  const int existing = td.num_nodes();
  for (int t = 0; t < existing; ++t) {
    if (td.children[static_cast<std::size_t>(t)].empty() && !td.edges[static_cast<std::size_t>(t)].empty()) {
      const int a = add_node(td.bags[static_cast<std::size_t>(t)]);
      const int b = add_node(td.bags[static_cast<std::size_t>(t)]);
      td.children[static_cast<std::size_t>(t)] = {a, b};
    }
  }
  return td;
}

/// Checks the normalized shape; returns an empty string when it holds.
inline std::string check_normalized(const TreeDecomposition& td, int num_vertices,
                                    const std::vector<std::pair<Vertex, Vertex>>& graph_edges,
                                    Vertex root_vertex) {
  RawDecomposition raw;
  raw.bags = td.bags;
  for (int t = 0; t < td.num_nodes(); ++t) {
    for (int s : td.children[static_cast<std::size_t>(t)]) raw.tree_edges.emplace_back(t, s);
  }
  try {
    validate_raw_decomposition(num_vertices, graph_edges, raw);
  } catch (const InputError& e) {
    return e.what();
  }
  std::vector<int> owner(graph_edges.size(), -1);
  for (int t = 0; t < td.num_nodes(); ++t) {
    const auto& ch = td.children[static_cast<std::size_t>(t)];
    if (!ch.empty() && ch.size() != 2) return "node without exactly two children";
    if (ch.empty() && !td.edges[static_cast<std::size_t>(t)].empty()) return "leaf with edges";
    if (!contains(td.bags[static_cast<std::size_t>(t)], root_vertex)) return "root missing from a bag";
    for (int e : td.edges[static_cast<std::size_t>(t)]) {
      if (owner[static_cast<std::size_t>(e)] >= 0) return "edge introduced twice";
      owner[static_cast<std::size_t>(e)] = t;
      auto [u, v] = graph_edges[static_cast<std::size_t>(e)];
      if (!contains(td.bags[static_cast<std::size_t>(t)], u) ||
          !contains(td.bags[static_cast<std::size_t>(t)], v)) {
        return "edge introduced outside its bag";
      }
    }
  }
  for (int o : owner) {
    if (o < 0) return "edge never introduced";
  }
  return {};
}

}  // namespace mimic
