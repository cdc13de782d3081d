#pragma once

// Exact rooted survivable network design over a tree decomposition.
//
// Every node t carries a pair of states: Gamma, the connectivity of the chosen
// edges inside the subtree of t, and Delta, the connectivity of the chosen
// edges outside it, both seen through the bag X_t. A state is stored as a
// small representative graph whose first |X_t| vertices are the bag; two
// states are equal when all thresholded cuts between bag subsets agree.
// Only states arising from actual edge choices are generated: Gamma bottom-up,
// Delta top-down, and the cost table is filled over reachable pairs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mimic/graph.hpp"
#include "mimic/linkage.hpp"
#include "mimic/mincut.hpp"
#include "mimic/sndp_instance.hpp"
#include "mimic/tree_decomposition.hpp"

namespace mimic {

/// Thresholded cut values between all disjoint pairs of bag subsets, indexed
/// by the base-3 code of the pair (digit 1: S1, digit 2: S2, in bag order).
struct StateSignature {
  std::vector<std::uint8_t> values;

  friend bool operator==(const StateSignature&, const StateSignature&) = default;
  friend auto operator<=>(const StateSignature&, const StateSignature&) = default;
};

/// Signature of `graph` over `bag` (vertex ids of graph).
inline StateSignature state_signature(const MultiGraph& graph, const VertexSet& bag, int c) {
  const std::size_t b = bag.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < b; ++i) total *= 3;
  StateSignature sig;
  sig.values.assign(total, 0);
  VertexSet s1;
  VertexSet s2;
  for (std::size_t code = 0; code < total; ++code) {
    s1.clear();
    s2.clear();
    std::size_t x = code;
    for (std::size_t i = 0; i < b; ++i) {
      const std::size_t d = x % 3;
      x /= 3;
      if (d == 1) s1.push_back(bag[i]);
      if (d == 2) s2.push_back(bag[i]);
    }
    if (s1.empty() || s2.empty()) continue;
    // The mirrored pair was computed earlier iff its code is smaller.
    std::size_t mirror = 0;
    std::size_t scale = 1;
    x = code;
    for (std::size_t i = 0; i < b; ++i) {
      const std::size_t d = x % 3;
      x /= 3;
      mirror += (d == 0 ? 0 : 3 - d) * scale;
      scale *= 3;
    }
    if (mirror < code) {
      sig.values[code] = sig.values[mirror];
      continue;
    }
    sig.values[code] = static_cast<std::uint8_t>(thresholded_mincut(graph, s1, s2, c));
  }
  return sig;
}

struct SndpNodeTrace {
  StateSignature gamma;
  StateSignature delta;
};

struct SndpResult {
  SndpSolution solution;
  /// Per decomposition node, the signatures of the states on the optimal path.
  std::vector<SndpNodeTrace> trace;
};

namespace detail {

/// A representative graph whose vertices 0..|bag|-1 are the bag in order.
struct StateGraph {
  int num_vertices = 0;
  std::vector<Edge> edges;
};

/// Glues representatives on shared bag vertices; internal vertices are kept
/// apart. Returns the union graph and the union ids of `bag`.
class Gluer {
 public:
  explicit Gluer(const VertexSet& core) {
    for (Vertex v : core) id(v);
  }

  Vertex id(Vertex global) {
    auto [it, inserted] = ids_.emplace(global, next_);
    if (inserted) ++next_;
    return it->second;
  }

  void add(const StateGraph& s, const VertexSet& bag) {
    std::vector<Vertex> map(static_cast<std::size_t>(s.num_vertices));
    for (std::size_t i = 0; i < bag.size(); ++i) map[i] = id(bag[i]);
    for (std::size_t i = bag.size(); i < map.size(); ++i) map[i] = next_++;
    for (const Edge& e : s.edges) {
      edges_.push_back(Edge{std::min(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]),
                            std::max(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)]),
                            e.multiplicity});
    }
  }

  void add_edge(Vertex u, Vertex v) {
    const Vertex a = id(u);
    const Vertex b = id(v);
    edges_.push_back(Edge{std::min(a, b), std::max(a, b), 1});
  }

  MultiGraph graph() const { return MultiGraph(next_, edges_); }

  VertexSet ids_of(const VertexSet& bag) const {
    VertexSet out;
    for (Vertex v : bag) out.push_back(ids_.at(v));
    return out;
  }

 private:
  std::map<Vertex, Vertex> ids_;
  Vertex next_ = 0;
  std::vector<Edge> edges_;
};

/// Rewrites a union graph as a StateGraph over `bag_ids` (its bag vertices),
/// shrinking it with a mimicking network when that helps.
inline StateGraph compact_state(const MultiGraph& g, const VertexSet& bag_ids, int c) {
  const int b = static_cast<int>(bag_ids.size());
  auto place = [&](const MultiGraph& h, const std::vector<Vertex>& group_of) {
    // group_of[v] = bag position or kNoVertex for internal vertices.
    std::vector<Vertex> to(static_cast<std::size_t>(h.num_vertices()), kNoVertex);
    int next = b;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
      const Vertex grp = group_of[static_cast<std::size_t>(v)];
      to[static_cast<std::size_t>(v)] = grp != kNoVertex ? grp : next++;
    }
    std::vector<Edge> edges;
    for (const Edge& e : h.edges()) {
      const Vertex a = to[static_cast<std::size_t>(e.u)];
      const Vertex z = to[static_cast<std::size_t>(e.v)];
      if (a != z) edges.push_back(Edge{std::min(a, z), std::max(a, z), e.multiplicity});
    }
    MultiGraph merged(next, std::move(edges));
    return StateGraph{next, std::vector<Edge>(merged.edges().begin(), merged.edges().end())};
  };
  std::vector<Vertex> plain(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  for (int i = 0; i < b; ++i) plain[static_cast<std::size_t>(bag_ids[static_cast<std::size_t>(i)])] = i;
  StateGraph direct = place(g, plain);
  if (direct.num_vertices == b) return direct;

  std::vector<CapacitatedEdge> cap;
  for (const Edge& e : g.edges()) cap.push_back(CapacitatedEdge{e.u, e.v, e.multiplicity});
  MimickingNetwork net = build_mimicking_network(g.num_vertices(), cap, bag_ids, c);
  // Each bag vertex's pendant copies merge back into a single vertex.
  std::vector<Vertex> group(static_cast<std::size_t>(net.graph.num_vertices()), kNoVertex);
  for (int i = 0; i < b; ++i) {
    for (Vertex p : net.terminal_map[static_cast<std::size_t>(i)]) group[static_cast<std::size_t>(p)] = i;
  }
  StateGraph small = place(net.graph, group);
  return small.num_vertices < direct.num_vertices ? small : direct;
}

struct Composition {
  std::uint32_t y = 0;  // subset of the node's introduced edges
  int g1 = -1;
  int g2 = -1;
  int gamma = -1;
};

struct NodeStates {
  std::vector<StateGraph> gamma;
  std::vector<StateSignature> gamma_sig;
  std::vector<StateGraph> delta;
  std::vector<StateSignature> delta_sig;
  std::vector<Composition> compositions;
  std::vector<std::int64_t> y_cost;
  /// Per composition and parent Delta: child Delta ids.
  std::map<std::pair<int, int>, std::pair<int, int>> delta_children;
};

class SndpSolver {
 public:
  SndpSolver(const SndpInstance& inst, const TreeDecomposition& td, int c)
      : inst_(inst), td_(td), c_(c), nodes_(static_cast<std::size_t>(td.num_nodes())) {}

  std::optional<SndpResult> solve() {
    const auto order = td_.post_order();
    for (int t : order) build_gamma(t);
    std::vector<int> top_down(order.rbegin(), order.rend());
    const VertexSet& root_bag = td_.bags[static_cast<std::size_t>(td_.root)];
    add_delta(td_.root, empty_state(root_bag));
    for (int t : top_down) build_delta(t);
    for (int t : order) fill_table(t);

    const auto& root_table = table_[static_cast<std::size_t>(td_.root)];
    std::optional<std::pair<int, int>> best;
    std::int64_t best_cost = 0;
    for (const auto& [key, entry] : root_table) {
      if (key.second != 0) continue;
      if (!best || entry.cost < best_cost) {
        best = key;
        best_cost = entry.cost;
      }
    }
    if (!best) return std::nullopt;
    SndpResult result;
    result.trace.resize(static_cast<std::size_t>(td_.num_nodes()));
    std::vector<int> chosen;
    reconstruct(td_.root, best->first, best->second, chosen, result.trace);
    std::sort(chosen.begin(), chosen.end());
    result.solution.cost = best_cost;
    result.solution.edges = chosen;
    return result;
  }

 private:
  struct Entry {
    std::int64_t cost = 0;
    int composition = -1;
  };

  StateGraph empty_state(const VertexSet& bag) const {
    return StateGraph{static_cast<int>(bag.size()), {}};
  }

  const VertexSet& bag(int t) const { return td_.bags[static_cast<std::size_t>(t)]; }
  NodeStates& node(int t) { return nodes_[static_cast<std::size_t>(t)]; }

  static int intern(std::vector<StateGraph>& graphs, std::vector<StateSignature>& sigs,
                    std::map<StateSignature, int>& index, StateSignature sig,
                    const std::function<StateGraph()>& make) {
    auto it = index.find(sig);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(graphs.size());
    graphs.push_back(make());
    sigs.push_back(sig);
    index.emplace(std::move(sig), id);
    return id;
  }

  void build_gamma(int t) {
    NodeStates& ns = node(t);
    const auto& ch = td_.children[static_cast<std::size_t>(t)];
    if (ch.empty()) {
      ns.gamma.push_back(empty_state(bag(t)));
      ns.gamma_sig.push_back(state_signature(MultiGraph(static_cast<int>(bag(t).size()), {}),
                                             identity(bag(t).size()), c_));
      return;
    }
    const auto& local_edges = td_.edges[static_cast<std::size_t>(t)];
    const std::uint32_t subsets = std::uint32_t{1} << local_edges.size();
    std::map<StateSignature, int> index;
    const NodeStates& n1 = node(ch[0]);
    const NodeStates& n2 = node(ch[1]);
    for (std::uint32_t y = 0; y < subsets; ++y) {
      std::int64_t cost = 0;
      for (std::size_t i = 0; i < local_edges.size(); ++i) {
        if ((y >> i) & 1U) cost += inst_.edges[static_cast<std::size_t>(local_edges[i])].capacity;
      }
      for (int g1 = 0; g1 < static_cast<int>(n1.gamma.size()); ++g1) {
        for (int g2 = 0; g2 < static_cast<int>(n2.gamma.size()); ++g2) {
          Gluer glue(bag(t));
          add_y(glue, t, y);
          glue.add(n1.gamma[static_cast<std::size_t>(g1)], bag(ch[0]));
          glue.add(n2.gamma[static_cast<std::size_t>(g2)], bag(ch[1]));
          MultiGraph u = glue.graph();
          const VertexSet ids = glue.ids_of(bag(t));
          const int gamma = intern(ns.gamma, ns.gamma_sig, index, state_signature(u, ids, c_),
                                   [&] { return compact_state(u, ids, c_); });
          ns.compositions.push_back(Composition{y, g1, g2, gamma});
          ns.y_cost.push_back(cost);
        }
      }
    }
  }

  void add_y(Gluer& glue, int t, std::uint32_t y) const {
    const auto& local_edges = td_.edges[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < local_edges.size(); ++i) {
      if ((y >> i) & 1U) {
        const CapacitatedEdge& e = inst_.edges[static_cast<std::size_t>(local_edges[i])];
        glue.add_edge(e.u, e.v);
      }
    }
  }

  static VertexSet identity(std::size_t b) {
    VertexSet out(b);
    for (std::size_t i = 0; i < b; ++i) out[i] = static_cast<Vertex>(i);
    return out;
  }

  int add_delta(int t, const StateGraph& s) {
    NodeStates& ns = node(t);
    MultiGraph g(s.num_vertices, s.edges);
    auto& index = delta_index_[t];
    return intern(ns.delta, ns.delta_sig, index, state_signature(g, identity(bag(t).size()), c_),
                  [&] { return s; });
  }

  /// Delta of child `which` given the parent's Delta and a composition.
  int child_delta(int t, int which, int delta, const Composition& comp) {
    const auto& ch = td_.children[static_cast<std::size_t>(t)];
    const int child = ch[static_cast<std::size_t>(which)];
    const int sibling = ch[static_cast<std::size_t>(1 - which)];
    const int sibling_gamma = which == 0 ? comp.g2 : comp.g1;
    auto key = std::make_tuple(t, which, delta, comp.y, sibling_gamma);
    auto it = delta_memo_.find(key);
    if (it != delta_memo_.end()) return it->second;
    Gluer glue(bag(child));
    add_y(glue, t, comp.y);
    glue.add(node(t).delta[static_cast<std::size_t>(delta)], bag(t));
    glue.add(node(sibling).gamma[static_cast<std::size_t>(sibling_gamma)], bag(sibling));
    MultiGraph u = glue.graph();
    const VertexSet ids = glue.ids_of(bag(child));
    NodeStates& cs = node(child);
    auto& index = delta_index_[child];
    const int id = intern(cs.delta, cs.delta_sig, index, state_signature(u, ids, c_),
                          [&] { return compact_state(u, ids, c_); });
    delta_memo_.emplace(key, id);
    return id;
  }

  void build_delta(int t) {
    const auto& ch = td_.children[static_cast<std::size_t>(t)];
    if (ch.empty()) return;
    NodeStates& ns = node(t);
    for (int d = 0; d < static_cast<int>(ns.delta.size()); ++d) {
      for (int k = 0; k < static_cast<int>(ns.compositions.size()); ++k) {
        const Composition comp = ns.compositions[static_cast<std::size_t>(k)];
        const int d1 = child_delta(t, 0, d, comp);
        const int d2 = child_delta(t, 1, d, comp);
        node(t).delta_children[{k, d}] = {d1, d2};
      }
    }
  }

  bool demands_hold(int t, int gamma, int delta) {
    const VertexSet& b = bag(t);
    Gluer glue(b);
    bool any = false;
    for (const Demand& d : inst_.demands) {
      if (d.vertex != inst_.root && contains(b, d.vertex)) any = true;
    }
    if (!any) return true;
    NodeStates& ns = node(t);
    glue.add(ns.gamma[static_cast<std::size_t>(gamma)], b);
    glue.add(ns.delta[static_cast<std::size_t>(delta)], b);
    MultiGraph u = glue.graph();
    for (const Demand& d : inst_.demands) {
      if (d.vertex == inst_.root || !contains(b, d.vertex)) continue;
      if (thresholded_mincut(u, {glue.ids_of({inst_.root})[0]}, {glue.ids_of({d.vertex})[0]}, c_) <
          d.requirement) {
        return false;
      }
    }
    return true;
  }

  void fill_table(int t) {
    auto& table = table_[t];
    NodeStates& ns = node(t);
    const auto& ch = td_.children[static_cast<std::size_t>(t)];
    if (ch.empty()) {
      for (int d = 0; d < static_cast<int>(ns.delta.size()); ++d) {
        if (demands_hold(t, 0, d)) table[{0, d}] = Entry{0, -1};
      }
      return;
    }
    const auto& t1 = table_[ch[0]];
    const auto& t2 = table_[ch[1]];
    std::map<std::pair<int, int>, char> checked;
    for (int d = 0; d < static_cast<int>(ns.delta.size()); ++d) {
      for (int k = 0; k < static_cast<int>(ns.compositions.size()); ++k) {
        const Composition& comp = ns.compositions[static_cast<std::size_t>(k)];
        const auto [d1, d2] = ns.delta_children.at({k, d});
        auto a = t1.find({comp.g1, d1});
        if (a == t1.end()) continue;
        auto b = t2.find({comp.g2, d2});
        if (b == t2.end()) continue;
        const std::int64_t cost = ns.y_cost[static_cast<std::size_t>(k)] + a->second.cost + b->second.cost;
        const std::pair<int, int> key{comp.gamma, d};
        auto [c_it, fresh] = checked.emplace(key, 0);
        if (fresh) c_it->second = demands_hold(t, comp.gamma, d) ? 1 : 0;
        if (!c_it->second) continue;
        auto it = table.find(key);
        if (it == table.end() || cost < it->second.cost) table[key] = Entry{cost, k};
      }
    }
  }

  void reconstruct(int t, int gamma, int delta, std::vector<int>& chosen,
                   std::vector<SndpNodeTrace>& trace) {
    NodeStates& ns = node(t);
    trace[static_cast<std::size_t>(t)] =
        SndpNodeTrace{ns.gamma_sig[static_cast<std::size_t>(gamma)], ns.delta_sig[static_cast<std::size_t>(delta)]};
    const Entry& e = table_[t].at({gamma, delta});
    if (e.composition < 0) return;
    const Composition& comp = ns.compositions[static_cast<std::size_t>(e.composition)];
    const auto& local_edges = td_.edges[static_cast<std::size_t>(t)];
    for (std::size_t i = 0; i < local_edges.size(); ++i) {
      if ((comp.y >> i) & 1U) chosen.push_back(local_edges[i]);
    }
    const auto [d1, d2] = ns.delta_children.at({e.composition, delta});
    const auto& ch = td_.children[static_cast<std::size_t>(t)];
    reconstruct(ch[0], comp.g1, d1, chosen, trace);
    reconstruct(ch[1], comp.g2, d2, chosen, trace);
  }

  const SndpInstance& inst_;
  const TreeDecomposition& td_;
  int c_;
  std::vector<NodeStates> nodes_;
  std::map<int, std::map<StateSignature, int>> delta_index_;
  std::map<std::tuple<int, int, int, std::uint32_t, int>, int> delta_memo_;
  std::map<int, std::map<std::pair<int, int>, Entry>> table_;
};

inline std::vector<std::pair<Vertex, Vertex>> edge_pairs(const SndpInstance& inst) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const CapacitatedEdge& e : inst.edges) out.emplace_back(e.u, e.v);
  return out;
}

}  // namespace detail

/// Minimum-cost edge set giving every demand vertex `requirement`
/// edge-disjoint paths to the root, or std::nullopt when none exists.
inline std::optional<SndpResult> solve_sndp(const SndpInstance& inst, const TreeDecomposition& td,
                                            int c) {
  validate_sndp(inst, c);
  const std::string problem = check_normalized(td, inst.num_vertices, detail::edge_pairs(inst), inst.root);
  if (!problem.empty()) throw InputError("decomposition is not normalized: " + problem);
  for (const auto& local : td.edges) {
    if (local.size() > 20) throw InputError("too many edges introduced at one node");
  }
  auto result = detail::SndpSolver(inst, td, c).solve();
  if (!result) return std::nullopt;
  MultiGraph chosen = selected_graph(inst, result->solution.edges);
  for (const Demand& d : inst.demands) {
    if (d.vertex == inst.root) continue;
    if (thresholded_mincut(chosen, {inst.root}, {d.vertex}, c) < d.requirement) {
      throw std::logic_error("SNDP solution fails a demand");
    }
  }
  return result;
}

/// Convenience overload building the decomposition first.
inline std::optional<SndpResult> solve_sndp(const SndpInstance& inst, int c) {
  validate_sndp(inst, c);
  TreeDecomposition td = prepare_decomposition(inst.num_vertices, detail::edge_pairs(inst), inst.root);
  return solve_sndp(inst, td, c);
}

}  // namespace mimic
