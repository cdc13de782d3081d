#pragma once

// Bounded-value min cuts by shortest augmenting paths. Every query touches at
// most `bound` augmentations, so the work is O(m * bound).

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "mimic/graph.hpp"

namespace mimic {

/// Residual network over a multigraph with a super-source attached to
/// `sources` and a super-sink attached to `sinks`.
class BoundedFlow {
 public:
  BoundedFlow(const MultiGraph& g, std::span<const Vertex> sources,
              std::span<const Vertex> sinks, int attach_capacity)
      : n_(g.num_vertices()), source_(n_), sink_(n_ + 1) {
    const int total = n_ + 2;
    std::vector<int> deg(static_cast<std::size_t>(total), 0);
    for (const Edge& e : g.edges()) {
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
    for (Vertex s : sources) {
      ++deg[static_cast<std::size_t>(s)];
      ++deg[static_cast<std::size_t>(source_)];
    }
    for (Vertex t : sinks) {
      ++deg[static_cast<std::size_t>(t)];
      ++deg[static_cast<std::size_t>(sink_)];
    }
    offsets_.assign(static_cast<std::size_t>(total) + 1, 0);
    for (int v = 0; v < total; ++v) {
      offsets_[static_cast<std::size_t>(v) + 1] =
          offsets_[static_cast<std::size_t>(v)] + deg[static_cast<std::size_t>(v)];
    }
    arcs_.resize(static_cast<std::size_t>(offsets_.back()));
    std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
    auto add_pair = [&](Vertex a, Vertex b, int cap_ab, int cap_ba) {
      int ia = fill[static_cast<std::size_t>(a)]++;
      int ib = fill[static_cast<std::size_t>(b)]++;
      arcs_[static_cast<std::size_t>(ia)] = Arc{b, cap_ab, cap_ab, ib};
      arcs_[static_cast<std::size_t>(ib)] = Arc{a, cap_ba, cap_ba, ia};
    };
    // Neighbor order within each vertex follows insertion; edges are sorted by
    // (u, v) and the adjacency is re-sorted below to keep ascending ids.
    for (const Edge& e : g.edges()) add_pair(e.u, e.v, e.multiplicity, e.multiplicity);
    for (Vertex s : sources) add_pair(source_, s, attach_capacity, 0);
    for (Vertex t : sinks) add_pair(t, sink_, attach_capacity, 0);
    sort_arcs();
  }

  /// Augments until the flow value reaches `limit` or no path remains.
  int run(int limit) {
    std::vector<int> parent_arc(static_cast<std::size_t>(n_ + 2));
    while (value_ < limit) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<Vertex> queue{source_};
      parent_arc[static_cast<std::size_t>(source_)] = -2;
      bool found = false;
      while (!queue.empty() && !found) {
        Vertex u = queue.front();
        queue.pop_front();
        for (int a = offsets_[static_cast<std::size_t>(u)];
             a < offsets_[static_cast<std::size_t>(u) + 1]; ++a) {
          const Arc& arc = arcs_[static_cast<std::size_t>(a)];
          if (arc.residual <= 0 || parent_arc[static_cast<std::size_t>(arc.to)] != -1) continue;
          parent_arc[static_cast<std::size_t>(arc.to)] = a;
          if (arc.to == sink_) {
            found = true;
            break;
          }
          queue.push_back(arc.to);
        }
      }
      if (!found) break;
      int push = limit - value_;
      for (Vertex v = sink_; v != source_;) {
        const Arc& arc = arcs_[static_cast<std::size_t>(parent_arc[static_cast<std::size_t>(v)])];
        push = std::min(push, arc.residual);
        v = arcs_[static_cast<std::size_t>(arc.reverse)].to;
      }
      for (Vertex v = sink_; v != source_;) {
        Arc& arc = arcs_[static_cast<std::size_t>(parent_arc[static_cast<std::size_t>(v)])];
        arc.residual -= push;
        arcs_[static_cast<std::size_t>(arc.reverse)].residual += push;
        v = arcs_[static_cast<std::size_t>(arc.reverse)].to;
      }
      value_ += push;
    }
    return value_;
  }

  int value() const noexcept { return value_; }

  /// Graph vertices reachable from the super-source in the residual network.
  std::vector<char> source_reachable() const {
    std::vector<char> seen(static_cast<std::size_t>(n_ + 2), 0);
    std::vector<Vertex> stack{source_};
    seen[static_cast<std::size_t>(source_)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (int a = offsets_[static_cast<std::size_t>(u)];
           a < offsets_[static_cast<std::size_t>(u) + 1]; ++a) {
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.residual > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
          seen[static_cast<std::size_t>(arc.to)] = 1;
          stack.push_back(arc.to);
        }
      }
    }
    seen.resize(static_cast<std::size_t>(n_));
    return seen;
  }

  /// Graph vertices that can still reach the super-sink in the residual network.
  std::vector<char> sink_reaching() const {
    std::vector<char> seen(static_cast<std::size_t>(n_ + 2), 0);
    std::vector<Vertex> stack{sink_};
    seen[static_cast<std::size_t>(sink_)] = 1;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      // An arc x -> u with residual > 0 is the reverse of an arc u -> x.
      for (int a = offsets_[static_cast<std::size_t>(u)];
           a < offsets_[static_cast<std::size_t>(u) + 1]; ++a) {
        const Arc& out = arcs_[static_cast<std::size_t>(a)];
        const Arc& in = arcs_[static_cast<std::size_t>(out.reverse)];
        if (in.residual > 0 && !seen[static_cast<std::size_t>(out.to)]) {
          seen[static_cast<std::size_t>(out.to)] = 1;
          stack.push_back(out.to);
        }
      }
    }
    seen.resize(static_cast<std::size_t>(n_));
    return seen;
  }

  /// Decomposes the current flow into source-to-sink vertex paths (graph
  /// vertices only). Returns exactly value() paths.
  std::vector<std::vector<Vertex>> paths() const {
    std::vector<int> remaining(arcs_.size(), 0);
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      remaining[a] = std::max(0, arcs_[a].capacity - arcs_[a].residual);
    }
    std::vector<std::vector<Vertex>> out;
    for (int k = 0; k < value_; ++k) {
      std::vector<Vertex> walk{source_};
      Vertex u = source_;
      while (u != sink_) {
        int chosen = -1;
        for (int a = offsets_[static_cast<std::size_t>(u)];
             a < offsets_[static_cast<std::size_t>(u) + 1]; ++a) {
          if (remaining[static_cast<std::size_t>(a)] > 0) {
            chosen = a;
            break;
          }
        }
        if (chosen < 0) break;
        --remaining[static_cast<std::size_t>(chosen)];
        u = arcs_[static_cast<std::size_t>(chosen)].to;
        // Erase loops so the walk stays a simple path.
        auto it = std::find(walk.begin(), walk.end(), u);
        if (it != walk.end()) walk.erase(it + 1, walk.end());
        else walk.push_back(u);
      }
      if (u != sink_) break;
      out.emplace_back(walk.begin() + 1, walk.end() - 1);
    }
    return out;
  }

 private:
  struct Arc {
    Vertex to;
    int residual;
    int capacity;
    int reverse;
  };

  void sort_arcs() {
    // Sort each vertex's arcs by head id and fix the reverse links.
    std::vector<int> order;
    std::vector<int> new_index(arcs_.size());
    std::vector<Arc> sorted(arcs_.size());
    for (int v = 0; v < n_ + 2; ++v) {
      int b = offsets_[static_cast<std::size_t>(v)];
      int e = offsets_[static_cast<std::size_t>(v) + 1];
      order.resize(static_cast<std::size_t>(e - b));
      std::iota(order.begin(), order.end(), b);
      std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return arcs_[static_cast<std::size_t>(x)].to < arcs_[static_cast<std::size_t>(y)].to;
      });
      for (int i = 0; i < e - b; ++i) {
        new_index[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = b + i;
      }
    }
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      Arc arc = arcs_[a];
      arc.reverse = new_index[static_cast<std::size_t>(arc.reverse)];
      sorted[static_cast<std::size_t>(new_index[a])] = arc;
    }
    arcs_ = std::move(sorted);
  }

  int n_;
  Vertex source_;
  Vertex sink_;
  int value_ = 0;
  std::vector<int> offsets_;
  std::vector<Arc> arcs_;
};

namespace detail {

inline void check_query_sets(const MultiGraph& g, const VertexSet& a, const VertexSet& b) {
  for (const VertexSet* s : {&a, &b}) {
    for (Vertex v : *s) {
      if (v < 0 || v >= g.num_vertices()) throw InputError("query vertex out of range");
    }
  }
  if (!disjoint(a, b)) throw InputError("cut sides must be disjoint");
}

}  // namespace detail

/// Minimum cut separating a from b if its value is below `bound`; the
/// returned side0 is the residual-reachable set of a. std::nullopt means the
/// min cut is at least `bound`.
inline std::optional<Cut> bounded_mincut(const MultiGraph& g, const VertexSet& a,
                                         const VertexSet& b, int bound) {
  detail::check_query_sets(g, a, b);
  if (a.empty() || b.empty()) throw InputError("cut sides must be non-empty");
  if (bound < 0) throw InputError("bound must be >= 0");
  BoundedFlow flow(g, a, b, bound + 1);
  if (flow.run(bound) >= bound) return std::nullopt;
  return make_cut(g, flow.source_reachable());
}

/// min(c, mincut_G(a, b)); zero when either side is empty.
inline int thresholded_mincut(const MultiGraph& g, const VertexSet& a, const VertexSet& b,
                              int c) {
  detail::check_query_sets(g, a, b);
  if (a.empty() || b.empty() || c <= 0) return 0;
  BoundedFlow flow(g, a, b, c + 1);
  return std::min(flow.run(c), c);
}

/// The inclusion-maximal source side among minimum (a, b)-cuts, provided the
/// min cut is at most `bound`.
inline std::optional<VertexSet> furthest_mincut_side(const MultiGraph& g, const VertexSet& a,
                                                     const VertexSet& b, int bound,
                                                     int* value = nullptr) {
  detail::check_query_sets(g, a, b);
  BoundedFlow flow(g, a, b, bound + 2);
  int v = flow.run(bound + 1);
  if (v > bound) return std::nullopt;
  if (value != nullptr) *value = v;
  auto reach = flow.sink_reaching();
  VertexSet side;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (!reach[static_cast<std::size_t>(u)]) side.push_back(u);
  }
  return side;
}

}  // namespace mimic
