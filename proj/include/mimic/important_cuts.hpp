#pragma once

// Important (X, Y)-cuts: source sides that are reachability-closed from X and
// inclusion-maximal among such cuts with at most as many edges. At most 4^l
// of them have size <= l.

#include <set>
#include <tuple>
#include <vector>

#include "mimic/graph.hpp"
#include "mimic/mincut.hpp"

namespace mimic {

struct ImportantCut {
  Cut cut;
  int size = 0;
};

namespace detail {

/// Vertices of `within` reachable from x using only vertices of `within`.
inline std::vector<char> reach_within(const MultiGraph& g, const VertexSet& x,
                                      std::span<const char> within) {
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<Vertex> stack;
  for (Vertex v : x) {
    if (within[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbors(u)) {
      auto w = static_cast<std::size_t>(inc.neighbor);
      if (within[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return seen;
}

inline void check_terminal_pair(const MultiGraph& g, const VertexSet& x, const VertexSet& y) {
  detail::check_query_sets(g, x, y);
  if (x.empty() || y.empty()) throw InputError("X and Y must be non-empty");
}

}  // namespace detail

/// True iff `cut` is an important (x, y)-cut of g.
inline bool is_important(const MultiGraph& g, const VertexSet& x, const VertexSet& y,
                         const Cut& cut) {
  detail::check_terminal_pair(g, x, y);
  auto side = mask_of(g.num_vertices(), cut.side0);
  for (Vertex v : x) {
    if (!side[static_cast<std::size_t>(v)]) throw InputError("cut does not separate X from Y");
  }
  for (Vertex v : y) {
    if (side[static_cast<std::size_t>(v)]) throw InputError("cut does not separate X from Y");
  }
  if (detail::reach_within(g, x, side) != side) return false;
  const int size = crossing_size(g, side);
  int value = 0;
  auto furthest = furthest_mincut_side(g, cut.side0, y, size, &value);
  if (!furthest || value < size) return false;
  // A strictly larger reachability-closed side with the same cut value exists
  // iff the closure of side0 inside the furthest min-cut side grows.
  auto within = mask_of(g.num_vertices(), *furthest);
  return detail::reach_within(g, cut.side0, within) == side;
}

namespace detail {

class ImportantCutSearch {
 public:
  ImportantCutSearch(const MultiGraph& g, const VertexSet& x, const VertexSet& y, int budget)
      : g_(g), x_(x), y_(y), budget_(budget), in_y_(mask_of(g.num_vertices(), y)) {}

  std::vector<ImportantCut> run() {
    recurse(g_, x_, budget_);
    std::vector<ImportantCut> out;
    for (const VertexSet& side : found_) {
      Cut cut = make_cut(g_, side);
      int size = cut.size();
      out.push_back(ImportantCut{std::move(cut), size});
    }
    std::sort(out.begin(), out.end(), [](const ImportantCut& a, const ImportantCut& b) {
      return std::tie(a.size, a.cut.side0) < std::tie(b.size, b.cut.side0);
    });
    return out;
  }

 private:
  void recurse(const MultiGraph& work, const VertexSet& x, int k) {
    if (k < 0) return;
    auto furthest = furthest_mincut_side(work, x, y_, k);
    if (!furthest) return;
    auto within = mask_of(work.num_vertices(), *furthest);
    auto closure_mask = reach_within(work, x, within);
    VertexSet closure = set_of(closure_mask);
    consider(closure);

    // Branch on the first edge leaving the closure.
    for (Vertex u : closure) {
      for (const Incidence& inc : work.neighbors(u)) {
        if (closure_mask[static_cast<std::size_t>(inc.neighbor)]) continue;
        const Vertex v = inc.neighbor;
        if (!in_y_[static_cast<std::size_t>(v)]) {
          recurse(work, set_union(closure, VertexSet{v}), k);
        }
        std::vector<Edge> rest;
        rest.reserve(work.edges().size());
        for (const Edge& e : work.edges()) {
          if (!((e.u == std::min(u, v)) && (e.v == std::max(u, v)))) rest.push_back(e);
        }
        MultiGraph without(work.num_vertices(), std::move(rest));
        recurse(without, closure, k - inc.multiplicity);
        return;
      }
    }
  }

  void consider(const VertexSet& side) {
    if (seen_.count(side) != 0) return;
    seen_.insert(side);
    auto mask = mask_of(g_.num_vertices(), side);
    if (crossing_size(g_, mask) > budget_) return;
    Cut cut = make_cut(g_, mask);
    if (is_important(g_, x_, y_, cut)) found_.insert(side);
  }

  const MultiGraph& g_;
  const VertexSet& x_;
  const VertexSet& y_;
  int budget_;
  std::vector<char> in_y_;
  std::set<VertexSet> seen_;
  std::set<VertexSet> found_;
};

}  // namespace detail

/// All important (x, y)-cuts with at most `budget` cut edges, sorted by
/// (size, side0).
inline std::vector<ImportantCut> enumerate_important_cuts(const MultiGraph& g,
                                                          const VertexSet& x,
                                                          const VertexSet& y, int budget) {
  detail::check_terminal_pair(g, x, y);
  if (budget < 0) throw InputError("budget must be >= 0");
  return detail::ImportantCutSearch(g, x, y, budget).run();
}

}  // namespace mimic
