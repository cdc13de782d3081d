#pragma once

// Brute-force reference implementations. Everything here is deliberately
// naive and has its own flow routine, so the fast solvers can be checked
// against code that shares nothing with them beyond the graph type.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mimic/constrained_spec.hpp"
#include "mimic/graph.hpp"
#include "mimic/sndp_instance.hpp"

namespace mimic {

namespace oracle_detail {

inline void guard(bool ok, const char* what) {
  if (!ok) throw InputError(what);
}

/// Unit-augmenting DFS max flow on an undirected multigraph.
class SimpleFlow {
 public:
  explicit SimpleFlow(const MultiGraph& g) : n_(g.num_vertices()), head_(n_ + 2, -1) {
    for (const Edge& e : g.edges()) add(e.u, e.v, e.multiplicity);
    base_edges_ = static_cast<int>(to_.size());
  }

  /// min(limit, max flow between a and b); empty sides give 0.
  int run(const VertexSet& a, const VertexSet& b, int limit) {
    if (a.empty() || b.empty() || limit <= 0) return 0;
    reset();
    const int big = limit + 1;
    for (Vertex v : a) add_arc(n_, v, big);
    for (Vertex v : b) add_arc(v, n_ + 1, big);
    int flow = 0;
    std::vector<char> seen;
    while (flow < limit) {
      seen.assign(static_cast<std::size_t>(n_ + 2), 0);
      if (!augment(n_, seen)) break;
      ++flow;
    }
    return flow;
  }

 private:
  void add(Vertex u, Vertex v, int cap) {
    link(u, v, cap);
    link(v, u, cap);
    // Arcs come in pairs (2i, 2i+1); the second pair entry is the residual twin.
  }

  void link(Vertex u, Vertex v, int cap) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[static_cast<std::size_t>(u)]);
    head_[static_cast<std::size_t>(u)] = static_cast<int>(to_.size()) - 1;
  }

  void add_arc(Vertex u, Vertex v, int cap) {
    link(u, v, cap);
    link(v, u, 0);
  }

  void reset() {
    // Drop terminal attachments from the previous query and restore capacities.
    while (static_cast<int>(to_.size()) > base_edges_) {
      const std::size_t i = to_.size() - 1;
      Vertex from = to_[i ^ 1U];
      head_[static_cast<std::size_t>(from)] = next_[i];
      to_.pop_back();
      cap_.pop_back();
      next_.pop_back();
    }
    if (original_.empty()) original_ = cap_;
    cap_ = original_;
  }

  bool augment(Vertex u, std::vector<char>& seen) {
    if (u == n_ + 1) return true;
    seen[static_cast<std::size_t>(u)] = 1;
    for (int a = head_[static_cast<std::size_t>(u)]; a >= 0; a = next_[static_cast<std::size_t>(a)]) {
      const Vertex w = to_[static_cast<std::size_t>(a)];
      if (cap_[static_cast<std::size_t>(a)] > 0 && !seen[static_cast<std::size_t>(w)] &&
          augment(w, seen)) {
        --cap_[static_cast<std::size_t>(a)];
        ++cap_[static_cast<std::size_t>(a) ^ 1U];
        return true;
      }
    }
    return false;
  }

  int n_;
  std::vector<int> head_;
  std::vector<Vertex> to_;
  std::vector<int> cap_;
  std::vector<int> next_;
  std::vector<int> original_;
  int base_edges_ = 0;
};

inline int cut_of(const MultiGraph& g, std::uint64_t side0) {
  int s = 0;
  for (const Edge& e : g.edges()) {
    if (((side0 >> e.u) & 1U) != ((side0 >> e.v) & 1U)) s += e.multiplicity;
  }
  return s;
}

inline std::uint64_t bits_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

inline VertexSet set_of_bits(std::uint64_t m, int n) {
  VertexSet out;
  for (int v = 0; v < n; ++v) {
    if ((m >> v) & 1U) out.push_back(v);
  }
  return out;
}

/// Vertices of `within` reachable from `from` inside `within`.
inline std::uint64_t closure(const MultiGraph& g, std::uint64_t from, std::uint64_t within) {
  std::uint64_t reached = from & within;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Edge& e : g.edges()) {
      const bool iu = (reached >> e.u) & 1U;
      const bool iv = (reached >> e.v) & 1U;
      if (iu != iv) {
        const Vertex other = iu ? e.v : e.u;
        if ((within >> other) & 1U) {
          reached |= std::uint64_t{1} << other;
          grew = true;
        }
      }
    }
  }
  return reached;
}

}  // namespace oracle_detail

/// min(c, mincut(a, b)) computed with the oracle's own flow routine.
inline int oracle_thresholded_mincut(const MultiGraph& g, const VertexSet& a, const VertexSet& b,
                                     int c) {
  oracle_detail::SimpleFlow flow(g);
  return flow.run(a, b, c);
}

/// Minimum cut between a and b by enumerating every bipartition.
inline int oracle_mincut_bruteforce(const MultiGraph& g, const VertexSet& a, const VertexSet& b) {
  const int n = g.num_vertices();
  oracle_detail::guard(n <= 20, "brute-force mincut is limited to 20 vertices");
  const std::uint64_t am = oracle_detail::bits_of(a);
  const std::uint64_t bm = oracle_detail::bits_of(b);
  int best = std::numeric_limits<int>::max();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if ((s & am) != am || (s & bm) != 0) continue;
    best = std::min(best, oracle_detail::cut_of(g, s));
  }
  return best;
}

/// Weighted minimum cut of a capacitated edge list, by enumeration.
inline std::int64_t oracle_weighted_mincut(int n, const std::vector<CapacitatedEdge>& edges,
                                           const VertexSet& a, const VertexSet& b) {
  oracle_detail::guard(n <= 20, "brute-force mincut is limited to 20 vertices");
  const std::uint64_t am = oracle_detail::bits_of(a);
  const std::uint64_t bm = oracle_detail::bits_of(b);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if ((s & am) != am || (s & bm) != 0) continue;
    std::int64_t w = 0;
    for (const CapacitatedEdge& e : edges) {
      if (((s >> e.u) & 1U) != ((s >> e.v) & 1U)) w += e.capacity;
    }
    best = std::min(best, w);
  }
  return best;
}

struct Counterexample {
  TerminalSet a;  // terminals of G on side A
  TerminalSet b;
  int value_g = 0;
  int value_h = 0;
};

/// Compares every thresholded terminal cut of g and h. Terminal i of g
/// corresponds to terminal i of h. Returns the first mismatch, if any.
inline std::optional<Counterexample> oracle_cut_equivalence(const MultiGraph& g,
                                                            const MultiGraph& h,
                                                            const TerminalSet& tg,
                                                            const TerminalSet& th, int c) {
  oracle_detail::guard(tg.size() == th.size(), "terminal correspondence is incomplete");
  oracle_detail::guard(tg.size() <= 12, "cut equivalence oracle is limited to 12 terminals");
  for (Vertex t : tg) oracle_detail::guard(t >= 0 && t < g.num_vertices(), "terminal out of range");
  for (Vertex t : th) oracle_detail::guard(t >= 0 && t < h.num_vertices(), "terminal out of range");
  const int k = static_cast<int>(tg.size());
  oracle_detail::SimpleFlow fg(g);
  oracle_detail::SimpleFlow fh(h);
  std::vector<int> digit(static_cast<std::size_t>(k), 0);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= 3;
  VertexSet ag, bg, ah, bh;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t x = code;
    for (int i = 0; i < k; ++i) {
      digit[static_cast<std::size_t>(i)] = static_cast<int>(x % 3);
      x /= 3;
    }
    // (A, B) and (B, A) have the same value: keep assignments whose first
    // non-zero digit is 1.
    int first = 0;
    for (int i = 0; i < k && first == 0; ++i) first = digit[static_cast<std::size_t>(i)];
    if (first != 1) continue;
    ag.clear();
    bg.clear();
    ah.clear();
    bh.clear();
    for (int i = 0; i < k; ++i) {
      const auto u = static_cast<std::size_t>(i);
      if (digit[u] == 1) {
        ag.push_back(tg[u]);
        ah.push_back(th[u]);
      } else if (digit[u] == 2) {
        bg.push_back(tg[u]);
        bh.push_back(th[u]);
      }
    }
    if (bg.empty()) continue;
    const int vg = fg.run(ag, bg, c);
    const int vh = fh.run(ah, bh, c);
    if (vg != vh) {
      std::sort(ag.begin(), ag.end());
      std::sort(bg.begin(), bg.end());
      return Counterexample{ag, bg, vg, vh};
    }
  }
  return std::nullopt;
}

/// A valid constrained cut of minimum size (ties: smallest side0 bitmask),
/// or std::nullopt.
inline std::optional<Cut> oracle_constrained_cut(const MultiGraph& g, const TerminalSet& terminals,
                                                 const ConstrainedSpec& spec) {
  const int n = g.num_vertices();
  oracle_detail::guard(n <= 14, "constrained cut oracle is limited to 14 vertices");
  const std::uint64_t q0 = oracle_detail::bits_of(spec.q0);
  const std::uint64_t q1 = oracle_detail::bits_of(spec.q1);
  const std::uint64_t tm = oracle_detail::bits_of(terminals);
  std::optional<std::uint64_t> best;
  int best_size = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if ((s & q0) != q0 || (s & q1) != 0) continue;
    const int t0 = std::popcount(s & tm);
    const int t1 = std::popcount(tm) - t0;
    if (t0 < spec.c0 || t1 < spec.c1) continue;
    const int size = oracle_detail::cut_of(g, s);
    if (size > spec.budget) continue;
    if (!best || size < best_size) {
      best = s;
      best_size = size;
    }
  }
  if (!best) return std::nullopt;
  return make_cut(g, oracle_detail::set_of_bits(*best, n));
}

/// Important (x, y)-cuts of size <= budget: source sides S with x in S,
/// y outside, every vertex of S reachable from x inside S, and no such S'
/// strictly containing S with at most as many cut edges.
inline std::vector<Cut> oracle_important_cuts(const MultiGraph& g, const VertexSet& x,
                                              const VertexSet& y, int budget) {
  const int n = g.num_vertices();
  oracle_detail::guard(n <= 12, "important cut oracle is limited to 12 vertices");
  const std::uint64_t xm = oracle_detail::bits_of(x);
  const std::uint64_t ym = oracle_detail::bits_of(y);
  std::vector<std::pair<std::uint64_t, int>> candidates;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if ((s & xm) != xm || (s & ym) != 0) continue;
    if (oracle_detail::closure(g, xm, s) != s) continue;
    const int size = oracle_detail::cut_of(g, s);
    if (size <= budget) candidates.emplace_back(s, size);
  }
  std::vector<Cut> out;
  for (const auto& [s, size] : candidates) {
    bool dominated = false;
    for (const auto& [t, other] : candidates) {
      if (t != s && (t & s) == s && other <= size) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(make_cut(g, oracle_detail::set_of_bits(s, n)));
  }
  std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) {
    return std::make_pair(a.size(), a.side0) < std::make_pair(b.size(), b.side0);
  });
  return out;
}

/// A bipartition (A, B) of the non-terminal vertices of a pendant graph with
/// |E(A, B)| < min(pendants on A, pendants on B, q). Pendants follow their
/// attachment vertex in the returned cut.
inline std::optional<Cut> oracle_violating_cut(const MultiGraph& g, const TerminalSet& terminals,
                                               int q) {
  const int n = g.num_vertices();
  const auto is_terminal = mask_of(n, terminals);
  VertexSet inner;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_terminal[static_cast<std::size_t>(v)]) inner.push_back(v);
  }
  const int m = static_cast<int>(inner.size());
  oracle_detail::guard(m <= 20, "linkedness oracle is limited to 20 vertices");
  oracle_detail::guard(n <= 64, "linkedness oracle is limited to 64 vertices in total");
  if (m < 2) return std::nullopt;
  // The first inner vertex stays on side A, which covers each bipartition once.
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m - 1)); ++code) {
    std::uint64_t side_a = std::uint64_t{1} << inner[0];
    for (int i = 1; i < m; ++i) {
      if (((code >> (i - 1)) & 1U) == 0) side_a |= std::uint64_t{1} << inner[static_cast<std::size_t>(i)];
    }
    int pa = 0;
    int pb = 0;
    int inside = 0;
    for (const Edge& e : g.edges()) {
      const bool tu = is_terminal[static_cast<std::size_t>(e.u)];
      const bool tv = is_terminal[static_cast<std::size_t>(e.v)];
      if (tu && tv) continue;
      if (tu || tv) {
        const Vertex at = tu ? e.v : e.u;
        (((side_a >> at) & 1U) ? pa : pb) += e.multiplicity;
      } else if (((side_a >> e.u) & 1U) != ((side_a >> e.v) & 1U)) {
        inside += e.multiplicity;
      }
    }
    if (inside < std::min({pa, pb, q})) {
      std::uint64_t full = side_a;
      for (const Edge& e : g.edges()) {
        const bool tu = is_terminal[static_cast<std::size_t>(e.u)];
        const bool tv = is_terminal[static_cast<std::size_t>(e.v)];
        if (tu != tv) {
          const Vertex at = tu ? e.v : e.u;
          const Vertex pendant = tu ? e.u : e.v;
          if ((side_a >> at) & 1U) full |= std::uint64_t{1} << pendant;
        }
      }
      return make_cut(g, oracle_detail::set_of_bits(full, n));
    }
  }
  return std::nullopt;
}

inline bool oracle_is_linked(const MultiGraph& g, const TerminalSet& terminals, int q) {
  return !oracle_violating_cut(g, terminals, q).has_value();
}

/// Cheapest edge subset meeting every demand, by enumerating all subsets.
/// Ties are broken by the smallest subset bitmask.
inline std::optional<SndpSolution> oracle_sndp(const SndpInstance& inst, int c) {
  validate_sndp(inst, c);
  const int m = static_cast<int>(inst.edges.size());
  oracle_detail::guard(m <= 18, "SNDP oracle is limited to 18 edges");
  std::vector<Demand> active;
  for (const Demand& d : inst.demands) {
    if (d.vertex != inst.root) active.push_back(d);
  }
  std::optional<SndpSolution> best;
  std::vector<int> deg(static_cast<std::size_t>(inst.num_vertices));
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::int64_t cost = 0;
    std::fill(deg.begin(), deg.end(), 0);
    std::vector<int> chosen;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1U) {
        const CapacitatedEdge& e = inst.edges[static_cast<std::size_t>(i)];
        cost += e.capacity;
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
        chosen.push_back(i);
      }
    }
    if (best && cost >= best->cost) continue;
    bool ok = true;
    for (const Demand& d : active) {
      if (deg[static_cast<std::size_t>(d.vertex)] < d.requirement ||
          deg[static_cast<std::size_t>(inst.root)] < d.requirement) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    MultiGraph sub = selected_graph(inst, chosen);
    oracle_detail::SimpleFlow flow(sub);
    for (const Demand& d : active) {
      if (flow.run({inst.root}, {d.vertex}, d.requirement) < d.requirement) {
        ok = false;
        break;
      }
    }
    if (ok) best = SndpSolution{cost, chosen};
  }
  return best;
}

}  // namespace mimic
