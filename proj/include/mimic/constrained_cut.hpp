#pragma once

// (Q0, Q1, c0, c1, l)-constrained cuts: bipartitions with forced sides for
// Q0/Q1, at least c0 (c1) terminals on side 0 (side 1) and at most l cut
// edges. Two-sided quotas are reduced to one-sided ones by guessing how a
// minimum cut interacts with the solution; one-sided quotas are solved by
// combining important cuts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mimic/constrained_spec.hpp"
#include "mimic/graph.hpp"
#include "mimic/important_cuts.hpp"
#include "mimic/mincut.hpp"

namespace mimic {

struct ProfileSlot {
  int terminals = 0;
  int edges = 0;

  friend bool operator==(const ProfileSlot&, const ProfileSlot&) = default;
  friend auto operator<=>(const ProfileSlot&, const ProfileSlot&) = default;
};

/// Slots are kept in non-increasing order, so each multiset appears once.
struct CutProfileVector {
  std::vector<ProfileSlot> slots;

  int total_terminals() const {
    int s = 0;
    for (const ProfileSlot& p : slots) s += p.terminals;
    return s;
  }
  int total_edges() const {
    int s = 0;
    for (const ProfileSlot& p : slots) s += p.edges;
    return s;
  }

  friend bool operator==(const CutProfileVector&, const CutProfileVector&) = default;
};

struct ProfileBounds {
  int max_slot_terminals = 1;
  int min_total_terminals = 0;
  int max_total_terminals = 0;
  int max_slots = 0;
  int max_total_edges = 0;
};

namespace detail {

inline void extend_profiles(const ProfileBounds& b, CutProfileVector& cur, int terminals,
                            int edges, std::vector<CutProfileVector>& out) {
  if (!cur.slots.empty() && terminals >= b.min_total_terminals) out.push_back(cur);
  if (static_cast<int>(cur.slots.size()) >= b.max_slots) return;
  for (int k = b.max_slot_terminals; k >= 1; --k) {
    if (terminals + k > b.max_total_terminals) continue;
    for (int e = b.max_total_edges - edges; e >= 0; --e) {
      ProfileSlot slot{k, e};
      if (!cur.slots.empty() && cur.slots.back() < slot) continue;
      cur.slots.push_back(slot);
      extend_profiles(b, cur, terminals + k, edges + e, out);
      cur.slots.pop_back();
    }
  }
}

}  // namespace detail

/// Every non-empty slot multiset within the given bounds.
inline std::vector<CutProfileVector> enumerate_profiles(const ProfileBounds& bounds) {
  std::vector<CutProfileVector> out;
  if (bounds.max_slot_terminals < 1 || bounds.max_slots < 1 || bounds.max_total_edges < 0) {
    return out;
  }
  CutProfileVector cur;
  detail::extend_profiles(bounds, cur, 0, 0, out);
  return out;
}

/// Profiles with at most c slots, slot terminal counts in [1, c-1], total
/// terminals in [c, 2c] and total cut edges at most l.
inline std::vector<CutProfileVector> enumerate_profiles(int c, int budget) {
  if (c < 2) throw InputError("profiles need c >= 2");
  if (budget < 0) throw InputError("budget must be >= 0");
  return enumerate_profiles(ProfileBounds{c - 1, c, 2 * c, c, budget});
}

/// One sub-instance of the two-sided reduction. The vertices outside
/// `vertices` already have a side in `fixed_side0` (1 = side 0).
struct SubInstance {
  VertexSet vertices;
  TerminalSet terminals;
  ConstrainedSpec spec;
  std::vector<char> fixed_side0;
};

struct ReductionStep {
  enum class Outcome { kNoCutWithinBudget, kQuotasMet, kSubInstances };
  Outcome outcome = Outcome::kNoCutWithinBudget;
  /// Per terminal guess with a cut within budget: the minimum cut found.
  std::vector<Cut> initial_cuts;
  /// Set for kQuotasMet.
  std::optional<Cut> immediate;
  std::vector<SubInstance> subinstances;
};

namespace detail {

using SideMask = std::vector<char>;

inline bool terminal_degrees_ok(const MultiGraph& g, const TerminalSet& terminals) {
  for (Vertex t : terminals) {
    if (g.neighbors(t).size() > 1) return false;
  }
  return true;
}

/// Min cut between q0 and q1 within budget; an empty side is free.
inline std::optional<SideMask> plain_cut(const MultiGraph& g, const VertexSet& q0,
                                         const VertexSet& q1, int budget) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (q1.empty()) return SideMask(n, 1);
  if (q0.empty()) return SideMask(n, 0);
  auto cut = bounded_mincut(g, q0, q1, budget + 1);
  if (!cut) return std::nullopt;
  return mask_of(g.num_vertices(), cut->side0);
}

struct CandidateCut {
  SideMask side;
  TerminalSet terminals;
  int size = 0;
};

inline bool terminals_disjoint(const TerminalSet& a, std::span<const char> used) {
  for (Vertex t : a) {
    if (used[static_cast<std::size_t>(t)]) return false;
  }
  return true;
}

/// One-sided instance: at least `quota` terminals on side 0, Q0/Q1 forced,
/// at most `budget` cut edges.
class BaseSolver {
 public:
  BaseSolver(const MultiGraph& g, const TerminalSet& terminals, const VertexSet& q0,
             const VertexSet& q1, int quota, int budget)
      : g_(g), terminals_(terminals), q0_(q0), q1_(q1), quota_(quota), budget_(budget) {}

  std::optional<SideMask> solve() {
    if (quota_ == 0) return plain_cut(g_, q0_, q1_, budget_);
    if (static_cast<int>(terminals_.size()) < quota_) return std::nullopt;
    const auto n = static_cast<std::size_t>(g_.num_vertices());
    if (q1_.empty()) return SideMask(n, 1);

    MultiGraph work = with_fake_edges();
    std::vector<CandidateCut> c0s;
    if (q0_.empty()) {
      c0s.push_back(CandidateCut{SideMask(n, 0), {}, 0});
    } else {
      for (const ImportantCut& ic : enumerate_important_cuts(work, q0_, q1_, budget_)) {
        c0s.push_back(candidate(ic.cut.side0));
      }
    }
    std::map<VertexSet, bool> seen;
    for (Vertex t : terminals_) {
      for (const ImportantCut& ic : enumerate_important_cuts(work, {t}, q1_, budget_)) {
        if (seen.emplace(ic.cut.side0, true).second) cuts_.push_back(candidate(ic.cut.side0));
      }
    }

    for (const CandidateCut& c0 : c0s) {
      if (static_cast<int>(c0.terminals.size()) >= quota_ && accept(c0.side)) return c0.side;
    }
    for (const CandidateCut& c0 : c0s) {
      auto used = mask_of(g_.num_vertices(), c0.terminals);
      for (const CandidateCut& c1 : cuts_) {
        if (c0.terminals.size() + c1.terminals.size() < static_cast<std::size_t>(quota_)) continue;
        if (!terminals_disjoint(c1.terminals, used)) continue;
        SideMask u = c0.side;
        for (std::size_t v = 0; v < n; ++v) u[v] = static_cast<char>(u[v] | c1.side[v]);
        if (accept(u)) return u;
      }
    }
    for (const CandidateCut& c0 : c0s) {
      const int have = static_cast<int>(c0.terminals.size());
      const int rest = budget_ - c0.size;
      if (rest < 0 || quota_ < 2) continue;
      ProfileBounds bounds{quota_ - 1, quota_ - have, 2 * quota_, quota_, rest};
      for (const CutProfileVector& profile : enumerate_profiles(bounds)) {
        if (auto found = try_profile(c0, profile)) return found;
      }
    }
    return std::nullopt;
  }

 private:
  MultiGraph with_fake_edges() const {
    if (q0_.size() < 2) return g_;
    auto in_q0 = mask_of(g_.num_vertices(), q0_);
    int count = 0;
    components(g_, in_q0, &count);
    if (count <= 1) return g_;
    std::vector<Edge> edges(g_.edges().begin(), g_.edges().end());
    for (std::size_t i = 0; i + 1 < q0_.size(); ++i) {
      edges.push_back(Edge{q0_[i], q0_[i + 1], budget_ + 1});
    }
    return MultiGraph(g_.num_vertices(), std::move(edges));
  }

  CandidateCut candidate(const VertexSet& side0) const {
    CandidateCut c;
    c.side = mask_of(g_.num_vertices(), side0);
    for (Vertex t : terminals_) {
      if (c.side[static_cast<std::size_t>(t)]) c.terminals.push_back(t);
    }
    c.size = crossing_size(g_, c.side);
    return c;
  }

  bool accept(const SideMask& side) const {
    for (Vertex v : q0_) {
      if (!side[static_cast<std::size_t>(v)]) return false;
    }
    for (Vertex v : q1_) {
      if (side[static_cast<std::size_t>(v)]) return false;
    }
    int t = 0;
    for (Vertex v : terminals_) t += side[static_cast<std::size_t>(v)] ? 1 : 0;
    return t >= quota_ && crossing_size(g_, side) <= budget_;
  }

  static bool fits(const CandidateCut& c, const ProfileSlot& slot) {
    return static_cast<int>(c.terminals.size()) == slot.terminals && c.size == slot.edges;
  }

  std::optional<SideMask> try_profile(const CandidateCut& c0, const CutProfileVector& profile) {
    SideMask s = mask_of(g_.num_vertices(), c0.terminals);
    for (int round = 0; round <= quota_; ++round) {
      for (const ProfileSlot& slot : profile.slots) {
        for (const CandidateCut& c : cuts_) {
          if (fits(c, slot) && terminals_disjoint(c.terminals, s)) {
            for (Vertex t : c.terminals) s[static_cast<std::size_t>(t)] = 1;
            break;
          }
        }
      }
    }
    pool_.clear();
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
      if (!terminals_disjoint(cuts_[i].terminals, s)) pool_.push_back(i);
    }
    SideMask used = mask_of(g_.num_vertices(), c0.terminals);
    return backtrack(profile, 0, 0, used, c0.side);
  }

  std::optional<SideMask> backtrack(const CutProfileVector& profile, std::size_t slot,
                                    std::size_t first, SideMask& used, const SideMask& acc) {
    if (slot == profile.slots.size()) {
      if (accept(acc)) return acc;
      return std::nullopt;
    }
    const bool repeat = slot > 0 && profile.slots[slot] == profile.slots[slot - 1];
    for (std::size_t p = repeat ? first : 0; p < pool_.size(); ++p) {
      const CandidateCut& c = cuts_[pool_[p]];
      if (!fits(c, profile.slots[slot]) || !terminals_disjoint(c.terminals, used)) continue;
      for (Vertex t : c.terminals) used[static_cast<std::size_t>(t)] = 1;
      SideMask next = acc;
      for (std::size_t v = 0; v < next.size(); ++v) {
        next[v] = static_cast<char>(next[v] | c.side[v]);
      }
      auto found = backtrack(profile, slot + 1, p + 1, used, next);
      for (Vertex t : c.terminals) used[static_cast<std::size_t>(t)] = 0;
      if (found) return found;
    }
    return std::nullopt;
  }

  const MultiGraph& g_;
  const TerminalSet& terminals_;
  const VertexSet& q0_;
  const VertexSet& q1_;
  int quota_;
  int budget_;
  std::vector<CandidateCut> cuts_;
  std::vector<std::size_t> pool_;
};

inline std::optional<SideMask> solve_base_mask(const MultiGraph& g, const TerminalSet& terminals,
                                               const VertexSet& q0, const VertexSet& q1,
                                               int quota, int budget) {
  return BaseSolver(g, terminals, q0, q1, quota, budget).solve();
}

}  // namespace detail

/// One-sided instance with the quota on side `quota_side` (0 or 1).
inline std::optional<Cut> solve_base(const MultiGraph& g, const TerminalSet& terminals,
                                     const VertexSet& q0, const VertexSet& q1, int quota,
                                     int budget, int quota_side = 0) {
  ConstrainedSpec spec{q0, q1, quota_side == 0 ? quota : 0, quota_side == 0 ? 0 : quota, budget};
  validate_spec(g, terminals, spec);
  std::optional<detail::SideMask> side;
  if (quota_side == 0) {
    side = detail::solve_base_mask(g, terminals, q0, q1, quota, budget);
  } else {
    side = detail::solve_base_mask(g, terminals, q1, q0, quota, budget);
    if (side) {
      for (char& b : *side) b = static_cast<char>(!b);
    }
  }
  if (!side) return std::nullopt;
  Cut cut = make_cut(g, *side);
  if (!is_valid_constrained_cut(g, terminals, spec, cut)) {
    throw std::logic_error("base case produced an invalid constrained cut");
  }
  return cut;
}

namespace detail {

inline void reduce_guess(const MultiGraph& g, const TerminalSet& terminals,
                         const ConstrainedSpec& spec, const Cut& initial,
                         std::vector<SubInstance>& out) {
  const int n = g.num_vertices();
  auto a0 = mask_of(n, initial.side0);
  auto is_terminal = mask_of(n, terminals);
  auto in_q0 = mask_of(n, spec.q0);
  auto in_q1 = mask_of(n, spec.q1);
  int t0 = 0;
  for (Vertex t : terminals) t0 += a0[static_cast<std::size_t>(t)] ? 1 : 0;
  // The side whose quota is not met is settled here; the other side recurses.
  const char settled = t0 < spec.c0 ? 1 : 0;
  auto on_settled = [&](Vertex v) { return a0[static_cast<std::size_t>(v)] == settled; };

  VertexSet guessed;
  for (Vertex t : terminals) {
    if (on_settled(t)) guessed.push_back(t);
  }
  for (const Edge& e : initial.cutset) {
    guessed.push_back(e.u);
    guessed.push_back(e.v);
  }
  guessed = make_set(std::move(guessed));

  VertexSet settled_part;
  VertexSet rest_part;
  for (Vertex v = 0; v < n; ++v) (on_settled(v) ? settled_part : rest_part).push_back(v);
  Subgraph settled_graph = induced_subgraph(g, settled_part);
  std::vector<Vertex> local(static_cast<std::size_t>(n), kNoVertex);
  for (std::size_t i = 0; i < settled_part.size(); ++i) {
    local[static_cast<std::size_t>(settled_part[i])] = static_cast<Vertex>(i);
  }

  const std::size_t count = guessed.size();
  std::vector<char> side1(static_cast<std::size_t>(n), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << count); ++mask) {
    bool consistent = true;
    for (std::size_t i = 0; i < count; ++i) {
      const Vertex v = guessed[i];
      const char s = static_cast<char>((mask >> i) & 1U);
      side1[static_cast<std::size_t>(v)] = s;
      if ((s && in_q0[static_cast<std::size_t>(v)]) || (!s && in_q1[static_cast<std::size_t>(v)])) {
        consistent = false;
      }
    }
    if (!consistent) continue;
    int spent = 0;
    for (const Edge& e : initial.cutset) {
      if (side1[static_cast<std::size_t>(e.u)] != side1[static_cast<std::size_t>(e.v)]) {
        spent += e.multiplicity;
      }
    }
    if (spent > spec.budget) continue;

    VertexSet s0;
    VertexSet s1;
    for (Vertex v : settled_part) {
      const bool g0 = in_q0[static_cast<std::size_t>(v)] ||
                      (contains(guessed, v) && !side1[static_cast<std::size_t>(v)]);
      const bool g1 = in_q1[static_cast<std::size_t>(v)] ||
                      (contains(guessed, v) && side1[static_cast<std::size_t>(v)]);
      if (g0) s0.push_back(local[static_cast<std::size_t>(v)]);
      if (g1) s1.push_back(local[static_cast<std::size_t>(v)]);
    }
    auto inner = plain_cut(settled_graph.graph, s0, s1, spec.budget - spent);
    if (!inner) continue;
    spent += crossing_size(settled_graph.graph, *inner);
    if (spent > spec.budget) continue;

    SubInstance sub;
    sub.fixed_side0.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < settled_part.size(); ++i) {
      sub.fixed_side0[static_cast<std::size_t>(settled_part[i])] = (*inner)[i];
    }
    int got0 = 0;
    int got1 = 0;
    for (Vertex v : guessed) {
      const bool is0 = !side1[static_cast<std::size_t>(v)];
      if (is_terminal[static_cast<std::size_t>(v)]) (is0 ? got0 : got1)++;
      if (!on_settled(v) && is_terminal[static_cast<std::size_t>(v)]) {
        sub.fixed_side0[static_cast<std::size_t>(v)] = is0 ? 1 : 0;
      }
    }
    sub.spec.q0.clear();
    sub.spec.q1.clear();
    for (Vertex v : rest_part) {
      const bool guessed_v = contains(guessed, v);
      if (guessed_v && is_terminal[static_cast<std::size_t>(v)]) continue;
      sub.vertices.push_back(v);
      if (is_terminal[static_cast<std::size_t>(v)]) sub.terminals.push_back(v);
      if (in_q0[static_cast<std::size_t>(v)] || (guessed_v && !side1[static_cast<std::size_t>(v)])) {
        sub.spec.q0.push_back(v);
      }
      if (in_q1[static_cast<std::size_t>(v)] || (guessed_v && side1[static_cast<std::size_t>(v)])) {
        sub.spec.q1.push_back(v);
      }
    }
    sub.spec.c0 = std::max(spec.c0 - got0, 0);
    sub.spec.c1 = std::max(spec.c1 - got1, 0);
    sub.spec.budget = spec.budget - spent;
    out.push_back(std::move(sub));
  }
}

}  // namespace detail

namespace detail {

/// Calls visit(cut, quotas_met) for every terminal guess (t0, t1) in
/// ascending order whose minimum cut fits the budget; stops when visit
/// returns true.
template <typename Visit>
void for_each_guess(const MultiGraph& g, const TerminalSet& terminals,
                    const ConstrainedSpec& spec, Visit&& visit, bool canonical = false) {
  auto is_terminal = mask_of(g.num_vertices(), terminals);
  // Terminals hanging off the same vertex are interchangeable, so with
  // `canonical` only the lowest ids of each attachment class are guessed.
  auto attachment = [&](Vertex t) {
    auto nb = g.neighbors(t);
    return nb.empty() ? -1 - t : nb[0].neighbor;
  };
  auto lowest_in_class = [&](Vertex t, Vertex skip) {
    for (Vertex u : terminals) {
      if (u == t) return true;
      if (u != skip && attachment(u) == attachment(t)) return false;
    }
    return true;
  };
  for (Vertex t0 : terminals) {
    if (canonical && !lowest_in_class(t0, kNoVertex)) continue;
    for (Vertex t1 : terminals) {
      if (t0 == t1) continue;
      if (canonical && !lowest_in_class(t1, t0)) continue;
      auto cut = bounded_mincut(g, set_union(spec.q0, {t0}), set_union(spec.q1, {t1}),
                                spec.budget + 1);
      if (!cut) continue;
      int n0 = 0;
      for (Vertex v : cut->side0) n0 += is_terminal[static_cast<std::size_t>(v)] ? 1 : 0;
      const int n1 = static_cast<int>(terminals.size()) - n0;
      if (visit(*cut, n0 >= spec.c0 && n1 >= spec.c1)) return;
    }
  }
}

}  // namespace detail

/// The two-sided reduction for c0 >= 1 and c1 >= 1. For every ordered pair of
/// distinct terminals (t0, t1) the minimum cut with Q0 + t0 on side 0 and
/// Q1 + t1 on side 1 is computed. If one of them meets both quotas it is
/// returned directly; otherwise the sub-instances of every guess are listed.
inline ReductionStep reduce_step(const MultiGraph& g, const TerminalSet& terminals,
                                 const ConstrainedSpec& spec) {
  validate_spec(g, terminals, spec);
  if (spec.c0 < 1 || spec.c1 < 1) throw InputError("reduce_step needs c0 >= 1 and c1 >= 1");
  ReductionStep step;
  detail::for_each_guess(g, terminals, spec, [&](const Cut& cut, bool met) {
    step.initial_cuts.push_back(cut);
    if (met) {
      step.outcome = ReductionStep::Outcome::kQuotasMet;
      step.immediate = cut;
      step.subinstances.clear();
      return true;
    }
    step.outcome = ReductionStep::Outcome::kSubInstances;
    detail::reduce_guess(g, terminals, spec, cut, step.subinstances);
    return false;
  });
  return step;
}

namespace detail {

/// Results of already solved instances, keyed by graph, terminals and spec.
using SolveMemo = std::map<std::vector<int>, std::optional<SideMask>>;

inline std::vector<int> memo_key(const MultiGraph& g, const TerminalSet& terminals,
                                 const ConstrainedSpec& spec) {
  std::vector<int> key{g.num_vertices(), spec.c0, spec.c1, spec.budget};
  for (const Edge& e : g.edges()) key.insert(key.end(), {e.u, e.v, e.multiplicity});
  for (const VertexSet* set : {&terminals, &spec.q0, &spec.q1}) {
    key.push_back(-1);
    key.insert(key.end(), set->begin(), set->end());
  }
  return key;
}

inline std::optional<SideMask> solve_subinstance(const MultiGraph& g, const SubInstance& sub,
                                                 SolveMemo& memo);

inline std::optional<SideMask> solve_two_sided(const MultiGraph& g, const TerminalSet& terminals,
                                               const ConstrainedSpec& spec, SolveMemo& memo);

inline std::optional<SideMask> solve_constrained(const MultiGraph& g,
                                                 const TerminalSet& terminals,
                                                 const ConstrainedSpec& spec, SolveMemo& memo) {
  const int k = static_cast<int>(terminals.size());
  if (spec.c0 == 0 && spec.c1 == 0) return plain_cut(g, spec.q0, spec.q1, spec.budget);
  if (k < spec.c0 + spec.c1) return std::nullopt;
  if (spec.c1 == 0) return solve_base_mask(g, terminals, spec.q0, spec.q1, spec.c0, spec.budget);
  if (spec.c0 == 0) {
    auto side = solve_base_mask(g, terminals, spec.q1, spec.q0, spec.c1, spec.budget);
    if (side) {
      for (char& b : *side) b = static_cast<char>(!b);
    }
    return side;
  }
  auto key = memo_key(g, terminals, spec);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto answer = solve_two_sided(g, terminals, spec, memo);
  memo.emplace(std::move(key), answer);
  return answer;
}

inline std::optional<SideMask> solve_two_sided(const MultiGraph& g, const TerminalSet& terminals,
                                               const ConstrainedSpec& spec, SolveMemo& memo) {
  std::optional<SideMask> answer;
  std::set<VertexSet> tried;
  for_each_guess(g, terminals, spec, [&](const Cut& cut, bool met) {
    if (met) {
      answer = mask_of(g.num_vertices(), cut.side0);
      return true;
    }
    if (!tried.insert(cut.side0).second) return false;
    std::vector<SubInstance> subs;
    reduce_guess(g, terminals, spec, cut, subs);
    for (const SubInstance& sub : subs) {
      if (auto full = solve_subinstance(g, sub, memo)) {
        if (!is_valid_constrained_cut(g, terminals, spec, make_cut(g, *full))) {
          throw std::logic_error("reduction combined an invalid constrained cut");
        }
        answer = std::move(full);
        return true;
      }
    }
    return false;
  }, true);
  return answer;
}

inline std::optional<SideMask> solve_subinstance(const MultiGraph& g, const SubInstance& sub,
                                                 SolveMemo& memo) {
  Subgraph local = induced_subgraph(g, sub.vertices);
  std::vector<Vertex> to_local(static_cast<std::size_t>(g.num_vertices()), kNoVertex);
  for (std::size_t i = 0; i < sub.vertices.size(); ++i) {
    to_local[static_cast<std::size_t>(sub.vertices[i])] = static_cast<Vertex>(i);
  }
  auto remap = [&](const VertexSet& s) {
    VertexSet out;
    for (Vertex v : s) out.push_back(to_local[static_cast<std::size_t>(v)]);
    return out;
  };
  ConstrainedSpec local_spec{remap(sub.spec.q0), remap(sub.spec.q1), sub.spec.c0, sub.spec.c1,
                             sub.spec.budget};
  auto inner = solve_constrained(local.graph, remap(sub.terminals), local_spec, memo);
  if (!inner) return std::nullopt;
  SideMask full = sub.fixed_side0;
  for (std::size_t i = 0; i < sub.vertices.size(); ++i) {
    full[static_cast<std::size_t>(sub.vertices[i])] = (*inner)[i];
  }
  return full;
}

}  // namespace detail

/// A valid constrained cut, or std::nullopt when none exists. Terminals must
/// have at most one neighbor.
inline std::optional<Cut> find_constrained_cut(const MultiGraph& g, const TerminalSet& terminals,
                                               const ConstrainedSpec& spec) {
  validate_spec(g, terminals, spec);
  if (!detail::terminal_degrees_ok(g, terminals)) {
    throw InputError("terminals must be pendant vertices");
  }
  detail::SolveMemo memo;
  auto side = detail::solve_constrained(g, terminals, spec, memo);
  if (!side) return std::nullopt;
  Cut cut = make_cut(g, *side);
  if (!is_valid_constrained_cut(g, terminals, spec, cut)) {
    throw std::logic_error("constrained cut failed validation");
  }
  return cut;
}

}  // namespace mimic
