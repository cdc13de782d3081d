#pragma once

// Line-oriented instance files with 1-indexed vertices:
//   c <comment>
//   p ccmn <n> <m>
//   e <u> <v> <capacity or cost>
//   t <v>                      terminal
//   r <v>                      SNDP root
//   d <v> <requirement>        SNDP demand
//   m <sparsifier vertex> <original terminal>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mimic/graph.hpp"
#include "mimic/sndp_instance.hpp"

namespace mimic {

struct Instance {
  int num_vertices = 0;
  std::vector<CapacitatedEdge> edges;
  std::vector<Vertex> terminals;
  std::optional<Vertex> root;
  std::vector<Demand> demands;
  /// (sparsifier vertex, original terminal) pairs.
  std::vector<std::pair<Vertex, Vertex>> copies;
  std::vector<std::string> comments;

  SndpInstance sndp() const {
    if (!root) throw InputError("instance has no root record");
    return SndpInstance{num_vertices, edges, *root, demands};
  }
};

namespace detail {

inline InputError line_error(int line, const std::string& what) {
  return InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace detail

inline Instance parse_instance(std::istream& in) {
  Instance inst;
  bool header = false;
  std::int64_t declared_edges = 0;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ls(raw);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "c") {
      std::string rest;
      std::getline(ls, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      inst.comments.push_back(rest);
      continue;
    }
    std::string extra;
    auto vertex = [&](std::int64_t v, const char* usage) {
      if (!header) throw detail::line_error(line, "record before the 'p' header");
      if (v < 1 || v > inst.num_vertices) {
        throw detail::line_error(line, std::string("vertex out of range in '") + usage + "'");
      }
      return static_cast<Vertex>(v - 1);
    };
    if (kind == "p") {
      std::string format;
      std::int64_t n = 0;
      std::int64_t m = 0;
      if (!(ls >> format >> n >> m) || (ls >> extra) || format != "ccmn" || n < 0 || m < 0 ||
          n > std::numeric_limits<int>::max()) {
        throw detail::line_error(line, "expected 'p ccmn n m'");
      }
      if (header) throw detail::line_error(line, "duplicate 'p' header");
      header = true;
      inst.num_vertices = static_cast<int>(n);
      declared_edges = m;
    } else if (kind == "e") {
      std::int64_t u = 0, v = 0, cap = 0;
      if (!(ls >> u >> v >> cap) || (ls >> extra)) {
        throw detail::line_error(line, "expected 'e u v cap'");
      }
      if (cap < 0) throw detail::line_error(line, "expected 'e u v cap' with cap >= 0");
      inst.edges.push_back(CapacitatedEdge{vertex(u, "e u v cap"), vertex(v, "e u v cap"), cap});
    } else if (kind == "t") {
      std::int64_t v = 0;
      if (!(ls >> v) || (ls >> extra)) throw detail::line_error(line, "expected 't v'");
      inst.terminals.push_back(vertex(v, "t v"));
    } else if (kind == "r") {
      std::int64_t v = 0;
      if (!(ls >> v) || (ls >> extra)) throw detail::line_error(line, "expected 'r v'");
      if (inst.root) throw detail::line_error(line, "duplicate 'r' record");
      inst.root = vertex(v, "r v");
    } else if (kind == "d") {
      std::int64_t v = 0, req = 0;
      if (!(ls >> v >> req) || (ls >> extra) || req < 1 || req > std::numeric_limits<int>::max()) {
        throw detail::line_error(line, "expected 'd v req'");
      }
      inst.demands.push_back(Demand{vertex(v, "d v req"), static_cast<int>(req)});
    } else if (kind == "m") {
      std::int64_t a = 0, b = 0;
      if (!(ls >> a >> b) || (ls >> extra) || b < 1) {
        throw detail::line_error(line, "expected 'm sparsifier_vertex original_terminal'");
      }
      inst.copies.emplace_back(vertex(a, "m sparsifier_vertex original_terminal"),
                               static_cast<Vertex>(b - 1));
    } else {
      throw detail::line_error(line, "unknown record type '" + kind + "'");
    }
  }
  if (!header) throw InputError("missing 'p ccmn n m' header");
  if (static_cast<std::int64_t>(inst.edges.size()) != declared_edges) {
    throw InputError("header declares " + std::to_string(declared_edges) + " edges but " +
                     std::to_string(inst.edges.size()) + " were given");
  }
  return inst;
}

inline Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_instance(in);
}

inline std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  for (const std::string& c : inst.comments) out << "c " << c << '\n';
  out << "p ccmn " << inst.num_vertices << ' ' << inst.edges.size() << '\n';
  for (const CapacitatedEdge& e : inst.edges) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.capacity << '\n';
  }
  for (Vertex t : inst.terminals) out << "t " << t + 1 << '\n';
  if (inst.root) out << "r " << *inst.root + 1 << '\n';
  for (const Demand& d : inst.demands) out << "d " << d.vertex + 1 << ' ' << d.requirement << '\n';
  for (auto [a, b] : inst.copies) out << "m " << a + 1 << ' ' << b + 1 << '\n';
  return out.str();
}

/// Seeded generator with a draw that does not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return lo + static_cast<std::int64_t>(x % span);
  }

  /// k distinct values from [0, n), sorted.
  std::vector<int> sample(int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
      const auto j = static_cast<std::size_t>(uniform(i, n - 1));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

/// Connected multigraph with capacities in [1, 2c] and k terminals.
inline Instance generate_graph_instance(int n, int m, int k, int c, std::uint64_t seed) {
  if (n < 1) throw InputError("n must be >= 1");
  if (m < n - 1) throw InputError("m must be >= n - 1 for a connected graph");
  if (n == 1 && m > 0) throw InputError("a single vertex cannot carry edges");
  if (k < 0 || k > n) throw InputError("k must lie in [0, n]");
  if (c < 1) throw InputError("c must be >= 1");
  Rng rng(seed);
  Instance inst;
  inst.num_vertices = n;
  auto cap = [&] { return rng.uniform(1, 2 * c); };
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(rng.uniform(0, i))]);
  }
  for (int i = 1; i < n; ++i) {
    const int parent = order[static_cast<std::size_t>(rng.uniform(0, i - 1))];
    const int child = order[static_cast<std::size_t>(i)];
    inst.edges.push_back(CapacitatedEdge{parent, child, cap()});
  }
  while (static_cast<int>(inst.edges.size()) < m) {
    const auto u = static_cast<Vertex>(rng.uniform(0, n - 1));
    const auto v = static_cast<Vertex>(rng.uniform(0, n - 1));
    if (u == v) continue;
    inst.edges.push_back(CapacitatedEdge{u, v, cap()});
  }
  inst.terminals = rng.sample(n, k);
  inst.comments.push_back("generated graph n=" + std::to_string(n) + " m=" + std::to_string(m) +
                          " k=" + std::to_string(k) + " c=" + std::to_string(c) +
                          " seed=" + std::to_string(seed));
  return inst;
}

/// Connected partial 2-tree (treewidth <= 2) with costs in [1, 10], a root
/// and min(k, n - 1) demands with requirements in [1, c].
inline Instance generate_sndp_instance(int n, int m, int k, int c, std::uint64_t seed) {
  if (n < 1) throw InputError("n must be >= 1");
  if (m < n - 1) throw InputError("m must be >= n - 1 for a connected graph");
  if (n >= 2 && m > 2 * n - 3) throw InputError("a partial 2-tree has at most 2n - 3 edges");
  if (n == 1 && m > 0) throw InputError("a single vertex cannot carry edges");
  if (k < 0) throw InputError("k must be >= 0");
  if (c < 1) throw InputError("c must be >= 1");
  Rng rng(seed);
  Instance inst;
  inst.num_vertices = n;
  std::vector<std::pair<Vertex, Vertex>> tree;
  std::vector<std::pair<Vertex, Vertex>> spare;
  // 2-tree: vertex v attaches to both ends of an existing edge (u, w); the
  // edge to u is kept as a spanning-tree edge, the edge to w is optional.
  std::vector<std::pair<Vertex, Vertex>> two_tree;
  if (n >= 2) {
    tree.emplace_back(0, 1);
    two_tree.emplace_back(0, 1);
  }
  for (Vertex v = 2; v < n; ++v) {
    auto [u, w] = two_tree[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(two_tree.size()) - 1))];
    if (rng.uniform(0, 1) == 1) std::swap(u, w);
    tree.emplace_back(u, v);
    spare.emplace_back(w, v);
    two_tree.emplace_back(u, v);
    two_tree.emplace_back(w, v);
  }
  for (int i = static_cast<int>(spare.size()) - 1; i > 0; --i) {
    std::swap(spare[static_cast<std::size_t>(i)], spare[static_cast<std::size_t>(rng.uniform(0, i))]);
  }
  std::vector<std::pair<Vertex, Vertex>> chosen = tree;
  for (std::size_t i = 0; static_cast<int>(chosen.size()) < m; ++i) chosen.push_back(spare[i]);
  for (auto [u, v] : chosen) inst.edges.push_back(CapacitatedEdge{u, v, rng.uniform(1, 10)});
  inst.root = static_cast<Vertex>(rng.uniform(0, n - 1));
  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != *inst.root) others.push_back(v);
  }
  const int h = std::min(k, static_cast<int>(others.size()));
  for (int idx : rng.sample(static_cast<int>(others.size()), h)) {
    inst.demands.push_back(Demand{others[static_cast<std::size_t>(idx)], static_cast<int>(rng.uniform(1, c))});
  }
  inst.comments.push_back("generated sndp n=" + std::to_string(n) + " m=" + std::to_string(m) +
                          " k=" + std::to_string(k) + " c=" + std::to_string(c) +
                          " seed=" + std::to_string(seed));
  return inst;
}

}  // namespace mimic
