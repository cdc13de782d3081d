// Command-line front end for the mimicking-network library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mimic/mimic.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mimic;

enum Exit : int { kOk = 0, kInputError = 1, kVerificationFailure = 2, kInfeasible = 3 };

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

VertexSet parse_vertex_list(const std::string& text, int n) {
  VertexSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad vertex '" + item + "'");
    }
    if (used != item.size() || v < 1 || v > n) throw InputError("bad vertex '" + item + "'");
    out.push_back(static_cast<Vertex>(v - 1));
  }
  return make_set(std::move(out));
}

json one_indexed(const VertexSet& s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(v + 1);
  return a;
}

std::string list_text(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i] + 1);
  }
  return out;
}

MultiGraph graph_of(const Instance& inst, int c) {
  return from_capacitated(inst.num_vertices, inst.edges, c);
}

/// Sorted terminal list from an instance; duplicates are rejected.
TerminalSet terminals_of(const Instance& inst) {
  TerminalSet t = make_set(inst.terminals);
  if (t.size() != inst.terminals.size()) throw InputError("duplicate terminal records");
  return t;
}

// ---------------------------------------------------------------- sparsify

struct SparsifyOptions {
  std::string input;
  std::string output;
  int c = 2;
  bool oracle = false;
  bool as_json = false;
};

int run_sparsify(const SparsifyOptions& o) {
  const Instance inst = parse_instance_file(o.input);
  if (inst.terminals.empty()) throw InputError("instance has no terminals");
  const auto start = std::chrono::steady_clock::now();
  MimickingNetwork net = build_mimicking_network(inst.num_vertices, inst.edges, inst.terminals, o.c);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Instance out;
  out.comments.push_back("connectivity-" + std::to_string(o.c) + " mimicking network");
  out.num_vertices = net.graph.num_vertices();
  for (const Edge& e : net.graph.edges()) out.edges.push_back(CapacitatedEdge{e.u, e.v, e.multiplicity});
  for (std::size_t i = 0; i < net.terminal_map.size(); ++i) {
    for (Vertex p : net.terminal_map[i]) {
      out.terminals.push_back(p);
      out.copies.emplace_back(p, inst.terminals[i]);
    }
  }
  write_output(o.output, emit_instance(out));

  const std::int64_t bound = size_bound(o.c, static_cast<int>(inst.terminals.size()));
  json summary;
  summary["vertices"] = net.graph.num_vertices();
  summary["edges"] = net.graph.num_edges();
  summary["clusters"] = net.num_clusters();
  summary["size_bound"] = bound;
  summary["seconds"] = seconds;
  int status = kOk;
  if (o.oracle) {
    NormalizedTerminals norm = normalize_terminals(graph_of(inst, o.c), inst.terminals, o.c);
    auto cex = oracle_cut_equivalence(norm.graph, net.graph, norm.terminals, net.terminals(), o.c);
    summary["oracle"] = cex ? "mismatch" : "equal";
    if (cex) {
      status = kVerificationFailure;
      summary["counterexample"] = {{"A", one_indexed(cex->a)},
                                   {"B", one_indexed(cex->b)},
                                   {"value_G", cex->value_g},
                                   {"value_H", cex->value_h}};
    }
  }
  std::ostream& log = o.output.empty() ? std::cerr : std::cout;
  if (o.as_json) {
    log << summary.dump(2) << '\n';
  } else {
    log << "vertices " << net.graph.num_vertices() << "\nedges " << net.graph.num_edges()
        << "\nclusters " << net.num_clusters() << "\nsize bound " << bound << "\nelapsed "
        << seconds << " s\n";
    if (o.oracle) {
      log << "oracle " << summary["oracle"].get<std::string>() << '\n';
      if (status != kOk) log << "counterexample " << summary["counterexample"].dump() << '\n';
    }
  }
  return status;
}

// ------------------------------------------------------------------ verify

struct VerifyOptions {
  std::string graph;
  std::string sparsifier;
  std::string output;
  int c = 0;
  std::int64_t budget = 100000;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyOptions& o) {
  const Instance g_inst = parse_instance_file(o.graph);
  const Instance h_inst = parse_instance_file(o.sparsifier);
  if (g_inst.terminals.empty()) throw InputError("graph has no terminals");
  const std::size_t k = g_inst.terminals.size();

  // Copies of each original terminal in the sparsifier, from its m records.
  std::vector<std::vector<Vertex>> copies(k);
  std::map<Vertex, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[g_inst.terminals[i]] = i;
  for (auto [h, t] : h_inst.copies) {
    auto it = index.find(t);
    if (it == index.end()) throw InputError("mapping names a vertex that is not a terminal");
    copies[it->second].push_back(h);
  }
  int c = o.c;
  if (c == 0) {
    c = h_inst.copies.empty() ? 1 : static_cast<int>(copies[0].size());
  }
  if (c < 1) throw InputError("threshold c must be >= 1");

  const MultiGraph g = graph_of(g_inst, c);
  NormalizedTerminals gn = normalize_terminals(g, g_inst.terminals, c);
  MultiGraph h;
  TerminalSet h_terms;
  if (h_inst.copies.empty()) {
    // Without m records the sparsifier's own terminals correspond in order.
    if (h_inst.terminals.size() != k) throw InputError("incomplete mapping: terminal counts differ");
    NormalizedTerminals hn = normalize_terminals(graph_of(h_inst, c), h_inst.terminals, c);
    h = hn.graph;
    h_terms = hn.terminals;
  } else {
    for (std::size_t i = 0; i < k; ++i) {
      if (copies[i].size() != static_cast<std::size_t>(c)) {
        throw InputError("incomplete mapping: terminal " + std::to_string(g_inst.terminals[i] + 1) +
                         " has " + std::to_string(copies[i].size()) + " copies, expected " +
                         std::to_string(c));
      }
      h_terms.insert(h_terms.end(), copies[i].begin(), copies[i].end());
    }
    h = graph_of(h_inst, c);
  }
  const std::size_t slots = gn.terminals.size();
  double total = 1;
  for (std::size_t i = 0; i < slots; ++i) total *= 3;
  const bool sampled = total > static_cast<double>(o.budget);
  const std::uint64_t queries = sampled ? static_cast<std::uint64_t>(o.budget)
                                        : static_cast<std::uint64_t>(total);
  Rng rng(o.seed);
  std::uint64_t mismatches = 0;
  int max_dev = 0;
  json witness = nullptr;
  std::vector<int> digit(slots);
  VertexSet ag, bg, ah, bh;
  for (std::uint64_t q = 0; q < queries; ++q) {
    if (sampled) {
      for (auto& d : digit) d = static_cast<int>(rng.uniform(0, 2));
    } else {
      std::uint64_t x = q;
      for (auto& d : digit) {
        d = static_cast<int>(x % 3);
        x /= 3;
      }
    }
    ag.clear();
    bg.clear();
    ah.clear();
    bh.clear();
    for (std::size_t i = 0; i < slots; ++i) {
      if (digit[i] == 1) {
        ag.push_back(gn.terminals[i]);
        ah.push_back(h_terms[i]);
      } else if (digit[i] == 2) {
        bg.push_back(gn.terminals[i]);
        bh.push_back(h_terms[i]);
      }
    }
    std::sort(ah.begin(), ah.end());
    std::sort(bh.begin(), bh.end());
    if (!disjoint(ah, bh)) throw InputError("mapping sends two terminal copies to one vertex");
    const int vg = thresholded_mincut(gn.graph, ag, bg, c);
    const int vh = thresholded_mincut(h, ah, bh, c);
    if (vg != vh) {
      ++mismatches;
      max_dev = std::max(max_dev, std::abs(vg - vh));
      if (witness.is_null()) {
        json a = json::array();
        json b = json::array();
        for (std::size_t i = 0; i < slots; ++i) {
          json entry = {{"terminal", g_inst.terminals[i / static_cast<std::size_t>(c)] + 1},
                        {"copy", i % static_cast<std::size_t>(c) + 1}};
          if (digit[i] == 1) a.push_back(entry);
          if (digit[i] == 2) b.push_back(entry);
        }
        witness = {{"A", a}, {"B", b}, {"value_G", vg}, {"value_H", vh}};
      }
    }
  }
  json report;
  report["queries"] = queries;
  report["mismatches"] = mismatches;
  report["max_abs_deviation"] = max_dev;
  report["verdict"] = mismatches == 0 ? "exact" : "mismatch";
  report["sampled"] = sampled;
  report["c"] = c;
  report["witness"] = witness;
  write_output(o.output, report.dump(2) + "\n");
  return mismatches == 0 ? kOk : kVerificationFailure;
}

// ------------------------------------------------------------------ linked

struct LinkedOptions {
  std::string input;
  int c = 2;
  bool oracle = false;
  bool as_json = false;
};

VertexSet lift(const PendantView& pv, const VertexSet& local) {
  VertexSet out;
  for (Vertex v : local) {
    const auto i = static_cast<std::size_t>(v);
    if (i < pv.to_parent.size() && pv.to_parent[i] != kNoVertex) out.push_back(pv.to_parent[i]);
  }
  return make_set(std::move(out));
}

// The non-terminal vertices form X; every edge leaving X becomes a pendant.
int run_linked(const LinkedOptions& o) {
  const Instance inst = parse_instance_file(o.input);
  if (o.c < 1) throw InputError("c must be >= 1");
  const MultiGraph g = graph_of(inst, o.c);
  const TerminalSet t = terminals_of(inst);
  VertexSet x;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!contains(t, v)) x.push_back(v);
  }
  const PendantView pv = pendant_view(g, x);
  const auto cut = find_violating_cut(pv.graph, pv.terminals, o.c);
  json out;
  out["linked"] = !cut.has_value();
  out["X"] = one_indexed(x);
  if (cut) {
    const VertexSet a = lift(pv, cut->cut.side0);
    const VertexSet b = lift(pv, cut->cut.side1);
    out["A"] = one_indexed(a);
    out["B"] = one_indexed(b);
    out["crossing"] = boundary_size(g, a) - [&] {
      // Edges from A to outside X are not part of the bipartition's crossing.
      int outside = 0;
      for (Vertex v : a) {
        for (const Incidence& inc : g.neighbors(v)) {
          if (contains(t, inc.neighbor)) outside += inc.multiplicity;
        }
      }
      return outside;
    }();
    out["q"] = cut->q;
  }
  int status = kOk;
  if (o.oracle) {
    const bool agree = oracle_is_linked(pv.graph, pv.terminals, o.c) == !cut.has_value();
    out["oracle"] = agree ? "agree" : "disagree";
    if (!agree) status = kVerificationFailure;
  }
  if (o.as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    if (cut) {
      std::cout << "violating cut\nA " << list_text(out["A"].get<VertexSet>()) << "\nB "
                << list_text(out["B"].get<VertexSet>() ) << "\ncrossing " << out["crossing"].get<int>() << '\n';
    } else {
      std::cout << "linked\n";
    }
    if (o.oracle) std::cout << "oracle " << out["oracle"].get<std::string>() << '\n';
  }
  return status;
}

// --------------------------------------------------------- constrained-cut

struct ConstrainedOptions {
  std::string input;
  std::string q0;
  std::string q1;
  int c0 = 0;
  int c1 = 0;
  int ell = 0;
  bool oracle = false;
  bool as_json = false;
};

json cut_json(const Cut& cut) {
  return {{"side0", one_indexed(cut.side0)}, {"side1", one_indexed(cut.side1)}, {"size", cut.size()}};
}

int run_constrained(const ConstrainedOptions& o) {
  const Instance inst = parse_instance_file(o.input);
  ConstrainedSpec spec;
  spec.q0 = parse_vertex_list(o.q0, inst.num_vertices);
  spec.q1 = parse_vertex_list(o.q1, inst.num_vertices);
  spec.c0 = o.c0;
  spec.c1 = o.c1;
  spec.budget = o.ell;
  const int threshold = std::max(1, spec.c());
  const MultiGraph g = graph_of(inst, threshold);
  const TerminalSet t = terminals_of(inst);
  const auto cut = find_constrained_cut(g, t, spec);
  json out;
  out["feasible"] = cut.has_value();
  if (cut) out["cut"] = cut_json(*cut);
  int status = cut ? kOk : kInfeasible;
  if (o.oracle) {
    const auto expected = oracle_constrained_cut(g, t, spec);
    const bool agree = expected.has_value() == cut.has_value();
    out["oracle"] = agree ? "agree" : "disagree";
    if (!agree) status = kVerificationFailure;
  }
  if (o.as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    if (cut) {
      std::cout << "side0 " << list_text(cut->side0) << "\nside1 " << list_text(cut->side1)
                << "\nsize " << cut->size() << '\n';
    } else {
      std::cout << "no constrained cut\n";
    }
    if (o.oracle) std::cout << "oracle " << out["oracle"].get<std::string>() << '\n';
  }
  return status;
}

// ---------------------------------------------------------- important-cuts

struct ImportantOptions {
  std::string input;
  std::string x;
  std::string y;
  int ell = 0;
  bool oracle = false;
  bool as_json = false;
};

int run_important(const ImportantOptions& o) {
  const Instance inst = parse_instance_file(o.input);
  const VertexSet x = parse_vertex_list(o.x, inst.num_vertices);
  const VertexSet y = parse_vertex_list(o.y, inst.num_vertices);
  const MultiGraph g = graph_of(inst, std::max(1, o.ell + 1));
  const auto cuts = enumerate_important_cuts(g, x, y, o.ell);
  json out;
  out["count"] = cuts.size();
  out["cuts"] = json::array();
  for (const ImportantCut& ic : cuts) out["cuts"].push_back(cut_json(ic.cut));
  int status = kOk;
  if (o.oracle) {
    const auto expected = oracle_important_cuts(g, x, y, o.ell);
    bool agree = expected.size() == cuts.size();
    for (std::size_t i = 0; agree && i < cuts.size(); ++i) {
      agree = expected[i].side0 == cuts[i].cut.side0;
    }
    out["oracle"] = agree ? "agree" : "disagree";
    if (!agree) status = kVerificationFailure;
  }
  if (o.as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << cuts.size() << " important cuts\n";
    for (const ImportantCut& ic : cuts) {
      std::cout << "size " << ic.size << " side0 " << list_text(ic.cut.side0) << '\n';
    }
    if (o.oracle) std::cout << "oracle " << out["oracle"].get<std::string>() << '\n';
  }
  return status;
}

// -------------------------------------------------------------------- sndp

struct SndpOptions {
  std::string input;
  std::string output;
  int c = 2;
  bool oracle = false;
  bool as_json = false;
};

int run_sndp(const SndpOptions& o) {
  const Instance inst = parse_instance_file(o.input);
  const SndpInstance problem = inst.sndp();
  const auto result = solve_sndp(problem, o.c);
  json out;
  out["feasible"] = result.has_value();
  if (result) {
    out["cost"] = result->solution.cost;
    json edges = json::array();
    for (int id : result->solution.edges) {
      const CapacitatedEdge& e = problem.edges[static_cast<std::size_t>(id)];
      edges.push_back({e.u + 1, e.v + 1, e.capacity});
    }
    out["edges"] = edges;
  }
  int status = result ? kOk : kInfeasible;
  if (o.oracle) {
    const auto expected = oracle_sndp(problem, o.c);
    bool agree = expected.has_value() == result.has_value();
    if (agree && result) agree = expected->cost == result->solution.cost;
    out["oracle"] = agree ? "agree" : "disagree";
    if (!agree) status = kVerificationFailure;
  }
  if (o.as_json) {
    write_output(o.output, out.dump(2) + "\n");
  } else {
    std::ostringstream text;
    if (result) {
      text << "cost " << result->solution.cost << '\n';
      for (const auto& e : out["edges"]) text << "e " << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    } else {
      text << "infeasible\n";
    }
    if (o.oracle) text << "oracle " << out["oracle"].get<std::string>() << '\n';
    write_output(o.output, text.str());
  }
  return status;
}

// --------------------------------------------------------------------- gen

struct GenOptions {
  std::string kind = "graph";
  std::string output;
  int n = 10;
  int m = 15;
  int k = 3;
  int c = 2;
  std::uint64_t seed = 1;
};

int run_gen(const GenOptions& o) {
  const Instance inst = o.kind == "sndp" ? generate_sndp_instance(o.n, o.m, o.k, o.c, o.seed)
                                         : generate_graph_instance(o.n, o.m, o.k, o.c, o.seed);
  write_output(o.output, emit_instance(inst));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connectivity-c mimicking networks, constrained cuts and rooted SNDP"};
  app.require_subcommand(1);

  SparsifyOptions sp;
  auto* sparsify = app.add_subcommand("sparsify", "Build a connectivity-c mimicking network");
  sparsify->add_option("input", sp.input, "Instance file")->required();
  sparsify->add_option("-o,--output", sp.output, "Sparsifier file (default: stdout)");
  sparsify->add_option("--c", sp.c, "Threshold c")->check(CLI::Range(1, 16));
  sparsify->add_flag("--oracle", sp.oracle, "Cross-check against the brute-force oracle");
  sparsify->add_flag("--json", sp.as_json, "Summary as JSON");

  VerifyOptions ve;
  auto* verify = app.add_subcommand("verify", "Compare thresholded terminal cuts of G and H");
  verify->add_option("graph", ve.graph, "Original instance")->required();
  verify->add_option("sparsifier", ve.sparsifier, "Sparsifier with m records")->required();
  verify->add_option("-o,--output", ve.output, "Report file (default: stdout)");
  verify->add_option("--c", ve.c, "Threshold c (default: copies per terminal)")->check(CLI::Range(0, 16));
  verify->add_option("--budget", ve.budget, "Query cap before sampling")->check(CLI::PositiveNumber);
  verify->add_option("--seed", ve.seed, "Seed for sampled queries");

  LinkedOptions li;
  auto* linked = app.add_subcommand("linked", "Test whether the non-terminal vertices are linked");
  linked->add_option("input", li.input, "Instance file")->required();
  linked->add_option("--c", li.c, "Threshold q")->check(CLI::Range(1, 16));
  linked->add_flag("--oracle", li.oracle, "Cross-check against brute force");
  linked->add_flag("--json", li.as_json, "Output JSON");

  ConstrainedOptions co;
  auto* constrained = app.add_subcommand("constrained-cut", "Find a (Q0, Q1, c0, c1, l)-constrained cut");
  constrained->add_option("input", co.input, "Instance file")->required();
  constrained->add_option("--q0", co.q0, "Comma-separated vertices forced to side 0");
  constrained->add_option("--q1", co.q1, "Comma-separated vertices forced to side 1");
  constrained->add_option("--c0", co.c0, "Terminals required on side 0")->check(CLI::NonNegativeNumber);
  constrained->add_option("--c1", co.c1, "Terminals required on side 1")->check(CLI::NonNegativeNumber);
  constrained->add_option("--ell,--budget", co.ell, "Cut size budget")->check(CLI::NonNegativeNumber);
  constrained->add_flag("--oracle", co.oracle, "Cross-check against brute force");
  constrained->add_flag("--json", co.as_json, "Output JSON");

  ImportantOptions im;
  auto* important = app.add_subcommand("important-cuts", "Enumerate important (X, Y)-cuts");
  important->add_option("input", im.input, "Instance file")->required();
  important->add_option("--x", im.x, "Comma-separated source set")->required();
  important->add_option("--y", im.y, "Comma-separated sink set")->required();
  important->add_option("--ell,--budget", im.ell, "Cut size budget")->check(CLI::NonNegativeNumber);
  important->add_flag("--oracle", im.oracle, "Cross-check against brute force");
  important->add_flag("--json", im.as_json, "Output JSON");

  SndpOptions sn;
  auto* sndp = app.add_subcommand("sndp", "Solve rooted survivable network design exactly");
  sndp->add_option("input", sn.input, "SNDP instance file")->required();
  sndp->add_option("-o,--output", sn.output, "Result file (default: stdout)");
  sndp->add_option("--c", sn.c, "Maximum requirement c")->check(CLI::Range(1, 4));
  sndp->add_flag("--oracle", sn.oracle, "Cross-check against brute force");
  sndp->add_flag("--json", sn.as_json, "Output JSON");

  GenOptions ge;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", ge.kind, "graph or sndp")->check(CLI::IsMember({"graph", "sndp"}));
  gen->add_option("--n", ge.n, "Vertices");
  gen->add_option("--m", ge.m, "Edges");
  gen->add_option("--k", ge.k, "Terminals or demands");
  gen->add_option("--c", ge.c, "Threshold c");
  gen->add_option("--seed", ge.seed, "Seed");
  gen->add_option("-o,--output", ge.output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*sparsify) return run_sparsify(sp);
    if (*verify) return run_verify(ve);
    if (*linked) return run_linked(li);
    if (*constrained) return run_constrained(co);
    if (*important) return run_important(im);
    if (*sndp) return run_sndp(sn);
    if (*gen) return run_gen(ge);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerificationFailure;
  }
  return kInputError;
}
