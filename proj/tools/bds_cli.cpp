// bds: run, compare, generate and benchmark breadth-depth searches.
//
// Exit codes: 0 success (or all orderings equal), 1 ordering mismatch,
// 2 usage error (bad flags, unreadable input, invalid arguments).

#include "bds/errors.hpp"
#include "bds/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace bds;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct TraversalFlags {
  std::string algo = "bdsj";
  std::string variant = "classical";
  Vertex root = 0;
  std::uint64_t block_capacity = 0;
  unsigned levels = 0;
  std::uint64_t seed = 0;
  bool restart_all = false;
  bool json = false;
};

void add_traversal_flags(CLI::App *cmd, TraversalFlags &f) {
  cmd->add_option("--algo", f.algo, "bdsj or bdshs")
      ->check(CLI::IsMember({"bdsj", "bdshs"}));
  cmd->add_option("--root", f.root, "start vertex (default 0)");
  cmd->add_option("--block-capacity", f.block_capacity,
                  "entries per block, block variant (default ceil(n/lg n))");
  cmd->add_option("--levels", f.levels, "hierarchy levels, hier variant");
  cmd->add_option("--seed", f.seed, "seed for dictionaries and generators");
  cmd->add_flag("--restart-all", f.restart_all,
                "restart at the lowest unvisited vertex until all are emitted");
  cmd->add_flag("--json", f.json, "print a JSON report");
}

RunConfig config_from(const TraversalFlags &f) {
  RunConfig c;
  c.algo = parse_algo(f.algo);
  c.variant = parse_variant(f.variant);
  c.root = f.root;
  c.block_capacity = f.block_capacity;
  c.levels = f.levels;
  c.seed = f.seed;
  c.restart_all = f.restart_all;
  return c;
}

void print_ordering(std::ostream &out, const Ordering &order) {
  std::string buf;
  buf.reserve(order.size() * 7);
  for (Vertex v : order) {
    buf += std::to_string(v);
    buf += '\n';
  }
  out << buf;
}

std::string join(const Ordering &order) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < order.size(); ++i)
    s << (i ? "," : "") << order[i];
  s << ']';
  return s.str();
}

int cmd_run(const TraversalFlags &f, const std::string &path) {
  const Graph g = load_graph_file(path);
  const RunReport r = make_report(g, config_from(f));
  if (f.json) {
    std::cout << report_json(r) << '\n';
  } else {
    print_ordering(std::cout, r.order);
    std::cerr << report_json(r, false) << '\n';
  }
  return 0;
}

struct CompareFlags {
  TraversalFlags t;
  std::vector<std::string> variants;
  std::string file;
  bool random = false;
  std::size_t n = 64;
  std::size_t m = 0; // 0: 2n, capped by the simple-graph limit
  bool directed = false;
  std::uint64_t count = 1;
};

struct Candidate {
  std::string label;
  RunConfig config;
  bool faulty = false;
};

// Every compact configuration unless the caller named a subset. The
// "faulty" variant is a negative control that corrupts the oracle's output.
std::vector<Candidate> candidates(const CompareFlags &f, Algo algo) {
  std::vector<std::string> names = f.variants;
  if (names.empty())
    names = {"block", "hier", "cursor"};
  std::vector<Candidate> out;
  for (const std::string &name : names) {
    RunConfig c;
    c.algo = algo;
    c.root = f.t.root;
    c.seed = f.t.seed;
    c.restart_all = f.t.restart_all;
    c.verify = true;
    if (name == "faulty") {
      out.push_back({"faulty", c, true});
      continue;
    }
    c.variant = parse_variant(name);
    c.block_capacity = f.t.block_capacity;
    c.levels = f.t.levels;
    std::string label = name;
    if (c.variant == Variant::block && f.t.block_capacity)
      label += "(capacity " + std::to_string(f.t.block_capacity) + ")";
    if (c.variant == Variant::hier && f.t.levels)
      label += "(k " + std::to_string(f.t.levels) + ")";
    out.push_back({label, c, false});
  }
  return out;
}

// Returns 0 when every candidate matches the classical ordering, else 1.
int compare_one(const Graph &g, const std::string &what, const CompareFlags &f,
                Algo algo) {
  RunConfig oracle;
  oracle.algo = algo;
  oracle.root = f.t.root;
  oracle.restart_all = f.t.restart_all;
  const Ordering expect = run_traversal(g, oracle).order;
  int verdict = 0;
  for (const Candidate &cand : candidates(f, algo)) {
    Ordering got;
    if (cand.faulty) {
      got = expect;
      if (got.size() >= 2)
        std::swap(got[got.size() - 2], got.back());
      else
        got.push_back(static_cast<Vertex>(g.vertex_count()));
    } else {
      const TraversalResult r = run_traversal(g, cand.config);
      got = r.order;
      if (r.stats.shadow_mismatches || r.stats.dict_oracle_mismatches) {
        std::cout << what << ' ' << algo_name(algo) << ' ' << cand.label
                  << ": internal check failed (shadow " << r.stats.shadow_mismatches
                  << ", dictionary " << r.stats.dict_oracle_mismatches << ")\n";
        verdict = kMismatch;
      }
    }
    if (got == expect)
      continue;
    std::size_t i = 0;
    while (i < got.size() && i < expect.size() && got[i] == expect[i])
      ++i;
    std::cout << what << ' ' << algo_name(algo) << ' ' << cand.label
              << ": orderings diverge at index " << i << '\n'
              << "  classical: " << join(expect) << '\n'
              << "  " << cand.label << ": " << join(got) << '\n';
    verdict = kMismatch;
  }
  return verdict;
}

int cmd_compare(const CompareFlags &f) {
  const Algo algo = parse_algo(f.t.algo);
  int verdict = 0;
  std::uint64_t graphs = 0;
  if (f.random) {
    for (std::uint64_t i = 0; i < f.count; ++i) {
      const std::uint64_t seed = f.t.seed + i;
      const std::size_t limit = f.directed ? f.n * (f.n - 1) : f.n * (f.n - 1) / 2;
      const std::size_t m = std::min(limit, f.m ? f.m : 2 * f.n);
      const Graph g = generate_random(f.n, m, f.directed, seed);
      verdict |= compare_one(g, "random(seed " + std::to_string(seed) + ")", f, algo);
      ++graphs;
    }
  } else {
    if (f.file.empty())
      throw ArgumentError("compare needs a graph file or --random");
    verdict = compare_one(load_graph_file(f.file), f.file, f, algo);
    graphs = 1;
  }
  std::cout << (verdict ? "MISMATCH" : "EQUIVALENT") << " over " << graphs
            << " graph(s)\n";
  return verdict;
}

struct GenFlags {
  std::string kind;
  bool random = false;
  std::size_t n = 0;
  std::size_t m = 0;
  bool directed = false;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_gen(const GenFlags &f) {
  if (f.random == !f.kind.empty())
    throw ArgumentError("gen needs exactly one of --kind or --random");
  const Graph g = f.random ? generate_random(f.n, f.m, f.directed, f.seed)
                           : generate_structured(parse_graph_kind(f.kind), f.n);
  const std::string text = serialize(g);
  if (f.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.output, std::ios::binary);
    if (!(out << text))
      throw ArgumentError("cannot write " + f.output);
  }
  return 0;
}

struct BenchFlags {
  std::vector<std::string> algos{"bdsj"};
  std::vector<std::string> variants{"block"};
  unsigned min_exp = 10;
  unsigned max_exp = 14;
  std::size_t m_factor = 4;
  bool directed = false;
  std::uint64_t seed = 0;
};

int cmd_bench(const BenchFlags &f) {
  if (f.min_exp > f.max_exp || f.max_exp > 26)
    throw ArgumentError("bench exponents must satisfy min <= max <= 26");
  for (unsigned e = f.min_exp; e <= f.max_exp; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const Graph g = generate_random(n, f.m_factor * n, f.directed, f.seed + e);
    for (const std::string &a : f.algos)
      for (const std::string &v : f.variants) {
        RunConfig c;
        c.algo = parse_algo(a);
        c.variant = parse_variant(v);
        c.seed = f.seed;
        const RunReport r = make_report(g, c);
        nlohmann::ordered_json j;
        j["n"] = n;
        j["m"] = g.edge_count();
        j["algo"] = a;
        j["variant"] = v;
        j["wall_time_ms"] = r.wall_time_ms;
        j["peak_aux_bits"] = r.stats.peak_aux_bits;
        j["reconstruction_count"] = r.stats.reconstruction_count;
        j["edge_scan_count"] = r.stats.edge_scan_count;
        j["dict_op_count"] = r.stats.dict_op_count;
        std::cout << j.dump() << '\n' << std::flush;
      }
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Breadth-depth search (Jiang and Horowitz-Sahni) in compact workspace"};
  app.require_subcommand(1);

  TraversalFlags run_flags;
  std::string run_file;
  auto *run = app.add_subcommand("run", "traverse a graph file and print the ordering");
  add_traversal_flags(run, run_flags);
  run->add_option("--variant", run_flags.variant, "classical, block, hier or cursor")
      ->check(CLI::IsMember({"classical", "block", "hier", "cursor"}));
  run->add_option("graph", run_file, "graph file")->required();

  CompareFlags cmp;
  auto *compare = app.add_subcommand("compare", "check compact variants against the classical oracle");
  add_traversal_flags(compare, cmp.t);
  compare->add_option("--variants", cmp.variants,
                      "subset of block, hier, cursor (faulty: negative control)")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->check(CLI::IsMember({"block", "hier", "cursor", "faulty"}));
  compare->add_flag("--random", cmp.random, "use seeded random graphs");
  compare->add_option("--n", cmp.n, "random graph vertices");
  compare->add_option("--m", cmp.m, "random graph edges (default 2n)");
  compare->add_flag("--directed", cmp.directed, "random graphs are directed");
  compare->add_option("--count", cmp.count, "number of random graphs (seeds seed..)");
  compare->add_option("graph", cmp.file, "graph file");

  GenFlags gen_flags;
  auto *gen = app.add_subcommand("gen", "write a graph file");
  gen->add_option("--kind", gen_flags.kind, "path, star, cycle, complete or binary-tree");
  gen->add_flag("--random", gen_flags.random, "seeded random simple graph");
  gen->add_option("--n", gen_flags.n, "vertices")->required();
  gen->add_option("--m", gen_flags.m, "edges (random)");
  gen->add_flag("--directed", gen_flags.directed, "directed (random)");
  gen->add_option("--seed", gen_flags.seed, "seed (random)");
  gen->add_option("-o,--output", gen_flags.output, "output file (default stdout)");

  BenchFlags bench_flags;
  auto *bench = app.add_subcommand("bench", "sweep n = 2^min..2^max, one JSON line per cell");
  bench->add_option("--algo", bench_flags.algos, "bdsj and/or bdshs")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->check(CLI::IsMember({"bdsj", "bdshs"}));
  bench->add_option("--variant", bench_flags.variants, "variants to time")
      ->delimiter(',')
      ->allow_extra_args(false)
      ->check(CLI::IsMember({"classical", "block", "hier", "cursor"}));
  bench->add_option("--min-exp", bench_flags.min_exp, "smallest lg n (default 10)");
  bench->add_option("--max-exp", bench_flags.max_exp, "largest lg n (default 14)");
  bench->add_option("--m-factor", bench_flags.m_factor, "m = factor * n (default 4)");
  bench->add_flag("--directed", bench_flags.directed, "directed graphs");
  bench->add_option("--seed", bench_flags.seed, "generator seed base");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*run)
      return cmd_run(run_flags, run_file);
    if (*compare)
      return cmd_compare(cmp);
    if (*gen)
      return cmd_gen(gen_flags);
    if (*bench)
      return cmd_bench(bench_flags);
  } catch (const std::exception &e) {
    std::cerr << "bds: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
