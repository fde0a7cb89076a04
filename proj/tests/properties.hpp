#pragma once

// Observer-based property checks shared by the traversal tests.

#include "bds/report.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace props {

using namespace bds;

inline int rank(Color c) {
  switch (c) {
  case Color::white:
    return 0;
  case Color::grey_pending:
    return 1;
  case Color::grey:
    return 2;
  case Color::black:
    return 3;
  }
  return -1;
}

class Recorder : public TraversalObserver {
public:
  explicit Recorder(std::size_t n)
      : color(n, Color::white), stamp(n, 0), expanded(n, false),
        progress(n, SIZE_MAX) {}

  void on_emit(Vertex v) override {
    if (track_discovery) {
      // Jiang's rule: the vertex expanded is the most recently (re)discovered
      // one not yet expanded.
      std::uint64_t best = 0;
      for (std::size_t u = 0; u < stamp.size(); ++u)
        if (!expanded[u])
          best = std::max(best, stamp[u]);
      if (stamp[v] != best)
        fail("emitted " + std::to_string(v) + " is not the latest discovery");
    }
    expanded[v] = true;
  }

  void on_discover(Vertex v) override { stamp[v] = ++clock; }

  void on_color(Vertex v, Color from, Color to, bool reset) override {
    if (from != color[v])
      fail("color event for " + std::to_string(v) + " starts from a stale state");
    if (!reset) {
      if (rank(to) <= rank(from))
        fail("non-monotone color change at " + std::to_string(v));
    } else {
      ++resets;
      // Reconstruction may only move between white and the grey states.
      if (from == Color::black || to == Color::black)
        fail("reconstruction touched a black vertex");
    }
    if (is_grey(from) && !is_grey(to))
      --grey_count;
    if (!is_grey(from) && is_grey(to))
      ++grey_count;
    color[v] = to;
  }

  void on_push(Vertex v) override {
    stacked.push_back(v);
    check_shape();
  }
  void on_pop(Vertex v) override {
    if (stacked.empty() || stacked.back() != v)
      fail("pop of " + std::to_string(v) + " does not match the pushed order");
    else
      stacked.pop_back();
    check_shape();
  }

  void on_progress(Vertex v, std::size_t p) override {
    if (progress[v] != SIZE_MAX && p > progress[v])
      fail("progress cursor of " + std::to_string(v) + " moved right");
    progress[v] = p;
  }

  void check_shape() {
    if (!track_shape)
      return;
    if (static_cast<std::size_t>(grey_count) != stacked.size()) {
      fail("stacked vertices differ from grey vertices");
      return;
    }
    for (Vertex u : stacked)
      if (!is_grey(color[u]))
        fail("stacked vertex " + std::to_string(u) + " is not grey");
  }

  void fail(std::string what) {
    if (failures.size() < 5)
      failures.push_back(std::move(what));
    ++failure_count;
  }

  bool track_discovery = false;
  bool track_shape = false;

  std::vector<Color> color;
  std::vector<std::uint64_t> stamp;
  std::vector<bool> expanded;
  std::vector<std::size_t> progress;
  std::vector<Vertex> stacked;
  std::uint64_t clock = 0;
  long grey_count = 0;
  std::uint64_t resets = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;
};

// Every vertex reachable from root appears once, nothing else appears.
inline bool emits_reachable_once(const Graph &g, Vertex root, const Ordering &order) {
  const auto reach = reachable_from(g, root);
  std::vector<int> seen(g.vertex_count(), 0);
  for (Vertex v : order) {
    if (v >= g.vertex_count() || !reach[v] || seen[v]++)
      return false;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (reach[v] && !seen[v])
      return false;
  return !order.empty() && order.front() == root;
}

// Random tree on n vertices: vertex i > 0 hangs below a uniformly chosen
// earlier vertex.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  std::vector<Edge> edges;
  std::uint64_t x = seed * 0x9e3779b97f4a7c15ULL + 1;
  for (Vertex i = 1; i < n; ++i) {
    x ^= x << 13;
    x ^= x >> 7;
    x ^= x << 17;
    edges.emplace_back(static_cast<Vertex>(x % i), i);
  }
  return Graph::from_edges(n, false, edges);
}

inline std::vector<RunConfig> compact_configs(Algo algo, std::size_t n,
                                              std::uint64_t seed) {
  std::vector<RunConfig> out;
  RunConfig base;
  base.algo = algo;
  base.verify = true;
  base.seed = seed;
  for (std::uint64_t b : {std::uint64_t{2}, std::uint64_t{4}, std::uint64_t{0},
                          static_cast<std::uint64_t>(std::max<std::size_t>(n, 2))}) {
    RunConfig c = base;
    c.variant = Variant::block;
    c.block_capacity = b;
    out.push_back(c);
  }
  for (unsigned k : {1u, 2u}) {
    RunConfig c = base;
    c.variant = Variant::hier;
    c.levels = k;
    out.push_back(c);
  }
  RunConfig c = base;
  c.variant = Variant::cursor;
  out.push_back(c);
  return out;
}

inline std::string describe(const RunConfig &c) {
  return std::string(algo_name(c.algo)) + "/" + variant_name(c.variant) +
         " root=" + std::to_string(c.root) + " cap=" + std::to_string(c.block_capacity) +
         " k=" + std::to_string(c.levels);
}

} // namespace props
