#include "bds/errors.hpp"
#include "bds/graph.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace bds {

namespace {

// Unbiased draw from [0, bound). mt19937_64's output sequence is fixed by the
// standard, and this reduction is ours, so results match across platforms.
std::uint64_t draw(std::mt19937_64 &rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold)
      return r % bound;
  }
}

} // namespace

Graph generate_random(std::size_t n, std::size_t m, bool directed,
                      std::uint64_t seed) {
  const std::uint64_t pairs =
      directed ? std::uint64_t{n} * (n == 0 ? 0 : n - 1)
               : std::uint64_t{n} * (n == 0 ? 0 : n - 1) / 2;
  if (m > pairs)
    throw ArgumentError("infeasible random graph: m=" + std::to_string(m) +
                        " exceeds " + std::to_string(pairs) +
                        " possible edges for n=" + std::to_string(n));

  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);

  if (2 * m <= pairs) {
    std::unordered_set<std::uint64_t> used;
    used.reserve(2 * m);
    while (edges.size() < m) {
      const auto u = static_cast<Vertex>(draw(rng, n));
      const auto v = static_cast<Vertex>(draw(rng, n));
      if (u == v)
        continue;
      const Vertex a = directed ? u : std::min(u, v);
      const Vertex b = directed ? v : std::max(u, v);
      if (used.insert((std::uint64_t{a} << 32) | b).second)
        edges.emplace_back(u, v);
    }
  } else {
    std::vector<Edge> all;
    all.reserve(pairs);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = directed ? 0 : u + 1; v < n; ++v)
        if (u != v)
          all.emplace_back(u, v);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t j = i + draw(rng, all.size() - i);
      std::swap(all[i], all[j]);
      Edge e = all[i];
      if (!directed && draw(rng, 2) == 1)
        std::swap(e.first, e.second);
      edges.push_back(e);
    }
  }
  return Graph::from_edges(n, directed, std::move(edges));
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "path")
    return GraphKind::path;
  if (name == "star")
    return GraphKind::star;
  if (name == "cycle")
    return GraphKind::cycle;
  if (name == "complete")
    return GraphKind::complete;
  if (name == "binary-tree")
    return GraphKind::binary_tree;
  throw ArgumentError("unknown graph kind: " + std::string(name));
}

const char *graph_kind_name(GraphKind kind) {
  switch (kind) {
  case GraphKind::path:
    return "path";
  case GraphKind::star:
    return "star";
  case GraphKind::cycle:
    return "cycle";
  case GraphKind::complete:
    return "complete";
  case GraphKind::binary_tree:
    return "binary-tree";
  }
  return "?";
}

Graph generate_structured(GraphKind kind, std::size_t n) {
  if (n < 1)
    throw ArgumentError("structured graphs need n >= 1");
  std::vector<Edge> edges;
  const auto N = static_cast<Vertex>(n);
  switch (kind) {
  case GraphKind::path:
    for (Vertex i = 0; i + 1 < N; ++i)
      edges.emplace_back(i, i + 1);
    break;
  case GraphKind::star:
    for (Vertex i = 1; i < N; ++i)
      edges.emplace_back(0, i);
    break;
  case GraphKind::cycle:
    for (Vertex i = 0; i + 1 < N; ++i)
      edges.emplace_back(i, i + 1);
    if (N >= 3)
      edges.emplace_back(0, N - 1);
    break;
  case GraphKind::complete:
    edges.reserve(n * (n - 1) / 2);
    for (Vertex i = 0; i < N; ++i)
      for (Vertex j = i + 1; j < N; ++j)
        edges.emplace_back(i, j);
    break;
  case GraphKind::binary_tree:
    for (Vertex i = 1; i < N; ++i)
      edges.emplace_back((i - 1) / 2, i);
    break;
  }
  // Lexicographic (low, high) edge order yields ascending adjacency lists.
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, false, std::move(edges));
}

} // namespace bds
