#include "bds/errors.hpp"
#include "bds/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace bds;

namespace {

std::vector<Vertex> list(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

using V = std::vector<Vertex>;

std::size_t error_line(std::string_view text) {
  try {
    load_graph(text);
  } catch (const ParseError &e) {
    return e.line();
  }
  FAIL("no parse error");
  return 0;
}

// Undirected symmetry by sort-and-compare of the arc multiset.
bool symmetric(const Graph &g) {
  std::vector<Edge> arcs, flipped;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (Vertex u : g.out(v)) {
      arcs.emplace_back(v, u);
      flipped.emplace_back(u, v);
    }
  std::sort(arcs.begin(), arcs.end());
  std::sort(flipped.begin(), flipped.end());
  return arcs == flipped;
}

} // namespace

TEST_CASE("load: undirected path keeps file order in both lists") {
  const Graph g = load_graph("3 2 0\n0 1\n1 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.directed());
  CHECK(list(g.out(0)) == V{1});
  CHECK(list(g.out(1)) == V{0, 2});
  CHECK(list(g.out(2)) == V{1});
  CHECK(g.adjacency_size() == 4);
}

TEST_CASE("load: single vertex") {
  const Graph g = load_graph("1 0 0\n");
  CHECK(g.vertex_count() == 1);
  CHECK(g.out(0).empty());
}

TEST_CASE("load: directed graph builds in-lists") {
  const Graph g = load_graph("4 4 1\n0 1\n0 2\n0 3\n3 1\n");
  CHECK(g.directed());
  CHECK(list(g.out(0)) == V{1, 2, 3});
  CHECK(list(g.out(3)) == V{1});
  CHECK(list(g.in(1)) == V{0, 3});
  CHECK(list(g.in(2)) == V{0});
  CHECK(list(g.in(3)) == V{0});
  CHECK(g.in(0).empty());
  CHECK(g.adjacency_size() == 4);
}

TEST_CASE("load: parse errors name the offending line") {
  CHECK(error_line("") == 1);
  CHECK(error_line("3 x 0\n") == 1);
  CHECK(error_line("3 1 2\n0 1\n") == 1);
  CHECK(error_line("3 2 0\n0 1\n1\n") == 3);
  CHECK(error_line("3 2 0\n0 1\n1 3\n") == 3);
  CHECK(error_line("3 1 0\n0 1\n1 2\n") == 3);
  CHECK_THROWS_AS(load_graph("3 3 0\n0 1\n"), ParseError);
  CHECK_NOTHROW(load_graph("3 1 0\n0 1\n\n"));
}

TEST_CASE("load/serialize round trip preserves adjacency order") {
  for (bool directed : {false, true}) {
    const Graph g = generate_random(40, 90, directed, 5);
    const Graph h = load_graph(serialize(g));
    CHECK(g == h);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      CHECK(list(g.out(v)) == list(h.out(v)));
  }
  const Graph multi = load_graph("3 4 0\n0 1\n0 1\n2 2\n1 2\n");
  CHECK(multi.has_repeated_neighbors());
  CHECK(load_graph(serialize(multi)) == multi);
}

TEST_CASE("generate_random: determinism, degree sum and simplicity") {
  CHECK(generate_random(1, 0, false, 3).vertex_count() == 1);
  CHECK(generate_random(5, 4, false, 7) == generate_random(5, 4, false, 7));

  const Graph g = generate_random(64, 256, false, 1);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < 64; ++v)
    degree_sum += g.out_degree(v);
  CHECK(degree_sum == 512);
  CHECK(symmetric(g));
  CHECK_FALSE(g.has_repeated_neighbors());

  for (bool directed : {false, true}) {
    const std::size_t full = directed ? 20 * 19 : 20 * 19 / 2;
    const Graph dense = generate_random(20, full, directed, 9);
    CHECK(dense.edge_count() == full);
    CHECK_FALSE(dense.has_repeated_neighbors());
    for (const auto &[u, v] : dense.edges())
      CHECK(u != v);
    CHECK_THROWS_AS(generate_random(20, full + 1, directed, 9), ArgumentError);
  }
}

TEST_CASE("generate_random: directed in/out correspondence") {
  const Graph g = generate_random(50, 200, true, 11);
  std::map<Edge, int> out_arcs, in_arcs;
  std::size_t out_sum = 0;
  for (Vertex v = 0; v < 50; ++v) {
    out_sum += g.out_degree(v);
    for (Vertex u : g.out(v))
      ++out_arcs[{v, u}];
    for (Vertex u : g.in(v))
      ++in_arcs[{u, v}];
  }
  CHECK(out_sum == 200);
  CHECK(out_arcs == in_arcs);
}

TEST_CASE("generate_structured: canonical shapes") {
  const Graph path = generate_structured(GraphKind::path, 3);
  CHECK(list(path.out(0)) == V{1});
  CHECK(list(path.out(1)) == V{0, 2});
  CHECK(list(path.out(2)) == V{1});

  const Graph star = generate_structured(GraphKind::star, 4);
  CHECK(list(star.out(0)) == V{1, 2, 3});
  for (Vertex leaf = 1; leaf < 4; ++leaf)
    CHECK(list(star.out(leaf)) == V{0});

  const Graph k3 = generate_structured(GraphKind::complete, 3);
  CHECK(list(k3.out(0)) == V{1, 2});
  CHECK(list(k3.out(1)) == V{0, 2});
  CHECK(list(k3.out(2)) == V{0, 1});

  const Graph cycle = generate_structured(GraphKind::cycle, 5);
  CHECK(list(cycle.out(0)) == V{1, 4});
  CHECK(list(cycle.out(4)) == V{0, 3});

  const Graph tree = generate_structured(GraphKind::binary_tree, 7);
  CHECK(list(tree.out(0)) == V{1, 2});
  CHECK(list(tree.out(1)) == V{0, 3, 4});
  CHECK(list(tree.out(6)) == V{2});

  for (GraphKind kind : {GraphKind::path, GraphKind::star, GraphKind::cycle,
                         GraphKind::complete, GraphKind::binary_tree}) {
    CHECK(parse_graph_kind(graph_kind_name(kind)) == kind);
    for (std::size_t n : {1u, 2u, 3u, 17u}) {
      const Graph g = generate_structured(kind, n);
      CHECK(g.vertex_count() == n);
      CHECK(symmetric(g));
      for (Vertex v = 0; v < n; ++v)
        CHECK(std::is_sorted(g.out(v).begin(), g.out(v).end()));
    }
  }
  CHECK_THROWS_AS(generate_structured(GraphKind::path, 0), ArgumentError);
  CHECK_THROWS(parse_graph_kind("hypercube"));
}

TEST_CASE("reachable_from follows directed arcs only") {
  const Graph g = load_graph("4 4 1\n0 1\n0 2\n0 3\n3 1\n");
  const auto r = reachable_from(g, 3);
  CHECK(r == std::vector<bool>{false, true, false, true});
}
