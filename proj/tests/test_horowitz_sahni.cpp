#include "bds/errors.hpp"
#include "bds/horowitz_sahni.hpp"
#include "bds/jiang.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

#include <doctest.h>

using namespace bds;
using O = Ordering;

namespace {

const Graph contrast = Graph::from_edges(4, false, {{0, 1}, {0, 2}, {0, 3}, {3, 1}});

std::vector<RunConfig> all_configs(std::size_t n) {
  RunConfig classical;
  classical.algo = Algo::bdshs;
  auto out = props::compact_configs(Algo::bdshs, n, 5);
  out.insert(out.begin(), classical);
  return out;
}

} // namespace

TEST_CASE("classical: hand-executed examples") {
  CHECK(bdshs_classical(generate_structured(GraphKind::path, 1), 0).order == O{0});
  CHECK(bdshs_classical(generate_structured(GraphKind::star, 4), 0).order == O{0, 3, 2, 1});
  CHECK(bdshs_classical(contrast, 0).order == O{0, 3, 2, 1});
  CHECK(bdsj_classical(contrast, 0).order == O{0, 3, 1, 2});
}

TEST_CASE("every variant reproduces the frozen fixture orderings") {
  for (const auto &f : fixtures::all()) {
    const Graph g = f.graph();
    for (Vertex root = 0; root < f.n; ++root)
      for (RunConfig c : all_configs(f.n)) {
        c.root = root;
        INFO(f.name, " ", props::describe(c));
        const auto r = run_traversal(g, c);
        CHECK(r.order == f.bdshs[root]);
        CHECK(r.stats.shadow_mismatches == 0);
        CHECK(r.stats.dict_oracle_mismatches == 0);
      }
  }
}

TEST_CASE("block: capacity >= n never reconstructs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_random(50, 150, seed % 2 == 1, seed);
    CHECK(bdshs_block(g, 0, 50).stats.reconstruction_count == 0);
  }
}

TEST_CASE("block: binary tree of 63 with capacity 4 reconstructs") {
  const Graph tree = generate_structured(GraphKind::binary_tree, 63);
  const auto r = bdshs_block(tree, 0, 4);
  CHECK(r.order == bdshs_classical(tree, 0).order);
  CHECK(r.stats.reconstruction_count >= 1);
}

TEST_CASE("reconstruct: window equals the shadow suffix") {
  TraversalOptions verify;
  verify.verify = true;
  const auto tree = bdshs_block(generate_structured(GraphKind::binary_tree, 15), 0, 2, verify);
  CHECK(tree.stats.shadow_checks >= 1);
  CHECK(tree.stats.shadow_mismatches == 0);

  std::uint64_t checks = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 29;
    const bool directed = seed % 2 == 1;
    const std::size_t cap = directed ? n * (n - 1) : n * (n - 1) / 2;
    const Graph g = generate_random(n, std::min(cap, 2 * n + seed % n), directed, seed);
    const auto r = bdshs_block(g, 0, 2, verify);
    REQUIRE(r.stats.shadow_mismatches == 0);
    REQUIRE(r.order == bdshs_classical(g, 0).order);
    checks += r.stats.shadow_checks;
  }
  CHECK(checks > 0);
}

TEST_CASE("hier: small graphs, degenerate sizing and the n=256 grid") {
  for (const auto &f : fixtures::all()) {
    const Graph g = f.graph();
    for (unsigned k : {1u, 2u})
      CHECK(bdshs_hier(g, 0, {k, 2, 0}).order == f.bdshs[0]);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = generate_random(100, 300, true, seed);
    const auto r = bdshs_hier(g, 0, {1, seed, 100});
    CHECK(r.stats.reconstruction_count == 0);
    CHECK(r.order == bdshs_classical(g, 0).order);
  }
  TraversalOptions verify;
  verify.verify = true;
  std::uint64_t restores = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = generate_random(256, 1024, false, seed);
    const auto r = bdshs_hier(g, 0, {2, seed, 0}, verify);
    REQUIRE(r.order == bdshs_classical(g, 0).order);
    REQUIRE(r.stats.dict_oracle_mismatches == 0);
    REQUIRE(r.stats.shadow_mismatches == 0);
    REQUIRE(r.stats.dict_op_count <= 64 * (1024 + 256));
    restores += r.stats.reconstruction_count;
  }
  CHECK(restores > 0);
}

TEST_CASE("cursor: directed loader example and a long path") {
  const Graph d = load_graph("4 4 1\n0 1\n0 2\n0 3\n3 1\n");
  for (Vertex root = 0; root < 4; ++root)
    CHECK(bdshs_cursor(d, root).order == bdshs_classical(d, root).order);

  const Graph path = generate_structured(GraphKind::path, 1024);
  const auto r = bdshs_cursor(path, 0);
  CHECK(r.stats.edge_scan_count <= 4 * (1024 + 1023));
  CHECK(r.order.size() == 1024);
}

TEST_CASE("cursor: repeated neighbors are taken at their first occurrence") {
  const Graph g = load_graph("4 5 0\n0 1\n0 2\n0 1\n0 3\n2 1\n");
  REQUIRE(g.has_repeated_neighbors());
  for (Vertex root = 0; root < 4; ++root)
    CHECK(bdshs_cursor(g, root).order == bdshs_classical(g, root).order);
}

TEST_CASE("trees: both searches agree") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph t = props::random_tree(2 + seed * 7 % 200, seed);
    const auto root = static_cast<Vertex>(seed % t.vertex_count());
    CHECK(bdshs_classical(t, root).order == bdsj_classical(t, root).order);
  }
  const Graph bt = generate_structured(GraphKind::binary_tree, 127);
  CHECK(bdshs_classical(bt, 0).order == bdsj_classical(bt, 0).order);
}

TEST_CASE("properties over random graphs") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const bool directed = seed % 2 == 1;
    const std::size_t n = 2 + seed % 60;
    const std::size_t cap = directed ? n * (n - 1) : n * (n - 1) / 2;
    const Graph g = generate_random(n, std::min(cap, seed % (4 * n + 1)), directed, seed);
    const auto root = static_cast<Vertex>(seed % n);
    INFO("seed ", seed);
    const auto ref = bdshs_classical(g, root);
    CHECK(props::emits_reachable_once(g, root, ref.order));

    for (RunConfig c : props::compact_configs(Algo::bdshs, n, seed)) {
      c.root = root;
      props::Recorder rec(n);
      rec.track_shape = c.variant != Variant::cursor;
      c.observer = &rec;
      const auto r = run_traversal(g, c);
      INFO(props::describe(c));
      CHECK(r.order == ref.order);
      INFO((rec.failures.empty() ? std::string() : rec.failures.front()));
      CHECK(rec.failure_count == 0);
      // Each vertex leaves white exactly once outside reconstruction.
      for (std::size_t v = 0; v < n; ++v)
        if (rec.color[v] != Color::white)
          CHECK(rec.color[v] == Color::black);
      if (c.variant == Variant::block) {
        const std::uint64_t b = c.block_capacity ? c.block_capacity : default_block_capacity(n);
        CHECK(r.stats.reconstruction_count <= (n + b - 1) / b + 1);
      }
    }
  }
}

TEST_CASE("root out of range is rejected by every variant") {
  for (RunConfig c : all_configs(4)) {
    c.root = 7;
    CHECK_THROWS_AS(run_traversal(contrast, c), ArgumentError);
  }
}

TEST_CASE("restart-all covers every vertex, one contiguous run per root") {
  const Graph g = load_graph("6 3 1\n1 0\n2 3\n4 5\n");
  for (RunConfig c : all_configs(6)) {
    c.root = 2;
    c.restart_all = true;
    INFO(props::describe(c));
    CHECK(run_traversal(g, c).order == O{2, 3, 0, 1, 4, 5});
  }
}
