#include "bds/jiang.hpp"

#include "bds/cursors.hpp"
#include "support.hpp"

namespace bds {

using detail::Run;

TraversalResult bdsj_classical(const Graph &g, Vertex root,
                               const TraversalOptions &opts) {
  detail::check_root(g, root);
  const std::size_t n = g.vertex_count();
  Run run(g, opts, 4);

  // Adaptive stack: a doubly linked list threaded through per-vertex slots,
  // so a vertex's node is found directly (the location index) and at most
  // one copy of each vertex is ever listed. `none` (= n) ends the list.
  const std::uint64_t none = n;
  const unsigned w = bits_for(n + 1);
  PackedArray below(run.meter, n, w);
  PackedArray above(run.meter, n, w);
  BitVector listed(run.meter, n);
  BitVector visited(run.meter, n);
  std::uint64_t top = none;

  auto unlink = [&](Vertex v) {
    const std::uint64_t b = below.get(v), a = above.get(v);
    if (b != none)
      above.set(b, a);
    if (a != none)
      below.set(a, b);
    else
      top = b;
    listed.set(v, false);
  };
  auto adppush = [&](Vertex v) {
    if (listed.get(v))
      unlink(v);
    below.set(v, top);
    above.set(v, none);
    if (top != none)
      above.set(top, v);
    top = v;
    listed.set(v, true);
    if (run.observer)
      run.observer->on_discover(v);
  };

  Vertex next_root = root;
  Vertex scan = 0; // restarts take the lowest unvisited vertex
  while (next_root < n) {
    adppush(next_root);
    while (top != none) {
      const auto v = static_cast<Vertex>(top);
      if (!visited.get(v)) {
        visited.set(v, true);
        run.emit(v);
        for (Vertex u : g.out(v)) {
          ++run.result.stats.edge_scan_count;
          if (!visited.get(u))
            adppush(u);
        }
      } else {
        unlink(v);
      }
    }
    if (!run.restart_all)
      break;
    while (scan < n && visited.get(scan))
      ++scan;
    next_root = scan;
  }
  return run.finish();
}

namespace {

// Position of the rightmost white entry of v's list strictly left of
// `limit`, or -1.
std::ptrdiff_t rightmost_white(const Graph &g, const ColorArray &colors,
                               Vertex v, std::size_t limit,
                               TraversalStats &stats) {
  const auto adj = g.out(v);
  for (std::size_t p = limit; p-- > 0;) {
    ++stats.edge_scan_count;
    if (colors.get(adj[p]) == Color::white)
      return static_cast<std::ptrdiff_t>(p);
  }
  return -1;
}

void check_shadow(const BlockedStack &stack, TraversalStats &stats) {
  if (!stack.has_shadow())
    return;
  ++stats.shadow_checks;
  if (!stack.window_matches_shadow())
    ++stats.shadow_mismatches;
}

} // namespace

void bdsj_reconstruct(const Graph &g, Vertex root, ColorArray &colors,
                      BlockedStack &stack, TraversalStats &stats,
                      TraversalObserver *observer) {
  const BlockedStack::RestoreTarget target = stack.begin_restore();
  auto paint = [&](Vertex v, Color to) {
    if (observer)
      observer->on_color(v, colors.get(v), to, true);
    colors.set(v, to);
  };
  for (Vertex v = 0; v < colors.size(); ++v)
    if (colors.get(v) == Color::grey)
      paint(v, Color::white);

  // Replay the forward step along the rightmost-white path. Black vertices
  // are finished and never re-entered; nothing is emitted.
  Vertex cur = root;
  paint(cur, Color::grey);
  std::uint64_t depth = 0;
  for (;;) {
    if (depth >= target.begin_depth)
      stack.restore_put(cur);
    if (++depth == target.end_depth)
      break;
    const std::ptrdiff_t p =
        rightmost_white(g, colors, cur, g.out_degree(cur), stats);
    if (p < 0)
      throw ConsistencyError("replay stalled at depth " +
                             std::to_string(depth) + " before reaching " +
                             std::to_string(target.end_depth));
    cur = g.out(cur)[static_cast<std::size_t>(p)];
    paint(cur, Color::grey);
  }
  stack.finish_restore();
  ++stats.reconstruction_count;
  check_shadow(stack, stats);
}

TraversalResult bdsj_block(const Graph &g, Vertex root,
                           std::uint64_t block_capacity,
                           const TraversalOptions &opts) {
  detail::check_root(g, root);
  const std::size_t n = g.vertex_count();
  const std::uint64_t block =
      block_capacity == 0 ? default_block_capacity(n) : block_capacity;
  if (block < 2)
    throw ArgumentError("block capacity must be at least 2");
  Run run(g, opts, 6);
  TraversalStats &stats = run.result.stats;

  ColorArray colors(run.meter, n);
  BlockedStack stack(run.meter, bits_for(n), 2 * block, n,
                     bits_for(n + 1), run.verify);

  Vertex next_root = root;
  Vertex scan = 0; // restarts take the lowest unvisited vertex
  while (next_root < n) {
    const Vertex r = next_root;
    run.paint(colors, r, Color::grey);
    run.emit(r);
    stack.push(r);
    run.pushed(r);
    while (stack.depth() > 0) {
      const auto t = stack.top();
      if (!t) {
        bdsj_reconstruct(g, r, colors, stack, stats, run.observer);
        continue;
      }
      const auto v = static_cast<Vertex>(*t);
      const std::ptrdiff_t p =
          rightmost_white(g, colors, v, g.out_degree(v), stats);
      if (p >= 0) {
        const Vertex u = g.out(v)[static_cast<std::size_t>(p)];
        run.paint(colors, u, Color::grey);
        run.emit(u);
        stack.push(u);
        run.pushed(u);
      } else {
        run.paint(colors, v, Color::black);
        stack.pop();
        run.popped(v);
      }
    }
    if (!run.restart_all)
      break;
    next_root = scan = Run::next_white(colors, scan);
  }
  return run.finish();
}

TraversalResult bdsj_cursor(const Graph &g, Vertex root,
                            const TraversalOptions &opts) {
  detail::check_root(g, root);
  const std::size_t n = g.vertex_count();
  Run run(g, opts, 5);
  TraversalStats &stats = run.result.stats;

  ColorArray colors(run.meter, n);
  CursorStore cursors(run.meter, g);

  Vertex next_root = root;
  Vertex scan = 0; // restarts take the lowest unvisited vertex
  while (next_root < n) {
    const Vertex r = next_root;
    Vertex cur = r;
    run.paint(colors, cur, Color::grey);
    run.emit(cur);
    for (;;) {
      // The progress cursor names the last neighbor taken (or the degree
      // before any), so scanning resumes just left of it.
      const auto adj = g.out(cur);
      std::size_t p = cursors.get(cur, CursorField::progress);
      bool found = false;
      while (p > 0) {
        --p;
        ++stats.edge_scan_count;
        if (colors.get(adj[p]) == Color::white) {
          found = true;
          break;
        }
      }
      cursors.set(cur, CursorField::progress, p);
      if (run.observer)
        run.observer->on_progress(cur, p);
      if (found) {
        const Vertex u = adj[p];
        run.paint(colors, u, Color::grey);
        run.emit(u);
        const auto back = g.in(u);
        std::size_t q = 0;
        for (;; ++q) {
          ++stats.edge_scan_count;
          if (back[q] == cur)
            break;
        }
        cursors.set(u, CursorField::parent, q);
        cur = u;
      } else {
        run.paint(colors, cur, Color::black);
        if (cur == r)
          break;
        cur = g.in(cur)[cursors.get(cur, CursorField::parent)];
      }
    }
    if (!run.restart_all)
      break;
    next_root = scan = Run::next_white(colors, scan);
  }
  return run.finish();
}

} // namespace bds
