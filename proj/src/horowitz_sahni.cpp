#include "bds/horowitz_sahni.hpp"

#include "bds/cursors.hpp"
#include "support.hpp"

namespace bds {

using detail::Run;

TraversalResult bdshs_classical(const Graph &g, Vertex root,
                                const TraversalOptions &opts) {
  detail::check_root(g, root);
  const std::size_t n = g.vertex_count();
  Run run(g, opts, 4);
  TraversalStats &stats = run.result.stats;

  // Visited-on-push keeps every vertex on the stack at most once, so n
  // slots suffice.
  BitVector visited(run.meter, n);
  PackedArray stack(run.meter, n, bits_for(n));
  std::uint64_t size = 0;

  Vertex next_root = root;
  Vertex scan = 0; // restarts take the lowest unvisited vertex
  while (next_root < n) {
    visited.set(next_root, true);
    stack.set(size++, next_root);
    run.pushed(next_root);
    while (size > 0) {
      const auto v = static_cast<Vertex>(stack.get(--size));
      run.popped(v);
      run.emit(v);
      for (Vertex u : g.out(v)) {
        ++stats.edge_scan_count;
        if (!visited.get(u)) {
          visited.set(u, true);
          stack.set(size++, u);
          run.pushed(u);
        }
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

void check_shadow(const BlockedStack &stack, TraversalStats &stats) {
  if (!stack.has_shadow())
    return;
  ++stats.shadow_checks;
  if (!stack.window_matches_shadow())
    ++stats.shadow_mismatches;
}

} // namespace

void bdshs_reconstruct(const Graph &g, Vertex root, ColorArray &colors,
                       BlockedStack &stack, TraversalStats &stats,
                       TraversalObserver *observer) {
  const BlockedStack::RestoreTarget target = stack.begin_restore();
  auto paint = [&](Vertex v, Color to) {
    if (observer)
      observer->on_color(v, colors.get(v), to, true);
    colors.set(v, to);
  };
  // The block's last entry is the logical top; whether it was already
  // expanded is not implied by the replay, so keep its state aside.
  const auto top = static_cast<Vertex>(target.record.last);
  const Color top_state = colors.get(top);
  for (Vertex v = 0; v < colors.size(); ++v)
    if (is_grey(colors.get(v)))
      paint(v, Color::white);

  // Replay: the newest pushed vertex is always the replayed top, so expand
  // it and continue from the last child it pushed.
  std::uint64_t depth = 0;
  paint(root, Color::grey_pending);
  if (depth >= target.begin_depth)
    stack.restore_put(root);
  ++depth;
  Vertex cur = root;
  while (depth < target.end_depth) {
    paint(cur, Color::grey);
    bool pushed = false;
    for (Vertex u : g.out(cur)) {
      ++stats.edge_scan_count;
      if (colors.get(u) != Color::white)
        continue;
      if (depth == target.end_depth)
        throw ConsistencyError("replay overshot the checkpoint depth " +
                               std::to_string(target.end_depth));
      paint(u, Color::grey_pending);
      if (depth >= target.begin_depth)
        stack.restore_put(u);
      ++depth;
      cur = u;
      pushed = true;
    }
    if (!pushed)
      throw ConsistencyError("replay stalled at depth " +
                             std::to_string(depth) + " before reaching " +
                             std::to_string(target.end_depth));
  }
  if (cur != top)
    throw ConsistencyError("replay ended away from the checkpoint top");
  paint(top, top_state);
  stack.finish_restore();
  ++stats.reconstruction_count;
  check_shadow(stack, stats);
}

TraversalResult bdshs_block(const Graph &g, Vertex root,
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
    run.paint(colors, r, Color::grey_pending);
    stack.push(r);
    run.pushed(r);
    while (stack.depth() > 0) {
      const auto t = stack.top();
      if (!t) {
        bdshs_reconstruct(g, r, colors, stack, stats, run.observer);
        continue;
      }
      const auto v = static_cast<Vertex>(*t);
      if (colors.get(v) == Color::grey_pending) {
        run.emit(v);
        run.paint(colors, v, Color::grey);
        for (Vertex u : g.out(v)) {
          ++stats.edge_scan_count;
          if (colors.get(u) == Color::white) {
            run.paint(colors, u, Color::grey_pending);
            stack.push(u);
            run.pushed(u);
          }
        }
      } else {
        // Expanded: its children were all pushed above it and are finished.
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

TraversalResult bdshs_cursor(const Graph &g, Vertex root,
                             const TraversalOptions &opts) {
  detail::check_root(g, root);
  const std::size_t n = g.vertex_count();
  Run run(g, opts, 6);
  TraversalStats &stats = run.result.stats;

  ColorArray colors(run.meter, n);
  CursorStore cursors(run.meter, g);
  const bool repeats = g.has_repeated_neighbors();

  // Emit x and fix its children: every white neighbor turns pending and
  // records where x sits in its in-list. The child sweep then starts just
  // right of the last child, so nothing beyond it is looked at twice.
  auto expand = [&](Vertex x) {
    run.emit(x);
    run.paint(colors, x, Color::grey);
    const auto adj = g.out(x);
    std::size_t start = 0;
    for (std::size_t p = 0; p < adj.size(); ++p) {
      const Vertex u = adj[p];
      ++stats.edge_scan_count;
      if (colors.get(u) != Color::white)
        continue;
      start = p + 1;
      run.paint(colors, u, Color::grey_pending);
      const auto back = g.in(u);
      std::size_t q = 0;
      for (;; ++q) {
        ++stats.edge_scan_count;
        if (back[q] == x)
          break;
      }
      cursors.set(u, CursorField::parent, q);
    }
    cursors.set(x, CursorField::progress, start);
    if (run.observer)
      run.observer->on_progress(x, start);
  };
  auto parent_of = [&](Vertex u) {
    return g.in(u)[cursors.get(u, CursorField::parent)];
  };

  Vertex next_root = root;
  Vertex scan = 0; // restarts take the lowest unvisited vertex
  while (next_root < n) {
    const Vertex r = next_root;
    Vertex cur = r;
    expand(cur);
    for (;;) {
      // Children are taken right to left, each at its leftmost occurrence,
      // which is where the classical run pushed it.
      const auto adj = g.out(cur);
      std::size_t p = cursors.get(cur, CursorField::progress);
      bool found = false;
      while (p > 0) {
        --p;
        ++stats.edge_scan_count;
        const Vertex u = adj[p];
        if (colors.get(u) != Color::grey_pending || parent_of(u) != cur)
          continue;
        if (repeats) {
          bool earlier = false;
          for (std::size_t e = 0; e < p && !earlier; ++e) {
            ++stats.edge_scan_count;
            earlier = adj[e] == u;
          }
          if (earlier)
            continue;
        }
        found = true;
        break;
      }
      cursors.set(cur, CursorField::progress, p);
      if (run.observer)
        run.observer->on_progress(cur, p);
      if (found) {
        cur = adj[p];
        expand(cur);
      } else {
        run.paint(colors, cur, Color::black);
        if (cur == r)
          break;
        cur = parent_of(cur);
      }
    }
    if (!run.restart_all)
      break;
    next_root = scan = Run::next_white(colors, scan);
  }
  return run.finish();
}

} // namespace bds
