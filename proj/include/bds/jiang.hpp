#pragma once

// Jiang's breadth-depth search. A vertex is expanded (and emitted) at its
// most recent discovery; neighbors are considered rightmost first.

#include "bds/blocked_stack.hpp"
#include "bds/traversal.hpp"

namespace bds {

// Reference implementation over an adaptive stack (doubly linked list plus a
// per-vertex location index). Its output is the ordering oracle for the
// compact variants below.
TraversalResult bdsj_classical(const Graph &g, Vertex root,
                               const TraversalOptions &opts = {});

// Delayed insertion over a blocked stack: O(n) bits, O(m lg n) time.
// block_capacity 0 selects default_block_capacity(n).
TraversalResult bdsj_block(const Graph &g, Vertex root,
                           std::uint64_t block_capacity = 0,
                           const TraversalOptions &opts = {});

// Rebuilds the block the stack just underflowed into: grey vertices go back
// to white and the forward search is replayed from `root` with emission
// suppressed until the replay reaches the block's checkpoint.
void bdsj_reconstruct(const Graph &g, Vertex root, ColorArray &colors,
                      BlockedStack &stack, TraversalStats &stats,
                      TraversalObserver *observer = nullptr);

// Multi-level blocks with per-level dictionaries and group counters.
TraversalResult bdsj_hier(const Graph &g, Vertex root,
                          const HierParams &params = {},
                          const TraversalOptions &opts = {});

// Stackless: parent and progress positions into the adjacency arrays.
// O(n lg(m/n)) bits, O(n + m) time.
TraversalResult bdsj_cursor(const Graph &g, Vertex root,
                            const TraversalOptions &opts = {});

} // namespace bds
