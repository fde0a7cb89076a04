#pragma once

// Horowitz-Sahni breadth-depth search: pop the top vertex, emit it, push all
// of its unvisited neighbors (marking them visited) in adjacency order.

#include "bds/blocked_stack.hpp"
#include "bds/traversal.hpp"

namespace bds {

TraversalResult bdshs_classical(const Graph &g, Vertex root,
                                const TraversalOptions &opts = {});

// Delayed removal over a blocked stack. The vertex under expansion stays
// stacked: a grey-pending top is emitted and expanded, a grey (expanded) top
// is finished and popped.
TraversalResult bdshs_block(const Graph &g, Vertex root,
                            std::uint64_t block_capacity = 0,
                            const TraversalOptions &opts = {});

void bdshs_reconstruct(const Graph &g, Vertex root, ColorArray &colors,
                       BlockedStack &stack, TraversalStats &stats,
                       TraversalObserver *observer = nullptr);

TraversalResult bdshs_hier(const Graph &g, Vertex root,
                           const HierParams &params = {},
                           const TraversalOptions &opts = {});

TraversalResult bdshs_cursor(const Graph &g, Vertex root,
                             const TraversalOptions &opts = {});

} // namespace bds
