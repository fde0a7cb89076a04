#pragma once

#include "bds/bitspace.hpp"
#include "bds/graph.hpp"

#include <cstdint>

namespace bds {

struct TraversalStats {
  std::uint64_t peak_aux_bits = 0;
  std::uint64_t padding_bits = 0;
  std::uint64_t reconstruction_count = 0;
  std::uint64_t edge_scan_count = 0;
  std::uint64_t dict_op_count = 0;
  std::uint64_t output_length = 0;
  // Meter state at the end of the run, all structures still live.
  MeterSnapshot meter;

  // Filled only when TraversalOptions::verify is set.
  std::uint64_t shadow_checks = 0;
  std::uint64_t shadow_mismatches = 0;
  std::uint64_t dict_oracle_checks = 0;
  std::uint64_t dict_oracle_mismatches = 0;
};

// Hooks for instrumented runs. Every callback defaults to a no-op.
class TraversalObserver {
public:
  virtual ~TraversalObserver() = default;

  virtual void on_emit(Vertex) {}
  // Classical BDS_j: an adaptive push (discovery or rediscovery).
  virtual void on_discover(Vertex) {}
  // `reset` marks the grey->white recoloring of a reconstruction and the
  // re-greying done by its replay.
  virtual void on_color(Vertex, Color /*from*/, Color /*to*/, bool /*reset*/) {}
  // Logical stack pushes and pops (replays are not reported).
  virtual void on_push(Vertex) {}
  virtual void on_pop(Vertex) {}
  // Cursor variants: a progress cursor was written.
  virtual void on_progress(Vertex, std::size_t) {}
};

struct TraversalOptions {
  TraversalObserver *observer = nullptr;
  // Debug instrumentation: shadow stacks compared after every
  // reconstruction, dictionary operations mirrored into a plain map.
  bool verify = false;
  // After the root's search ends, restart from the lowest white vertex
  // until none remain. Each restart is emitted contiguously.
  bool restart_all = false;
};

struct TraversalResult {
  Ordering order;
  TraversalStats stats;
};

// ceil(n / lg n), at least 2.
std::uint64_t default_block_capacity(std::size_t n);

struct HierParams {
  unsigned levels = 0;            // 0 picks min(2, max_hier_levels(n))
  std::uint64_t seed = 0;         // dictionary hashing
  std::uint64_t level1_block = 0; // 0 uses the size formula
};

// lg* n: applications of lg until the value is <= 2.
unsigned iterated_log(std::size_t n);
// Largest accepted level count: max(2, lg* n).
unsigned max_hier_levels(std::size_t n);
// Block sizes per level, index 0 holding 1. Level j gets
// ceil(n / (lg^(j) n)^2) clamped to [2, n] (n when lg^(j) n <= 1), then
// rounded up to a multiple of level j-1.
std::vector<std::uint64_t> hierarchy_sizes(std::size_t n, unsigned levels,
                                           std::uint64_t level1_block = 0);

} // namespace bds
