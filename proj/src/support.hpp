#pragma once

// Plumbing shared by the traversal implementations.

#include "bds/errors.hpp"
#include "bds/traversal.hpp"

#include <string>

namespace bds::detail {

inline void check_root(const Graph &g, Vertex root) {
  if (root >= g.vertex_count())
    throw ArgumentError("root " + std::to_string(root) +
                        " out of range for a graph with " +
                        std::to_string(g.vertex_count()) + " vertices");
}

// Width of one machine-register-like scalar (counters, loop indices).
inline unsigned register_width(const Graph &g) {
  return bits_for(g.vertex_count() + g.adjacency_size() + 2);
}

// Emission, stats and observer bookkeeping for one run.
class Run {
public:
  Run(const Graph &g, const TraversalOptions &opts, unsigned registers)
      : observer(opts.observer), verify(opts.verify),
        restart_all(opts.restart_all),
        registers_(meter, registers * register_width(g)) {
    result.order.reserve(g.vertex_count());
  }

  void emit(Vertex v) {
    result.order.push_back(v);
    if (observer)
      observer->on_emit(v);
  }

  void paint(ColorArray &colors, Vertex v, Color to, bool reset = false) {
    if (observer)
      observer->on_color(v, colors.get(v), to, reset);
    colors.set(v, to);
  }

  void pushed(Vertex v) {
    if (observer)
      observer->on_push(v);
  }
  void popped(Vertex v) {
    if (observer)
      observer->on_pop(v);
  }

  // Next restart root: lowest white vertex at or after `from`, or n.
  static Vertex next_white(const ColorArray &colors, Vertex from) {
    while (from < colors.size() && colors.get(from) != Color::white)
      ++from;
    return from;
  }

  TraversalResult finish() {
    result.stats.output_length = result.order.size();
    result.stats.peak_aux_bits = meter.peak_bits();
    result.stats.padding_bits = meter.peak_padding_bits();
    result.stats.meter = meter.snapshot();
    return std::move(result);
  }

  WorkspaceMeter meter;
  TraversalObserver *observer;
  bool verify;
  bool restart_all;
  TraversalResult result;

private:
  Reservation registers_;
};

} // namespace bds::detail
