#include "bds/cursors.hpp"

#include "bds/errors.hpp"

#include <string>

namespace bds {

namespace {

struct Layout {
  std::uint64_t total = 0;
  std::uint64_t max_relative = 0;
};

Layout measure(std::size_t count, const VarWidthArray::WidthRule &width) {
  Layout layout;
  std::uint64_t super_start = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (i % VarWidthArray::kSuperSpan == 0)
      super_start = layout.total;
    if (i % VarWidthArray::kSpan == 0)
      layout.max_relative =
          std::max(layout.max_relative, layout.total - super_start);
    layout.total += width(i);
  }
  return layout;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

} // namespace

VarWidthArray::VarWidthArray(WorkspaceMeter &meter, std::size_t count,
                             WidthRule width)
    : count_(count), width_(std::move(width)) {
  const Layout layout = measure(count_, width_);
  payload_ = BitVector(meter, layout.total);
  absolute_ = PackedArray(meter, ceil_div(count_, kSuperSpan),
                          bits_for(layout.total + 1));
  relative_ = PackedArray(meter, ceil_div(count_, kSpan),
                          bits_for(layout.max_relative + 1));
  std::uint64_t total = 0;
  std::uint64_t super_start = 0;
  for (std::size_t i = 0; i < count_; ++i) {
    if (i % kSuperSpan == 0) {
      super_start = total;
      absolute_.set(i / kSuperSpan, total);
    }
    if (i % kSpan == 0)
      relative_.set(i / kSpan, total - super_start);
    total += width_(i);
  }
}

std::uint64_t VarWidthArray::offset(std::size_t i) const {
  std::uint64_t bit = absolute_.get(i / kSuperSpan) + relative_.get(i / kSpan);
  for (std::size_t j = i - i % kSpan; j < i; ++j)
    bit += width_(j);
  return bit;
}

CursorStore::CursorStore(WorkspaceMeter &meter, const Graph &graph)
    : graph_(&graph),
      fields_(meter, graph.vertex_count(), [g = &graph](std::size_t v) {
        const auto u = static_cast<Vertex>(v);
        return ceil_log2(g->in_degree(u) + 2) + ceil_log2(g->out_degree(u) + 2);
      }) {
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    set(v, CursorField::parent, sentinel(v, CursorField::parent));
    set(v, CursorField::progress, sentinel(v, CursorField::progress));
  }
}

std::size_t CursorStore::get(Vertex v, CursorField field) const {
  const std::uint64_t base = fields_.offset(v);
  const unsigned pw = parent_width(v);
  if (field == CursorField::parent)
    return fields_.read(base, pw);
  return fields_.read(base + pw, fields_.width(v) - pw);
}

void CursorStore::set(Vertex v, CursorField field, std::size_t pos) {
  if (pos > sentinel(v, field))
    throw ArgumentError("cursor position " + std::to_string(pos) +
                        " beyond degree of vertex " + std::to_string(v));
  const std::uint64_t base = fields_.offset(v);
  const unsigned pw = parent_width(v);
  if (field == CursorField::parent)
    fields_.write(base, pw, pos);
  else
    fields_.write(base + pw, fields_.width(v) - pw, pos);
}

std::uint64_t CursorStore::payload_formula(const Graph &graph) {
  std::uint64_t total = 0;
  for (Vertex v = 0; v < graph.vertex_count(); ++v)
    total += ceil_log2(graph.in_degree(v) + 2) + ceil_log2(graph.out_degree(v) + 2);
  return total;
}

} // namespace bds
