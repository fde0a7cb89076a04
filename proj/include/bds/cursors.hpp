#pragma once

#include "bds/bitspace.hpp"
#include "bds/graph.hpp"

#include <cstdint>
#include <functional>

namespace bds {

// Per-element variable-width unsigned fields packed back to back.
//
// Widths are never stored: they come from a width rule evaluated on demand
// (the callers derive them from read-only degrees). Element offsets are
// found through a two-level directory: an absolute bit offset every
// kSuperSpan elements, a relative offset every kSpan elements, and a short
// sum of at most kSpan - 1 widths. Every access is O(kSpan).
class VarWidthArray {
public:
  static constexpr std::size_t kSpan = 4;
  static constexpr std::size_t kSuperSpan = 64;

  using WidthRule = std::function<unsigned(std::size_t)>;

  VarWidthArray(WorkspaceMeter &meter, std::size_t count, WidthRule width);

  std::size_t size() const noexcept { return count_; }
  unsigned width(std::size_t i) const { return width_(i); }
  std::uint64_t offset(std::size_t i) const;

  std::uint64_t get(std::size_t i) const {
    return payload_.get_bits(offset(i), width(i));
  }
  void set(std::size_t i, std::uint64_t value) {
    payload_.set_bits(offset(i), width(i), value);
  }

  // Sub-field access for callers that split an element into parts.
  std::uint64_t read(std::uint64_t bit, unsigned width) const {
    return payload_.get_bits(bit, width);
  }
  void write(std::uint64_t bit, unsigned width, std::uint64_t value) {
    payload_.set_bits(bit, width, value);
  }

  std::uint64_t payload_bits() const noexcept { return payload_.size(); }
  std::uint64_t directory_bits() const noexcept {
    return absolute_.size() * absolute_.width() +
           relative_.size() * relative_.width();
  }

private:
  std::size_t count_;
  WidthRule width_;
  BitVector payload_;
  PackedArray absolute_;
  PackedArray relative_;
};

enum class CursorField { parent, progress };

// Two positions per vertex into its adjacency: `parent` indexes in(v) (the
// position of v's tree parent there) and `progress` indexes out(v). Each is
// stored in ceil(lg(deg + 2)) bits of the respective degree. The value deg
// is the sentinel: unset for parent, "nothing scanned yet" for progress.
class CursorStore {
public:
  CursorStore(WorkspaceMeter &meter, const Graph &graph);

  std::size_t get(Vertex v, CursorField field) const;
  // pos <= degree of the field's list, else ArgumentError.
  void set(Vertex v, CursorField field, std::size_t pos);

  std::size_t sentinel(Vertex v, CursorField field) const {
    return field == CursorField::parent ? graph_->in_degree(v)
                                        : graph_->out_degree(v);
  }

  std::uint64_t payload_bits() const noexcept { return fields_.payload_bits(); }
  std::uint64_t directory_bits() const noexcept {
    return fields_.directory_bits();
  }

  // sum over v of ceil(lg(in_deg + 2)) + ceil(lg(out_deg + 2)).
  static std::uint64_t payload_formula(const Graph &graph);

private:
  unsigned parent_width(Vertex v) const {
    return ceil_log2(graph_->in_degree(v) + 2);
  }

  const Graph *graph_;
  VarWidthArray fields_;
};

} // namespace bds
