#pragma once

#include "bds/bitspace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bds {

// A stack that keeps only its newest entries resident.
//
// The logical stack is cut into aligned blocks of block_size() entries by
// depth. At most two blocks stay in the window; when a push would need a
// third, the older resident block is dropped and only a checkpoint record
// (its first and last entry, plus the depth at which it closes) survives in
// the boundary log. Popping below the window reports underflow; the owner
// rebuilds the missing block and hands it back through the restore calls.
class BlockedStack {
public:
  struct Record {
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    std::uint64_t mark = 0; // logical depth just past the block's last entry
  };

  enum class PopStatus { value, underflow, empty };

  struct PopResult {
    PopStatus status;
    std::uint64_t value = 0;
  };

  struct RestoreTarget {
    std::uint64_t begin_depth; // depth of the block's first entry
    std::uint64_t end_depth;   // one past its last entry
    Record record;
  };

  // window_capacity >= 2; blocks hold window_capacity / 2 entries. max_depth
  // bounds the logical depth and sizes the boundary log.
  BlockedStack(WorkspaceMeter &meter, unsigned entry_width,
               std::uint64_t window_capacity, std::uint64_t max_depth,
               unsigned mark_width, bool keep_shadow = false);

  void push(std::uint64_t value);
  PopResult pop();
  // Top of the window, nullopt when the window is empty.
  std::optional<std::uint64_t> top() const;

  std::uint64_t depth() const noexcept { return total_pushes_ - total_pops_; }
  std::uint64_t retained() const noexcept { return depth() - base_; }
  std::uint64_t block_size() const noexcept { return block_; }
  std::uint64_t window_capacity() const noexcept { return 2 * block_; }
  std::uint64_t total_pushes() const noexcept { return total_pushes_; }
  std::uint64_t total_pops() const noexcept { return total_pops_; }
  std::uint64_t discards() const noexcept { return discards_; }

  std::size_t boundary_count() const noexcept { return records_; }
  Record boundary(std::size_t i) const;

  // Restore protocol: only valid right after pop() reported underflow.
  // Entries must be handed over bottom-up; finish_restore() checks them
  // against the checkpoint and throws ConsistencyError on disagreement.
  RestoreTarget begin_restore();
  void restore_put(std::uint64_t value);
  void finish_restore();
  bool restoring() const noexcept { return restoring_; }

  std::vector<std::uint64_t> window_contents() const;

  // Debug shadow: an unbounded copy of the logical stack (not metered).
  bool has_shadow() const noexcept { return keep_shadow_; }
  const std::vector<std::uint64_t> &shadow() const noexcept { return shadow_; }
  bool window_matches_shadow() const;

private:
  std::uint64_t block_;
  std::uint64_t base_ = 0; // logical depth of window slot 0
  std::uint64_t total_pushes_ = 0;
  std::uint64_t total_pops_ = 0;
  std::uint64_t discards_ = 0;
  PackedArray window_;
  PackedArray rec_first_;
  PackedArray rec_last_;
  PackedArray rec_mark_;
  std::size_t records_ = 0;

  bool restoring_ = false;
  std::uint64_t restore_fill_ = 0;

  bool keep_shadow_;
  std::vector<std::uint64_t> shadow_;
};

} // namespace bds
