#include "bds/blocked_stack.hpp"

#include "bds/errors.hpp"

#include <string>

namespace bds {

namespace {

std::uint64_t record_capacity(std::uint64_t max_depth, std::uint64_t block) {
  return std::max<std::uint64_t>(1, (max_depth + block - 1) / block);
}

} // namespace

BlockedStack::BlockedStack(WorkspaceMeter &meter, unsigned entry_width,
                           std::uint64_t window_capacity,
                           std::uint64_t max_depth, unsigned mark_width,
                           bool keep_shadow)
    : block_(window_capacity / 2),
      window_(meter, 2 * (window_capacity / 2), entry_width),
      rec_first_(meter, record_capacity(max_depth, std::max<std::uint64_t>(1, window_capacity / 2)), entry_width),
      rec_last_(meter, rec_first_.size(), entry_width),
      rec_mark_(meter, rec_first_.size(), mark_width),
      keep_shadow_(keep_shadow) {
  if (window_capacity < 2)
    throw ArgumentError("blocked stack window capacity must be at least 2");
}

void BlockedStack::push(std::uint64_t value) {
  if (restoring_)
    throw UsageError("push during restore");
  if (retained() == 2 * block_) {
    if (records_ == rec_first_.size())
      throw ConsistencyError("boundary log full at depth " +
                             std::to_string(depth()));
    rec_first_.set(records_, window_.get(0));
    rec_last_.set(records_, window_.get(block_ - 1));
    rec_mark_.set(records_, base_ + block_);
    ++records_;
    for (std::uint64_t i = 0; i < block_; ++i)
      window_.set(i, window_.get(block_ + i));
    base_ += block_;
    ++discards_;
  }
  window_.set(retained(), value);
  ++total_pushes_;
  if (keep_shadow_)
    shadow_.push_back(value);
}

BlockedStack::PopResult BlockedStack::pop() {
  if (restoring_)
    throw UsageError("pop during restore");
  if (retained() == 0)
    return {depth() > 0 ? PopStatus::underflow : PopStatus::empty, 0};
  const std::uint64_t value = window_.get(retained() - 1);
  ++total_pops_;
  if (keep_shadow_)
    shadow_.pop_back();
  return {PopStatus::value, value};
}

std::optional<std::uint64_t> BlockedStack::top() const {
  if (retained() == 0 || restoring_)
    return std::nullopt;
  return window_.get(retained() - 1);
}

BlockedStack::Record BlockedStack::boundary(std::size_t i) const {
  return {rec_first_.get(i), rec_last_.get(i), rec_mark_.get(i)};
}

BlockedStack::RestoreTarget BlockedStack::begin_restore() {
  if (restoring_ || retained() != 0 || depth() == 0)
    throw UsageError("restore requested without an underflow");
  if (records_ == 0)
    throw ConsistencyError("underflow with an empty boundary log");
  const Record rec = boundary(records_ - 1);
  if (rec.mark != base_)
    throw ConsistencyError("boundary log mark " + std::to_string(rec.mark) +
                           " does not meet the window base " +
                           std::to_string(base_));
  restoring_ = true;
  restore_fill_ = 0;
  return {base_ - block_, base_, rec};
}

void BlockedStack::restore_put(std::uint64_t value) {
  if (!restoring_)
    throw UsageError("restore_put outside a restore");
  if (restore_fill_ == block_)
    throw ConsistencyError("restore overran its block");
  window_.set(restore_fill_++, value);
}

void BlockedStack::finish_restore() {
  if (!restoring_)
    throw UsageError("finish_restore outside a restore");
  const Record rec = boundary(records_ - 1);
  if (restore_fill_ != block_ || window_.get(0) != rec.first ||
      window_.get(block_ - 1) != rec.last)
    throw ConsistencyError("restored block disagrees with its checkpoint");
  --records_;
  base_ -= block_;
  restoring_ = false;
}

std::vector<std::uint64_t> BlockedStack::window_contents() const {
  std::vector<std::uint64_t> out;
  out.reserve(retained());
  for (std::uint64_t i = 0; i < retained(); ++i)
    out.push_back(window_.get(i));
  return out;
}

bool BlockedStack::window_matches_shadow() const {
  if (!keep_shadow_ || shadow_.size() != depth())
    return false;
  for (std::uint64_t i = 0; i < retained(); ++i)
    if (window_.get(i) != shadow_[base_ + i])
      return false;
  return true;
}

} // namespace bds
