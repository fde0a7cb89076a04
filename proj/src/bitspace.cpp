#include "bds/bitspace.hpp"

#include "bds/errors.hpp"

namespace bds {

WorkspaceMeter::Token WorkspaceMeter::alloc(std::uint64_t bits) {
  const std::uint64_t padding = (64 - bits % 64) % 64;
  const Token token = next_++;
  live_.emplace(token, Entry{bits, padding});
  current_ += bits;
  padding_ += padding;
  if (current_ > peak_)
    peak_ = current_;
  if (padding_ > peak_padding_)
    peak_padding_ = padding_;
  return token;
}

void WorkspaceMeter::free(Token token) {
  const auto it = live_.find(token);
  if (it == live_.end())
    throw UsageError("meter free of unknown or already released token " +
                     std::to_string(token));
  current_ -= it->second.bits;
  padding_ -= it->second.padding;
  live_.erase(it);
}

const char *color_name(Color c) {
  switch (c) {
  case Color::white:
    return "white";
  case Color::grey_pending:
    return "grey-pending";
  case Color::grey:
    return "grey";
  case Color::black:
    return "black";
  }
  return "?";
}

} // namespace bds
