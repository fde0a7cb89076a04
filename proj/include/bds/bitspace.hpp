#pragma once

// Bit-level workspace substrate. Every auxiliary structure a traversal uses
// is carved out of a WorkspaceMeter so its footprint can be read back exactly.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bds {

// Number of bits needed to write any value in [0, count), at least 1.
inline unsigned bits_for(std::uint64_t count) {
  return count <= 2 ? 1u : static_cast<unsigned>(std::bit_width(count - 1));
}

// ceil(lg x) for x >= 1.
inline unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

struct MeterSnapshot {
  std::uint64_t current_bits = 0;
  std::uint64_t peak_bits = 0;
  std::uint64_t padding_bits = 0;
};

class WorkspaceMeter {
public:
  using Token = std::uint64_t;

  WorkspaceMeter() = default;
  WorkspaceMeter(const WorkspaceMeter &) = delete;
  WorkspaceMeter &operator=(const WorkspaceMeter &) = delete;

  // Registers `bits` requested bits. Word-alignment slack (up to the next
  // multiple of 64) is tracked separately under padding.
  Token alloc(std::uint64_t bits);
  // Throws UsageError for unknown or already-freed tokens.
  void free(Token token);

  std::uint64_t current_bits() const noexcept { return current_; }
  std::uint64_t peak_bits() const noexcept { return peak_; }
  std::uint64_t current_padding_bits() const noexcept { return padding_; }
  std::uint64_t peak_padding_bits() const noexcept { return peak_padding_; }
  std::size_t live_allocations() const noexcept { return live_.size(); }

  MeterSnapshot snapshot() const noexcept {
    return {current_, peak_, peak_padding_};
  }

private:
  struct Entry {
    std::uint64_t bits;
    std::uint64_t padding;
  };

  std::unordered_map<Token, Entry> live_;
  Token next_ = 1;
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
  std::uint64_t padding_ = 0;
  std::uint64_t peak_padding_ = 0;
};

// Move-only RAII handle for one meter allocation.
class Reservation {
public:
  Reservation() = default;
  Reservation(WorkspaceMeter &meter, std::uint64_t bits)
      : meter_(&meter), token_(meter.alloc(bits)), bits_(bits) {}
  ~Reservation() { release(); }

  Reservation(Reservation &&other) noexcept
      : meter_(std::exchange(other.meter_, nullptr)),
        token_(std::exchange(other.token_, 0)),
        bits_(std::exchange(other.bits_, 0)) {}
  Reservation &operator=(Reservation &&other) noexcept {
    if (this != &other) {
      release();
      meter_ = std::exchange(other.meter_, nullptr);
      token_ = std::exchange(other.token_, 0);
      bits_ = std::exchange(other.bits_, 0);
    }
    return *this;
  }
  Reservation(const Reservation &) = delete;
  Reservation &operator=(const Reservation &) = delete;

  std::uint64_t bits() const noexcept { return bits_; }

  void release() {
    if (meter_ != nullptr) {
      meter_->free(token_);
      meter_ = nullptr;
      bits_ = 0;
    }
  }

private:
  WorkspaceMeter *meter_ = nullptr;
  WorkspaceMeter::Token token_ = 0;
  std::uint64_t bits_ = 0;
};

class BitVector {
public:
  BitVector() = default;
  BitVector(WorkspaceMeter &meter, std::uint64_t length)
      : words_((length + 63) / 64, 0), length_(length),
        reservation_(meter, length) {}

  std::uint64_t size() const noexcept { return length_; }

  bool get(std::uint64_t i) const {
    assert(i < length_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint64_t i, bool value) {
    assert(i < length_);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  // Reads `width` (1..64) bits starting at bit `pos`, LSB first.
  std::uint64_t get_bits(std::uint64_t pos, unsigned width) const {
    assert(width >= 1 && width <= 64 && pos + width <= length_);
    const std::uint64_t word = pos >> 6;
    const unsigned shift = pos & 63;
    std::uint64_t value = words_[word] >> shift;
    if (shift + width > 64)
      value |= words_[word + 1] << (64 - shift);
    return width == 64 ? value : value & ((std::uint64_t{1} << width) - 1);
  }

  void set_bits(std::uint64_t pos, unsigned width, std::uint64_t value) {
    assert(width >= 1 && width <= 64 && pos + width <= length_);
    const std::uint64_t mask =
        width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    assert((value & ~mask) == 0);
    const std::uint64_t word = pos >> 6;
    const unsigned shift = pos & 63;
    words_[word] = (words_[word] & ~(mask << shift)) | (value << shift);
    if (shift + width > 64) {
      const unsigned spill = shift + width - 64;
      const std::uint64_t high = (std::uint64_t{1} << spill) - 1;
      words_[word + 1] = (words_[word + 1] & ~high) | (value >> (64 - shift));
    }
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

private:
  std::vector<std::uint64_t> words_;
  std::uint64_t length_ = 0;
  Reservation reservation_;
};

// Fixed-width unsigned integers packed back to back.
class PackedArray {
public:
  PackedArray() = default;
  PackedArray(WorkspaceMeter &meter, std::uint64_t count, unsigned width)
      : bits_(meter, count * width), count_(count), width_(width) {
    assert(width >= 1 && width <= 64);
  }

  std::uint64_t size() const noexcept { return count_; }
  unsigned width() const noexcept { return width_; }

  std::uint64_t get(std::uint64_t i) const {
    assert(i < count_);
    return bits_.get_bits(i * width_, width_);
  }
  void set(std::uint64_t i, std::uint64_t value) {
    assert(i < count_);
    bits_.set_bits(i * width_, width_, value);
  }
  void fill(std::uint64_t value) {
    if (value == 0) {
      bits_.clear();
      return;
    }
    for (std::uint64_t i = 0; i < count_; ++i)
      set(i, value);
  }

private:
  BitVector bits_;
  std::uint64_t count_ = 0;
  unsigned width_ = 1;
};

// Vertex states. BDS_j only uses white, grey and black; the delayed-removal
// BDS_hs variants split grey into pending (pushed, not expanded) and grey
// (expanded, still stacked).
enum class Color : std::uint8_t {
  white = 0,
  grey_pending = 1,
  grey = 2,
  black = 3,
};

inline bool is_grey(Color c) {
  return c == Color::grey || c == Color::grey_pending;
}

const char *color_name(Color c);

class ColorArray {
public:
  ColorArray(WorkspaceMeter &meter, std::uint64_t n) : cells_(meter, n, 2) {}

  std::uint64_t size() const noexcept { return cells_.size(); }
  Color get(std::uint64_t v) const { return static_cast<Color>(cells_.get(v)); }
  void set(std::uint64_t v, Color c) {
    cells_.set(v, static_cast<std::uint64_t>(c));
  }

private:
  PackedArray cells_;
};

} // namespace bds
