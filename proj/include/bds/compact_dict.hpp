#pragma once

#include "bds/bitspace.hpp"

#include <cstdint>
#include <optional>

namespace bds {

// Dynamic dictionary over keys in [0, universe) carrying fixed-width
// satellite bits. Open addressing with linear probing over 2*capacity
// slots (load factor <= 1/2), deletion by backward shift, so no tombstones.
// Each slot packs (key + 1) and the satellite; zero marks an empty slot.
//
// Hashing is a seeded 64-bit mixer, so behavior is reproducible per seed.
class CompactDictionary {
public:
  // capacity is clamped to universe.
  CompactDictionary(WorkspaceMeter &meter, std::uint64_t universe,
                    std::uint64_t capacity, unsigned satellite_width,
                    std::uint64_t seed);

  // Inserts or overwrites. Throws CapacityError when a new key would exceed
  // capacity(), ArgumentError for key >= universe or an oversized satellite.
  void insert(std::uint64_t key, std::uint64_t satellite);
  // Returns whether the key was present.
  bool erase(std::uint64_t key);
  bool contains(std::uint64_t key) const;
  std::optional<std::uint64_t> find(std::uint64_t key) const;
  // Drops every key; O(table size).
  void clear();

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t capacity() const noexcept { return capacity_; }
  std::uint64_t universe() const noexcept { return universe_; }
  unsigned satellite_width() const noexcept { return sat_width_; }
  std::uint64_t table_size() const noexcept { return slots_.size(); }

  // Bits registered with the meter by this instance.
  std::uint64_t registered_bits() const noexcept;

  // Instrumentation: slots inspected and operations served since creation.
  std::uint64_t probes() const noexcept { return probes_; }
  std::uint64_t operations() const noexcept { return ops_; }

  // The space bound every instance stays within:
  // 4*cap*(ceil(lg u) + r) + 64*ceil(lg(u + 2)).
  static std::uint64_t space_ceiling(std::uint64_t universe,
                                     std::uint64_t capacity,
                                     unsigned satellite_width);

private:
  std::uint64_t home(std::uint64_t key) const noexcept;
  // Slot holding key, or the empty slot where the probe ended.
  std::uint64_t locate(std::uint64_t key, bool &found) const;
  std::uint64_t stored_key(std::uint64_t slot_value) const noexcept {
    return (slot_value >> sat_width_) - 1;
  }
  void check_key(std::uint64_t key) const;

  std::uint64_t universe_;
  std::uint64_t capacity_;
  unsigned sat_width_;
  unsigned key_width_;
  std::uint64_t seed_;
  std::uint64_t size_ = 0;
  PackedArray slots_;
  Reservation registers_; // seed and live-key counter

  mutable std::uint64_t probes_ = 0;
  mutable std::uint64_t ops_ = 0;
};

} // namespace bds
