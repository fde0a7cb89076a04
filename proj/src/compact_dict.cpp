#include "bds/compact_dict.hpp"

#include "bds/errors.hpp"

#include <algorithm>
#include <string>

namespace bds {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

unsigned checked_width(std::uint64_t universe, unsigned sat_width) {
  const unsigned key_width = bits_for(universe + 1);
  if (key_width + sat_width > 64)
    throw ArgumentError("dictionary slot wider than 64 bits");
  return key_width;
}

} // namespace

CompactDictionary::CompactDictionary(WorkspaceMeter &meter,
                                     std::uint64_t universe,
                                     std::uint64_t capacity,
                                     unsigned satellite_width,
                                     std::uint64_t seed)
    : universe_(universe), capacity_(std::min(capacity, universe)),
      sat_width_(satellite_width),
      key_width_(checked_width(universe, satellite_width)),
      seed_(mix(seed ^ 0x9e3779b97f4a7c15ULL)),
      slots_(meter, 2 * std::max<std::uint64_t>(capacity_, 1),
             key_width_ + satellite_width),
      registers_(meter, 64 + bits_for(capacity_ + 1)) {
  if (universe == 0)
    throw ArgumentError("dictionary universe must be non-empty");
}

std::uint64_t CompactDictionary::registered_bits() const noexcept {
  return slots_.size() * slots_.width() + registers_.bits();
}

std::uint64_t CompactDictionary::space_ceiling(std::uint64_t universe,
                                               std::uint64_t capacity,
                                               unsigned satellite_width) {
  return 4 * capacity * (ceil_log2(universe) + satellite_width) +
         64 * ceil_log2(universe + 2);
}

std::uint64_t CompactDictionary::home(std::uint64_t key) const noexcept {
  const std::uint64_t h = mix(key + seed_);
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(h) * slots_.size()) >> 64);
}

void CompactDictionary::check_key(std::uint64_t key) const {
  if (key >= universe_)
    throw ArgumentError("dictionary key " + std::to_string(key) +
                        " outside universe " + std::to_string(universe_));
}

std::uint64_t CompactDictionary::locate(std::uint64_t key, bool &found) const {
  ++ops_;
  const std::uint64_t table = slots_.size();
  std::uint64_t i = home(key);
  for (;;) {
    ++probes_;
    const std::uint64_t slot = slots_.get(i);
    if (slot == 0) {
      found = false;
      return i;
    }
    if (stored_key(slot) == key) {
      found = true;
      return i;
    }
    if (++i == table)
      i = 0;
  }
}

void CompactDictionary::insert(std::uint64_t key, std::uint64_t satellite) {
  check_key(key);
  if (sat_width_ < 64 && (satellite >> sat_width_) != 0)
    throw ArgumentError("satellite value does not fit in " +
                        std::to_string(sat_width_) + " bits");
  bool found = false;
  const std::uint64_t i = locate(key, found);
  if (!found) {
    if (size_ == capacity_)
      throw CapacityError("dictionary full at capacity " +
                          std::to_string(capacity_));
    ++size_;
  }
  slots_.set(i, ((key + 1) << sat_width_) | satellite);
}

bool CompactDictionary::erase(std::uint64_t key) {
  check_key(key);
  bool found = false;
  std::uint64_t hole = locate(key, found);
  if (!found)
    return false;
  const std::uint64_t table = slots_.size();
  std::uint64_t j = hole;
  for (;;) {
    if (++j == table)
      j = 0;
    ++probes_;
    const std::uint64_t slot = slots_.get(j);
    if (slot == 0)
      break;
    const std::uint64_t k = home(stored_key(slot));
    // The entry at j may fill the hole unless its home lies cyclically in
    // (hole, j].
    const bool stays = hole <= j ? (hole < k && k <= j) : (hole < k || k <= j);
    if (!stays) {
      slots_.set(hole, slot);
      hole = j;
    }
  }
  slots_.set(hole, 0);
  --size_;
  return true;
}

bool CompactDictionary::contains(std::uint64_t key) const {
  check_key(key);
  bool found = false;
  locate(key, found);
  return found;
}

std::optional<std::uint64_t> CompactDictionary::find(std::uint64_t key) const {
  check_key(key);
  bool found = false;
  const std::uint64_t i = locate(key, found);
  if (!found)
    return std::nullopt;
  const std::uint64_t slot = slots_.get(i);
  return sat_width_ == 0 ? 0 : slot & ((std::uint64_t{1} << sat_width_) - 1);
}

void CompactDictionary::clear() {
  slots_.fill(0);
  size_ = 0;
}

} // namespace bds
