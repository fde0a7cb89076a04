#include "bds/traversal.hpp"

#include "bds/errors.hpp"

#include <cmath>
#include <string>

namespace bds {

std::uint64_t default_block_capacity(std::size_t n) {
  if (n < 2)
    return 2;
  const double lg = std::log2(static_cast<double>(n));
  const auto b = static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) / lg));
  return std::max<std::uint64_t>(2, b);
}

unsigned iterated_log(std::size_t n) {
  double x = static_cast<double>(n);
  unsigned count = 0;
  while (x > 2.0) {
    x = std::log2(x);
    ++count;
  }
  return count;
}

unsigned max_hier_levels(std::size_t n) {
  return std::max(2u, iterated_log(n));
}

std::vector<std::uint64_t> hierarchy_sizes(std::size_t n, unsigned levels,
                                           std::uint64_t level1_block) {
  if (levels < 1 || levels > max_hier_levels(n))
    throw ArgumentError("level count " + std::to_string(levels) +
                        " outside [1, " + std::to_string(max_hier_levels(n)) +
                        "] for n = " + std::to_string(n));
  const std::uint64_t cap = std::max<std::uint64_t>(1, n);
  const std::uint64_t floor_size = std::min<std::uint64_t>(2, cap);
  std::vector<std::uint64_t> sizes{1};
  double lg = static_cast<double>(n);
  for (unsigned j = 1; j <= levels; ++j) {
    lg = lg > 1.0 ? std::log2(lg) : 0.0;
    std::uint64_t s = cap;
    if (j == 1 && level1_block != 0) {
      s = level1_block;
    } else if (lg > 1.0) {
      s = static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) / (lg * lg)));
      s = std::clamp<std::uint64_t>(s, floor_size, cap);
    }
    const std::uint64_t below = sizes.back();
    s = std::max(s, below);
    s = (s + below - 1) / below * below;
    sizes.push_back(s);
  }
  return sizes;
}

} // namespace bds
