#include "bds/bitspace.hpp"
#include "bds/errors.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace bds;

TEST_CASE("meter: alloc/free arithmetic") {
  WorkspaceMeter m;
  CHECK(m.current_bits() == 0);
  CHECK(m.peak_bits() == 0);
  const auto a = m.alloc(100);
  m.alloc(50);
  m.free(a);
  CHECK(m.current_bits() == 50);
  CHECK(m.peak_bits() == 150);
  CHECK_THROWS_AS(m.free(a), UsageError);
  CHECK_THROWS_AS(m.free(12345), UsageError);
}

TEST_CASE("meter: padding is tracked apart from requested bits") {
  WorkspaceMeter m;
  m.alloc(1);
  m.alloc(64);
  m.alloc(65);
  CHECK(m.current_bits() == 130);
  CHECK(m.current_padding_bits() == 63 + 0 + 63);
  const MeterSnapshot s = m.snapshot();
  CHECK(s.current_bits == 130);
  CHECK(s.peak_bits == 130);
  CHECK(s.padding_bits == 126);
}

TEST_CASE("meter: random alloc/free keeps exact bookkeeping") {
  std::mt19937_64 rng(42);
  WorkspaceMeter m;
  std::map<WorkspaceMeter::Token, std::uint64_t> live;
  std::uint64_t peak = 0;
  for (int step = 0; step < 5000; ++step) {
    if (live.empty() || rng() % 3 != 0) {
      const std::uint64_t bits = rng() % 1000;
      live[m.alloc(bits)] = bits;
    } else {
      auto it = live.begin();
      std::advance(it, static_cast<long>(rng() % live.size()));
      m.free(it->first);
      live.erase(it);
    }
    std::uint64_t sum = 0;
    for (const auto &[t, b] : live)
      sum += b;
    peak = std::max(peak, sum);
    REQUIRE(m.current_bits() == sum);
    REQUIRE(m.peak_bits() == peak);
    REQUIRE(m.live_allocations() == live.size());
  }
}

TEST_CASE("reservation releases on destruction and moves ownership") {
  WorkspaceMeter m;
  {
    Reservation r(m, 77);
    Reservation moved = std::move(r);
    CHECK(r.bits() == 0);
    CHECK(moved.bits() == 77);
    CHECK(m.current_bits() == 77);
  }
  CHECK(m.current_bits() == 0);
  CHECK(m.peak_bits() == 77);
}

TEST_CASE("bit vector: registers its length, bits and fields round trip") {
  WorkspaceMeter m;
  BitVector bv(m, 200);
  CHECK(m.current_bits() == 200);
  bv.set(0, true);
  bv.set(199, true);
  CHECK(bv.get(0));
  CHECK_FALSE(bv.get(1));
  CHECK(bv.get(199));
  bv.set_bits(60, 10, 0x2AB);
  CHECK(bv.get_bits(60, 10) == 0x2AB);
  bv.set_bits(100, 64, 0xDEADBEEFCAFEF00DULL);
  CHECK(bv.get_bits(100, 64) == 0xDEADBEEFCAFEF00DULL);
  CHECK(bv.get_bits(60, 10) == 0x2AB);
}

TEST_CASE("packed array: fields never bleed into neighbors") {
  WorkspaceMeter m;
  std::mt19937_64 rng(3);
  for (unsigned w = 1; w <= 64; w += 7) {
    PackedArray a(m, 97, w);
    std::vector<std::uint64_t> ref(97, 0);
    const std::uint64_t mask = w == 64 ? ~0ULL : (1ULL << w) - 1;
    for (int step = 0; step < 2000; ++step) {
      const auto i = rng() % 97;
      ref[i] = rng() & mask;
      a.set(i, ref[i]);
    }
    for (std::size_t i = 0; i < 97; ++i)
      REQUIRE(a.get(i) == ref[i]);
  }
}

TEST_CASE("color array: 2n bits, starts white, holds all four states") {
  WorkspaceMeter m;
  ColorArray c(m, 1000);
  CHECK(m.current_bits() == 2000);
  for (std::uint64_t v = 0; v < 1000; ++v)
    REQUIRE(c.get(v) == Color::white);
  const Color states[] = {Color::white, Color::grey_pending, Color::grey, Color::black};
  for (std::uint64_t v = 0; v < 1000; ++v)
    c.set(v, states[v % 4]);
  for (std::uint64_t v = 0; v < 1000; ++v)
    REQUIRE(c.get(v) == states[v % 4]);
  CHECK(is_grey(Color::grey_pending));
  CHECK(is_grey(Color::grey));
  CHECK_FALSE(is_grey(Color::black));
  CHECK(std::string(color_name(Color::grey_pending)) != color_name(Color::grey));
}

TEST_CASE("width helpers") {
  CHECK(bits_for(0) == 1);
  CHECK(bits_for(2) == 1);
  CHECK(bits_for(3) == 2);
  CHECK(bits_for(256) == 8);
  CHECK(bits_for(257) == 9);
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(2) == 1);
  CHECK(ceil_log2(3) == 2);
  CHECK(ceil_log2(1024) == 10);
}
