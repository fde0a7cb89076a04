#pragma once

// Variant dispatch and run reports shared by the CLI and the test suites.

#include "bds/traversal.hpp"

#include <string>
#include <string_view>

namespace bds {

enum class Algo { bdsj, bdshs };
enum class Variant { classical, block, hier, cursor };

Algo parse_algo(std::string_view name);       // ArgumentError if unknown
Variant parse_variant(std::string_view name); // ArgumentError if unknown
const char *algo_name(Algo a);
const char *variant_name(Variant v);

struct RunConfig {
  Algo algo = Algo::bdsj;
  Variant variant = Variant::classical;
  Vertex root = 0;
  std::uint64_t block_capacity = 0; // 0: default
  unsigned levels = 0;              // 0: default
  std::uint64_t level1_block = 0;   // 0: size formula
  std::uint64_t seed = 0;
  bool restart_all = false;
  bool verify = false;
  TraversalObserver *observer = nullptr;
};

TraversalResult run_traversal(const Graph &g, const RunConfig &config);

// 64-bit FNV-1a over the ordering as printed: decimal ids, one per line.
std::uint64_t ordering_hash(const Ordering &order);

struct RunReport {
  RunConfig config;
  std::size_t n = 0;
  std::size_t m = 0;
  bool directed = false;
  Ordering order;
  TraversalStats stats;
  double wall_time_ms = 0;
};

RunReport make_report(const Graph &g, const RunConfig &config);

// Orderings up to this length are embedded in JSON; longer ones only hashed.
inline constexpr std::size_t kMaxJsonOrdering = 1'000'000;

// The ordering itself is embedded when include_ordering is set and it is
// not longer than kMaxJsonOrdering; the hash is always present.
std::string report_json(const RunReport &report, bool include_ordering = true);
std::string meter_json(const MeterSnapshot &snapshot);

} // namespace bds
