#include "bds/report.hpp"

#include "bds/errors.hpp"
#include "bds/horowitz_sahni.hpp"
#include "bds/jiang.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <string>

namespace bds {

Algo parse_algo(std::string_view name) {
  if (name == "bdsj")
    return Algo::bdsj;
  if (name == "bdshs")
    return Algo::bdshs;
  throw ArgumentError("unknown algorithm '" + std::string(name) + "'");
}

Variant parse_variant(std::string_view name) {
  if (name == "classical")
    return Variant::classical;
  if (name == "block")
    return Variant::block;
  if (name == "hier")
    return Variant::hier;
  if (name == "cursor")
    return Variant::cursor;
  throw ArgumentError("unknown variant '" + std::string(name) + "'");
}

const char *algo_name(Algo a) { return a == Algo::bdsj ? "bdsj" : "bdshs"; }

const char *variant_name(Variant v) {
  switch (v) {
  case Variant::classical:
    return "classical";
  case Variant::block:
    return "block";
  case Variant::hier:
    return "hier";
  case Variant::cursor:
    return "cursor";
  }
  return "?";
}

TraversalResult run_traversal(const Graph &g, const RunConfig &c) {
  TraversalOptions opts;
  opts.observer = c.observer;
  opts.verify = c.verify;
  opts.restart_all = c.restart_all;
  const HierParams hp{c.levels, c.seed, c.level1_block};
  const bool j = c.algo == Algo::bdsj;
  switch (c.variant) {
  case Variant::classical:
    return j ? bdsj_classical(g, c.root, opts) : bdshs_classical(g, c.root, opts);
  case Variant::block:
    return j ? bdsj_block(g, c.root, c.block_capacity, opts)
             : bdshs_block(g, c.root, c.block_capacity, opts);
  case Variant::hier:
    return j ? bdsj_hier(g, c.root, hp, opts) : bdshs_hier(g, c.root, hp, opts);
  case Variant::cursor:
    return j ? bdsj_cursor(g, c.root, opts) : bdshs_cursor(g, c.root, opts);
  }
  throw ArgumentError("unknown variant");
}

std::uint64_t ordering_hash(const Ordering &order) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  };
  for (Vertex v : order) {
    for (char c : std::to_string(v))
      mix(c);
    mix('\n');
  }
  return h;
}

RunReport make_report(const Graph &g, const RunConfig &config) {
  RunReport r;
  r.config = config;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.directed = g.directed();
  const auto start = std::chrono::steady_clock::now();
  TraversalResult result = run_traversal(g, config);
  const auto stop = std::chrono::steady_clock::now();
  r.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  r.order = std::move(result.order);
  r.stats = result.stats;
  return r;
}

std::string report_json(const RunReport &r, bool include_ordering) {
  nlohmann::ordered_json j;
  j["algo"] = algo_name(r.config.algo);
  j["variant"] = variant_name(r.config.variant);
  j["root"] = r.config.root;
  j["n"] = r.n;
  j["m"] = r.m;
  j["directed"] = r.directed;
  j["seed"] = r.config.seed;
  char hex[19];
  std::snprintf(hex, sizeof hex, "0x%016llx",
                static_cast<unsigned long long>(ordering_hash(r.order)));
  j["ordering_hash"] = hex;
  j["output_length"] = r.stats.output_length;
  j["peak_aux_bits"] = r.stats.peak_aux_bits;
  j["padding_bits"] = r.stats.padding_bits;
  j["reconstruction_count"] = r.stats.reconstruction_count;
  j["edge_scan_count"] = r.stats.edge_scan_count;
  j["dict_op_count"] = r.stats.dict_op_count;
  j["wall_time_ms"] = r.wall_time_ms;
  j["meter"] = nlohmann::ordered_json::parse(meter_json(r.stats.meter));
  if (include_ordering && r.order.size() <= kMaxJsonOrdering)
    j["ordering"] = r.order;
  return j.dump();
}

std::string meter_json(const MeterSnapshot &s) {
  nlohmann::ordered_json j;
  j["current_bits"] = s.current_bits;
  j["peak_bits"] = s.peak_bits;
  j["padding_bits"] = s.padding_bits;
  return j.dump();
}

} // namespace bds
