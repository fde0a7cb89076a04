#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bds {

using Vertex = std::uint32_t;
using Ordering = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

// Read-only adjacency-array graph. Neighbor order is fixed at construction
// and is significant: traversals break ties by position.
//
// Undirected graphs store every edge in both endpoint lists (degree sum 2m)
// and in() aliases out(). Directed graphs keep a separate in-adjacency array.
class Graph {
public:
  Graph() = default;

  // Edges are appended to adjacency lists in the given order.
  static Graph from_edges(std::size_t n, bool directed, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }

  // Total number of adjacency entries in out(): m directed, 2m undirected.
  std::size_t adjacency_size() const noexcept { return out_targets_.size(); }

  std::span<const Vertex> out(Vertex v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const Vertex> in(Vertex v) const {
    if (!directed_)
      return out(v);
    return {in_targets_.data() + in_offsets_[v],
            in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::size_t out_degree(Vertex v) const {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(Vertex v) const {
    return directed_ ? in_offsets_[v + 1] - in_offsets_[v] : out_degree(v);
  }

  // The edge list in input order; serialize() writes exactly this.
  const std::vector<Edge> &edges() const noexcept { return edges_; }

  // True when some adjacency list names the same neighbor twice.
  bool has_repeated_neighbors() const noexcept { return repeated_; }

  bool operator==(const Graph &other) const;

private:
  std::size_t n_ = 0;
  bool directed_ = false;
  bool repeated_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Vertex> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_targets_;
};

// Text format: "n m d" header (d = 1 for directed), then exactly m lines "u v".
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string &path);
std::string serialize(const Graph &g);

// Simple graph (no self-loops, no parallel edges) with m edges, drawn
// deterministically from `seed`.
Graph generate_random(std::size_t n, std::size_t m, bool directed,
                      std::uint64_t seed);

enum class GraphKind { path, star, cycle, complete, binary_tree };

GraphKind parse_graph_kind(std::string_view name);
const char *graph_kind_name(GraphKind kind);

// Canonically numbered undirected graphs with ascending adjacency lists.
Graph generate_structured(GraphKind kind, std::size_t n);

// Vertices reachable from root, by plain BFS. Test and report helper.
std::vector<bool> reachable_from(const Graph &g, Vertex root);

} // namespace bds
