#include "bds/graph.hpp"

#include "bds/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace bds {

namespace {

void build_csr(std::size_t n, const std::vector<Edge> &edges, bool reverse,
               bool both, std::vector<std::size_t> &offsets,
               std::vector<Vertex> &targets) {
  offsets.assign(n + 1, 0);
  for (const auto &[u, v] : edges) {
    ++offsets[(reverse ? v : u) + 1];
    if (both)
      ++offsets[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i)
    offsets[i + 1] += offsets[i];
  targets.assign(offsets[n], 0);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const auto &[u, v] : edges) {
    if (reverse) {
      targets[fill[v]++] = u;
    } else {
      targets[fill[u]++] = v;
      if (both)
        targets[fill[v]++] = u;
    }
  }
}

bool any_repeats(std::size_t n, const std::vector<std::size_t> &offsets,
                 const std::vector<Vertex> &targets) {
  std::vector<Vertex> scratch;
  for (std::size_t v = 0; v < n; ++v) {
    scratch.assign(targets.begin() + offsets[v], targets.begin() + offsets[v + 1]);
    std::sort(scratch.begin(), scratch.end());
    if (std::adjacent_find(scratch.begin(), scratch.end()) != scratch.end())
      return true;
  }
  return false;
}

// Splits a line into whitespace-separated tokens.
std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_uint(std::string_view token, std::uint64_t &out) {
  const auto *end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

} // namespace

Graph Graph::from_edges(std::size_t n, bool directed, std::vector<Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max())
    throw ArgumentError("vertex count exceeds 32-bit ids");
  for (const auto &[u, v] : edges)
    if (u >= n || v >= n)
      throw ArgumentError("edge endpoint out of range");

  Graph g;
  g.n_ = n;
  g.directed_ = directed;
  g.edges_ = std::move(edges);
  build_csr(n, g.edges_, false, !directed, g.out_offsets_, g.out_targets_);
  if (directed)
    build_csr(n, g.edges_, true, false, g.in_offsets_, g.in_targets_);
  g.repeated_ = any_repeats(n, g.out_offsets_, g.out_targets_) ||
                (directed && any_repeats(n, g.in_offsets_, g.in_targets_));
  return g;
}

bool Graph::operator==(const Graph &other) const {
  return n_ == other.n_ && directed_ == other.directed_ &&
         out_offsets_ == other.out_offsets_ &&
         out_targets_ == other.out_targets_ &&
         in_offsets_ == other.in_offsets_ && in_targets_ == other.in_targets_;
}

Graph load_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // Trailing blank lines (including the one after the final LF) are ignored.
  while (!lines.empty() && tokens_of(lines.back()).empty())
    lines.pop_back();
  if (lines.empty())
    throw ParseError(1, "missing header \"n m d\"");

  const auto header = tokens_of(lines[0]);
  std::uint64_t n = 0, m = 0, d = 0;
  if (header.size() != 3 || !parse_uint(header[0], n) ||
      !parse_uint(header[1], m) || !parse_uint(header[2], d) || d > 1)
    throw ParseError(1, "malformed header, expected \"n m d\" with d in {0,1}");
  if (n > std::numeric_limits<Vertex>::max())
    throw ParseError(1, "vertex count exceeds 32-bit ids");

  const std::size_t edge_lines = lines.size() - 1;
  if (edge_lines > m)
    throw ParseError(m + 2, "edge count mismatch: header declares " +
                                std::to_string(m) + " edges");

  std::vector<Edge> edges;
  edges.reserve(edge_lines);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tok = tokens_of(lines[i]);
    std::uint64_t u = 0, v = 0;
    if (tok.size() != 2 || !parse_uint(tok[0], u) || !parse_uint(tok[1], v))
      throw ParseError(i + 1, "malformed edge line, expected \"u v\"");
    if (u >= n || v >= n)
      throw ParseError(i + 1, "vertex id " + std::to_string(u >= n ? u : v) +
                                  " not below n=" + std::to_string(n));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (edges.size() != m)
    throw ParseError(lines.size() + 1,
                     "edge count mismatch: header declares " +
                         std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
  return Graph::from_edges(n, d == 1, std::move(edges));
}

Graph load_graph_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ArgumentError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_graph(buf.str());
}

std::string serialize(const Graph &g) {
  std::string out;
  out.reserve(16 + g.edge_count() * 12);
  out += std::to_string(g.vertex_count()) + ' ' +
         std::to_string(g.edge_count()) + ' ' + (g.directed() ? "1" : "0") +
         '\n';
  for (const auto &[u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::vector<bool> reachable_from(const Graph &g, Vertex root) {
  std::vector<bool> seen(g.vertex_count(), false);
  if (root >= g.vertex_count())
    return seen;
  std::queue<Vertex> q;
  seen[root] = true;
  q.push(root);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex u : g.out(v)) {
      if (!seen[u]) {
        seen[u] = true;
        q.push(u);
      }
    }
  }
  return seen;
}

} // namespace bds
