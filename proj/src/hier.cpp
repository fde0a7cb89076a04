#include "bds/compact_dict.hpp"
#include "bds/cursors.hpp"
#include "bds/horowitz_sahni.hpp"
#include "bds/jiang.hpp"
#include "support.hpp"

#include <memory>
#include <unordered_map>

namespace bds {

using detail::Run;

namespace {

enum class Mode { jiang, hs };

// Multi-level blocked stack.
//
// Level i cuts the logical stack into aligned blocks of size s_i, each a
// whole number of level-(i-1) blocks (s_0 = 1). Every level keeps its two
// newest blocks resident, each with a dictionary sending a vertex to the
// index of its level-(i-1) block inside it; level 1 additionally keeps the
// entries themselves in a window of 2*s_1 slots. A dropped block survives as
// a record (first and last entry, plus for BDS_hs the first entry's parent
// and its position in the parent's list).
//
// Blocks are brought back eagerly, coarsest level first, the moment the
// stack shrinks to a resident pair's base. A block is rebuilt by walking
// from its first entry: the next entry is always found in the current
// entry's list (or its parent's), and is recognized as the grey vertex
// whose super-block id and coarser-level dictionary entries put it inside
// the block being rebuilt. Group counters let each step skip the prefix of
// a list known to hold nothing useful.
class Hierarchy {
public:
  Hierarchy(Run &run, const Graph &g, ColorArray &colors,
            const VarWidthArray &counters, std::uint64_t group, Mode mode,
            const std::vector<std::uint64_t> &sizes, std::uint64_t seed)
      : run_(run), g_(g), colors_(colors), counters_(counters), group_(group),
        mode_(mode), k_(static_cast<unsigned>(sizes.size() - 1)),
        levels_(sizes.size()) {
    const std::size_t n = g.vertex_count();
    const unsigned vw = bits_for(n);
    std::size_t max_deg = 0;
    for (Vertex v = 0; v < n; ++v)
      max_deg = std::max(max_deg, g.out_degree(v));
    const unsigned ow = bits_for(n + 1);
    const unsigned pw = bits_for(max_deg + 1);
    const bool owners = mode == Mode::hs;

    for (unsigned i = 1; i <= k_; ++i) {
      Level &L = levels_[i];
      L.size = sizes[i];
      L.unit = sizes[i - 1];
      for (int s = 0; s < 2; ++s)
        L.dict[s] = std::make_unique<CompactDictionary>(
            run.meter, n, L.size, bits_for(L.size / L.unit),
            seed * 0x9e3779b97f4a7c15ULL + 2 * i + s);
      const std::uint64_t cap = (n + L.size - 1) / L.size + 1;
      L.rec_first = PackedArray(run.meter, cap, vw);
      L.rec_last = PackedArray(run.meter, cap, vw);
      if (owners) {
        L.rec_owner = PackedArray(run.meter, cap, ow);
        L.rec_opos = PackedArray(run.meter, cap, pw);
      }
    }
    // Two live block descriptors per level plus its base and record count.
    meta_bits_ = Reservation(run.meter, k_ * (2 * (2 * vw + (owners ? ow + pw : 0)) +
                                              2 * bits_for(n + 1)));
    window_ = PackedArray(run.meter, 2 * levels_[1].size, vw);
    const std::uint64_t top_size = levels_[k_].size;
    sid_ = PackedArray(run.meter, n, bits_for((n + top_size - 1) / top_size + 1));
  }

  std::uint64_t depth() const noexcept { return depth_; }

  Vertex top() const {
    return static_cast<Vertex>(window_.get(depth_ - 1 - levels_[1].base));
  }

  void push(Vertex v, Vertex owner, std::uint64_t opos) {
    const std::uint64_t d = depth_;
    sid_.set(v, d / levels_[k_].size);
    for (unsigned i = 1; i <= k_; ++i) {
      Level &L = levels_[i];
      if (d / L.size == L.base / L.size + 2)
        discard(i);
      const int slot = static_cast<int>(d / L.size - L.base / L.size);
      if (d % L.size == 0)
        L.meta[slot] = {v, v, owner, opos};
      L.meta[slot].last = v;
      insert(L, slot, v, (d % L.size) / L.unit);
    }
    window_.set(d - levels_[1].base, v);
    ++depth_;
    if (run_.verify)
      shadow_.push_back(v);
  }

  Vertex pop() {
    const std::uint64_t d = depth_ - 1;
    const Vertex v = top();
    for (unsigned i = 1; i <= k_; ++i) {
      Level &L = levels_[i];
      const int slot = static_cast<int>(d / L.size - L.base / L.size);
      if (!erase(L, slot, v))
        throw ConsistencyError("popped vertex missing from its level-" +
                               std::to_string(i) + " dictionary");
    }
    depth_ = d;
    if (run_.verify)
      shadow_.pop_back();
    if (depth_ > 0)
      for (unsigned i = k_; i >= 1; --i)
        if (depth_ == levels_[i].base)
          restore(i);
    return v;
  }

private:
  struct Meta {
    Vertex first = 0;
    Vertex last = 0;
    Vertex owner = 0;
    std::uint64_t opos = 0;
  };

  struct Level {
    std::uint64_t size = 1;
    std::uint64_t unit = 1;
    std::uint64_t base = 0;
    std::unique_ptr<CompactDictionary> dict[2];
    std::unordered_map<Vertex, std::uint64_t> mirror[2]; // verify mode only
    Meta meta[2];
    PackedArray rec_first, rec_last, rec_owner, rec_opos;
    std::uint64_t records = 0;
  };

  TraversalStats &stats() { return run_.result.stats; }

  void insert(Level &L, int slot, Vertex v, std::uint64_t value) {
    ++stats().dict_op_count;
    L.dict[slot]->insert(v, value);
    if (run_.verify)
      L.mirror[slot][v] = value;
  }

  bool erase(Level &L, int slot, Vertex v) {
    ++stats().dict_op_count;
    const bool hit = L.dict[slot]->erase(v);
    if (run_.verify) {
      ++stats().dict_oracle_checks;
      if (hit != (L.mirror[slot].erase(v) > 0))
        ++stats().dict_oracle_mismatches;
    }
    return hit;
  }

  std::optional<std::uint64_t> find(Level &L, int slot, Vertex v) {
    ++stats().dict_op_count;
    const auto got = L.dict[slot]->find(v);
    if (run_.verify) {
      ++stats().dict_oracle_checks;
      const auto it = L.mirror[slot].find(v);
      const std::optional<std::uint64_t> want =
          it == L.mirror[slot].end() ? std::nullopt
                                     : std::optional<std::uint64_t>(it->second);
      if (got != want)
        ++stats().dict_oracle_mismatches;
    }
    return got;
  }

  void discard(unsigned i) {
    Level &L = levels_[i];
    if (L.records == L.rec_first.size())
      throw ConsistencyError("level-" + std::to_string(i) + " record stack full");
    const Meta &m = L.meta[0];
    L.rec_first.set(L.records, m.first);
    L.rec_last.set(L.records, m.last);
    if (mode_ == Mode::hs) {
      L.rec_owner.set(L.records, m.owner);
      L.rec_opos.set(L.records, m.opos);
    }
    ++L.records;
    std::swap(L.dict[0], L.dict[1]);
    L.dict[1]->clear();
    if (run_.verify) {
      std::swap(L.mirror[0], L.mirror[1]);
      L.mirror[1].clear();
    }
    L.meta[0] = L.meta[1];
    L.base += L.size;
    if (i == 1)
      for (std::uint64_t t = 0; t < L.size; ++t)
        window_.set(t, window_.get(L.size + t));
  }

  // u lies in the level-i block starting at depth q and was not walked yet.
  bool candidate(Vertex u, unsigned i, std::uint64_t q) {
    if (!is_grey(colors_.get(u)))
      return false;
    if (sid_.get(u) != q / levels_[k_].size)
      return false;
    for (unsigned l = k_; l > i; --l) {
      Level &L = levels_[l];
      const int slot = static_cast<int>(q / L.size - L.base / L.size);
      const auto at = find(L, slot, u);
      if (!at || *at != (q % L.size) / L.unit)
        return false;
    }
    return !find(levels_[i], 0, u).has_value();
  }

  // Scan out(v)[from, to) left to right, or right to left when `leftward`.
  std::optional<std::size_t> scan(Vertex v, std::size_t from, std::size_t to,
                                  bool leftward, unsigned i, std::uint64_t q) {
    const auto adj = g_.out(v);
    if (leftward) {
      for (std::size_t p = to; p-- > from;) {
        ++stats().edge_scan_count;
        if (candidate(adj[p], i, q))
          return p;
      }
    } else {
      for (std::size_t p = from; p < to; ++p) {
        ++stats().edge_scan_count;
        if (candidate(adj[p], i, q))
          return p;
      }
    }
    return std::nullopt;
  }

  void restore(unsigned i) {
    Level &L = levels_[i];
    if (L.records == 0)
      throw ConsistencyError("level-" + std::to_string(i) +
                             " underflow with no record");
    if (L.dict[0]->size() != 0 || L.dict[1]->size() != 0)
      throw ConsistencyError("level-" + std::to_string(i) +
                             " restore over a non-empty block");
    --L.records;
    Meta rec;
    rec.first = static_cast<Vertex>(L.rec_first.get(L.records));
    rec.last = static_cast<Vertex>(L.rec_last.get(L.records));
    if (mode_ == Mode::hs) {
      rec.owner = static_cast<Vertex>(L.rec_owner.get(L.records));
      rec.opos = L.rec_opos.get(L.records);
    }
    L.base -= L.size;
    L.meta[0] = rec;
    const std::uint64_t q = L.base;
    const std::size_t n = g_.vertex_count();

    Vertex e = rec.first;
    Vertex owner = rec.owner;
    std::uint64_t opos = rec.opos;
    for (std::uint64_t t = 0;; ++t) {
      insert(L, 0, e, t / L.unit);
      if (i == 1)
        window_.set(t, e);
      if (t + 1 == L.size)
        break;
      const std::size_t deg = g_.out_degree(e);
      const std::uint64_t c = counters_.get(e);
      std::optional<std::size_t> p;
      if (mode_ == Mode::jiang) {
        // Groups exhausted from the right hold nothing grey of this block.
        p = scan(e, 0, deg - std::min<std::uint64_t>(deg, c * group_), true, i, q);
        if (p)
          e = g_.out(e)[*p];
      } else if (colors_.get(e) == Color::grey) {
        // Expanded: next is its first child, in the counter's group or later.
        p = scan(e, std::min<std::uint64_t>(deg, c * group_), deg, false, i, q);
        if (p) {
          owner = e;
          opos = *p;
          e = g_.out(e)[*p];
        }
      } else {
        // Pending: next is its next sibling in the parent's list.
        if (owner >= n)
          throw ConsistencyError("pending block entry without a parent");
        p = scan(owner, opos + 1, g_.out_degree(owner), false, i, q);
        if (p) {
          opos = *p;
          e = g_.out(owner)[*p];
        }
      }
      if (!p)
        throw ConsistencyError("level-" + std::to_string(i) +
                               " restore walk lost its way at step " +
                               std::to_string(t + 1));
    }
    if (e != rec.last)
      throw ConsistencyError("level-" + std::to_string(i) +
                             " restore ended away from the recorded last entry");
    if (i == 1) {
      ++stats().reconstruction_count;
      if (run_.verify) {
        ++stats().shadow_checks;
        for (std::uint64_t t = 0; t < L.size; ++t)
          if (window_.get(t) != shadow_[q + t]) {
            ++stats().shadow_mismatches;
            break;
          }
      }
    }
  }

  Run &run_;
  const Graph &g_;
  ColorArray &colors_;
  const VarWidthArray &counters_;
  std::uint64_t group_;
  Mode mode_;
  unsigned k_;
  std::vector<Level> levels_;
  Reservation meta_bits_;
  PackedArray window_;
  PackedArray sid_;
  std::uint64_t depth_ = 0;
  std::vector<Vertex> shadow_;
};

struct HierSetup {
  std::vector<std::uint64_t> sizes;
  std::uint64_t group;
};

HierSetup hier_setup(const Graph &g, const HierParams &params) {
  const std::size_t n = g.vertex_count();
  const unsigned k =
      params.levels == 0 ? std::min(2u, max_hier_levels(n)) : params.levels;
  HierSetup s;
  s.sizes = hierarchy_sizes(n, k, params.level1_block);
  s.group = std::max<std::uint64_t>(
      1, (g.adjacency_size() + std::max<std::size_t>(n, 1) - 1) /
             std::max<std::size_t>(n, 1));
  return s;
}

VarWidthArray make_counters(WorkspaceMeter &meter, const Graph &g,
                            std::uint64_t group) {
  return VarWidthArray(meter, g.vertex_count(), [&g, group](std::size_t v) {
    const std::uint64_t groups =
        (g.out_degree(static_cast<Vertex>(v)) + group - 1) / group;
    return ceil_log2(groups + 2);
  });
}

} // namespace

TraversalResult bdsj_hier(const Graph &g, Vertex root, const HierParams &params,
                          const TraversalOptions &opts) {
  detail::check_root(g, root);
  const std::size_t n = g.vertex_count();
  const HierSetup setup = hier_setup(g, params);
  Run run(g, opts, 6);
  TraversalStats &stats = run.result.stats;

  ColorArray colors(run.meter, n);
  VarWidthArray counters = make_counters(run.meter, g, setup.group);
  Hierarchy stack(run, g, colors, counters, setup.group, Mode::jiang,
                  setup.sizes, params.seed);
  const std::uint64_t group = setup.group;

  Vertex next_root = root;
  Vertex scan = 0; // restarts take the lowest unvisited vertex
  while (next_root < n) {
    run.paint(colors, next_root, Color::grey);
    run.emit(next_root);
    stack.push(next_root, static_cast<Vertex>(n), 0);
    run.pushed(next_root);
    while (stack.depth() > 0) {
      const Vertex v = stack.top();
      const auto adj = g.out(v);
      const std::size_t deg = adj.size();
      std::uint64_t c = counters.get(v);
      std::optional<std::size_t> found;
      // Scan one group at a time from the right; a group with no white
      // entry is exhausted for good.
      while (!found && c * group < deg) {
        const std::size_t hi = deg - c * group;
        const std::size_t lo = hi > group ? hi - group : 0;
        for (std::size_t p = hi; p-- > lo;) {
          ++stats.edge_scan_count;
          if (colors.get(adj[p]) == Color::white) {
            found = p;
            break;
          }
        }
        if (!found)
          ++c;
      }
      if (c != counters.get(v))
        counters.set(v, c);
      if (found) {
        const Vertex u = adj[*found];
        run.paint(colors, u, Color::grey);
        run.emit(u);
        stack.push(u, v, *found);
        run.pushed(u);
      } else {
        run.paint(colors, v, Color::black);
        stack.pop();
        run.popped(v);
      }
    }
    if (!run.restart_all)
      break;
    next_root = scan = Run::next_white(colors, scan);
  }
  return run.finish();
}

TraversalResult bdshs_hier(const Graph &g, Vertex root,
                           const HierParams &params,
                           const TraversalOptions &opts) {
  detail::check_root(g, root);
  const std::size_t n = g.vertex_count();
  const HierSetup setup = hier_setup(g, params);
  Run run(g, opts, 6);
  TraversalStats &stats = run.result.stats;

  ColorArray colors(run.meter, n);
  VarWidthArray counters = make_counters(run.meter, g, setup.group);
  Hierarchy stack(run, g, colors, counters, setup.group, Mode::hs,
                  setup.sizes, params.seed);
  const std::uint64_t group = setup.group;

  Vertex next_root = root;
  Vertex scan = 0; // restarts take the lowest unvisited vertex
  while (next_root < n) {
    run.paint(colors, next_root, Color::grey_pending);
    stack.push(next_root, static_cast<Vertex>(n), 0);
    run.pushed(next_root);
    while (stack.depth() > 0) {
      const Vertex v = stack.top();
      if (colors.get(v) == Color::grey_pending) {
        run.emit(v);
        run.paint(colors, v, Color::grey);
        const auto adj = g.out(v);
        std::optional<std::size_t> first;
        for (std::size_t p = 0; p < adj.size(); ++p) {
          ++stats.edge_scan_count;
          const Vertex u = adj[p];
          if (colors.get(u) != Color::white)
            continue;
          if (!first)
            first = p;
          run.paint(colors, u, Color::grey_pending);
          stack.push(u, v, p);
          run.pushed(u);
        }
        // Remember the group holding the first child for block rebuilds.
        if (first && *first / group != 0)
          counters.set(v, *first / group);
      } else {
        run.paint(colors, v, Color::black);
        stack.pop();
        run.popped(v);
      }
    }
    if (!run.restart_all)
      break;
    next_root = scan = Run::next_white(colors, scan);
  }
  return run.finish();
}

} // namespace bds
