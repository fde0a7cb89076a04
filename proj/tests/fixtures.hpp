#pragma once

// Fixture graphs and their classical orderings for every root, as printed by
// tests/oracle/bds_oracle.py (frozen here).

#include "bds/graph.hpp"

#include <string>
#include <vector>

namespace fixtures {

struct Fixture {
  std::string name;
  std::size_t n;
  bool directed;
  std::vector<bds::Edge> edges;
  std::vector<bds::Ordering> bdsj;  // indexed by root
  std::vector<bds::Ordering> bdshs; // indexed by root

  bds::Graph graph() const { return bds::Graph::from_edges(n, directed, edges); }
};

inline const std::vector<Fixture> &all() {
  static const std::vector<Fixture> list = {
      {"contrast",
       4,
       false,
       {{0, 1}, {0, 2}, {0, 3}, {3, 1}},
       {{0, 3, 1, 2}, {1, 3, 0, 2}, {2, 0, 3, 1}, {3, 1, 0, 2}},
       {{0, 3, 2, 1}, {1, 3, 0, 2}, {2, 0, 3, 1}, {3, 1, 0, 2}}},
      {"mesh8",
       8,
       false,
       {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {5, 6}, {6, 7}, {1, 7}, {0, 7}},
       {{0, 7, 1, 3, 4, 5, 6, 2}, {1, 7, 0, 2, 5, 6, 4, 3}, {2, 5, 6, 7, 0, 1, 3, 4}, {3, 4, 5, 6, 7, 0, 2, 1}, {4, 5, 6, 7, 0, 2, 3, 1}, {5, 6, 7, 0, 2, 3, 4, 1}, {6, 7, 0, 2, 5, 4, 3, 1}, {7, 0, 2, 5, 6, 4, 3, 1}},
       {{0, 7, 6, 5, 4, 3, 2, 1}, {1, 7, 6, 5, 2, 4, 3, 0}, {2, 5, 6, 7, 1, 4, 3, 0}, {3, 4, 5, 6, 7, 0, 2, 1}, {4, 5, 6, 7, 0, 1, 2, 3}, {5, 6, 7, 0, 1, 3, 2, 4}, {6, 7, 0, 2, 3, 4, 1, 5}, {7, 0, 2, 5, 4, 3, 1, 6}}},
      {"dir6",
       6,
       true,
       {{0, 1}, {0, 2}, {2, 1}, {1, 3}, {3, 0}, {2, 4}, {4, 3}, {4, 5}, {5, 2}},
       {{0, 2, 4, 5, 3, 1}, {1, 3, 0, 2, 4, 5}, {2, 4, 5, 3, 0, 1}, {3, 0, 2, 4, 5, 1}, {4, 5, 2, 1, 3, 0}, {5, 2, 4, 3, 0, 1}},
       {{0, 2, 4, 5, 3, 1}, {1, 3, 0, 2, 4, 5}, {2, 4, 5, 3, 0, 1}, {3, 0, 2, 4, 5, 1}, {4, 5, 2, 1, 3, 0}, {5, 2, 4, 3, 0, 1}}},
      {"multi5",
       5,
       false,
       {{0, 1}, {1, 2}, {0, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 1}},
       {{0, 3, 4, 1, 2}, {1, 4, 3, 0, 2}, {2, 3, 4, 1, 0}, {3, 4, 1, 0, 2}, {4, 1, 0, 3, 2}},
       {{0, 3, 4, 2, 1}, {1, 4, 3, 2, 0}, {2, 3, 4, 0, 1}, {3, 4, 1, 0, 2}, {4, 1, 2, 0, 3}}},
      {"loader4",
       4,
       true,
       {{0, 1}, {0, 2}, {0, 3}, {3, 1}},
       {{0, 3, 1, 2}, {1}, {2}, {3, 1}},
       {{0, 3, 2, 1}, {1}, {2}, {3, 1}}},
  };
  return list;
}

} // namespace fixtures
