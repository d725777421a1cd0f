#pragma once

#include <string>
#include <vector>

#include "eca/oracle.hpp"
#include "eca/params.hpp"
#include "eca/pattern.hpp"
#include "eca/rule_meta.hpp"

namespace eca {

// The windows read at time t1 around each grid location. In linear mode the
// grid covers a stretch of a larger ring and nothing is known beyond its ends.
struct GridView {
  Index n = 0;
  Index t1 = 0;
  int k = 1;
  bool cyclic = true;
  std::vector<Index> locations;
  std::vector<Pattern> windows;

  Index size() const { return static_cast<Index>(locations.size()); }
};

GridView read_grid(QueryOracle& oracle, const RuleMeta& meta, const Params& params);

// Grid view of a known configuration (tests and brute force).
GridView grid_view_of(const Configuration& c, const RuleMeta& meta, Index t1, const std::vector<Index>& grid);

struct GridInterval {
  Index first = 0, last = 0;  // grid indices, last may wrap below first
  Index g1 = 0, g2 = 0;       // locations of first and last
  bool final = false;
  bool open_left = false, open_right = false;  // touches a linear boundary
  Index count = 0;                             // grid locations inside
};

struct GridIntervals {
  bool homogeneous_final = false;
  bool homogeneous_nonfinal = false;
  std::vector<GridInterval> intervals;  // in ring order
  std::vector<int> owner;               // grid index -> interval
};

GridIntervals grid_intervals(const RuleMeta& meta, const GridView& gv, const Params& params);

}  // namespace eca
