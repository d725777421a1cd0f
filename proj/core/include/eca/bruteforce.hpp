#pragma once

#include <cstdint>
#include <vector>

#include "eca/environment.hpp"
#include "eca/grid.hpp"

namespace eca::bruteforce {

inline constexpr Index kDistanceMaxN = 24;
inline constexpr Index kFeasibleMaxN = 16;
inline constexpr Index kPeriodMaxN = 20;

struct DistanceReport {
  Index differing = 0;  // cells to change
  double distance = 0;  // differing / (m n)
  Configuration argmin_initial;
  Index ties = 0;  // optimal initial configurations
};

// Exact distance from env to the evolutions of `rule` of the same shape.
// Ties go to the lexicographically smallest initial configuration.
DistanceReport exact_distance(const Environment& env, const Rule& rule, unsigned threads = 0);

// configurations reachable after exactly t steps, indexed by packed value
const std::vector<std::uint8_t>& image_set(const Rule& rule, Index n, Index t);

bool feasible(const Rule& rule, const GridView& gv, Index t1);
inline bool feasible(const RuleMeta& meta, const GridView& gv, Index t1) { return feasible(meta.rule, gv, t1); }

// longest cycle of the global map on the ring of n cells
Index period(const Rule& rule, Index n);

}  // namespace eca::bruteforce
