#pragma once

#include <vector>

#include "eca/tester.hpp"

// shared between the grid and interval testers
namespace eca::detail {

struct Sample {
  Index t = 0, i = 0;
  Pattern w_t2, w_t;
};

struct Check {
  const GridIntervals* iv;
  const GridView* gv;
  const Params* params;
};

Index uniform(Rng& rng, Index lo, Index hi);

// all t2 windows in ascending location, then all t windows in ascending time
void query_samples(QueryOracle& oracle, std::vector<Sample>& samples, Index t2, int k);

// classifies and checks every sample; fills in the verdict on a violation
bool judge(Verdict& v, const RuleMeta& meta, const std::vector<Sample>& samples, const std::vector<Check>& checks);

}  // namespace eca::detail
