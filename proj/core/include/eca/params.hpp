#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eca/ring.hpp"

namespace eca {

struct Constants {
  std::string profile;
  // grid tester
  double b0 = 48, b1 = 15, b2 = 3;
  // interval variant for m << n
  double wide_b0 = 84, wide_b1 = 20, wide_b3 = 32, wide_b4 = 4, wide_b5 = 8;
};

Constants paper_constants();
Constants lab_constants();
Constants constants_for(std::string_view profile);

struct Params {
  double eps = 0;
  Constants constants;
  Index n = 0, m = 0;
  Index delta = 1;
  Index t1 = 0, t2 = 0;
  std::vector<Index> grid;
  // largest distance between consecutive grid locations (= delta when delta | n)
  Index gap = 1;
  Index s = 0;
  bool cyclic = true;
};

struct Plan {
  bool fallback = false;
  std::string fallback_reason;
  Params params;
};

Plan plan(Index n, Index m, double eps, const Constants& constants);

// grid locations floor(j*n/count), j < count
std::vector<Index> grid_locations(Index n, Index count);

struct WideParams {
  double eps = 0;
  Constants constants;
  Index n = 0, m = 0;
  Index width = 0;      // n', the interval length
  Index intervals = 0;  // floor(n / n')
  Index chosen = 0;     // intervals examined
  Index delta = 1, t1 = 0, t2 = 0;
  Index per_interval_samples = 0;
};

struct WidePlan {
  bool applicable = false;  // n > b3 m / eps^2 and the interval grid fits
  std::string reason;
  WideParams params;
};

WidePlan plan_wide(Index n, Index m, double eps, int k, const Constants& constants);

}  // namespace eca
