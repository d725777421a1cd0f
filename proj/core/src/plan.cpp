#include "eca/params.hpp"

#include <algorithm>
#include <cmath>

#include "eca/errors.hpp"

namespace eca {

Constants paper_constants() { return Constants{"paper", 48, 15, 3, 84, 20, 32, 4, 8}; }

// small enough that soundness shows up at desk scale
Constants lab_constants() { return Constants{"lab", 4, 2, 3, 4, 2, 4, 2, 2}; }

Constants constants_for(std::string_view profile) {
  if (profile == "paper") return paper_constants();
  if (profile == "lab") return lab_constants();
  throw ParameterError("unknown constants profile: " + std::string(profile));
}

namespace {
void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0, 1)");
}

Index ceil_index(double x) { return static_cast<Index>(std::ceil(x - 1e-9)); }
Index floor_index(double x) { return static_cast<Index>(std::floor(x + 1e-9)); }
}  // namespace

std::vector<Index> grid_locations(Index n, Index count) {
  std::vector<Index> g(count);
  for (Index j = 0; j < count; ++j)
    g[j] = static_cast<Index>((static_cast<__int128>(j) * n) / count);
  return g;
}

Plan plan(Index n, Index m, double eps, const Constants& c) {
  check_eps(eps);
  if (n < 3) throw ParameterError("n must be at least 3");
  if (m < 2) throw ParameterError("m must be at least 2");
  Plan out;
  Params& p = out.params;
  p.eps = eps;
  p.constants = c;
  p.n = n;
  p.m = m;
  p.delta = std::max<Index>(1, floor_index(eps * eps * static_cast<double>(std::min(n, m)) / c.b0));
  p.t1 = ceil_index(c.b1 * static_cast<double>(p.delta) / eps);
  p.t2 = p.t1 + p.delta;
  p.s = ceil_index(2.0 * c.b2 / eps);
  const Index count = n / p.delta;
  if (p.t2 + 1 >= m) {
    out.fallback = true;
    out.fallback_reason = "t2 + 1 >= m";
  } else if (count < 2) {
    out.fallback = true;
    out.fallback_reason = "grid would have fewer than two locations";
  } else if (2 * (p.t2 + 1) > n) {
    // the ring is too small for the shrunken intervals to make sense
    out.fallback = true;
    out.fallback_reason = "2 (t2 + 1) > n";
  }
  if (count >= 1) {
    p.grid = grid_locations(n, count);
    p.gap = (n + count - 1) / count;
  }
  return out;
}

WidePlan plan_wide(Index n, Index m, double eps, int k, const Constants& c) {
  check_eps(eps);
  if (n < 3 || m < 2) throw ParameterError("bad environment shape");
  WidePlan out;
  WideParams& w = out.params;
  w.eps = eps;
  w.constants = c;
  w.n = n;
  w.m = m;
  w.width = ceil_index(c.wide_b3 * static_cast<double>(m) / eps);
  w.intervals = w.width > 0 ? n / w.width : 0;
  w.delta = std::max<Index>(1, floor_index(eps * eps * static_cast<double>(m) / c.wide_b0));
  w.t1 = ceil_index(c.wide_b1 * static_cast<double>(w.delta) / eps);
  w.t2 = w.t1 + w.delta;
  w.chosen = std::min<Index>(w.intervals, ceil_index(c.wide_b5 / eps));
  w.per_interval_samples = ceil_index(2.0 * c.wide_b4 / eps);
  if (static_cast<double>(n) <= c.wide_b3 * static_cast<double>(m) / (eps * eps)) {
    out.reason = "n <= b3 m / eps^2";
  } else if (w.t2 + 1 >= m) {
    out.reason = "t2 + 1 >= m";
  } else if (w.width - 2 * (w.t1 + k + 1) < 2 * (m - w.t1)) {
    out.reason = "interval too short for the sample range";
  } else {
    out.applicable = true;
  }
  return out;
}

}  // namespace eca
