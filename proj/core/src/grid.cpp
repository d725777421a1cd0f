#include "eca/grid.hpp"

#include "eca/errors.hpp"

namespace eca {

GridView read_grid(QueryOracle& oracle, const RuleMeta& meta, const Params& params) {
  GridView gv;
  gv.n = params.n;
  gv.t1 = params.t1;
  gv.k = meta.k;
  gv.cyclic = params.cyclic;
  gv.locations = params.grid;
  gv.windows.reserve(params.grid.size());
  for (Index g : params.grid) gv.windows.push_back(oracle.query_window(params.t1, g, meta.k));
  return gv;
}

GridView grid_view_of(const Configuration& c, const RuleMeta& meta, Index t1, const std::vector<Index>& grid) {
  GridView gv;
  gv.n = c.size();
  gv.t1 = t1;
  gv.k = meta.k;
  gv.locations = grid;
  for (Index g : grid) gv.windows.push_back(c.window(g, meta.k));
  return gv;
}

GridIntervals grid_intervals(const RuleMeta& meta, const GridView& gv, const Params&) {
  const Index G = gv.size();
  if (G == 0) throw ParameterError("empty grid");
  GridIntervals out;
  out.owner.assign(G, 0);
  std::vector<bool> fin(G);
  for (Index j = 0; j < G; ++j) fin[j] = meta.is_final(gv.windows[j]);

  Index start = -1;
  if (gv.cyclic) {
    for (Index j = 0; j < G && start < 0; ++j)
      if (fin[j] != fin[(j + G - 1) % G]) start = j;
  } else {
    start = 0;
    bool mixed = false;
    for (Index j = 1; j < G; ++j) mixed = mixed || fin[j] != fin[0];
    if (!mixed) start = -1;
  }
  if (start < 0) {
    out.homogeneous_final = fin[0];
    out.homogeneous_nonfinal = !fin[0];
    // no maximal interval exists in this case
    out.owner.assign(G, -1);
    return out;
  }

  for (Index step = 0; step < G;) {
    Index a = (start + step) % G;
    Index len = 1;
    while (step + len < G && fin[(a + len) % G] == fin[a]) ++len;
    Index b = (a + len - 1) % G;
    GridInterval iv{a, b, gv.locations[a], gv.locations[b], static_cast<bool>(fin[a]), false, false, len};
    if (!gv.cyclic) {
      iv.open_left = a == 0;
      iv.open_right = b == G - 1;
    }
    for (Index r = 0; r < len; ++r) out.owner[(a + r) % G] = static_cast<int>(out.intervals.size());
    out.intervals.push_back(iv);
    step += len;
  }
  return out;
}

}  // namespace eca
