#include <algorithm>
#include <unordered_set>

#include "eca/errors.hpp"
#include "eca/feasibility.hpp"
#include "eca/tester.hpp"
#include "eca/tester_detail.hpp"

namespace eca {

Verdict test_wide(QueryOracle& oracle, const RuleMeta& meta, double eps, Rng& rng, const Constants& constants) {
  const WidePlan wp = plan_wide(oracle.n(), oracle.m(), eps, meta.k, constants);
  if (!wp.applicable) {
    Verdict v = test(oracle, meta, eps, rng, constants);
    v.delegated = true;
    v.delegation_reason = v.delegation_reason.empty() ? wp.reason : wp.reason + "; " + v.delegation_reason;
    return v;
  }
  const WideParams& w = wp.params;
  const int k = meta.k;
  Verdict v;
  v.variant = Variant::Wide;
  v.delta = w.delta;
  v.t1 = w.t1;
  v.t2 = w.t2;
  v.intervals = w.chosen;
  v.samples = w.chosen * w.per_interval_samples;

  // distinct intervals, in ascending position so the grid reads go left to right
  std::vector<Index> chosen;
  {
    std::unordered_set<Index> seen;
    while (static_cast<Index>(chosen.size()) < w.chosen) {
      const Index j = detail::uniform(rng, 0, w.intervals - 1);
      if (seen.insert(j).second) chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());

  std::vector<Params> params(chosen.size());
  std::vector<detail::Sample> samples;
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    const Index i0 = chosen[c] * w.width, j0 = i0 + w.width - 1;
    const Index lo = i0 + w.t1 + k + 1, hi = j0 - w.t1 - k - 1;
    Params& p = params[c];
    p.eps = eps;
    p.constants = constants;
    p.n = w.n;
    p.m = w.m;
    p.delta = w.delta;
    p.t1 = w.t1;
    p.t2 = w.t2;
    p.gap = w.delta;
    p.s = w.per_interval_samples;
    p.cyclic = false;
    for (Index g = lo; g <= hi; g += w.delta) p.grid.push_back(g);
    for (Index r = 0; r < w.per_interval_samples; ++r) {
      detail::Sample s;
      s.t = detail::uniform(rng, w.t2 + 1, w.m - 1);
      const Index d = s.t - w.t1;
      s.i = detail::uniform(rng, lo + d, hi - d);
      samples.push_back(s);
      owner.push_back(c);
    }
  }
  v.grid_size = params.empty() ? 0 : static_cast<Index>(params.front().grid.size());

  std::vector<GridView> views(chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c) views[c] = read_grid(oracle, meta, params[c]);
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    const FeasibilityResult fr = check_feasible(meta, views[c], params[c]);
    if (!fr.feasible) {
      v.decision = Decision::Reject;
      v.reject_kind = RejectKind::InfeasibleGrid;
      v.reason = "grid of interval " + std::to_string(chosen[c]) + " at t1 is infeasible: " + fr.reason;
      v.stats = oracle.stats();
      return v;
    }
  }
  std::vector<GridIntervals> ivs(chosen.size());
  for (std::size_t c = 0; c < chosen.size(); ++c) ivs[c] = grid_intervals(meta, views[c], params[c]);

  detail::query_samples(oracle, samples, w.t2, k);
  std::vector<detail::Check> checks;
  for (std::size_t j = 0; j < samples.size(); ++j) checks.push_back({&ivs[owner[j]], &views[owner[j]], &params[owner[j]]});
  detail::judge(v, meta, samples, checks);
  v.stats = oracle.stats();
  return v;
}

}  // namespace eca
