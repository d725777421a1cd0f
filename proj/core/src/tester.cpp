#include "eca/tester.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eca/errors.hpp"
#include "eca/feasibility.hpp"
#include "eca/tester_detail.hpp"

namespace eca {

const char* decision_name(Decision d) { return d == Decision::Accept ? "Accept" : "Reject"; }

const char* reject_kind_name(RejectKind k) {
  switch (k) {
    case RejectKind::None: return "none";
    case RejectKind::InfeasibleGrid: return "infeasible-grid";
    case RejectKind::Violation: return "violation";
    case RejectKind::Mismatch: return "mismatch";
    case RejectKind::Forbidden: return "forbidden-pattern";
  }
  return "?";
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Grid: return "grid";
    case Variant::Wide: return "wide";
    case Variant::Fallback: return "fallback";
    case Variant::Trivial: return "trivial";
  }
  return "?";
}

VariantChoice parse_variant(std::string_view s) {
  if (s == "auto") return VariantChoice::Auto;
  if (s == "grid") return VariantChoice::Grid;
  if (s == "wide") return VariantChoice::Wide;
  if (s == "fallback") return VariantChoice::Fallback;
  throw UnknownName("unknown variant: " + std::string(s));
}

namespace detail {

Index uniform(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

void query_samples(QueryOracle& oracle, std::vector<Sample>& samples, Index t2, int k) {
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return samples[a].i < samples[b].i; });
  for (std::size_t j : order) samples[j].w_t2 = oracle.query_window(t2, samples[j].i, k);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return samples[a].t < samples[b].t; });
  for (std::size_t j : order) samples[j].w_t = oracle.query_window(samples[j].t, samples[j].i, k);
}

bool judge(Verdict& v, const RuleMeta& meta, const std::vector<Sample>& samples, const std::vector<Check>& checks) {
  // report the earliest violating pair in time order
  std::optional<std::size_t> worst;
  Requirement req = Requirement::A1;
  PairClass::Kind kind = PairClass::Kind::U;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const Check& c = checks[j];
    const PairClass cls = classify_pair(samples[j].t, samples[j].i, *c.iv, *c.gv, *c.params);
    if (cls.kind == PairClass::Kind::U) continue;
    auto bad = violation_check(meta, cls, samples[j].t, samples[j].i, samples[j].w_t, samples[j].w_t2, *c.gv, *c.params);
    if (!bad) continue;
    if (!worst || samples[j].t < samples[*worst].t) {
      worst = j;
      req = *bad;
      kind = cls.kind;
    }
  }
  if (!worst) return false;
  v.decision = Decision::Reject;
  v.reject_kind = RejectKind::Violation;
  v.pair = TimeLocation{samples[*worst].t, samples[*worst].i};
  v.pair_class = kind_name(kind);
  v.requirement = requirement_id(req);
  v.reason = std::string(kind_name(kind)) + "-pair (" + std::to_string(v.pair->t) + ", " + std::to_string(v.pair->i) +
             ") violates " + requirement_id(req) + ": " + requirement_text(req);
  return true;
}

}  // namespace detail

Verdict test(QueryOracle& oracle, const RuleMeta& meta, double eps, Rng& rng, const Constants& constants) {
  if (oracle.time_floor() != 0 || oracle.stats().total != 0) throw ParameterError("the oracle must be fresh");
  const Plan pl = plan(oracle.n(), oracle.m(), eps, constants);
  if (pl.fallback) {
    Verdict v = test_fallback(oracle, meta.rule, eps, rng, constants);
    v.delegated = true;
    v.delegation_reason = pl.fallback_reason;
    return v;
  }
  const Params& p = pl.params;
  Verdict v;
  v.variant = Variant::Grid;
  v.delta = p.delta;
  v.t1 = p.t1;
  v.t2 = p.t2;
  v.grid_size = static_cast<Index>(p.grid.size());
  v.samples = p.s;

  // the whole query set is fixed here, before any answer is seen
  std::vector<detail::Sample> samples(p.s);
  for (auto& s : samples) {
    s.t = detail::uniform(rng, p.t2 + 1, p.m - 1);
    s.i = detail::uniform(rng, 0, p.n - 1);
  }

  const GridView gv = read_grid(oracle, meta, p);
  const FeasibilityResult fr = check_feasible(meta, gv, p);
  if (!fr.feasible) {
    v.decision = Decision::Reject;
    v.reject_kind = RejectKind::InfeasibleGrid;
    v.reason = "grid at t1 is infeasible: " + fr.reason;
    v.stats = oracle.stats();
    return v;
  }
  const GridIntervals iv = grid_intervals(meta, gv, p);
  detail::query_samples(oracle, samples, p.t2, meta.k);
  std::vector<detail::Check> checks(samples.size(), detail::Check{&iv, &gv, &p});
  detail::judge(v, meta, samples, checks);
  v.stats = oracle.stats();
  return v;
}

Verdict test_fallback(QueryOracle& oracle, const Rule& rule, double eps, Rng& rng, const Constants& constants) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0, 1)");
  const Index n = oracle.n(), m = oracle.m();
  if (m < 2) throw ParameterError("m must be at least 2");
  Verdict v;
  v.variant = Variant::Fallback;
  v.samples = static_cast<Index>(std::ceil(2.0 * constants.b2 / eps - 1e-9));
  std::vector<TimeLocation> pairs(v.samples);
  for (auto& q : pairs) {
    q.t = detail::uniform(rng, 1, m - 1);
    q.i = detail::uniform(rng, 0, n - 1);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const TimeLocation& a, const TimeLocation& b) { return a.t < b.t; });

  Configuration row(n);
  for (Index i = 0; i < n; ++i) row.set(i, oracle.query(0, i));
  Index now = 0;
  for (const auto& q : pairs) {
    while (now < q.t) {
      row = evolve_step(row, rule);
      ++now;
    }
    const bool seen = oracle.query(q.t, q.i);
    if (seen != row.get(q.i) && v.accepted()) {
      v.decision = Decision::Reject;
      v.reject_kind = RejectKind::Mismatch;
      v.pair = q;
      v.reason = "cell (" + std::to_string(q.t) + ", " + std::to_string(q.i) + ") differs from the evolution of row 0";
    }
  }
  v.stats = oracle.stats();
  return v;
}

Verdict run_tester(QueryOracle& oracle, const Rule& rule, double eps, Rng& rng, const Constants& constants,
                   VariantChoice variant) {
  if (auto tk = trivial_kind(rule)) return test_trivial(oracle, *tk, eps, rng, constants);
  if (variant == VariantChoice::Fallback) return test_fallback(oracle, rule, eps, rng, constants);
  const RuleMeta* meta = find_builtin_meta(rule);
  if (!meta) throw UnknownName("no metadata registered for rule " + rule_name(rule));
  if (variant == VariantChoice::Grid) return test(oracle, *meta, eps, rng, constants);
  if (variant == VariantChoice::Wide) return test_wide(oracle, *meta, eps, rng, constants);
  if (plan_wide(oracle.n(), oracle.m(), eps, meta->k, constants).applicable)
    return test_wide(oracle, *meta, eps, rng, constants);
  return test(oracle, *meta, eps, rng, constants);
}

}  // namespace eca
