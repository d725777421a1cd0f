#include <algorithm>
#include <cmath>

#include "eca/errors.hpp"
#include "eca/tester.hpp"
#include "eca/tester_detail.hpp"

namespace eca {

namespace {

// a 0-block of length one or two between ones cannot exist after one NOR step
bool has_short_zero_block(Pattern w) {
  for (int a = 0; a + 2 < w.len; ++a) {
    if (w.sub(a, 3) == Pattern{0b101, 3}) return true;
    if (a + 3 < w.len && w.sub(a, 4) == Pattern{0b1001, 4}) return true;
  }
  return false;
}

}  // namespace

Verdict test_trivial(QueryOracle& oracle, TrivialKind kind, double eps, Rng& rng, const Constants& constants) {
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("eps must lie in (0, 1)");
  const Index n = oracle.n(), m = oracle.m();
  Verdict v;
  v.variant = Variant::Trivial;
  v.samples = static_cast<Index>(std::ceil(2.0 * constants.b2 / eps - 1e-9));
  std::vector<TimeLocation> pairs(v.samples);
  for (auto& q : pairs) {
    q.t = detail::uniform(rng, 1, m - 1);
    q.i = detail::uniform(rng, 0, n - 1);
  }

  if (kind == TrivialKind::All1 || kind == TrivialKind::All0) {
    const bool want = kind == TrivialKind::All1;
    std::stable_sort(pairs.begin(), pairs.end(), [](const TimeLocation& a, const TimeLocation& b) { return a.t < b.t; });
    for (const auto& q : pairs) {
      if (oracle.query(q.t, q.i) != want && v.accepted()) {
        v.decision = Decision::Reject;
        v.reject_kind = RejectKind::Mismatch;
        v.pair = q;
        v.reason = "cell (" + std::to_string(q.t) + ", " + std::to_string(q.i) + ") is not " + (want ? "1" : "0");
      }
    }
    v.stats = oracle.stats();
    return v;
  }

  if (m < 3) throw ParameterError("m must be at least 3 for nor and nand");
  // NOR settles into period two after one step; NAND is its complement
  const bool flip = kind == TrivialKind::Nand;
  struct Read {
    Index t, i;
    std::size_t sample;
    bool base;
  };
  std::vector<Read> reads;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const Index b = parity(pairs[j].t) ? 1 : 2;
    reads.push_back({b, pairs[j].i, j, true});
    reads.push_back({pairs[j].t, pairs[j].i, j, false});
  }
  std::stable_sort(reads.begin(), reads.end(), [](const Read& a, const Read& b) { return a.t < b.t; });
  std::vector<Pattern> base(pairs.size()), late(pairs.size());
  for (const Read& r : reads) {
    Pattern w = oracle.query_window(r.t, r.i, 3);
    if (flip) w = w.complement();
    (r.base ? base : late)[r.sample] = w;
  }
  Index first = -1;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    RejectKind why = RejectKind::None;
    if (has_short_zero_block(base[j]) || has_short_zero_block(late[j])) why = RejectKind::Forbidden;
    else if (base[j] != late[j]) why = RejectKind::Mismatch;
    if (why == RejectKind::None) continue;
    if (first >= 0 && pairs[j].t >= pairs[first].t) continue;
    first = static_cast<Index>(j);
    v.decision = Decision::Reject;
    v.reject_kind = why;
    v.pair = pairs[j];
    v.reason = why == RejectKind::Forbidden
                   ? std::string("window contains a ") + (flip ? "1-block" : "0-block") + " shorter than 3"
                   : "window at t differs from the window at the base time of the same parity";
  }
  v.stats = oracle.stats();
  return v;
}

}  // namespace eca
