#include "eca/classify.hpp"

#include <algorithm>

#include "eca/errors.hpp"

namespace eca {

const char* kind_name(PairClass::Kind k) {
  switch (k) {
    case PairClass::Kind::A: return "A";
    case PairClass::Kind::B: return "B";
    case PairClass::Kind::C: return "C";
    case PairClass::Kind::U: return "U";
  }
  return "?";
}

const char* requirement_id(Requirement r) {
  switch (r) {
    case Requirement::A1: return "A1";
    case Requirement::A2: return "A2";
    case Requirement::A3: return "A3";
    case Requirement::B1: return "B1";
    case Requirement::B2: return "B2";
    case Requirement::C1: return "C1";
    case Requirement::C2: return "C2";
  }
  return "?";
}

const char* requirement_text(Requirement r) {
  switch (r) {
    case Requirement::A1: return "window at t2 is not final";
    case Requirement::A2: return "window at t is not final";
    case Requirement::A3: return "bit at t differs from the prediction from t2";
    case Requirement::B1: return "window at t is not final";
    case Requirement::B2: return "bit at t differs from the prediction from the grid";
    case Requirement::C1: return "window at t is final";
    case Requirement::C2: return "window at t differs from the transported grid window";
  }
  return "?";
}

namespace {

struct Ctx {
  const GridIntervals& iv;
  const GridView& gv;
  const Params& p;
  Index n, G, D, t1, d;
};

// grid index j with g_j <= i, or -1 when i precedes the whole grid
Index grid_floor(const GridView& gv, Index i) {
  auto it = std::upper_bound(gv.locations.begin(), gv.locations.end(), i);
  return static_cast<Index>(it - gv.locations.begin()) - 1;
}

// nearby interval indices; far intervals are never the nearest competitors
std::vector<int> nearby(const Ctx& c, Index i) {
  Index j = grid_floor(c.gv, i);
  if (j < 0) j = c.gv.cyclic ? c.G - 1 : 0;
  const int X = c.iv.owner[j];
  const int cnt = static_cast<int>(c.iv.intervals.size());
  std::vector<int> out;
  for (int o = -4; o <= 4; ++o) {
    int x = X + o;
    if (c.gv.cyclic) {
      x = static_cast<int>(wrap(x, cnt));
    } else if (x < 0 || x >= cnt) {
      continue;
    }
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

bool in_A(const Ctx& c, const GridInterval& J, Index i) {
  const Index len = ddist(J.g1, J.g2, c.n);
  if (len < 2 * c.t1) return false;
  return ddist(J.g1 + c.t1, i, c.n) <= len - 2 * c.t1;
}

bool is_inside(const Ctx& c, const GridInterval& J, Index i) {
  if (!c.gv.cyclic) return i >= J.g1 && i <= J.g2;
  return in_interval(i, J.g1, J.g2, c.n);
}

// margin of i against every final interval's endpoint on the far side. The
// interval's own far endpoint counts too: a flank range longer than the
// neighbouring non-final interval wraps back into the same final interval.
bool margin_ok(const Ctx& c, const std::vector<int>& near, int self, Index i, Side side) {
  const GridInterval& J = c.iv.intervals[self];
  const Index own = dist(side == Side::Left ? J.g1 : J.g2, i, c.n);
  for (int x : near) {
    const GridInterval& K = c.iv.intervals[x];
    if (!K.final) continue;
    if (x == self) {
      if (!(own < dist(side == Side::Left ? J.g2 : J.g1, i, c.n) - c.D)) return false;
      continue;
    }
    if (!(own < dist(side == Side::Left ? K.g2 : K.g1, i, c.n) - c.D)) return false;
  }
  return true;
}

bool in_B_side(const Ctx& c, const std::vector<int>& near, int self, Index i, Side side) {
  const GridInterval& J = c.iv.intervals[self];
  if (!J.final) return false;
  // Offsets are measured in the direction of the flank. When t - t1 is
  // close to n the cyclic range would reach around into the interval, and
  // such cells belong to the interval, not to its flank.
  const Index reach_in = c.t1 - c.D - 1;
  if (side == Side::Left) {
    if (J.open_left) return false;
    const bool in = ddist(J.g1, i, c.n) <= reach_in || (ddist(i, J.g1, c.n) <= c.d && !is_inside(c, J, i));
    if (!in) return false;
  } else {
    if (J.open_right) return false;
    const bool in = ddist(i, J.g2, c.n) <= reach_in || (ddist(J.g2, i, c.n) <= c.d && !is_inside(c, J, i));
    if (!in) return false;
  }
  return margin_ok(c, near, self, i, side);
}

bool in_C(const Ctx& c, const GridInterval& K, Index i) {
  if (K.final || !is_inside(c, K, i)) return false;
  if (K.open_left) {
    if (ddist(K.g1, i, c.n) < c.d) return false;
  } else if (dist(i, K.g1 + 1, c.n) <= c.d) {
    return false;
  }
  if (K.open_right) {
    if (ddist(i, K.g2, c.n) < c.d) return false;
  } else if (dist(i, K.g2 - 1, c.n) <= c.d) {
    return false;
  }
  return true;
}

bool homogeneous_C(const Ctx& c, Index i) {
  if (c.gv.cyclic) return true;
  return i - c.gv.locations.front() >= c.d && c.gv.locations.back() - i >= c.d;
}

// nearest grid location, ties to the left one
int nearest_grid(const Ctx& c, Index i) {
  Index j = grid_floor(c.gv, i);
  if (!c.gv.cyclic) {
    if (j < 0) return 0;
    if (j == c.G - 1) return static_cast<int>(j);
    return dist(c.gv.locations[j], i, c.n) <= dist(c.gv.locations[j + 1], i, c.n) ? static_cast<int>(j)
                                                                                   : static_cast<int>(j + 1);
  }
  if (j < 0) j = c.G - 1;
  const Index nx = (j + 1) % c.G;
  return dist(c.gv.locations[j], i, c.n) <= dist(c.gv.locations[nx], i, c.n) ? static_cast<int>(j)
                                                                              : static_cast<int>(nx);
}

// reference location for a B pair: closest grid location of the interval
// within t1 - D of one of its ends
int b_reference(const Ctx& c, const GridInterval& J, Index i) {
  const Index len = ddist(J.g1, J.g2, c.n);
  const Index reach = c.t1 - c.D;
  auto idx = [&](Index r) { return (J.first + r) % c.G; };
  auto off = [&](Index r) { return ddist(J.g1, c.gv.locations[idx(r)], c.n); };
  std::vector<Index> cand;
  // left part: offsets in [0, reach]
  {
    Index lo = 0, hi = J.count - 1;
    while (lo < hi) {  // last r with off(r) <= reach
      Index mid = (lo + hi + 1) / 2;
      if (off(mid) <= reach) lo = mid; else hi = mid - 1;
    }
    const Index last_left = lo;
    const Index target = std::clamp<Index>(ddist(J.g1, i, c.n) <= len ? ddist(J.g1, i, c.n) : 0, 0, reach);
    Index a = 0, b = last_left;
    while (a < b) {
      Index mid = (a + b + 1) / 2;
      if (off(mid) <= target) a = mid; else b = mid - 1;
    }
    cand.insert(cand.end(), {a, 0, last_left});
    if (a + 1 <= last_left) cand.push_back(a + 1);
  }
  // right part: offsets in [len - reach, len]
  {
    Index lo = 0, hi = J.count - 1;
    while (lo < hi) {  // first r with off(r) >= len - reach
      Index mid = (lo + hi) / 2;
      if (off(mid) >= len - reach) hi = mid; else lo = mid + 1;
    }
    const Index first_right = lo;
    const Index target = std::clamp<Index>(ddist(J.g1, i, c.n) <= len ? ddist(J.g1, i, c.n) : len, len - reach, len);
    Index a = first_right, b = J.count - 1;
    while (a < b) {
      Index mid = (a + b + 1) / 2;
      if (off(mid) <= target) a = mid; else b = mid - 1;
    }
    cand.insert(cand.end(), {a, first_right, J.count - 1});
    if (a + 1 <= J.count - 1) cand.push_back(a + 1);
  }
  Index best = -1;
  for (Index r : cand) {
    if (best < 0) { best = r; continue; }
    const Index dr = dist(c.gv.locations[idx(r)], i, c.n), db = dist(c.gv.locations[idx(best)], i, c.n);
    if (dr < db || (dr == db && off(r) < off(best))) best = r;
  }
  return static_cast<int>(idx(best));
}

Ctx make_ctx(Index t, const GridIntervals& iv, const GridView& gv, const Params& p) {
  if (t <= p.t2) throw DomainError("pairs are classified only for t > t2");
  return Ctx{iv, gv, p, gv.n, gv.size(), p.gap, p.t1, t - p.t1};
}

}  // namespace

Membership membership(Index t, Index i, const GridIntervals& iv, const GridView& gv, const Params& params) {
  const Ctx c = make_ctx(t, iv, gv, params);
  Membership m;
  if (iv.homogeneous_final) {
    m.a = true;
    return m;
  }
  if (iv.homogeneous_nonfinal) {
    m.c = homogeneous_C(c, i);
    return m;
  }
  const auto near = nearby(c, i);
  for (int x : near) {
    const GridInterval& J = iv.intervals[x];
    if (J.final) {
      m.a = m.a || (is_inside(c, J, i) && in_A(c, J, i));
      m.b = m.b || in_B_side(c, near, x, i, Side::Left) || in_B_side(c, near, x, i, Side::Right);
    } else {
      m.c = m.c || in_C(c, J, i);
    }
  }
  return m;
}

PairClass classify_pair(Index t, Index i, const GridIntervals& iv, const GridView& gv, const Params& params) {
  const Ctx c = make_ctx(t, iv, gv, params);
  PairClass out;
  if (iv.homogeneous_final) {
    out.kind = PairClass::Kind::A;
    return out;
  }
  if (iv.homogeneous_nonfinal) {
    if (homogeneous_C(c, i)) {
      out.kind = PairClass::Kind::C;
      out.ref_index = nearest_grid(c, i);
      out.ref = gv.locations[out.ref_index];
      if (dist(out.ref, i, c.n) >= c.D) out.kind = PairClass::Kind::U;
    }
    return out;
  }
  const auto near = nearby(c, i);
  for (int x : near) {
    const GridInterval& J = iv.intervals[x];
    if (J.final && is_inside(c, J, i) && in_A(c, J, i)) {
      out.kind = PairClass::Kind::A;
      out.interval = x;
      out.g1 = J.g1;
      out.g2 = J.g2;
      return out;
    }
  }
  // B: keep the candidate whose endpoint is nearest; equal distances stay U
  int best = -1;
  Side best_side = Side::Left;
  Index best_d = 0;
  bool tied = false;
  for (int x : near) {
    for (Side s : {Side::Left, Side::Right}) {
      if (!in_B_side(c, near, x, i, s)) continue;
      const GridInterval& J = iv.intervals[x];
      const Index dd = dist(s == Side::Left ? J.g1 : J.g2, i, c.n);
      if (best < 0 || dd < best_d) {
        best = x;
        best_side = s;
        best_d = dd;
        tied = false;
      } else if (dd == best_d && !(x == best && s == best_side)) {
        tied = true;
      }
    }
  }
  if (best >= 0) {
    if (tied) return out;
    const GridInterval& J = iv.intervals[best];
    out.kind = PairClass::Kind::B;
    out.interval = best;
    out.g1 = J.g1;
    out.g2 = J.g2;
    out.side = best_side;
    out.ref_index = b_reference(c, J, i);
    out.ref = gv.locations[out.ref_index];
    return out;
  }
  for (int x : near) {
    const GridInterval& K = iv.intervals[x];
    if (in_C(c, K, i)) {
      const int r = nearest_grid(c, i);
      if (dist(gv.locations[r], i, c.n) >= c.D) return out;
      out.kind = PairClass::Kind::C;
      out.interval = x;
      out.g1 = K.g1;
      out.g2 = K.g2;
      out.ref_index = r;
      out.ref = gv.locations[r];
      return out;
    }
  }
  return out;
}

std::optional<Requirement> violation_check(const RuleMeta& meta, const PairClass& cls, Index t, Index i,
                                           Pattern window_t, Pattern window_t2, const GridView& gv,
                                           const Params& params) {
  switch (cls.kind) {
    case PairClass::Kind::A:
      if (!meta.is_final(window_t2)) return Requirement::A1;
      if (!meta.is_final(window_t)) return Requirement::A2;
      if (window_t.center() != f_fwd(meta, window_t2.center(), parity(t - params.t2), false)) return Requirement::A3;
      return std::nullopt;
    case PairClass::Kind::B: {
      if (!meta.is_final(window_t)) return Requirement::B1;
      const bool base = gv.windows.at(cls.ref_index).center();
      if (window_t.center() != f_fwd(meta, base, parity(t - params.t1), parity(dist(cls.ref, i, gv.n))))
        return Requirement::B2;
      return std::nullopt;
    }
    case PairClass::Kind::C: {
      if (meta.is_final(window_t)) return Requirement::C1;
      const Pattern want =
          h_fwd(meta, gv.windows.at(cls.ref_index), parity(t - params.t1), displacement(cls.ref, i, gv.n));
      if (window_t != want) return Requirement::C2;
      return std::nullopt;
    }
    case PairClass::Kind::U: break;
  }
  throw DomainError("uncertain pairs are never checked");
}

}  // namespace eca
