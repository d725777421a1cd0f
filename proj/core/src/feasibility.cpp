#include "eca/feasibility.hpp"

#include <algorithm>
#include <array>

#include "eca/bruteforce.hpp"

namespace eca {

bool collect_observations(const GridView& gv, std::vector<Observation>& out) {
  out.clear();
  const int w = 2 * gv.k + 1;
  out.reserve(gv.locations.size() * w);
  for (std::size_t j = 0; j < gv.locations.size(); ++j)
    for (int d = 0; d < w; ++d) {
      Index pos = gv.locations[j] - gv.k + d;
      out.push_back({gv.cyclic ? wrap(pos, gv.n) : pos, gv.windows[j].at(d)});
    }
  std::sort(out.begin(), out.end(), [](const Observation& a, const Observation& b) { return a.pos < b.pos; });
  std::size_t k = 0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (k > 0 && out[k - 1].pos == out[j].pos) {
      if (out[k - 1].bit != out[j].bit) return false;
      continue;
    }
    out[k++] = out[j];
  }
  out.resize(k);
  return true;
}

namespace {

// Best (longest) current block length per automaton state; -1 means dead.
// Longer blocks never hurt, so one number per state is enough.
//   blk[lb][b]:  inside a block, lb = the block started next to a non-final cell
//   left[lb][b]: one unlinked edge after a block
//   gap[b]:      inside a non-final stretch
struct ChainState {
  std::array<std::array<Index, 2>, 2> blk{{{-1, -1}, {-1, -1}}};
  std::array<std::array<Index, 2>, 2> left{{{-1, -1}, {-1, -1}}};
  std::array<Index, 2> gap{-1, -1};
  friend bool operator==(const ChainState&, const ChainState&) = default;
  bool dead() const {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        if (blk[a][b] >= 0 || left[a][b] >= 0) return false;
    return gap[0] < 0 && gap[1] < 0;
  }
};

struct ChainRules {
  int link;
  Index t;
  Index cap;
  Index need_single() const { return t + 2; }
  Index need_double() const { return 2 * t + 2; }
};

inline void upd(Index& slot, Index v) { slot = std::max(slot, v); }

// allowed: bit mask of values the next cell may take (1 = zero, 2 = one)
ChainState chain_step(const ChainState& s, const ChainRules& r, int allowed) {
  ChainState o;
  for (int b = 0; b < 2; ++b)
    for (int nb = 0; nb < 2; ++nb) {
      if (!(allowed & (1 << nb))) continue;
      const bool linked = (b ^ nb) == r.link;
      for (int lb = 0; lb < 2; ++lb) {
        const Index L = s.blk[lb][b];
        if (L >= 0) {
          if (linked) upd(o.blk[lb][nb], std::min(L + 1, r.cap));
          else upd(o.left[lb][nb], L);
        }
        const Index M = s.left[lb][b];
        if (M >= 0) {
          if (linked) {
            if (M >= (lb ? r.need_single() : 0)) upd(o.blk[0][nb], 2);
          } else if (M >= (lb ? r.need_double() : r.need_single())) {
            upd(o.gap[nb], 0);
          }
        }
      }
      if (s.gap[b] >= 0) {
        if (linked) upd(o.blk[1][nb], 2);
        else upd(o.gap[nb], 0);
      }
    }
  return o;
}

int allowed_of(bool bit) { return bit ? 2 : 1; }

// Walks from the first observed cell to `end_pos`, stepping the automaton
// once per cell. Observation positions are increasing and lie in
// [obs.front().pos, end_pos]. Unobserved stretches are stepped freely; once
// the state repeats with period two the rest of the stretch is skipped.
template <class State, class Step>
State walk(State s, const std::vector<Observation>& obs, Index end_pos, bool skip, Step step) {
  Index pos = obs.front().pos;
  std::size_t next = 1;
  while (pos < end_pos) {
    const Index npos = next < obs.size() ? std::min(obs[next].pos, end_pos + 1) : end_pos + 1;
    const Index free = npos - pos - 1;
    State prev2{}, prev1{};
    for (Index done = 0; done < free;) {
      if (skip && done >= 2 && s == prev2) {
        if ((free - done) % 2 == 1) s = step(s, 3);
        break;
      }
      prev2 = prev1;
      prev1 = s;
      s = step(s, 3);
      ++done;
      if (s.dead()) return s;
    }
    pos = npos - 1;
    if (pos >= end_pos) break;
    s = step(s, allowed_of(obs[next].bit));
    ++next;
    ++pos;
    if (s.dead()) return s;
  }
  return s;
}

bool chain_no_gap_cells(int link, Index n, const std::vector<Observation>& obs) {
  // every cell final: no two consecutive unlinked edges
  // state [bit][previous edge unlinked]
  using S = std::array<std::array<bool, 2>, 2>;
  const Observation first = obs.front();
  for (int f0 = 0; f0 < 2; ++f0) {
    S s{};
    s[first.bit][f0] = true;
    std::size_t next = 1;
    for (Index pos = first.pos + 1; pos < first.pos + n; ++pos) {
      int allowed = 3;
      if (next < obs.size() && obs[next].pos == pos) allowed = allowed_of(obs[next++].bit);
      S o{};
      for (int b = 0; b < 2; ++b)
        for (int fl = 0; fl < 2; ++fl) {
          if (!s[b][fl]) continue;
          for (int nb = 0; nb < 2; ++nb) {
            if (!(allowed & (1 << nb))) continue;
            const bool unl = (b ^ nb) != link;
            if (unl && fl) continue;
            o[nb][unl] = true;
          }
        }
      s = o;
    }
    for (int b = 0; b < 2; ++b)
      for (int fl = 0; fl < 2; ++fl) {
        if (!s[b][fl]) continue;
        const bool unl = (b ^ first.bit) != link;
        if (unl && fl) continue;
        if (static_cast<int>(unl) != f0) continue;
        return true;
      }
  }
  return false;
}

bool chain_feasible(int link, Index n, Index t, std::vector<Observation> obs, bool cyclic, bool skip) {
  const Index cap = 2 * t + 2;
  const ChainRules r{link, t, cap};
  auto step = [&](const ChainState& s, int allowed) { return chain_step(s, r, allowed); };

  if (!cyclic) {
    ChainState s;
    const int b = obs.front().bit;
    s.blk[0][b] = cap;
    s.left[0][b] = cap;
    s.gap[b] = 0;
    s = walk(s, obs, obs.back().pos, skip, step);
    for (int bb = 0; bb < 2; ++bb) {
      if (s.blk[0][bb] >= 0 || s.blk[1][bb] >= 0 || s.gap[bb] >= 0) return true;
      if (s.left[0][bb] >= 0 || s.left[1][bb] >= r.need_single()) return true;
    }
    return false;
  }

  // cut at an observed unlinked edge (p, p+1)
  std::size_t cut = obs.size();
  for (std::size_t j = 0; j < obs.size() && cut == obs.size(); ++j) {
    const Observation& a = obs[j];
    const Observation& b = obs[(j + 1) % obs.size()];
    if (wrap(a.pos + 1, n) == b.pos && ((a.bit ^ b.bit) != link)) cut = (j + 1) % obs.size();
  }
  if (cut == obs.size()) return chain_no_gap_cells(link, n, obs);

  // rotate so the walk starts at p+1 and ends at p
  std::rotate(obs.begin(), obs.begin() + cut, obs.end());
  const Index base = obs.front().pos;
  for (auto& o : obs) o.pos = wrap(o.pos - base, n);
  const bool cp = obs.back().bit;  // cell p sits at n-1
  for (int u = 0; u < 2; ++u) {
    // u: edge (p-1, p) linked
    for (int w = 0; w < 2; ++w) {
      // w: edge (p+1, p+2) linked; forced through the bit of p+2
      const bool c2 = static_cast<bool>(obs.front().bit ^ (w ? link : 1 - link));
      if (obs.size() > 1 && obs[1].pos == 1 && obs[1].bit != c2) continue;
      ChainState s;
      const int b1 = obs.front().bit;
      if (u) s.left[0][b1] = cap;
      else s.gap[b1] = 0;
      std::vector<Observation> o2 = obs;
      if (!(o2.size() > 1 && o2[1].pos == 1)) o2.insert(o2.begin() + 1, Observation{1, c2});
      s = walk(s, o2, n - 1, skip, step);
      if (u) {
        const bool rb = w == 0;
        for (int lb = 0; lb < 2; ++lb) {
          const Index L = s.blk[lb][cp];
          if (L < 0) continue;
          const Index need = (lb && rb) ? r.need_double() : (lb || rb) ? r.need_single() : 0;
          if (L >= need) return true;
        }
      } else {
        if (s.gap[cp] >= 0) return true;
        if (s.left[0][cp] >= r.need_single() || s.left[1][cp] >= r.need_double()) return true;
      }
    }
  }
  return false;
}

struct RunState {
  Index ones = -1;  // length of the current run of final cells, -1 dead
  bool zero = false;
  friend bool operator==(const RunState&, const RunState&) = default;
  bool dead() const { return ones < 0 && !zero; }
};

bool run_feasible(Index n, Index t, std::vector<Observation> obs, bool cyclic, bool skip) {
  const Index need = 2 * t + 1;
  auto step = [&](const RunState& s, int allowed) {
    RunState o;
    if (allowed & 2) {
      if (s.ones >= 0) o.ones = std::min(s.ones + 1, need);
      if (s.zero) o.ones = std::max<Index>(o.ones, 1);
    }
    if (allowed & 1) o.zero = s.zero || s.ones >= need;
    return o;
  };
  if (!cyclic) {
    RunState s;
    if (obs.front().bit) s.ones = need;
    else s.zero = true;
    s = walk(s, obs, obs.back().pos, skip, step);
    return !s.dead();
  }
  auto z = std::find_if(obs.begin(), obs.end(), [](const Observation& o) { return !o.bit; });
  if (z == obs.end()) return true;  // all final fits
  std::rotate(obs.begin(), z, obs.end());
  const Index base = obs.front().pos;
  for (auto& o : obs) o.pos = wrap(o.pos - base, n);
  // walk from the zero at 0 up to n-1, then close onto it
  RunState s;
  s.zero = true;
  obs.push_back({n, false});
  s = walk(s, obs, n, skip, step);
  return s.zero;
}

}  // namespace

bool image_feasible(const ImageModel& model, Index n, Index t, std::vector<Observation> obs, bool cyclic,
                    bool skip_gaps) {
  if (obs.empty()) return true;
  std::sort(obs.begin(), obs.end(), [](const Observation& a, const Observation& b) { return a.pos < b.pos; });
  for (std::size_t j = 1; j < obs.size(); ++j)
    if (obs[j].pos == obs[j - 1].pos && obs[j].bit != obs[j - 1].bit) return false;
  obs.erase(std::unique(obs.begin(), obs.end(),
                        [](const Observation& a, const Observation& b) { return a.pos == b.pos; }),
            obs.end());
  if (t <= 0) return true;
  switch (model.kind) {
    case ImageModel::Kind::Chain: return chain_feasible(model.link, n, t, std::move(obs), cyclic, skip_gaps);
    case ImageModel::Kind::Run:
      if (!model.run_value)
        for (auto& o : obs) o.bit = !o.bit;
      return run_feasible(n, t, std::move(obs), cyclic, skip_gaps);
    case ImageModel::Kind::None: break;
  }
  return true;
}

FeasibilityResult check_feasible(const RuleMeta& meta, const GridView& gv, const Params& params) {
  FeasibilityResult out;
  std::vector<Observation> obs;
  if (!collect_observations(gv, obs)) {
    out.feasible = false;
    out.reason = "overlapping grid windows disagree";
    return out;
  }
  if (meta.image.kind == ImageModel::Kind::None) {
    if (gv.cyclic && gv.n <= bruteforce::kFeasibleMaxN) {
      out.feasible = bruteforce::feasible(meta, gv, params.t1);
      if (!out.feasible) out.reason = "no evolution matches the grid windows";
    }
    return out;
  }
  out.feasible = image_feasible(meta.image, gv.n, gv.t1, std::move(obs), gv.cyclic);
  if (!out.feasible) out.reason = "no evolution matches the grid windows";
  return out;
}

}  // namespace eca
