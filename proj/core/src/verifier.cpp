#include "eca/verifier.hpp"

#include <algorithm>
#include <sstream>

#include "eca/errors.hpp"
#include "eca/small_ring.hpp"

namespace eca {

namespace {

std::string bits_string(std::uint32_t c, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((c >> i) & 1u) s[i] = '1';
  return s;
}

std::uint32_t final_mask(const RuleMeta& meta, std::uint32_t c, int n) {
  std::uint32_t out = 0;
  if (meta.k == 0) {
    if (meta.final_set[1]) out |= c;
    if (meta.final_set[0]) out |= ~c;
  } else {
    const std::uint32_t L = small::left_of(c, n), R = small::right_of(c, n);
    for (unsigned idx = 0; idx < 8; ++idx)
      if (meta.final_set[idx]) out |= small::match(L, c, R, idx);
  }
  return out & small::mask_of(n);
}

// next (2k+1)-window produced by the rule from a (2k+3)-window
Pattern advance_window(const RuleMeta& meta, Pattern w) {
  Pattern next{0, w.len - 2};
  for (int j = 1; j + 1 < w.len; ++j) next.bits = (next.bits << 1) | unsigned(meta.rule(w.sub(j - 1, 3).bits));
  return next;
}

struct Evolution {
  int n = 0;
  std::vector<std::uint32_t> rows, finals;
};

void evolve_small(const RuleMeta& meta, std::uint32_t c, int n, int m, Evolution& ev) {
  ev.n = n;
  ev.rows.resize(m);
  ev.finals.resize(m);
  for (int t = 0; t < m; ++t) {
    ev.rows[t] = c;
    ev.finals[t] = final_mask(meta, c, n);
    c = small::step(c, n, meta.rule);
  }
}

// distance from i to the nearest final cell at this row, and whether it is
// attained on both sides by different cells; -1 when nothing is final
int nearest_final(std::uint32_t fmask, int i, int n, bool& tie) {
  tie = false;
  if (!fmask) return -1;
  for (int d = 0; d <= n / 2; ++d) {
    bool l = small::bit(fmask, i - d, n), r = small::bit(fmask, i + d, n);
    if (l || r) {
      tie = l && r && ((i - d - (i + d)) % n != 0);
      return d;
    }
  }
  return -1;
}

std::string env_dump(const Evolution& ev) {
  std::ostringstream os;
  for (std::size_t t = 0; t < ev.rows.size(); ++t) os << "  t=" << t << ' ' << bits_string(ev.rows[t], ev.n) << '\n';
  return os.str();
}

}  // namespace

std::vector<Pattern> cond1_counterexamples(const RuleMeta& meta) {
  std::vector<Pattern> out;
  const int w = 2 * meta.k + 3;
  for (std::uint32_t b = 0; b < (1u << w); ++b) {
    Pattern win{b, w};
    if (meta.is_final(win.sub(1, w - 2)) && !meta.is_final(advance_window(meta, win))) out.push_back(win);
  }
  return out;
}

ConditionResult verify_cond1(const RuleMeta& meta) {
  ConditionResult r;
  r.condition = 1;
  r.cases = 1u << (2 * meta.k + 3);
  auto bad = cond1_counterexamples(meta);
  if (!bad.empty()) {
    r.pass = false;
    r.window = bad.front();
    r.counterexample = "window " + bad.front().to_string() + " has final centre but advances to " +
                       advance_window(meta, bad.front()).to_string();
  }
  return r;
}

ConditionResult verify_cond2(const RuleMeta& meta) {
  ConditionResult r;
  r.condition = 2;
  const int w = 2 * meta.k + 3;
  for (std::uint32_t b = 0; b < (1u << w); ++b) {
    Pattern win{b, w};
    if (meta.is_final(win.sub(1, w - 2))) continue;
    ++r.cases;
    bool next_final = meta.is_final(advance_window(meta, win));
    bool neighbour_final = meta.is_final(win.sub(0, w - 2)) || meta.is_final(win.sub(2, w - 2));
    if (next_final != neighbour_final) {
      r.pass = false;
      r.window = win;
      r.counterexample = "window " + win.to_string() + ": next centre window " +
                         advance_window(meta, win).to_string() + (next_final ? " is" : " is not") +
                         " final but a final neighbour " + (neighbour_final ? "exists" : "does not exist");
      return r;
    }
  }
  return r;
}

ConditionResult verify_cond3(const RuleMeta& meta, int n_max, int m_max) {
  if (n_max > 16) throw BudgetError("condition 3 enumeration supports n <= 16");
  ConditionResult r;
  r.condition = 3;
  Evolution ev;
  for (int n = 3; n <= n_max; ++n) {
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
      evolve_small(meta, c, n, m_max, ev);
      for (int tp = 0; tp + 1 < m_max; ++tp) {
        for (int i = 0; i < n; ++i) {
          bool tie = false;
          int d = nearest_final(ev.finals[tp], i, n, tie);
          if (d < 0 || tie) continue;
          // the unique nearest final ancestor
          int ip = small::bit(ev.finals[tp], i - d, n) ? i - d : i + d;
          bool src = small::bit(ev.rows[tp], ip, n);
          for (int t = tp + std::max(1, d); t < m_max; ++t) {
            if (!small::bit(ev.finals[t], i, n)) continue;
            ++r.cases;
            bool want = f_fwd(meta, src, parity(t - tp), parity(d));
            if (small::bit(ev.rows[t], i, n) != want) {
              std::ostringstream os;
              os << "n=" << n << " pair (t=" << t << ", i=" << i << ") from (t'=" << tp << ", i'=" << wrap(ip, n)
                 << "): value " << !want << ", f predicts " << want << '\n'
                 << env_dump(ev);
              r.pass = false;
              r.counterexample = os.str();
              return r;
            }
          }
        }
      }
    }
  }
  return r;
}

ConditionResult verify_cond4(const RuleMeta& meta, int n_max, int m_max) {
  if (n_max > 16) throw BudgetError("condition 4 enumeration supports n <= 16");
  ConditionResult r;
  r.condition = 4;
  Evolution ev;
  for (int n = 3; n <= n_max; ++n) {
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
      evolve_small(meta, c, n, m_max, ev);
      for (int tp = 0; tp + 1 < m_max; ++tp) {
        for (int i = 0; i < n; ++i) {
          bool tie = false;
          int d = nearest_final(ev.finals[tp], i, n, tie);
          for (int t = tp + 1; t < m_max; ++t) {
            int radius = t - tp;
            if (d >= 0 && d <= radius) break;
            if (small::bit(ev.finals[t], i, n)) continue;
            Pattern got{small::window(ev.rows[t], i, n, meta.k), meta.width()};
            int reach = std::min(radius, n / 2);
            for (int off = -reach; off <= reach; ++off) {
              int ip = i + off;
              if (off == -reach && 2 * reach == n) continue;  // same cell as +reach
              ++r.cases;
              Pattern anc{small::window(ev.rows[tp], ip, n, meta.k), meta.width()};
              Pattern want = h_fwd(meta, anc, parity(radius), -off);
              if (!(got == want)) {
                std::ostringstream os;
                os << "n=" << n << " pair (t=" << t << ", i=" << i << ") from (t'=" << tp << ", i'=" << wrap(ip, n)
                   << "): window " << got.to_string() << ", h predicts " << want.to_string() << '\n'
                   << env_dump(ev);
                r.pass = false;
                r.counterexample = os.str();
                return r;
              }
            }
          }
        }
      }
    }
  }
  return r;
}

ConditionResult verify_cond5(const RuleMeta& meta, int n_max) {
  if (n_max > 14) throw BudgetError("condition 5 enumeration supports n <= 14");
  ConditionResult r;
  r.condition = 5;
  for (int n = 3; n <= n_max; ++n) {
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
      Configuration sigma(n);
      for (int i = 0; i < n; ++i)
        if ((c >> i) & 1u) sigma.set(i, true);
      std::vector<int> fin;
      std::vector<char> is_fin(n);
      for (int i = 0; i < n; ++i)
        if ((is_fin[i] = meta.is_final(sigma.window(i, meta.k)))) fin.push_back(i);
      for (int x : fin) {
        for (int y : fin) {
          ++r.cases;
          std::string problem;
          Configuration out;
          try {
            out = finalize_interval(meta, sigma, x, y);
          } catch (const DomainError& e) {
            problem = std::string("constructor refused: ") + e.what();
          }
          const int len = x == y ? n : static_cast<int>(interval_length(x, y, n));
          for (int o = 0; problem.empty() && o < n; ++o) {
            int i = static_cast<int>(wrap(x + o, n));
            if (o < len) {
              if (!meta.is_final(out.window(i, meta.k)))
                problem = "location " + std::to_string(i) + " not final";
              else if (is_fin[i] && out.get(i) != sigma.get(i))
                problem = "final location " + std::to_string(i) + " changed";
            } else if (out.get(i) != sigma.get(i)) {
              problem = "location " + std::to_string(i) + " outside the interval changed";
            }
          }
          if (!problem.empty()) {
            r.pass = false;
            r.counterexample = "sigma=" + sigma.to_string() + " x=" + std::to_string(x) + " y=" + std::to_string(y) +
                               (out.size() ? " out=" + out.to_string() : std::string()) + ": " + problem;
            return r;
          }
        }
      }
    }
  }
  return r;
}

ConditionResult verify_cond6(const RuleMeta& meta, int n_max) {
  if (n_max > 14) throw BudgetError("condition 6 enumeration supports n <= 14");
  ConditionResult r;
  r.condition = 6;
  const int k = meta.k;
  // the construction touches z-k .. z+3k+1; smaller rings would wrap it onto itself
  for (int n = std::max(3, 4 * k + 2); n <= n_max; ++n) {
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
      Configuration sigma(n);
      for (int i = 0; i < n; ++i)
        if ((c >> i) & 1u) sigma.set(i, true);
      for (int z = 0; z < n; ++z) {
        if (meta.is_final(sigma.window(z, k))) continue;
        for (bool nu : meta.legal_nu())
          for (int g = 0; g < 2; ++g)
            for (int gp = 0; gp < 2; ++gp)
              for (Side side : {Side::Right, Side::Left}) {
                ++r.cases;
                const Index dir = side == Side::Right ? 1 : -1;
                std::string problem;
                PlantResult res;
                try {
                  res = plant_final(meta, sigma, z, nu, g, gp, side);
                } catch (const DomainError& e) {
                  problem = std::string("constructor refused: ") + e.what();
                }
                Index off = 0;
                if (problem.empty()) {
                  off = side == Side::Right ? ddist(z, res.z_prime, n) : ddist(res.z_prime, z, n);
                  if (off < 1 || off > 2 * k + 1) problem = "z' outside the allowed range";
                }
                if (problem.empty()) {
                  const auto& out = res.config;
                  if (!meta.is_final(out.window(res.z_prime, k)))
                    problem = "z' not final";
                  else if (f_fwd(meta, out.get(res.z_prime), g, parity(off) ^ bool(gp)) != nu)
                    problem = "f-prediction at z' differs from nu";
                  for (Index j = 1; problem.empty() && j < off; ++j)
                    if (meta.is_final(out.window(z + dir * j, k))) problem = "intermediate location final";
                  // allowed changes: [z+k, z'+k] on the right, [z'-k, z-k] on the left
                  Index lo = side == Side::Right ? z + k : res.z_prime - k;
                  Index span = off + 1;
                  if (span < n) {
                    for (Index o = span; problem.empty() && o < n; ++o)
                      if (out.get(lo + o) != sigma.get(lo + o)) problem = "change outside the allowed range";
                  }
                }
                if (!problem.empty()) {
                  std::ostringstream os;
                  os << "sigma=" << sigma.to_string() << " z=" << z << " nu=" << nu << " gamma=" << g
                     << " gamma'=" << gp << " side=" << (side == Side::Right ? "right" : "left");
                  if (res.config.size()) os << " out=" << res.config.to_string() << " z'=" << res.z_prime;
                  os << ": " << problem;
                  r.pass = false;
                  r.counterexample = os.str();
                  return r;
                }
              }
      }
    }
  }
  return r;
}

std::vector<ConditionResult> verify_all(const RuleMeta& meta, int n_max, int m_max) {
  return {verify_cond1(meta),
          verify_cond2(meta),
          verify_cond3(meta, n_max, m_max),
          verify_cond4(meta, n_max, m_max),
          verify_cond5(meta, std::min(n_max, 14)),
          verify_cond6(meta, std::min(n_max, 14))};
}

ConditionResult check_final_persistence(const RuleMeta& meta, int n_max, int m_max) {
  ConditionResult r;
  r.condition = 0;
  Evolution ev;
  for (int n = 3; n <= n_max; ++n) {
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
      evolve_small(meta, c, n, m_max, ev);
      for (int t = 1; t < m_max; ++t) {
        // (t, i) has a final ancestor iff some final cell at t-1 lies within 1
        std::uint32_t f = ev.finals[t - 1];
        std::uint32_t reach = f | small::left_of(f, n) | small::right_of(f, n);
        ++r.cases;
        if (reach & ~ev.finals[t]) {
          r.pass = false;
          r.counterexample = "n=" + std::to_string(n) + " t=" + std::to_string(t) + '\n' + env_dump(ev);
          return r;
        }
      }
    }
  }
  return r;
}

ConditionResult check_final_runs(const RuleMeta& meta, int n_max) {
  ConditionResult r;
  r.condition = 0;
  Evolution ev;
  for (int n = 3; n <= n_max; ++n) {
    const int m = n / 2 + 1;
    for (std::uint32_t c = 0; c < (1u << n); ++c) {
      evolve_small(meta, c, n, m, ev);
      for (int t = 1; t < m; ++t) {
        std::uint32_t f = ev.finals[t];
        if (f == 0 || f == small::mask_of(n)) continue;
        ++r.cases;
        // measure each maximal run of final cells, starting after a non-final cell
        int start = 0;
        while (small::bit(f, start, n)) ++start;
        int run = 0;
        for (int s = 1; s <= n; ++s) {
          if (small::bit(f, start + s, n)) {
            ++run;
          } else {
            if (run > 0 && run < 2 * t) {
              r.pass = false;
              r.counterexample = "n=" + std::to_string(n) + " t=" + std::to_string(t) + " run of " +
                                 std::to_string(run) + '\n' + env_dump(ev);
              return r;
            }
            run = 0;
          }
        }
      }
    }
  }
  return r;
}

}  // namespace eca
