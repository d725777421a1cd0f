#include "eca/bruteforce.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

#include "eca/errors.hpp"
#include "eca/small_ring.hpp"

namespace eca::bruteforce {

namespace {

std::uint32_t pack(const Configuration& c) { return static_cast<std::uint32_t>(c.words()[0]); }

Configuration unpack(std::uint32_t v, Index n) {
  Configuration c(n);
  c.words()[0] = v;
  return c;
}

// orders configurations by their string form, cell 0 first
std::uint32_t lex_key(std::uint32_t v, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i) r = (r << 1) | ((v >> i) & 1u);
  return r;
}

struct Best {
  Index diff = -1;
  std::uint32_t init = 0;
  Index ties = 0;

  void offer(Index d, std::uint32_t c, int n) {
    if (diff < 0 || d < diff) {
      diff = d;
      init = c;
      ties = 1;
    } else if (d == diff) {
      ++ties;
      if (lex_key(c, n) < lex_key(init, n)) init = c;
    }
  }
};

}  // namespace

DistanceReport exact_distance(const Environment& env, const Rule& rule, unsigned threads) {
  const Index n = env.n(), m = env.m();
  if (n > kDistanceMaxN) throw BudgetError("exact distance is limited to n <= 24");
  if (m < 1) throw ShapeMismatch("empty environment");
  const int ni = static_cast<int>(n);
  std::vector<std::uint32_t> rows(m);
  for (Index t = 0; t < m; ++t) rows[t] = pack(env[t]);

  const std::uint64_t total = 1ull << n;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  std::vector<Best> part(threads);
  auto work = [&](unsigned w) {
    Best& b = part[w];
    const std::uint64_t lo = total * w / threads, hi = total * (w + 1) / threads;
    // Gray-code order; every candidate is evolved from scratch
    for (std::uint64_t j = lo; j < hi; ++j) {
      const std::uint32_t c0 = static_cast<std::uint32_t>(j ^ (j >> 1));
      std::uint32_t c = c0;
      Index d = 0;
      for (Index t = 0; t < m; ++t) {
        d += std::popcount(c ^ rows[t]);
        if (b.diff >= 0 && d > b.diff) break;
        if (t + 1 < m) c = small::step(c, ni, rule);
      }
      b.offer(d, c0, ni);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  // abandoned candidates were strictly worse than the running best of their
  // own worker, so the merged minimum and its tie count are exact
  Best all;
  for (const Best& b : part) {
    if (b.diff < 0) continue;
    if (all.diff < 0 || b.diff < all.diff) {
      all = b;
    } else if (b.diff == all.diff) {
      all.ties += b.ties;
      if (lex_key(b.init, ni) < lex_key(all.init, ni)) all.init = b.init;
    }
  }
  DistanceReport r;
  r.differing = all.diff;
  r.distance = static_cast<double>(all.diff) / static_cast<double>(n * m);
  r.argmin_initial = unpack(all.init, n);
  r.ties = all.ties;
  return r;
}

const std::vector<std::uint8_t>& image_set(const Rule& rule, Index n, Index t) {
  if (n > kFeasibleMaxN) throw BudgetError("image sets are limited to n <= 16");
  static std::mutex mu;
  static std::map<std::tuple<int, Index, Index>, std::unique_ptr<std::vector<std::uint8_t>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(rule.wolfram_code(), n, t);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;

  const int ni = static_cast<int>(n);
  const std::uint32_t total = 1u << n;
  std::vector<std::uint8_t> cur(total, 1), next(total);
  for (Index s = 0; s < t; ++s) {
    std::fill(next.begin(), next.end(), 0);
    for (std::uint32_t c = 0; c < total; ++c)
      if (cur[c]) next[small::step(c, ni, rule)] = 1;
    if (next == cur) break;  // images only shrink; a repeat is a fixed point
    cur.swap(next);
  }
  auto& slot = cache[key];
  slot = std::make_unique<std::vector<std::uint8_t>>(std::move(cur));
  return *slot;
}

bool feasible(const Rule& rule, const GridView& gv, Index t1) {
  const Index n = gv.n;
  if (n > kFeasibleMaxN) throw BudgetError("feasibility enumeration is limited to n <= 16");
  const auto& img = image_set(rule, n, t1);
  const int ni = static_cast<int>(n);
  for (std::uint32_t c = 0; c < img.size(); ++c) {
    if (!img[c]) continue;
    bool ok = true;
    for (std::size_t j = 0; j < gv.locations.size() && ok; ++j)
      ok = small::window(c, gv.locations[j], ni, gv.k) == gv.windows[j].bits;
    if (ok) return true;
  }
  return false;
}

Index period(const Rule& rule, Index n) {
  if (n > kPeriodMaxN) throw BudgetError("period search is limited to n <= 20");
  if (n < 3) throw InvalidConfiguration("rings need at least 3 cells");
  const int ni = static_cast<int>(n);
  const std::uint32_t total = 1u << n;
  std::vector<std::uint32_t> walk_id(total, 0), pos(total, 0);
  Index best = 0;
  std::uint32_t id = 0;
  for (std::uint32_t s = 0; s < total; ++s) {
    if (walk_id[s]) continue;
    ++id;
    std::uint32_t c = s, p = 0;
    while (!walk_id[c]) {
      walk_id[c] = id;
      pos[c] = p++;
      c = small::step(c, ni, rule);
    }
    if (walk_id[c] == id) best = std::max<Index>(best, p - pos[c]);
  }
  return best;
}

}  // namespace eca::bruteforce
