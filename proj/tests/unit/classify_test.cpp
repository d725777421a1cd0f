#include <gtest/gtest.h>

#include <random>

#include "eca/classify.hpp"
#include "eca/environment.hpp"
#include "eca/errors.hpp"
#include "eca/far.hpp"
#include "eca/grid.hpp"
#include "eca/params.hpp"

using namespace eca;

namespace {
Pattern P(const char* s) { return Pattern::from_string(s); }

GridView view_of(std::vector<const char*> ws, Index n) {
  GridView gv;
  gv.n = n;
  gv.locations = grid_locations(n, static_cast<Index>(ws.size()));
  for (auto w : ws) gv.windows.push_back(P(w));
  return gv;
}

// MAJ ring of 200 with an alternating stretch on [50, 150), grid every 2 cells
struct Stretch {
  const RuleMeta& maj = builtin_meta("maj");
  Environment env;
  Params p;
  GridView gv;
  GridIntervals iv;
  Stretch() {
    Configuration c(200);
    for (Index i = 50; i < 150; ++i) c.set(i, i % 2);
    env = evolve(c, maj.rule, 40);
    p.n = 200;
    p.m = 40;
    p.delta = p.gap = 2;
    p.t1 = 10;
    p.t2 = 12;
    p.eps = 0.2;
    p.grid = grid_locations(200, 100);
    gv = grid_view_of(env[p.t1], maj, p.t1, p.grid);
    iv = grid_intervals(maj, gv, p);
  }
  PairClass at(Index t, Index i) const { return classify_pair(t, i, iv, gv, p); }
};
}  // namespace

TEST(GridIntervals, HomogeneousFinal) {
  auto gv = view_of({"111", "110", "000", "001"}, 8);
  auto iv = grid_intervals(builtin_meta("maj"), gv, Params{});
  EXPECT_TRUE(iv.homogeneous_final);
  EXPECT_TRUE(iv.intervals.empty());
}

TEST(GridIntervals, OneNonFinalAmongFinals) {
  auto gv = view_of({"111", "111", "010", "111"}, 8);
  auto iv = grid_intervals(builtin_meta("maj"), gv, Params{});
  ASSERT_EQ(iv.intervals.size(), 2u);
  int finals = 0;
  for (const auto& x : iv.intervals) {
    if (x.final) {
      ++finals;
      EXPECT_EQ(x.count, 3);
      EXPECT_EQ(x.g1, 6);
      EXPECT_EQ(x.g2, 2);
    } else {
      EXPECT_EQ(x.count, 1);
      EXPECT_EQ(x.g1, 4);
    }
  }
  EXPECT_EQ(finals, 1);
}

TEST(GridIntervals, AlternatingGivesSingletons) {
  auto gv = view_of({"111", "010", "000", "101"}, 8);
  auto iv = grid_intervals(builtin_meta("maj"), gv, Params{});
  ASSERT_EQ(iv.intervals.size(), 4u);
  for (const auto& x : iv.intervals) EXPECT_EQ(x.count, 1);
  EXPECT_EQ(iv.owner, (std::vector<int>{iv.owner[0], iv.owner[1], iv.owner[2], iv.owner[3]}));
}

TEST(GridIntervals, LinearEndsAreOpen) {
  auto gv = view_of({"111", "010", "101", "111"}, 8);
  gv.cyclic = false;
  auto iv = grid_intervals(builtin_meta("maj"), gv, Params{});
  ASSERT_EQ(iv.intervals.size(), 3u);
  EXPECT_TRUE(iv.intervals.front().open_left);
  EXPECT_TRUE(iv.intervals.back().open_right);
  EXPECT_FALSE(iv.intervals[1].open_left || iv.intervals[1].open_right);
}

TEST(Classify, HomogeneousFinalIsAllA) {
  const auto& maj = builtin_meta("maj");
  auto p = plan(400, 200, 0.2, lab_constants()).params;
  auto gv = grid_view_of(Configuration::ones(400), maj, p.t1, p.grid);
  auto iv = grid_intervals(maj, gv, p);
  for (Index t = p.t2 + 1; t < 200; t += 17)
    for (Index i = 0; i < 400; i += 13) EXPECT_EQ(classify_pair(t, i, iv, gv, p).kind, PairClass::Kind::A);
  EXPECT_THROW(classify_pair(p.t2, 0, iv, gv, p), DomainError);
}

TEST(Classify, StretchRegions) {
  Stretch s;
  ASSERT_EQ(s.iv.intervals.size(), 2u);
  EXPECT_EQ(s.at(20, 100).kind, PairClass::Kind::C);
  EXPECT_EQ(s.at(20, 40).kind, PairClass::Kind::A);
  EXPECT_EQ(s.at(20, 60).kind, PairClass::Kind::B);
  EXPECT_EQ(s.at(20, 60).side, Side::Right);  // right flank of the final interval
  int u = 0;
  for (Index i = 40; i < 160; ++i) u += s.at(20, i).kind == PairClass::Kind::U;
  EXPECT_GT(u, 0);
  EXPECT_LE(u, 6 * s.p.delta);
}

TEST(Classify, StretchHasNoViolations) {
  Stretch s;
  for (Index t = s.p.t2 + 1; t < s.p.m; ++t)
    for (Index i = 0; i < s.p.n; ++i) {
      auto cls = s.at(t, i);
      if (cls.kind == PairClass::Kind::U) continue;
      auto v = violation_check(s.maj, cls, t, i, s.env[t].window(i, 1), s.env[s.p.t2].window(i, 1), s.gv, s.p);
      EXPECT_FALSE(v.has_value()) << "(" << t << "," << i << ") " << kind_name(cls.kind) << " "
                                  << requirement_id(*v);
    }
}

TEST(Classify, EvolutionsNeverViolateAndClassesAreDisjoint) {
  std::mt19937_64 rng(31);
  for (const char* name : {"maj", "min", "fih", "fuh", "or", "and"}) {
    const auto& meta = builtin_meta(name);
    for (int trial = 0; trial < 3; ++trial) {
      auto env = evolve(random_initial(500, rng, true), meta.rule, 200);
      auto p = plan(500, 200, 0.2, lab_constants()).params;
      auto gv = grid_view_of(env[p.t1], meta, p.t1, p.grid);
      auto iv = grid_intervals(meta, gv, p);
      Index u = 0;
      for (Index t = p.t2 + 1; t < p.m; t += 3)
        for (Index i = 0; i < p.n; ++i) {
          auto mem = membership(t, i, iv, gv, p);
          EXPECT_LE(int(mem.a) + int(mem.b) + int(mem.c), 1) << name;
          auto cls = classify_pair(t, i, iv, gv, p);
          if (cls.kind == PairClass::Kind::U) {
            ++u;
            continue;
          }
          auto v = violation_check(meta, cls, t, i, env[t].window(i, meta.k), env[p.t2].window(i, meta.k), gv, p);
          ASSERT_FALSE(v.has_value()) << name << " (" << t << "," << i << ") " << requirement_id(*v);
        }
      EXPECT_LE(static_cast<double>(u), 5 * p.eps * 500 * 200 / p.constants.b1 / 3);
    }
  }
}

TEST(Classify, ConstantOnesViolatesMinorityPrediction) {
  const auto& min = builtin_meta("min");
  auto p = plan(400, 200, 0.2, lab_constants()).params;
  auto gv = grid_view_of(Configuration::ones(400), min, p.t1, p.grid);
  auto iv = grid_intervals(min, gv, p);
  const Index t = p.t2 + 1;
  auto cls = classify_pair(t, 7, iv, gv, p);
  ASSERT_EQ(cls.kind, PairClass::Kind::A);
  auto v = violation_check(min, cls, t, 7, P("111"), P("111"), gv, p);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, Requirement::A3);
  EXPECT_FALSE(violation_check(min, cls, t + 1, 7, P("111"), P("111"), gv, p).has_value());
}

TEST(Classify, PlantedNonFinalWindowInARegion) {
  const auto& maj = builtin_meta("maj");
  auto p = plan(400, 200, 0.2, lab_constants()).params;
  auto gv = grid_view_of(Configuration::ones(400), maj, p.t1, p.grid);
  auto iv = grid_intervals(maj, gv, p);
  auto cls = classify_pair(150, 200, iv, gv, p);
  auto v = violation_check(maj, cls, 150, 200, P("010"), P("111"), gv, p);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(*v, Requirement::A2);
  EXPECT_STREQ(requirement_id(*v), "A2");
}

TEST(Classify, UncertainPairsAreNotChecked) {
  Stretch s;
  PairClass u;
  EXPECT_THROW(violation_check(s.maj, u, 20, 0, P("000"), P("000"), s.gv, s.p), DomainError);
}

TEST(Classify, LongHorizonsDoNotWrapFlanksIntoTheirInterval) {
  // t - t1 exceeds n here, so a cyclic flank range would cover the ring
  std::mt19937_64 rng(32);
  for (const char* name : {"maj", "min", "fih", "fuh"}) {
    const auto& meta = builtin_meta(name);
    for (int trial = 0; trial < 4; ++trial) {
      auto env = evolve(random_initial(200, rng, true), meta.rule, 500);
      auto pl = plan(200, 500, 0.3, lab_constants());
      ASSERT_FALSE(pl.fallback);
      const auto& p = pl.params;
      auto gv = grid_view_of(env[p.t1], meta, p.t1, p.grid);
      auto iv = grid_intervals(meta, gv, p);
      for (Index t = p.t2 + 1; t < p.m; t += 5)
        for (Index i = 0; i < p.n; ++i) {
          auto mem = membership(t, i, iv, gv, p);
          EXPECT_LE(int(mem.a) + int(mem.b) + int(mem.c), 1);
          auto cls = classify_pair(t, i, iv, gv, p);
          if (cls.kind == PairClass::Kind::U) continue;
          auto v = violation_check(meta, cls, t, i, env[t].window(i, meta.k), env[p.t2].window(i, meta.k), gv, p);
          ASSERT_FALSE(v.has_value()) << name << " (" << t << "," << i << ") " << requirement_id(*v);
        }
    }
  }
}
