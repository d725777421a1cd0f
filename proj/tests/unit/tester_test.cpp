#include <gtest/gtest.h>

#include <random>

#include "eca/environment.hpp"
#include "eca/errors.hpp"
#include "eca/far.hpp"
#include "eca/tester.hpp"

using namespace eca;

namespace {
Verdict run(EnvSource& env, const char* rule, double eps, std::uint64_t seed, const Constants& c,
            VariantChoice variant = VariantChoice::Auto) {
  QueryOracle o(env);
  Rng rng(seed);
  return run_tester(o, parse_rule(rule), eps, rng, c, variant);
}

Index grid_budget(const RuleMeta& meta, const Params& p) {
  return meta.width() * static_cast<Index>(p.grid.size()) + 2 * meta.width() * p.s;
}
}  // namespace

TEST(Tester, PaperScaleQueryCount) {
  Rng gen(41);
  LazyEnvironment env(random_initial(9600, gen, true), parse_rule("maj"), 9600);
  auto v = run(env, "maj", 0.1, 1, paper_constants(), VariantChoice::Grid);
  EXPECT_TRUE(v.accepted()) << v.reason;
  EXPECT_EQ(v.stats.total, 14760);
  EXPECT_EQ(v.delta, 2);
  EXPECT_EQ(v.t1, 300);
  EXPECT_EQ(v.grid_size, 4800);
}

TEST(Tester, AcceptsEvolutionsWithExactBudget) {
  Rng gen(42);
  const auto lab = lab_constants();
  for (const char* name : {"or", "and", "maj", "min", "fih", "fuh"}) {
    const auto& meta = builtin_meta(name);
    for (double eps : {0.1, 0.2, 0.3}) {
      auto env = evolve(random_initial(1500, gen, true), meta.rule, 1200);
      auto v = run(env, name, eps, gen(), lab, VariantChoice::Grid);
      ASSERT_TRUE(v.accepted()) << name << " " << eps << ": " << v.reason;
      EXPECT_EQ(v.variant, Variant::Grid);
      EXPECT_EQ(v.stats.total, grid_budget(meta, plan(1500, 1200, eps, lab).params)) << name;
    }
  }
}

TEST(Tester, QueriesDoNotDependOnAnswers) {
  Rng gen(43);
  const auto lab = lab_constants();
  auto a = evolve(random_initial(800, gen, true), parse_rule("fih"), 600);
  auto b = evolve(random_initial(800, gen, false), parse_rule("fih"), 600);
  QueryOracle oa(a), ob(b);
  oa.record(true);
  ob.record(true);
  Rng ra(7), rb(7);
  auto va = test(oa, builtin_meta("fih"), 0.2, ra, lab);
  auto vb = test(ob, builtin_meta("fih"), 0.2, rb, lab);
  ASSERT_TRUE(va.accepted() && vb.accepted());
  EXPECT_EQ(oa.log(), ob.log());
  for (std::size_t j = 1; j < oa.log().size(); ++j) ASSERT_LE(oa.log()[j - 1].t, oa.log()[j].t);
}

TEST(Tester, RejectsComplementedSuffix) {
  Rng gen(44);
  const auto lab = lab_constants();
  int rejects = 0;
  const int trials = 30;
  for (int trial = 0; trial < trials; ++trial) {
    auto inst = make_far(parse_rule("maj"), 1000, 1000, 0.2, gen, {InstanceKind::RowComplementSuffix});
    ASSERT_TRUE(inst.cert.certified);
    auto v = run(inst.env, "maj", 0.2, gen(), lab, VariantChoice::Grid);
    if (!v.accepted()) {
      ++rejects;
      EXPECT_NE(v.reject_kind, RejectKind::None);
      EXPECT_FALSE(v.reason.empty());
    }
  }
  EXPECT_GE(3 * rejects, 2 * trials);
}

TEST(Tester, InfeasibleGridStopsBeforeSampling) {
  auto base = std::make_shared<Environment>(evolve(Configuration::ones(1000), parse_rule("maj"), 1000));
  NoisyEnvironment noisy(base, 0.2, 5);
  auto v = run(noisy, "maj", 0.2, 3, lab_constants(), VariantChoice::Grid);
  ASSERT_FALSE(v.accepted());
  EXPECT_EQ(v.reject_kind, RejectKind::InfeasibleGrid);
  EXPECT_EQ(v.stats.per_time.size(), 1u);
  EXPECT_EQ(v.stats.per_time.begin()->first, v.t1);
}

TEST(Tester, PlanFallbackDelegates) {
  Rng gen(45);
  auto env = evolve(random_initial(100, gen, false), parse_rule("min"), 100);
  auto v = run(env, "min", 0.1, 9, paper_constants(), VariantChoice::Grid);
  EXPECT_TRUE(v.accepted());
  EXPECT_EQ(v.variant, Variant::Fallback);
  EXPECT_TRUE(v.delegated);
  EXPECT_EQ(v.stats.total, 100 + v.samples);
}

TEST(Tester, FallbackCatchesComplementedHalf) {
  Rng gen(46);
  const Rule maj = parse_rule("maj");
  int rejects = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto env = evolve(random_initial(60, gen, false), maj, 40);
    for (Index t = 20; t < 40; ++t) env[t] = env[t].complemented();
    QueryOracle o(env);
    rejects += !test_fallback(o, maj, 0.25, gen, paper_constants()).accepted();
  }
  // s = 24 samples, each hits the altered half with probability about 1/2
  EXPECT_GE(rejects, 195);
}

TEST(Tester, WideAcceptsTiledEvolution) {
  Rng gen(47);
  const auto lab = lab_constants();
  for (const char* name : {"maj", "fih", "or"}) {
    auto base = std::make_shared<LazyEnvironment>(random_initial(64, gen, false), parse_rule(name), 2000);
    TiledEnvironment env(base, Index{1} << 30);
    auto v = run(env, name, 0.3, gen(), lab, VariantChoice::Wide);
    EXPECT_TRUE(v.accepted()) << name << ": " << v.reason;
    EXPECT_EQ(v.variant, Variant::Wide);
    EXPECT_FALSE(v.delegated);
    EXPECT_GT(v.intervals, 0);
  }
}

TEST(Tester, WideDelegatesWhenRingIsShort) {
  Rng gen(48);
  auto env = evolve(random_initial(900, gen, true), parse_rule("maj"), 900);
  auto v = run(env, "maj", 0.2, 1, lab_constants(), VariantChoice::Wide);
  EXPECT_TRUE(v.accepted());
  EXPECT_TRUE(v.delegated);
  EXPECT_EQ(v.variant, Variant::Grid);
}

TEST(Tester, TrivialRules) {
  Rng gen(49);
  const auto c = paper_constants();
  for (const char* name : {"all1", "all0", "nor", "nand"}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto env = evolve(Configuration::random(50, gen), parse_rule(name), 30);
      auto v = run(env, name, 0.1, gen(), c);
      ASSERT_TRUE(v.accepted()) << name << ": " << v.reason;
      EXPECT_EQ(v.variant, Variant::Trivial);
    }
  }
}

TEST(Tester, NorRejectsForbiddenPattern) {
  std::vector<Configuration> rows(30, Configuration::from_string("1010101010"));
  Environment env(rows);
  auto v = run(env, "nor", 0.1, 2, paper_constants());
  ASSERT_FALSE(v.accepted());
  EXPECT_EQ(v.reject_kind, RejectKind::Forbidden);
}

TEST(Tester, All1RejectsZeros) {
  auto env = evolve(Configuration(40), parse_rule("all0"), 40);
  auto v = run(env, "all1", 0.1, 2, paper_constants());
  EXPECT_FALSE(v.accepted());
}

TEST(Tester, Errors) {
  Rng gen(50);
  auto env = evolve(random_initial(100, gen, false), parse_rule("maj"), 100);
  EXPECT_THROW(run(env, "xor", 0.1, 1, paper_constants()), UnknownName);
  EXPECT_THROW(parse_variant("fast"), UnknownName);
  QueryOracle used(env);
  used.query(3, 0);
  Rng rng(1);
  EXPECT_THROW(test(used, builtin_meta("maj"), 0.1, rng, paper_constants()), ParameterError);
}
