#include <gtest/gtest.h>

#include <algorithm>

#include "eca/rule_meta.hpp"
#include "eca/verifier.hpp"

using namespace eca;

namespace {
TransportFn transport_of(const RuleMeta& m) {
  return [&m](Pattern p, bool b, Index x) { return h_fwd(m, p, b, x); };
}
RuleMeta with_identity_f(const RuleMeta& m) {
  return make_meta(m.name + "-f-id", m.rule, m.k, m.final_patterns(), false, false, transport_of(m), m.finalize,
                   m.plant, m.image);
}
}  // namespace

class BuiltinMetas : public ::testing::TestWithParam<const char*> {};

TEST_P(BuiltinMetas, AllConditionsHoldUpToTwelve) {
  const auto& meta = builtin_meta(GetParam());
  for (const auto& r : verify_all(meta, 12, 12)) {
    EXPECT_TRUE(r.pass) << "condition " << r.condition << ": " << r.counterexample;
    EXPECT_GT(r.cases, 0u);
  }
}

TEST_P(BuiltinMetas, FinalCellsPersistAndFormLongRuns) {
  const auto& meta = builtin_meta(GetParam());
  EXPECT_TRUE(check_final_persistence(meta, 10, 10).pass);
  EXPECT_TRUE(check_final_runs(meta, 12).pass);
}

INSTANTIATE_TEST_SUITE_P(Rules, BuiltinMetas, ::testing::Values("or", "and", "maj", "min", "fih", "fuh"));

TEST(VerifierMutants, SwappedMajorityPartitionFailsClosure) {
  const auto& maj = builtin_meta("maj");
  auto id = [](Pattern p, bool, Index) { return p; };
  auto swapped = make_meta("maj-swapped", maj.rule, 1, maj.nonfinal_patterns(), false, false, id, maj.finalize,
                           maj.plant, maj.image);
  auto r = verify_cond1(swapped);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.counterexample.empty());
  auto all = cond1_counterexamples(swapped);
  EXPECT_NE(std::find(all.begin(), all.end(), Pattern::from_string("11011")), all.end());
}

TEST(VerifierMutants, MinorityWithIdentityPredictionFails) {
  auto r = verify_cond3(with_identity_f(builtin_meta("min")), 8, 8);
  EXPECT_FALSE(r.pass);
  EXPECT_FALSE(r.counterexample.empty());
  EXPECT_TRUE(verify_cond3(with_identity_f(builtin_meta("maj")), 8, 8).pass);
}

TEST(VerifierMutants, FihWithIdentityTransportFails) {
  const auto& fih = builtin_meta("fih");
  auto id = [](Pattern p, bool, Index) { return p; };
  auto mutant = make_meta("fih-h-id", fih.rule, 1, fih.final_patterns(), fih.f_time, fih.f_space, id, fih.finalize,
                          fih.plant, fih.image);
  EXPECT_TRUE(verify_cond1(mutant).pass);
  EXPECT_FALSE(verify_cond4(mutant, 8, 8).pass);
}

TEST(VerifierMutants, XorHasNoRunShapedFinalSet) {
  const auto& orm = builtin_meta("or");
  auto id = [](Pattern p, bool, Index) { return p; };
  auto x = make_meta("xor-as-or", parse_rule("xor"), 0, orm.final_patterns(), false, false, id, orm.finalize,
                     orm.plant, orm.image);
  EXPECT_FALSE(verify_cond2(x).pass);
}

TEST(VerifierMutants, BrokenFinalizeIsCaught) {
  const auto& orm = builtin_meta("or");
  FinalizeFn leaky = [](const RuleMeta& m, const Configuration& s, Index x, Index y) {
    auto out = finalize_by_run(m, s, x, y);
    if (x != y) out.set(y, false);
    return out;
  };
  auto mutant = make_meta("or-leaky", orm.rule, 0, orm.final_patterns(), orm.f_time, orm.f_space, transport_of(orm),
                          leaky, orm.plant, orm.image);
  EXPECT_FALSE(verify_cond5(mutant, 8).pass);
  EXPECT_TRUE(verify_cond6(mutant, 8).pass);
}
