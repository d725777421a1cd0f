#include <gtest/gtest.h>

#include <set>

#include "eca/errors.hpp"
#include "eca/rule_meta.hpp"

using namespace eca;

namespace {
std::set<std::string> names(const std::vector<Pattern>& ps) {
  std::set<std::string> out;
  for (auto p : ps) out.insert(p.to_string());
  return out;
}
Pattern P(const char* s) { return Pattern::from_string(s); }
}  // namespace

TEST(RuleMeta, FinalSets) {
  const auto& maj = builtin_meta("maj");
  EXPECT_EQ(maj.k, 1);
  EXPECT_EQ(names(maj.final_patterns()), (std::set<std::string>{"111", "110", "011", "000", "001", "100"}));
  EXPECT_EQ(classify(maj, P("101")), Finality::NonFinal);
  EXPECT_EQ(classify(maj, P("110")), Finality::Final);
  const auto& orm = builtin_meta("or");
  EXPECT_EQ(orm.k, 0);
  EXPECT_EQ(names(orm.final_patterns()), (std::set<std::string>{"1"}));
  EXPECT_EQ(names(builtin_meta("fih").nonfinal_patterns()), (std::set<std::string>{"000", "111"}));
  EXPECT_THROW(builtin_meta("xor"), UnknownName);
}

TEST(RuleMeta, FinalPrediction) {
  for (bool b : {false, true})
    for (bool p : {false, true})
      for (bool q : {false, true}) {
        EXPECT_EQ(f_fwd(builtin_meta("maj"), b, p, q), b);
        EXPECT_EQ(f_fwd(builtin_meta("min"), b, p, q), b != p);
        EXPECT_EQ(f_fwd(builtin_meta("fuh"), b, p, q), (b != p) != q);
      }
}

TEST(RuleMeta, Transport) {
  const auto& maj = builtin_meta("maj");
  for (bool p : {false, true})
    for (Index x : {-3, -2, 0, 1, 4}) {
      const bool flip = p != ((x & 1) != 0);
      EXPECT_EQ(h_fwd(maj, P("010"), p, x), flip ? P("101") : P("010"));
    }
  EXPECT_EQ(h_bwd(maj, P("101"), true, 0), P("010"));
  EXPECT_EQ(h_fwd(builtin_meta("fih"), P("000"), false, 3), P("000"));
  EXPECT_EQ(h_fwd(builtin_meta("fih"), P("000"), true, 3), P("111"));
  EXPECT_EQ(h_fwd(builtin_meta("fuh"), P("111"), true, 5), P("111"));
  EXPECT_EQ(h_bwd(builtin_meta("fuh"), P("000"), true, 2), P("000"));
  EXPECT_THROW(h_fwd(maj, P("110"), false, 0), DomainError);
  EXPECT_THROW(h_bwd(maj, P("110"), false, 0), DomainError);
}

TEST(RuleMeta, TransportInverse) {
  for (const auto& name : builtin_meta_names()) {
    const auto& meta = builtin_meta(name);
    for (auto tau : meta.nonfinal_patterns())
      for (bool p : {false, true})
        for (Index l = -4; l <= 4; ++l) EXPECT_EQ(h_bwd(meta, h_fwd(meta, tau, p, l), p, l), tau) << name;
  }
}

TEST(RuleMeta, ComplementSymmetry) {
  // the complement of a built-in meta agrees with its partner pattern by pattern
  for (auto [a, b] : {std::pair{"or", "and"}, {"fih", "fih"}, {"fuh", "fuh"}, {"maj", "maj"}, {"min", "min"}}) {
    const auto& ma = builtin_meta(a);
    const auto& mb = builtin_meta(b);
    EXPECT_EQ(complement_rule(ma.rule), mb.rule);
    for (unsigned bits = 0; bits < (1u << ma.width()); ++bits) {
      Pattern p{bits, ma.width()};
      EXPECT_EQ(ma.is_final(p), mb.is_final(p.complement())) << a << " " << p.to_string();
    }
    auto cm = complement_meta(ma, "c");
    EXPECT_EQ(cm.rule, mb.rule);
    for (unsigned bits = 0; bits < (1u << ma.width()); ++bits) {
      Pattern p{bits, ma.width()};
      EXPECT_EQ(cm.is_final(p), mb.is_final(p));
    }
  }
}

TEST(RuleMeta, FinalizeOrFillsInterval) {
  const auto& orm = builtin_meta("or");
  auto s = Configuration::from_string("0010000010");
  auto out = finalize_interval(orm, s, 8, 2);
  EXPECT_EQ(out.to_string(), "1110000011");
  EXPECT_THROW(finalize_interval(orm, Configuration(10), 8, 2), DomainError);
}

TEST(RuleMeta, PlantExamples) {
  auto r = plant_final(builtin_meta("maj"), Configuration::from_string("0001010000"), 4, true, false, false,
                       Side::Right);
  EXPECT_EQ(r.z_prime, 5);
  EXPECT_EQ(r.config.window(5, 1).to_string(), "011");
  auto q = plant_final(builtin_meta("min"), Configuration::from_string("0001010000"), 4, false, true, false,
                       Side::Right);
  EXPECT_EQ(q.z_prime, 5);
  EXPECT_EQ(q.config.window(5, 1).to_string(), "011");
}

TEST(RuleMeta, Trivial) {
  EXPECT_EQ(trivial_rule("nor").wolfram_code(), rules::kNor);
  EXPECT_EQ(trivial_kind(parse_rule("nand")), TrivialKind::Nand);
  EXPECT_FALSE(trivial_kind(parse_rule("maj")).has_value());
  EXPECT_EQ(find_builtin_meta(parse_rule("xor")), nullptr);
  EXPECT_NE(find_builtin_meta(parse_rule("fuh")), nullptr);
}

TEST(RuleMeta, MakeMetaRejectsBadTransport) {
  const auto& maj = builtin_meta("maj");
  auto bad_h = [](Pattern p, bool, Index x) { return (x % 3 == 0) ? p : p.complement(); };
  EXPECT_THROW(make_meta("bad", maj.rule, 1, maj.final_patterns(), false, false, bad_h, maj.finalize, maj.plant,
                         maj.image),
               DomainError);
}
