#include <gtest/gtest.h>

#include "eca/errors.hpp"
#include "eca/rule.hpp"

using namespace eca;

TEST(Rule, TablesMatchNames) {
  const Rule maj = parse_rule("maj");
  EXPECT_EQ(maj.wolfram_code(), 232);
  EXPECT_TRUE(maj.apply(1, 1, 0));
  EXPECT_FALSE(maj.apply(1, 0, 0));
  const Rule fih = parse_rule("fih");
  EXPECT_EQ(fih.wolfram_code(), 77);
  EXPECT_EQ(parse_rule("wolfram:30").wolfram_code(), 30);
  EXPECT_THROW(parse_rule("wolfram:300"), UnknownName);
  EXPECT_THROW(parse_rule("rule110"), UnknownName);
}

TEST(Rule, Complement) {
  EXPECT_EQ(complement_rule(parse_rule("or")), parse_rule("and"));
  EXPECT_EQ(complement_rule(parse_rule("nor")), parse_rule("nand"));
  EXPECT_EQ(complement_rule(parse_rule("maj")), parse_rule("maj"));
  EXPECT_EQ(complement_rule(parse_rule("min")), parse_rule("min"));
  EXPECT_EQ(complement_rule(parse_rule("fih")), parse_rule("fih"));
  EXPECT_EQ(complement_rule(parse_rule("fuh")), parse_rule("fuh"));
  for (int code = 0; code < 256; ++code) {
    const Rule r = Rule::from_wolfram(code);
    EXPECT_EQ(complement_rule(complement_rule(r)), r);
  }
}

TEST(Rule, NameRoundTrip) {
  for (const char* name : {"or", "and", "nor", "nand", "maj", "min", "fih", "fuh", "all1", "all0", "xor"})
    EXPECT_EQ(rule_name(parse_rule(name)), name);
  EXPECT_EQ(rule_name(Rule::from_wolfram(30)), "wolfram:30");
}

TEST(Rule, FromTable) {
  const Rule r = Rule::from_table({0, 0, 0, 1, 0, 1, 1, 1});
  EXPECT_EQ(r.wolfram_code(), rules::kMaj);
  EXPECT_EQ(r.table(), (std::array<std::uint8_t, 8>{0, 0, 0, 1, 0, 1, 1, 1}));
  EXPECT_THROW(Rule::from_table({0, 0, 0, 2, 0, 0, 0, 0}), ParameterError);
}
