#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "eca/env_io.hpp"
#include "eca/environment.hpp"
#include "eca/errors.hpp"
#include "eca/rule.hpp"

using namespace eca;

TEST(Environment, NorSettlesIntoTwoCycle) {
  std::mt19937_64 rng(11);
  const Rule nor = parse_rule("nor");
  for (int trial = 0; trial < 50; ++trial) {
    auto env = evolve(Configuration::random(17, rng), nor, 9);
    for (Index t = 1; t + 2 < env.m(); ++t) EXPECT_EQ(env[t + 2], env[t]);
  }
}

TEST(Environment, All1ConvergesInOneStep) {
  std::mt19937_64 rng(12);
  auto env = evolve(Configuration::random(20, rng), parse_rule("all1"), 5);
  for (Index t = 1; t < env.m(); ++t) EXPECT_EQ(env[t], Configuration::ones(20));
}

TEST(Environment, AllFinalMajConfigurationIsFixed) {
  // every 3-window of this string avoids 010 and 101
  auto c = Configuration::from_string("110011100011");
  auto env = evolve(c, parse_rule("maj"), 12);
  for (Index t = 0; t < env.m(); ++t) EXPECT_EQ(env[t], c);
}

TEST(Environment, Distance) {
  std::mt19937_64 rng(13);
  auto a = evolve(Configuration::random(10, rng), parse_rule("fih"), 7);
  auto b = a;
  EXPECT_DOUBLE_EQ(env_distance(a, b), 0.0);
  b[3].flip(4);
  EXPECT_DOUBLE_EQ(env_distance(a, b), 1.0 / 70.0);
  EXPECT_DOUBLE_EQ(env_distance(a, a.complemented()), 1.0);
  EXPECT_THROW(env_distance(a, evolve(Configuration(10), parse_rule("or"), 6)), ShapeMismatch);
}

TEST(Environment, LazyMatchesMaterialized) {
  std::mt19937_64 rng(14);
  auto init = Configuration::random(90, rng);
  auto env = evolve(init, parse_rule("min"), 40);
  LazyEnvironment lazy(init, parse_rule("min"), 40);
  for (Index t = 0; t < 40; t += 3)
    for (Index i = 0; i < 90; i += 7) EXPECT_EQ(lazy.at(t, i), env.get(t, i));
  EXPECT_EQ(lazy.rows_retained(), 1);
  EXPECT_THROW(lazy.at(2, 0), TimeConformityViolation);
  EXPECT_THROW(lazy.at(40, 0), RangeError);
}

TEST(Environment, TilingCommutesWithEvolution) {
  std::mt19937_64 rng(15);
  auto base_init = Configuration::random(12, rng);
  auto base = std::make_shared<Environment>(evolve(base_init, parse_rule("maj"), 10));
  TiledEnvironment tiled(base, 5);
  Configuration big(60);
  for (Index i = 0; i < 60; ++i) big.set(i, base_init[i % 12]);
  auto direct = evolve(big, parse_rule("maj"), 10);
  EXPECT_EQ(materialize(tiled), direct);
}

TEST(Environment, NoiseIsDeterministicAndNearRate) {
  auto base = std::make_shared<Environment>(evolve(Configuration(200), parse_rule("or"), 200));
  NoisyEnvironment a(base, 0.1, 99), b(base, 0.1, 99), none(base, 0.0, 99);
  Index flips = 0;
  for (Index t = 0; t < 200; ++t)
    for (Index i = 0; i < 200; ++i) {
      EXPECT_EQ(a.at(t, i), b.at(t, i));
      EXPECT_FALSE(none.at(t, i));
      flips += a.at(t, i);
    }
  EXPECT_NEAR(static_cast<double>(flips) / 40000.0, 0.1, 0.01);
}

TEST(Environment, SuffixComplement) {
  auto base = std::make_shared<Environment>(evolve(Configuration::from_string("0110"), parse_rule("maj"), 6));
  SuffixComplementEnvironment s(base, 3);
  EXPECT_EQ(s.row(2), (*base)[2]);
  EXPECT_EQ(s.row(3), (*base)[3].complemented());
}

TEST(EnvIo, TextAndBinaryRoundTrip) {
  std::mt19937_64 rng(16);
  auto env = evolve(Configuration::random(77, rng), parse_rule("fuh"), 9);
  std::stringstream text;
  write_text(text, env, rules::kFuh);
  auto back = read_text(text);
  EXPECT_EQ(back.env, env);
  EXPECT_EQ(back.wolfram_code, rules::kFuh);
  std::stringstream bin;
  write_binary(bin, env);
  EXPECT_EQ(read_binary(bin).env, env);
}

TEST(EnvIo, RejectsMalformedInput) {
  std::stringstream bad("4 2 rule=232\n0101\n01\n");
  EXPECT_THROW(read_text(bad), FormatError);
  std::stringstream magic("NOTMAGIC");
  EXPECT_THROW(read_binary(magic), FormatError);
}
