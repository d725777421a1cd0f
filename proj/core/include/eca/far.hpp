#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "eca/environment.hpp"
#include "eca/rule_meta.hpp"

namespace eca {

enum class InstanceKind { Evolving, RowComplementSuffix, SpliceTwoEvolutions, IidNoise, WrongRuleEvolution };

struct InstanceSpec {
  InstanceKind kind = InstanceKind::Evolving;
  double noise = 0.05;   // iid-noise flip probability
  Index split = -1;      // first altered row; -1 means ceil(m/2)
  bool structured = true;  // initial rows with long alternating and constant stretches
};

// "evolving", "row-complement-suffix", "splice-two-evolutions",
// "iid-noise(p)" (or "iid-noise:p"), "wrong-rule-evolution"
InstanceSpec parse_instance(std::string_view s);
std::string instance_name(const InstanceSpec& s);

struct Certificate {
  std::string strategy;
  std::string method;  // exact, suffix-bound, column-bound, tent-bound, none
  Index cells = 0;     // lower bound on the cells to change (exact for method exact)
  double distance = 0;  // cells / (m n)
  double eps = 0;
  bool exact = false;
  bool certified = false;  // distance > eps
  std::string derivation;
};

struct Instance {
  Environment env;
  Configuration initial;
  Certificate cert;
};

// Random initial configuration. The structured form concatenates alternating,
// constant and random stretches of random length, which keeps non-final
// regions alive for many steps.
Configuration random_initial(Index n, std::mt19937_64& rng, bool structured);

// Builds an instance of the requested kind together with a distance
// certificate: exact for n <= 24, otherwise a constructive lower bound.
Instance make_far(const Rule& rule, Index n, Index m, double eps, std::mt19937_64& rng, const InstanceSpec& spec);

// rule used to produce wrong-rule-evolution instances
Rule wrong_rule_for(const Rule& rule);

// Lower bound on the distance to any evolution of the rule, column by
// column: every evolving column is non-final (changing value by a fixed
// law) up to some time and final (by another fixed law) afterwards.
Index column_family_bound(const RuleMeta& meta, const Environment& env);

// Lower bound from disjoint local violations: every cell of an evolution is
// the rule applied to the three cells above it, so each violated
// (three above, one below) tent needs its own change. Tents are packed on
// rows of one parity, three apart within a row.
Index tent_packing_bound(const Rule& rule, const Environment& env);

// Lower bound for an evolution whose rows >= r were complemented, from the
// time each column first turns final.
Index suffix_complement_bound(const RuleMeta& meta, const Configuration& initial, Index m, Index r);

}  // namespace eca
