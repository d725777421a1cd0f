#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eca/rule_meta.hpp"

namespace eca {

struct ConditionResult {
  int condition = 0;
  bool pass = true;
  std::string counterexample;
  std::optional<Pattern> window;  // conditions 1 and 2
  std::uint64_t cases = 0;
};

ConditionResult verify_cond1(const RuleMeta& meta);
ConditionResult verify_cond2(const RuleMeta& meta);
ConditionResult verify_cond3(const RuleMeta& meta, int n_max = 12, int m_max = 12);
ConditionResult verify_cond4(const RuleMeta& meta, int n_max = 12, int m_max = 12);
ConditionResult verify_cond5(const RuleMeta& meta, int n_max = 12);
ConditionResult verify_cond6(const RuleMeta& meta, int n_max = 12);
std::vector<ConditionResult> verify_all(const RuleMeta& meta, int n_max = 12, int m_max = 12);

// every (2k+3)-window refuting condition 1, ascending
std::vector<Pattern> cond1_counterexamples(const RuleMeta& meta);

// descendants of final pairs are final, on every evolution with n <= n_max
ConditionResult check_final_persistence(const RuleMeta& meta, int n_max, int m_max);
// at time t <= n/2 every final cell sits in a run of >= 2t final cells
ConditionResult check_final_runs(const RuleMeta& meta, int n_max);

}  // namespace eca
