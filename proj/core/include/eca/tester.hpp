#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "eca/classify.hpp"
#include "eca/oracle.hpp"
#include "eca/params.hpp"
#include "eca/rule_meta.hpp"

namespace eca {

using Rng = std::mt19937_64;

enum class Decision { Accept, Reject };
enum class RejectKind { None, InfeasibleGrid, Violation, Mismatch, Forbidden };
enum class Variant { Grid, Wide, Fallback, Trivial };

const char* decision_name(Decision d);
const char* reject_kind_name(RejectKind k);
const char* variant_name(Variant v);

struct Verdict {
  Decision decision = Decision::Accept;
  RejectKind reject_kind = RejectKind::None;
  std::string reason;
  Variant variant = Variant::Grid;  // the procedure that actually ran
  bool delegated = false;
  std::string delegation_reason;
  // offending pair, with its class and failed requirement for violations
  std::optional<TimeLocation> pair;
  std::string pair_class;
  std::string requirement;
  // parameters actually used (zero where they do not apply)
  Index delta = 0, t1 = 0, t2 = 0, grid_size = 0, samples = 0, intervals = 0;
  OracleStats stats;

  bool accepted() const { return decision == Decision::Accept; }
};

// The grid tester. Falls back to test_fallback when the plan does.
Verdict test(QueryOracle& oracle, const RuleMeta& meta, double eps, Rng& rng, const Constants& constants);

// Reads row 0, evolves it and compares uniformly sampled cells.
Verdict test_fallback(QueryOracle& oracle, const Rule& rule, double eps, Rng& rng, const Constants& constants);

// Interval variant for n much larger than m; otherwise runs test.
Verdict test_wide(QueryOracle& oracle, const RuleMeta& meta, double eps, Rng& rng, const Constants& constants);

Verdict test_trivial(QueryOracle& oracle, TrivialKind kind, double eps, Rng& rng, const Constants& constants);

enum class VariantChoice { Auto, Grid, Wide, Fallback };
VariantChoice parse_variant(std::string_view s);

// Dispatch by rule: trivial rules get test_trivial, rules with metadata get
// the requested variant (auto = wide when it applies, else grid).
Verdict run_tester(QueryOracle& oracle, const Rule& rule, double eps, Rng& rng, const Constants& constants,
                   VariantChoice variant = VariantChoice::Auto);

}  // namespace eca
