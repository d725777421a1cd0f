#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eca/configuration.hpp"
#include "eca/pattern.hpp"
#include "eca/rule.hpp"

namespace eca {

enum class Finality { Final, NonFinal };
enum class Side { Left, Right };
enum class TesterKind { Meta, TrivialOneStepConverging };

// Shape of the set of configurations reachable after t >= 1 steps, used by the
// exact feasibility check.
//   Chain: neighbours i, i+1 are "linked" when c(i) xor c(i+1) == link; a cell
//          is final iff it has a linked neighbour (maj/min: link 0, fih/fuh: 1).
//   Run:   final cells are exactly the cells holding run_value (or/and).
struct ImageModel {
  enum class Kind { None, Chain, Run };
  Kind kind = Kind::None;
  int link = 0;
  bool run_value = true;
};

struct PlantResult {
  Configuration config;
  Index z_prime = 0;
};

struct RuleMeta;
using FinalizeFn = std::function<Configuration(const RuleMeta&, const Configuration&, Index, Index)>;
using PlantFn =
    std::function<PlantResult(const RuleMeta&, const Configuration&, Index, bool, bool, bool, Side)>;
// h as a function of (pattern, time parity, directed displacement)
using TransportFn = std::function<Pattern(Pattern, bool, Index)>;

struct RuleMeta {
  std::string name;
  Rule rule;
  int k = 1;
  std::vector<std::uint8_t> final_set;  // indexed by Pattern::bits
  // f(b, p, q) = b ^ (f_time & p) ^ (f_space & q)
  bool f_time = false;
  bool f_space = false;
  // [pattern bits][2*p + q], only non-final entries meaningful
  std::vector<std::array<std::uint32_t, 4>> h_fwd_table;
  std::vector<std::array<std::uint32_t, 4>> h_bwd_table;
  FinalizeFn finalize;
  PlantFn plant;
  TesterKind tester_kind = TesterKind::Meta;
  ImageModel image;

  int width() const { return 2 * k + 1; }
  bool is_final(Pattern p) const { return final_set.at(p.bits) != 0; }
  std::vector<Pattern> final_patterns() const;
  std::vector<Pattern> nonfinal_patterns() const;
  // centre bits of final patterns
  std::vector<bool> legal_nu() const;
};

// Builds a meta and checks it: F must not be empty or everything, h must
// depend on the displacement only through its parity and be a bijection on
// the non-final patterns. Violations throw DomainError.
RuleMeta make_meta(std::string name, Rule rule, int k, const std::vector<Pattern>& final_patterns, bool f_time,
                   bool f_space, const TransportFn& h, FinalizeFn finalize, PlantFn plant, ImageModel image);

// complement transport: patterns, F, f, h and both constructors
RuleMeta complement_meta(const RuleMeta& meta, std::string name);

const RuleMeta& builtin_meta(std::string_view name);
const RuleMeta* find_builtin_meta(const Rule& rule);
std::vector<std::string> builtin_meta_names();

Finality classify(const RuleMeta& meta, Pattern pattern);
bool f_fwd(const RuleMeta& meta, bool value, bool dt_parity, bool dd_parity);
Pattern h_fwd(const RuleMeta& meta, Pattern pattern, bool dt_parity, Index dd);
Pattern h_bwd(const RuleMeta& meta, Pattern pattern, bool dt_parity, Index dd);

Configuration finalize_interval(const RuleMeta& meta, const Configuration& sigma, Index x, Index y);
PlantResult plant_final(const RuleMeta& meta, const Configuration& sigma, Index z, bool nu, bool gamma,
                        bool gamma_prime, Side side);

// constructor building blocks, also used to assemble mutants in tests
Configuration finalize_by_run(const RuleMeta& meta, const Configuration& sigma, Index x, Index y);
Configuration finalize_by_chain(const RuleMeta& meta, const Configuration& sigma, Index x, Index y);
PlantResult plant_by_run(const RuleMeta& meta, const Configuration& sigma, Index z, bool nu, bool gamma,
                         bool gamma_prime, Side side);
PlantResult plant_by_chain(const RuleMeta& meta, const Configuration& sigma, Index z, bool nu, bool gamma,
                           bool gamma_prime, Side side);

enum class TrivialKind { All1, All0, Nor, Nand };
Rule trivial_rule(std::string_view name);
std::optional<TrivialKind> trivial_kind(const Rule& rule);

}  // namespace eca
