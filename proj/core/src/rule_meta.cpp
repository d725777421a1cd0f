#include "eca/rule_meta.hpp"

#include <map>
#include <memory>

#include "eca/errors.hpp"

namespace eca {

std::vector<Pattern> RuleMeta::final_patterns() const {
  std::vector<Pattern> out;
  for (std::uint32_t b = 0; b < final_set.size(); ++b)
    if (final_set[b]) out.push_back({b, width()});
  return out;
}

std::vector<Pattern> RuleMeta::nonfinal_patterns() const {
  std::vector<Pattern> out;
  for (std::uint32_t b = 0; b < final_set.size(); ++b)
    if (!final_set[b]) out.push_back({b, width()});
  return out;
}

std::vector<bool> RuleMeta::legal_nu() const {
  bool seen[2] = {false, false};
  for (auto p : final_patterns()) seen[p.center()] = true;
  std::vector<bool> out;
  for (int v = 0; v < 2; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

RuleMeta make_meta(std::string name, Rule rule, int k, const std::vector<Pattern>& final_patterns, bool f_time,
                   bool f_space, const TransportFn& h, FinalizeFn finalize, PlantFn plant, ImageModel image) {
  if (k < 0 || k > 3) throw DomainError("unsupported radius");
  RuleMeta meta;
  meta.name = std::move(name);
  meta.rule = rule;
  meta.k = k;
  const std::uint32_t count = 1u << (2 * k + 1);
  meta.final_set.assign(count, 0);
  for (auto p : final_patterns) {
    if (p.len != 2 * k + 1) throw DomainError("final pattern has wrong length");
    meta.final_set[p.bits] = 1;
  }
  auto finals = meta.final_patterns();
  if (finals.empty() || finals.size() == count) throw DomainError("final set must be a proper subset");

  meta.f_time = f_time;
  meta.f_space = f_space;
  meta.h_fwd_table.assign(count, {0, 0, 0, 0});
  meta.h_bwd_table.assign(count, {0, 0, 0, 0});
  for (auto tau : meta.nonfinal_patterns()) {
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) {
        Pattern out = h(tau, p, q);
        if (out.len != tau.len || meta.is_final(out)) throw DomainError("h must map non-final patterns to non-final");
        // parity-only dependence on the displacement
        for (Index d = -9; d <= 9; ++d) {
          if (parity(d) != bool(q)) continue;
          if (!(h(tau, p, d) == out)) throw DomainError("h depends on more than the parity of the displacement");
        }
        meta.h_fwd_table[tau.bits][2 * p + q] = out.bits;
      }
    }
  }
  for (int pq = 0; pq < 4; ++pq) {
    std::vector<int> hits(count, 0);
    for (auto tau : meta.nonfinal_patterns()) {
      std::uint32_t out = meta.h_fwd_table[tau.bits][pq];
      if (hits[out]++) throw DomainError("h is not a bijection on non-final patterns");
      meta.h_bwd_table[out][pq] = tau.bits;
    }
  }
  meta.finalize = std::move(finalize);
  meta.plant = std::move(plant);
  meta.image = image;
  return meta;
}

Finality classify(const RuleMeta& meta, Pattern pattern) {
  if (pattern.len != meta.width()) throw DomainError("pattern length does not match 2k+1");
  return meta.is_final(pattern) ? Finality::Final : Finality::NonFinal;
}

bool f_fwd(const RuleMeta& meta, bool value, bool dt_parity, bool dd_parity) {
  return value ^ (meta.f_time && dt_parity) ^ (meta.f_space && dd_parity);
}

Pattern h_fwd(const RuleMeta& meta, Pattern pattern, bool dt_parity, Index dd) {
  if (classify(meta, pattern) != Finality::NonFinal) throw DomainError("h is defined on non-final patterns only");
  return {meta.h_fwd_table[pattern.bits][2 * dt_parity + parity(dd)], pattern.len};
}

Pattern h_bwd(const RuleMeta& meta, Pattern pattern, bool dt_parity, Index dd) {
  if (classify(meta, pattern) != Finality::NonFinal) throw DomainError("h is defined on non-final patterns only");
  return {meta.h_bwd_table[pattern.bits][2 * dt_parity + parity(dd)], pattern.len};
}

Configuration finalize_interval(const RuleMeta& meta, const Configuration& sigma, Index x, Index y) {
  if (!meta.finalize) throw DomainError("meta has no interval constructor");
  if (!meta.is_final(sigma.window(x, meta.k)) || !meta.is_final(sigma.window(y, meta.k)))
    throw DomainError("interval endpoints must be final");
  return meta.finalize(meta, sigma, wrap(x, sigma.size()), wrap(y, sigma.size()));
}

PlantResult plant_final(const RuleMeta& meta, const Configuration& sigma, Index z, bool nu, bool gamma,
                        bool gamma_prime, Side side) {
  if (!meta.plant) throw DomainError("meta has no planting constructor");
  if (meta.is_final(sigma.window(z, meta.k))) throw DomainError("planting needs a non-final location");
  bool legal = false;
  for (bool v : meta.legal_nu()) legal |= v == nu;
  if (!legal) throw DomainError("nu is not the centre of any final pattern");
  return meta.plant(meta, sigma, wrap(z, sigma.size()), nu, gamma, gamma_prime, side);
}

Configuration finalize_by_run(const RuleMeta& meta, const Configuration& sigma, Index x, Index y) {
  Configuration out = sigma;
  const Index n = sigma.size();
  const Index len = x == y ? n : interval_length(x, y, n);
  for (Index o = 0; o < len; ++o) out.set(x + o, meta.image.run_value);
  return out;
}

// Every non-final cell copies its nearest final cell inside [x, y] (left wins
// ties), shifted by the distance parity when links are between unequal bits.
Configuration finalize_by_chain(const RuleMeta& meta, const Configuration& sigma, Index x, Index y) {
  const Index n = sigma.size();
  const bool whole = x == y;
  const Index len = whole ? n : interval_length(x, y, n);
  const int lam = meta.image.link;
  std::vector<char> fin(len);
  for (Index o = 0; o < len; ++o) fin[o] = meta.is_final(sigma.window(x + o, meta.k));

  constexpr Index none = -1;
  std::vector<Index> left(len, none), right(len, none);
  const Index span = whole ? 2 * len : len;
  Index last = none;
  for (Index s = 0; s < span; ++s) {
    Index o = s % len;
    if (fin[o]) last = s;
    if (s >= span - len && last != none) left[o] = s - last;
  }
  last = none;
  for (Index s = span - 1; s >= 0; --s) {
    Index o = s % len;
    if (fin[o]) last = s;
    if (s < len && last != none) right[o] = last - s;
  }

  Configuration out = sigma;
  for (Index o = 0; o < len; ++o) {
    if (fin[o]) continue;
    Index d = left[o];
    Index src = x + o - d;
    if (d == none || (right[o] != none && right[o] < d)) {
      d = right[o];
      src = x + o + d;
    }
    out.set(x + o, sigma.get(src) ^ (lam && parity(d)));
  }
  return out;
}

PlantResult plant_by_run(const RuleMeta& meta, const Configuration& sigma, Index z, bool nu, bool gamma,
                         bool gamma_prime, Side side) {
  const Index dir = side == Side::Right ? 1 : -1;
  const bool v = meta.image.run_value;
  if (f_fwd(meta, v, gamma, true ^ gamma_prime) != nu) throw DomainError("no planting for this nu");
  Configuration out = sigma;
  out.set(z + dir, v);
  return {out, wrap(z + dir, sigma.size())};
}

// Two candidates: make z+1 final right away by linking it to z+2, or keep
// z+1 non-final and make z+2 final by linking it to z+3. The f-prediction
// of the two differs, so exactly one yields nu.
PlantResult plant_by_chain(const RuleMeta& meta, const Configuration& sigma, Index z, bool nu, bool gamma,
                           bool gamma_prime, Side side) {
  const Index dir = side == Side::Right ? 1 : -1;
  const int lam = meta.image.link;
  const bool b1 = sigma.get(z + dir);
  if (f_fwd(meta, b1, gamma, true ^ gamma_prime) == nu) {
    Configuration out = sigma;
    out.set(z + 2 * dir, b1 ^ lam);
    return {out, wrap(z + dir, sigma.size())};
  }
  const bool b2 = b1 ^ (1 - lam);
  if (f_fwd(meta, b2, gamma, gamma_prime) == nu) {
    Configuration out = sigma;
    out.set(z + 2 * dir, b2);
    out.set(z + 3 * dir, b2 ^ lam);
    return {out, wrap(z + 2 * dir, sigma.size())};
  }
  throw DomainError("no planting for this nu");
}

RuleMeta complement_meta(const RuleMeta& meta, std::string name) {
  auto base = std::make_shared<const RuleMeta>(meta);
  RuleMeta out;
  out.name = std::move(name);
  out.rule = complement_rule(meta.rule);
  out.k = meta.k;
  const std::uint32_t mask = (1u << meta.width()) - 1u;
  out.final_set.assign(meta.final_set.size(), 0);
  out.h_fwd_table.assign(meta.final_set.size(), {0, 0, 0, 0});
  out.h_bwd_table.assign(meta.final_set.size(), {0, 0, 0, 0});
  for (std::uint32_t b = 0; b < meta.final_set.size(); ++b) {
    out.final_set[b] = meta.final_set[b ^ mask];
    for (int pq = 0; pq < 4; ++pq) {
      out.h_fwd_table[b][pq] = meta.h_fwd_table[b ^ mask][pq] ^ mask;
      out.h_bwd_table[b][pq] = meta.h_bwd_table[b ^ mask][pq] ^ mask;
    }
  }
  out.f_time = meta.f_time;
  out.f_space = meta.f_space;
  out.tester_kind = meta.tester_kind;
  out.image = meta.image;
  out.image.run_value = !meta.image.run_value;
  out.finalize = [base](const RuleMeta&, const Configuration& sigma, Index x, Index y) {
    return base->finalize(*base, sigma.complemented(), x, y).complemented();
  };
  out.plant = [base](const RuleMeta&, const Configuration& sigma, Index z, bool nu, bool gamma, bool gamma_prime,
                     Side side) {
    auto r = base->plant(*base, sigma.complemented(), z, !nu, gamma, gamma_prime, side);
    return PlantResult{r.config.complemented(), r.z_prime};
  };
  return out;
}

namespace {

std::vector<Pattern> patterns_where(int width, const std::function<bool(Pattern)>& pred) {
  std::vector<Pattern> out;
  for (std::uint32_t b = 0; b < (1u << width); ++b)
    if (pred({b, width})) out.push_back({b, width});
  return out;
}

TransportFn flip_when(std::function<bool(bool, bool)> flips) {
  return [flips](Pattern tau, bool p, Index d) { return flips(p, parity(d)) ? tau.complement() : tau; };
}

std::map<std::string, RuleMeta, std::less<>> build_registry() {
  std::map<std::string, RuleMeta, std::less<>> reg;

  const ImageModel run1{ImageModel::Kind::Run, 0, true};
  reg["or"] = make_meta("or", Rule::from_wolfram(rules::kOr), 0, {Pattern{1, 1}}, false, false,
                        flip_when([](bool, bool) { return false; }), finalize_by_run, plant_by_run, run1);
  reg["and"] = complement_meta(reg["or"], "and");

  auto has_equal_neighbour = [](Pattern p) { return p.at(0) == p.at(1) || p.at(1) == p.at(2); };
  auto inhomogeneous = [](Pattern p) { return !(p.at(0) == p.at(1) && p.at(1) == p.at(2)); };
  const ImageModel chain0{ImageModel::Kind::Chain, 0, true};
  const ImageModel chain1{ImageModel::Kind::Chain, 1, true};

  reg["maj"] = make_meta("maj", Rule::from_wolfram(rules::kMaj), 1, patterns_where(3, has_equal_neighbour), false,
                         false, flip_when([](bool p, bool q) { return p != q; }), finalize_by_chain,
                         plant_by_chain, chain0);
  reg["min"] = make_meta("min", Rule::from_wolfram(rules::kMin), 1, patterns_where(3, has_equal_neighbour), true,
                         false, flip_when([](bool, bool q) { return q; }), finalize_by_chain, plant_by_chain,
                         chain0);
  reg["fih"] = make_meta("fih", Rule::from_wolfram(rules::kFih), 1, patterns_where(3, inhomogeneous), false, true,
                         flip_when([](bool p, bool) { return p; }), finalize_by_chain, plant_by_chain, chain1);
  reg["fuh"] = make_meta("fuh", Rule::from_wolfram(rules::kFuh), 1, patterns_where(3, inhomogeneous), true, true,
                         flip_when([](bool, bool) { return false; }), finalize_by_chain, plant_by_chain, chain1);
  return reg;
}

const std::map<std::string, RuleMeta, std::less<>>& registry() {
  static const auto reg = build_registry();
  return reg;
}

}  // namespace

const RuleMeta& builtin_meta(std::string_view name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw UnknownName("no metadata registered for rule: " + std::string(name));
  return it->second;
}

const RuleMeta* find_builtin_meta(const Rule& rule) {
  for (const auto& [name, meta] : registry())
    if (meta.rule == rule) return &meta;
  return nullptr;
}

std::vector<std::string> builtin_meta_names() { return {"or", "and", "maj", "min", "fih", "fuh"}; }

Rule trivial_rule(std::string_view name) {
  if (name == "all1") return Rule::from_wolfram(rules::kAll1);
  if (name == "all0") return Rule::from_wolfram(rules::kAll0);
  if (name == "nor") return Rule::from_wolfram(rules::kNor);
  if (name == "nand") return Rule::from_wolfram(rules::kNand);
  throw UnknownName("not a trivial rule: " + std::string(name));
}

std::optional<TrivialKind> trivial_kind(const Rule& rule) {
  switch (rule.wolfram_code()) {
    case rules::kAll1: return TrivialKind::All1;
    case rules::kAll0: return TrivialKind::All0;
    case rules::kNor: return TrivialKind::Nor;
    case rules::kNand: return TrivialKind::Nand;
    default: return std::nullopt;
  }
}

}  // namespace eca
