#include "eca/far.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "eca/bruteforce.hpp"
#include "eca/errors.hpp"

namespace eca {

InstanceSpec parse_instance(std::string_view s) {
  InstanceSpec out;
  if (s == "evolving") {
    out.kind = InstanceKind::Evolving;
  } else if (s == "row-complement-suffix") {
    out.kind = InstanceKind::RowComplementSuffix;
  } else if (s == "splice-two-evolutions") {
    out.kind = InstanceKind::SpliceTwoEvolutions;
  } else if (s == "wrong-rule-evolution") {
    out.kind = InstanceKind::WrongRuleEvolution;
  } else if (s.rfind("iid-noise", 0) == 0) {
    out.kind = InstanceKind::IidNoise;
    std::string rest(s.substr(9));
    if (!rest.empty()) {
      if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
      else if (rest.front() == ':') rest = rest.substr(1);
      else throw UnknownName("unknown instance strategy: " + std::string(s));
      try {
        out.noise = std::stod(rest);
      } catch (const std::exception&) {
        throw ParameterError("bad noise level in " + std::string(s));
      }
      if (!(out.noise >= 0 && out.noise <= 1)) throw ParameterError("noise level must lie in [0, 1]");
    }
  } else {
    throw UnknownName("unknown instance strategy: " + std::string(s));
  }
  return out;
}

std::string instance_name(const InstanceSpec& s) {
  switch (s.kind) {
    case InstanceKind::Evolving: return "evolving";
    case InstanceKind::RowComplementSuffix: return "row-complement-suffix";
    case InstanceKind::SpliceTwoEvolutions: return "splice-two-evolutions";
    case InstanceKind::WrongRuleEvolution: return "wrong-rule-evolution";
    case InstanceKind::IidNoise: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "iid-noise(%g)", s.noise);
      return buf;
    }
  }
  return "?";
}

Configuration random_initial(Index n, std::mt19937_64& rng, bool structured) {
  if (!structured) return Configuration::random(n, rng);
  Configuration c(n);
  std::uniform_int_distribution<int> kind(0, 2), bit(0, 1);
  // stretch lengths between 1 and n/2, skewed towards short ones
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double top = std::log(static_cast<double>(std::max<Index>(2, n / 2)));
  Index pos = 0;
  while (pos < n) {
    const Index len = std::min<Index>(n - pos, 1 + static_cast<Index>(std::exp(u(rng) * top)));
    const int k = kind(rng);
    const bool b = bit(rng);
    for (Index j = 0; j < len; ++j) {
      bool v = b;
      if (k == 1) v = b ^ static_cast<bool>(j & 1);
      else if (k == 2) v = bit(rng);
      c.set(pos + j, v);
    }
    pos += len;
  }
  return c;
}

Rule wrong_rule_for(const Rule& rule) {
  switch (rule.wolfram_code()) {
    case rules::kMaj: return Rule::from_wolfram(rules::kMin);
    case rules::kMin: return Rule::from_wolfram(rules::kMaj);
    case rules::kFih: return Rule::from_wolfram(rules::kFuh);
    case rules::kFuh: return Rule::from_wolfram(rules::kFih);
    default: return Rule::from_wolfram(rules::kIdentity);
  }
}

namespace {

struct ColumnLaw {
  bool valid = false;
  bool hflip = false, fflip = false;
  bool nf_values[2] = {false, false};
  bool f_values[2] = {false, false};
};

ColumnLaw column_law(const RuleMeta& meta) {
  ColumnLaw law;
  const auto nf = meta.nonfinal_patterns();
  const auto fin = meta.final_patterns();
  if (nf.empty() || fin.empty()) return law;
  law.hflip = h_fwd(meta, nf.front(), true, 0).center() != nf.front().center();
  for (Pattern p : nf) {
    if ((h_fwd(meta, p, true, 0).center() != p.center()) != law.hflip) return law;
    law.nf_values[p.center()] = true;
  }
  law.fflip = f_fwd(meta, false, true, false);
  for (Pattern p : fin) law.f_values[p.center()] = true;
  law.valid = true;
  return law;
}

// rule whose output at a cell is the finality of its window (radius <= 1)
Rule finality_rule(const RuleMeta& meta) {
  std::array<std::uint8_t, 8> table{};
  for (unsigned idx = 0; idx < 8; ++idx)
    table[idx] = meta.k == 1 ? meta.is_final(Pattern{idx, 3}) : meta.is_final(Pattern{(idx >> 1) & 1u, 1});
  return Rule::from_table(table);
}

Index suffix_bound_from_mask(const RuleMeta& meta, const std::vector<Index>& first_final, Index m, Index r) {
  Index total = 0;
  const bool run = meta.image.kind == ImageModel::Kind::Run;
  for (Index tau : first_final) {
    if (tau < 0 || tau >= r) continue;
    total += run ? std::min(r - tau, m - r) : std::min((r - tau) / 2, m - r);
  }
  return total;
}

std::vector<Index> first_final_times(const RuleMeta& meta, Configuration c, Index upto) {
  const Index n = c.size();
  std::vector<Index> tau(n, -1);
  const Rule fr = finality_rule(meta);
  Configuration seen(n);
  for (Index t = 0; t < upto; ++t) {
    const Configuration fm = evolve_step(c, fr);
    for (std::size_t w = 0; w < fm.words().size(); ++w) {
      std::uint64_t fresh = fm.words()[w] & ~seen.words()[w];
      seen.words()[w] |= fresh;
      while (fresh) {
        const int b = __builtin_ctzll(fresh);
        tau[static_cast<Index>(w) * 64 + b] = t;
        fresh &= fresh - 1;
      }
    }
    if (t + 1 < upto) c = evolve_step(c, meta.rule);
  }
  return tau;
}

}  // namespace

Index suffix_complement_bound(const RuleMeta& meta, const Configuration& initial, Index m, Index r) {
  if (meta.k > 1) throw DomainError("the suffix bound is implemented for radius at most one");
  if (r <= 0 || r >= m) return 0;
  return suffix_bound_from_mask(meta, first_final_times(meta, initial, r), m, r);
}

Index column_family_bound(const RuleMeta& meta, const Environment& env) {
  const ColumnLaw law = column_law(meta);
  if (!law.valid) return 0;
  const Index n = env.n(), m = env.m();
  constexpr Index kInf = std::numeric_limits<Index>::max() / 4;
  Index total = 0;
  // cost[phase][value], phase 0 = non-final, 1 = final
  for (Index i = 0; i < n; ++i) {
    Index cost[2][2];
    for (int v = 0; v < 2; ++v) {
      const Index miss = env.get(0, i) != static_cast<bool>(v);
      cost[0][v] = law.nf_values[v] ? miss : kInf;
      cost[1][v] = law.f_values[v] ? miss : kInf;
    }
    for (Index t = 1; t < m; ++t) {
      const bool e = env.get(t, i);
      Index nx[2][2];
      for (int v = 0; v < 2; ++v) {
        const Index miss = e != static_cast<bool>(v);
        const Index stay_nf = cost[0][v ^ law.hflip];
        const Index stay_f = cost[1][v ^ law.fflip];
        nx[0][v] = law.nf_values[v] && stay_nf < kInf ? stay_nf + miss : kInf;
        // entering the final phase may set any legal value
        const Index enter = std::min({stay_f, cost[0][0], cost[0][1]});
        nx[1][v] = law.f_values[v] && enter < kInf ? enter + miss : kInf;
      }
      std::copy(&nx[0][0], &nx[0][0] + 4, &cost[0][0]);
    }
    total += std::min({cost[0][0], cost[0][1], cost[1][0], cost[1][1]});
  }
  return total;
}

Index tent_packing_bound(const Rule& rule, const Environment& env) {
  const Index n = env.n(), m = env.m();
  Index best = 0;
  for (Index phase = 0; phase < 2; ++phase) {
    Index total = 0;
    for (Index t = phase; t + 1 < m; t += 2) {
      const Configuration next = evolve_step(env[t], rule);
      // cells where the row below disagrees with the rule
      std::vector<Index> bad;
      for (std::size_t w = 0; w < next.words().size(); ++w) {
        std::uint64_t x = next.words()[w] ^ env[t + 1].words()[w];
        while (x) {
          bad.push_back(static_cast<Index>(w) * 64 + __builtin_ctzll(x));
          x &= x - 1;
        }
      }
      if (bad.empty()) continue;
      // greedy interval packing on the ring: tents at i cover i-1 .. i+1
      Index count = 0, last = -1000000;
      const Index first = bad.front();
      for (Index i : bad) {
        if (i - last >= 3) {
          // the last tent must not wrap onto the first one
          if (count > 0 && i + 3 - n > first) break;
          ++count;
          last = i;
        }
      }
      total += count;
    }
    best = std::max(best, total);
  }
  return best;
}

Instance make_far(const Rule& rule, Index n, Index m, double eps, std::mt19937_64& rng, const InstanceSpec& spec) {
  if (n < 3 || m < 1) throw ParameterError("bad environment shape");
  const Index r = spec.split >= 0 ? spec.split : (m + 1) / 2;
  if (spec.kind != InstanceKind::Evolving && spec.kind != InstanceKind::IidNoise && (r <= 0 || r > m))
    throw ParameterError("split row outside the environment");
  Instance out;
  out.initial = random_initial(n, rng, spec.structured);
  Certificate& cert = out.cert;
  cert.strategy = instance_name(spec);
  cert.eps = eps;

  switch (spec.kind) {
    case InstanceKind::Evolving:
      out.env = evolve(out.initial, rule, m);
      break;
    case InstanceKind::RowComplementSuffix:
      out.env = evolve(out.initial, rule, m);
      for (Index t = r; t < m; ++t) out.env[t] = out.env[t].complemented();
      break;
    case InstanceKind::SpliceTwoEvolutions: {
      out.env = evolve(out.initial, rule, m);
      const Environment other = evolve(random_initial(n, rng, spec.structured), rule, m);
      for (Index t = r; t < m; ++t) out.env[t] = other[t];
      break;
    }
    case InstanceKind::IidNoise: {
      out.env = evolve(out.initial, rule, m);
      std::bernoulli_distribution flip(spec.noise);
      for (Index t = 0; t < m; ++t)
        for (Index i = 0; i < n; ++i)
          if (flip(rng)) out.env[t].flip(i);
      break;
    }
    case InstanceKind::WrongRuleEvolution:
      out.env = evolve(out.initial, wrong_rule_for(rule), m);
      break;
  }

  const double cells = static_cast<double>(n) * static_cast<double>(m);
  const RuleMeta* meta = find_builtin_meta(rule);
  const auto kind = trivial_kind(rule);
  if (spec.kind == InstanceKind::Evolving) {
    cert.method = "exact";
    cert.exact = true;
    cert.derivation = "the environment is an evolution";
  } else if (n <= bruteforce::kDistanceMaxN) {
    const auto rep = bruteforce::exact_distance(out.env, rule);
    cert.method = "exact";
    cert.exact = true;
    cert.cells = rep.differing;
    cert.derivation = "minimum over all 2^n initial configurations";
  } else if (kind && (*kind == TrivialKind::All1 || *kind == TrivialKind::All0)) {
    const bool want = *kind == TrivialKind::All1;
    for (Index t = 1; t < m; ++t) cert.cells += want ? n - out.env[t].popcount() : out.env[t].popcount();
    cert.method = "exact";
    cert.exact = true;
    cert.derivation = "rows after the first are forced to a constant";
  } else if (meta && spec.kind == InstanceKind::RowComplementSuffix && meta->k <= 1 &&
             meta->image.kind != ImageModel::Kind::None) {
    cert.cells = suffix_complement_bound(*meta, out.initial, m, r);
    cert.method = "suffix-bound";
    cert.derivation = "columns final at tau < r contribute min(r - tau, m - r) (runs) or min(floor((r - tau)/2), m - r)"
                      " (chains), r = " + std::to_string(r);
  } else {
    const Index tents = tent_packing_bound(rule, out.env);
    const Index columns = meta ? column_family_bound(*meta, out.env) : 0;
    cert.cells = std::max(tents, columns);
    cert.method = columns > tents ? "column-bound" : "tent-bound";
    cert.derivation = columns > tents ? "per-column distance to the non-final-then-final value laws"
                                      : "disjoint cells whose three parents disagree with the rule";
  }
  cert.distance = static_cast<double>(cert.cells) / cells;
  cert.certified = cert.method != "none" && cert.distance > eps;
  return out;
}

}  // namespace eca
