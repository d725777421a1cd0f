// ecatest: run the testers, verifier and brute-force oracles from the shell.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "eca/bruteforce.hpp"
#include "eca/env_io.hpp"
#include "eca/errors.hpp"
#include "eca/experiment.hpp"
#include "eca/far.hpp"
#include "eca/tester.hpp"
#include "eca/verifier.hpp"

using namespace eca;
using json = nlohmann::json;

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

struct Global {
  std::uint64_t seed = 1;
  bool json = false;
  std::string profile = "paper";
};

std::map<std::string, std::string> parse_kv(std::string_view s) {
  std::map<std::string, std::string> out;
  std::stringstream ss{std::string(s)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParameterError("expected key=value in '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

Configuration make_initial(const std::string& init, Index n, Rng& rng) {
  if (init == "random") return random_initial(n, rng, false);
  if (init == "structured") return random_initial(n, rng, true);
  if (init == "ones") return Configuration::ones(n);
  if (init == "zeros") return Configuration(n);
  if (init == "single") {
    Configuration c(n);
    c.set(n / 2, true);
    return c;
  }
  Configuration c = Configuration::from_string(init);
  if (static_cast<Index>(init.size()) != n) throw ParameterError("initial string length differs from --n");
  return c;
}

// --env takes a file or "gen:rule=maj,n=64,m=64,init=random,strategy=evolving,seed=3"
Environment obtain_env(const std::string& spec, const std::string& rule_default, double eps, std::uint64_t seed) {
  if (spec.rfind("gen:", 0) != 0) return load_environment(spec).env;
  auto kv = parse_kv(spec.substr(4));
  auto get = [&](const std::string& k, const std::string& d) { return kv.count(k) ? kv[k] : d; };
  const Rule rule = parse_rule(get("rule", rule_default));
  const Index n = std::stoll(get("n", "64")), m = std::stoll(get("m", "64"));
  Rng rng(std::stoull(get("seed", std::to_string(seed))));
  const std::string strategy = get("strategy", "evolving");
  const std::string init = get("init", "random");
  if (strategy == "evolving") return evolve(make_initial(init, n, rng), rule, m);
  InstanceSpec is = parse_instance(strategy);
  is.structured = init == "structured";
  return make_far(rule, n, m, eps, rng, is).env;
}

json verdict_json(const Verdict& v) {
  json j{{"decision", decision_name(v.decision)},
         {"reason", v.reason},
         {"variant", variant_name(v.variant)},
         {"delegated", v.delegated}};
  if (v.delegated) j["delegation_reason"] = v.delegation_reason;
  if (!v.accepted()) {
    j["reject_kind"] = reject_kind_name(v.reject_kind);
    if (v.pair) j["pair"] = {{"t", v.pair->t}, {"i", v.pair->i}};
    if (!v.pair_class.empty()) j["class"] = v.pair_class;
    if (!v.requirement.empty()) j["requirement"] = v.requirement;
  }
  j["params"] = {{"delta", v.delta}, {"t1", v.t1}, {"t2", v.t2}, {"grid", v.grid_size}, {"samples", v.samples},
                 {"intervals", v.intervals}};
  json hist = json::object();
  for (const auto& [t, c] : v.stats.per_time) hist[std::to_string(t)] = c;
  j["stats"] = {{"total", v.stats.total}, {"temporal_max", v.stats.temporal_max}, {"per_time", hist}};
  return j;
}

json cert_json(const Certificate& c) {
  return {{"strategy", c.strategy}, {"method", c.method},       {"cells", c.cells},
          {"distance", c.distance}, {"eps", c.eps},             {"exact", c.exact},
          {"certified", c.certified}, {"derivation", c.derivation}};
}

void load_spec(const std::string& path, ExperimentSpec& spec) {
  CLI::App s{"experiment spec"};
  s.allow_config_extras(false);
  s.add_option("--rules", spec.rules);
  s.add_option("--eps", spec.eps);
  s.add_option("--n", spec.n);
  s.add_option("--m", spec.m);
  s.add_option("--trials", spec.trials);
  s.add_option("--strategies", spec.strategies);
  s.add_option("--profile", spec.profile);
  s.add_option("--variant", spec.variant);
  s.add_option("--seed", spec.seed);
  s.add_option("--threads", spec.threads);
  s.add_option("--timing", spec.timing);
  s.add_option("--structured", spec.structured);
  s.add_option("--certify-attempts", spec.certify_attempts);
  s.set_config("--config", path, "", true);
  try {
    s.parse(std::vector<std::string>{});
  } catch (const CLI::ParseError& e) {
    throw ParameterError("experiment spec: " + std::string(e.what()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Property testers for dynamic environments of elementary cellular automata"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "master seed")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--profile", g.profile, "constants profile")->check(CLI::IsMember({"paper", "lab"}))->capture_default_str();

  // test
  auto* t = app.add_subcommand("test", "run a tester on an environment");
  std::string rule_name_s, env_spec, variant = "auto";
  double eps = 0.1;
  t->add_option("--rule", rule_name_s, "rule name or wolfram:<code>")->required();
  t->add_option("--eps", eps, "distance parameter")->required();
  t->add_option("--env", env_spec, "environment file or gen:key=value,...")->required();
  t->add_option("--variant", variant, "auto|grid|wide|fallback")->capture_default_str();

  // verify
  auto* v = app.add_subcommand("verify", "check the six conditions for a rule's metadata");
  int n_max = 12, m_max = 12;
  v->add_option("--rule", rule_name_s)->required();
  v->add_option("--nmax,--n-max", n_max)->capture_default_str();
  v->add_option("--mmax,--m-max", m_max)->capture_default_str();

  // distance
  auto* d = app.add_subcommand("distance", "exact distance to the rule's evolutions (n <= 24)");
  d->add_option("--rule", rule_name_s)->required();
  d->add_option("--env", env_spec)->required();

  // period
  auto* p = app.add_subcommand("period", "longest cycle of the global map (n <= 20)");
  Index n = 8, m = 8;
  p->add_option("--rule", rule_name_s)->required();
  p->add_option("--n", n)->required();

  // genfar
  auto* gf = app.add_subcommand("genfar", "generate an instance with a distance certificate");
  std::string strategy = "row-complement-suffix", out_path;
  bool binary = false, structured = false;
  gf->add_option("--rule", rule_name_s)->required();
  gf->add_option("--strategy", strategy)->capture_default_str();
  gf->add_option("--n", n)->required();
  gf->add_option("--m", m)->required();
  gf->add_option("--eps", eps)->capture_default_str();
  gf->add_option("--out", out_path, "environment file; the certificate goes to <out>.cert.json")->required();
  gf->add_flag("--binary", binary);
  gf->add_flag("--structured", structured, "initial rows with long alternating and constant stretches");

  // experiment
  auto* ex = app.add_subcommand("experiment", "batch trials from a spec file");
  std::string spec_path, csv_path, json_path, trials_path;
  bool timing = false;
  int threads = -1;
  ex->add_option("--spec", spec_path, "TOML spec")->required()->check(CLI::ExistingFile);
  ex->add_option("--out", csv_path, "CSV output (default stdout)");
  ex->add_option("--json-out", json_path);
  ex->add_option("--trials-out", trials_path, "per-trial JSON lines");
  ex->add_flag("--timing", timing, "record wall time (output no longer reproducible)");
  ex->add_option("--threads", threads);

  // evolve
  auto* e = app.add_subcommand("evolve", "write an evolution to a file");
  std::string init = "random";
  e->add_option("--rule", rule_name_s)->required();
  e->add_option("--init", init, "random|structured|ones|zeros|single|<bit string>")->capture_default_str();
  e->add_option("--n", n)->required();
  e->add_option("--m", m)->required();
  e->add_option("--out", out_path, "output file (default stdout, text)");
  e->add_flag("--binary", binary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kError;
  }

  try {
    const Constants constants = constants_for(g.profile);
    if (*t) {
      const Rule rule = parse_rule(rule_name_s);
      Environment env = obtain_env(env_spec, rule_name_s, eps, g.seed);
      QueryOracle oracle(env);
      Rng rng(g.seed);
      const Verdict verdict = run_tester(oracle, rule, eps, rng, constants, parse_variant(variant));
      if (g.json) {
        std::cout << verdict_json(verdict).dump() << '\n';
      } else {
        std::cout << decision_name(verdict.decision);
        if (!verdict.accepted()) std::cout << ": " << verdict.reason;
        std::cout << "\nvariant " << variant_name(verdict.variant) << (verdict.delegated ? " (delegated)" : "")
                  << ", queries " << verdict.stats.total << ", temporal max " << verdict.stats.temporal_max << '\n';
      }
      return verdict.accepted() ? kAccept : kReject;
    }
    if (*v) {
      const RuleMeta& meta = builtin_meta(rule_name_s);
      const auto results = verify_all(meta, n_max, m_max);
      bool ok = true;
      json arr = json::array();
      for (const auto& r : results) {
        ok = ok && r.pass;
        arr.push_back({{"condition", r.condition}, {"pass", r.pass}, {"cases", r.cases},
                       {"counterexample", r.counterexample}});
        if (!g.json)
          std::cout << "condition " << r.condition << ": " << (r.pass ? "pass" : "FAIL  " + r.counterexample) << "  ("
                    << r.cases << " cases)\n";
      }
      if (g.json) std::cout << json{{"rule", meta.name}, {"pass", ok}, {"conditions", arr}}.dump() << '\n';
      return ok ? kAccept : kReject;
    }
    if (*d) {
      const Rule rule = parse_rule(rule_name_s);
      const Environment env = load_environment(env_spec).env;
      const auto rep = bruteforce::exact_distance(env, rule);
      if (g.json)
        std::cout << json{{"distance", rep.distance}, {"cells", rep.differing},
                          {"argmin_initial", rep.argmin_initial.to_string()}, {"ties", rep.ties}}
                         .dump()
                  << '\n';
      else
        std::cout << "distance " << rep.distance << " (" << rep.differing << " cells), initial "
                  << rep.argmin_initial.to_string() << ", " << rep.ties << " optimal initials\n";
      return kAccept;
    }
    if (*p) {
      const Index per = bruteforce::period(parse_rule(rule_name_s), n);
      if (g.json) std::cout << json{{"rule", rule_name_s}, {"n", n}, {"period", per}}.dump() << '\n';
      else std::cout << per << '\n';
      return kAccept;
    }
    if (*gf) {
      const Rule rule = parse_rule(rule_name_s);
      Rng rng(g.seed);
      InstanceSpec is = parse_instance(strategy);
      is.structured = structured;
      const Instance inst = make_far(rule, n, m, eps, rng, is);
      save_environment(out_path, inst.env, rule.wolfram_code(), binary);
      std::ofstream(out_path + ".cert.json") << cert_json(inst.cert).dump(2) << '\n';
      if (g.json) std::cout << cert_json(inst.cert).dump() << '\n';
      else
        std::cout << (inst.cert.certified ? "certified" : "uncertified") << ": distance >= " << inst.cert.distance
                  << " (" << inst.cert.method << ")\n";
      return kAccept;
    }
    if (*ex) {
      ExperimentSpec spec;
      spec.seed = g.seed;
      spec.profile = g.profile;
      load_spec(spec_path, spec);
      if (timing) spec.timing = true;
      if (threads >= 0) spec.threads = static_cast<unsigned>(threads);
      const ResultTable table = run_experiment(spec);
      if (csv_path.empty()) {
        write_csv(std::cout, table);
      } else {
        std::ofstream os(csv_path);
        write_csv(os, table);
      }
      if (!json_path.empty()) {
        std::ofstream os(json_path);
        write_json(os, table);
      }
      if (!trials_path.empty()) {
        std::ofstream os(trials_path);
        write_trials_jsonl(os, table);
      }
      return kAccept;
    }
    if (*e) {
      const Rule rule = parse_rule(rule_name_s);
      Rng rng(g.seed);
      const Environment env = evolve(make_initial(init, n, rng), rule, m);
      if (out_path.empty()) write_text(std::cout, env, rule.wolfram_code());
      else save_environment(out_path, env, rule.wolfram_code(), binary);
      return kAccept;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kError;
  }
  return kError;
}
