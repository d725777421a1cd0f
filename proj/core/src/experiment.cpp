#include "eca/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "eca/errors.hpp"

namespace eca {

namespace {

struct Cell {
  std::string rule;
  Rule parsed;
  Index n, m;
  double eps;
  std::string strategy;
  InstanceSpec instance;
};

std::vector<Cell> expand(const ExperimentSpec& spec) {
  if (spec.rules.empty() || spec.eps.empty() || spec.n.empty() || spec.strategies.empty())
    throw ParameterError("experiment spec needs rules, eps, n and strategies");
  if (spec.m.size() != 1 && spec.m.size() != spec.n.size())
    throw ParameterError("m must hold one value or one per n");
  if (spec.trials < 1) throw ParameterError("trials must be positive");
  std::vector<Cell> cells;
  for (const auto& r : spec.rules)
    for (std::size_t s = 0; s < spec.n.size(); ++s)
      for (double e : spec.eps)
        for (const auto& st : spec.strategies) {
          Cell c{r, parse_rule(r), spec.n[s], spec.m.size() == 1 ? spec.m[0] : spec.m[s], e, st, parse_instance(st)};
          c.instance.structured = spec.structured;
          cells.push_back(c);
        }
  return cells;
}

TrialRecord run_trial(const ExperimentSpec& spec, const Constants& constants, VariantChoice variant, const Cell& cell,
                      std::size_t cell_index, Index trial) {
  TrialRecord rec;
  rec.cell = cell_index;
  rec.trial = trial;
  rec.seed = hash_combine(spec.seed, hash_combine(cell_index, static_cast<std::uint64_t>(trial)));
  Rng rng(rec.seed);
  Instance inst = make_far(cell.parsed, cell.n, cell.m, cell.eps, rng, cell.instance);
  const bool far = cell.instance.kind != InstanceKind::Evolving;
  for (int a = 1; far && !inst.cert.certified && a < spec.certify_attempts; ++a)
    inst = make_far(cell.parsed, cell.n, cell.m, cell.eps, rng, cell.instance);
  rec.certified = inst.cert.certified;
  rec.cert_method = inst.cert.method;
  rec.cert_distance = inst.cert.distance;
  if (far && !inst.cert.certified) return rec;

  QueryOracle oracle(inst.env);
  const auto start = std::chrono::steady_clock::now();
  const Verdict v = run_tester(oracle, cell.parsed, cell.eps, rng, constants, variant);
  const auto stop = std::chrono::steady_clock::now();
  rec.accepted = v.accepted();
  rec.variant = variant_name(v.variant);
  if (v.delegated) rec.variant += "(delegated)";
  rec.reject_kind = reject_kind_name(v.reject_kind);
  rec.pair_class = v.pair_class;
  rec.requirement = v.requirement;
  rec.queries = v.stats.total;
  rec.temporal = v.stats.temporal_max;
  if (spec.timing) rec.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return rec;
}

}  // namespace

ResultTable run_experiment(const ExperimentSpec& spec) {
  const Constants constants = constants_for(spec.profile);
  const VariantChoice variant = parse_variant(spec.variant);
  const std::vector<Cell> cells = expand(spec);
  const std::size_t total = cells.size() * static_cast<std::size_t>(spec.trials);

  ResultTable table;
  table.trials.resize(total);
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (;;) {
      const std::size_t j = next.fetch_add(1);
      if (j >= total) return;
      const std::size_t c = j / spec.trials;
      try {
        table.trials[j] = run_trial(spec, constants, variant, cells[c], c, static_cast<Index>(j % spec.trials));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next = total;
        return;
      }
    }
  };
  unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);

  for (std::size_t c = 0; c < cells.size(); ++c) {
    ResultRow row;
    row.rule = cells[c].rule;
    row.profile = constants.profile;
    row.n = cells[c].n;
    row.m = cells[c].m;
    row.eps = cells[c].eps;
    row.strategy = cells[c].strategy;
    double q = 0, tq = 0, ms = 0;
    for (Index t = 0; t < spec.trials; ++t) {
      const TrialRecord& r = table.trials[c * spec.trials + t];
      if (r.variant.empty()) {
        ++row.uncertified;
        continue;
      }
      if (row.variant.empty()) row.variant = r.variant;
      ++row.trials;
      (r.accepted ? row.accepts : row.rejects) += 1;
      q += static_cast<double>(r.queries);
      tq += static_cast<double>(r.temporal);
      ms += r.ms;
      row.max_queries = std::max(row.max_queries, r.queries);
      row.max_temporal = std::max(row.max_temporal, r.temporal);
    }
    if (row.trials) {
      row.mean_queries = q / static_cast<double>(row.trials);
      row.mean_temporal = tq / static_cast<double>(row.trials);
      row.mean_ms = ms / static_cast<double>(row.trials);
    }
    table.rows.push_back(row);
  }
  return table;
}

namespace {
std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}
}  // namespace

void write_csv(std::ostream& os, const ResultTable& table) {
  os << "rule,variant,profile,n,m,eps,strategy,trials,accepts,rejects,mean_queries,max_queries,mean_temporal,"
        "max_temporal,mean_ms\n";
  for (const auto& r : table.rows)
    os << r.rule << ',' << r.variant << ',' << r.profile << ',' << r.n << ',' << r.m << ',' << num(r.eps) << ','
       << r.strategy << ',' << r.trials << ',' << r.accepts << ',' << r.rejects << ',' << num(r.mean_queries) << ','
       << r.max_queries << ',' << num(r.mean_temporal) << ',' << r.max_temporal << ',' << num(r.mean_ms) << '\n';
}

void write_json(std::ostream& os, const ResultTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"rule", r.rule},
                    {"variant", r.variant},
                    {"profile", r.profile},
                    {"n", r.n},
                    {"m", r.m},
                    {"eps", r.eps},
                    {"strategy", r.strategy},
                    {"trials", r.trials},
                    {"accepts", r.accepts},
                    {"rejects", r.rejects},
                    {"mean_queries", r.mean_queries},
                    {"max_queries", r.max_queries},
                    {"mean_temporal", r.mean_temporal},
                    {"max_temporal", r.max_temporal},
                    {"mean_ms", r.mean_ms},
                    {"uncertified", r.uncertified}});
  os << rows.dump(2) << '\n';
}

void write_trials_jsonl(std::ostream& os, const ResultTable& table) {
  for (const auto& t : table.trials) {
    nlohmann::json j{{"cell", t.cell},
                     {"trial", t.trial},
                     {"seed", t.seed},
                     {"certified", t.certified},
                     {"certificate", t.cert_method},
                     {"cert_distance", t.cert_distance}};
    if (!t.variant.empty()) {
      j["variant"] = t.variant;
      j["decision"] = t.accepted ? "Accept" : "Reject";
      j["reject_kind"] = t.reject_kind;
      j["pair_class"] = t.pair_class;
      j["requirement"] = t.requirement;
      j["queries"] = t.queries;
      j["temporal"] = t.temporal;
    }
    os << j.dump() << '\n';
  }
}

}  // namespace eca
