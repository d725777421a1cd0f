#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eca/far.hpp"
#include "eca/tester.hpp"

namespace eca {

struct ExperimentSpec {
  std::vector<std::string> rules{"maj"};
  std::vector<double> eps{0.1};
  std::vector<Index> n{256};
  std::vector<Index> m{256};  // paired with n by position; a single value applies to all
  Index trials = 100;
  std::vector<std::string> strategies{"evolving"};
  std::string profile = "lab";
  std::string variant = "auto";
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = all cores
  bool timing = false;   // wall time makes output non-reproducible
  bool structured = true;
  int certify_attempts = 20;  // redraws for an uncertified far instance
};

struct TrialRecord {
  std::size_t cell = 0;
  Index trial = 0;
  std::uint64_t seed = 0;
  bool accepted = true;
  std::string variant;
  std::string reject_kind;
  std::string pair_class;
  std::string requirement;
  Index queries = 0;
  Index temporal = 0;
  double ms = 0;
  bool certified = false;
  std::string cert_method;
  double cert_distance = 0;
};

struct ResultRow {
  std::string rule, variant, profile;
  Index n = 0, m = 0;
  double eps = 0;
  std::string strategy;
  Index trials = 0, accepts = 0, rejects = 0;
  double mean_queries = 0;
  Index max_queries = 0;
  double mean_temporal = 0;
  Index max_temporal = 0;
  double mean_ms = 0;
  Index uncertified = 0;  // far instances dropped for lack of a certificate

  double reject_rate() const { return trials ? static_cast<double>(rejects) / static_cast<double>(trials) : 0.0; }
};

struct ResultTable {
  std::vector<ResultRow> rows;
  std::vector<TrialRecord> trials;
};

ResultTable run_experiment(const ExperimentSpec& spec);

void write_csv(std::ostream& os, const ResultTable& table);
void write_json(std::ostream& os, const ResultTable& table);
void write_trials_jsonl(std::ostream& os, const ResultTable& table);

}  // namespace eca
