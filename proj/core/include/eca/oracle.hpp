#pragma once

#include <map>
#include <vector>

#include "eca/environment.hpp"
#include "eca/pattern.hpp"

namespace eca {

struct OracleStats {
  Index total = 0;
  Index temporal_max = 0;
  std::map<Index, Index> per_time;
};

// Query access that refuses to go back in time and counts every read.
class QueryOracle {
 public:
  explicit QueryOracle(EnvSource& source) : source_(source) {}

  Index n() const { return source_.n(); }
  Index m() const { return source_.m(); }

  bool query(Index t, Index i);
  Pattern query_window(Index t, Index i, int r);
  OracleStats stats() const;
  Index time_floor() const { return floor_; }

  void record(bool on) { recording_ = on; }
  const std::vector<TimeLocation>& log() const { return log_; }

 private:
  EnvSource& source_;
  Index floor_ = 0;
  Index total_ = 0;
  std::map<Index, Index> per_time_;
  bool recording_ = false;
  std::vector<TimeLocation> log_;
};

}  // namespace eca
