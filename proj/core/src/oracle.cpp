#include "eca/oracle.hpp"

#include <algorithm>
#include <string>

#include "eca/errors.hpp"

namespace eca {

bool QueryOracle::query(Index t, Index i) {
  if (t < 0 || t >= m()) throw RangeError("query time outside [0, m)");
  if (i < 0 || i >= n()) throw RangeError("query location outside [0, n)");
  if (t < floor_)
    throw TimeConformityViolation("query at t=" + std::to_string(t) + " after a query at t=" + std::to_string(floor_));
  floor_ = t;
  ++total_;
  ++per_time_[t];
  if (recording_) log_.push_back({t, i});
  return source_.at(t, i);
}

Pattern QueryOracle::query_window(Index t, Index i, int r) {
  Pattern p{0, 2 * r + 1};
  for (Index d = -r; d <= r; ++d) p.bits = (p.bits << 1) | unsigned(query(t, wrap(i + d, n())));
  return p;
}

OracleStats QueryOracle::stats() const {
  OracleStats s;
  s.total = total_;
  s.per_time = per_time_;
  for (const auto& [t, c] : per_time_) s.temporal_max = std::max(s.temporal_max, c);
  return s;
}

}  // namespace eca
