#pragma once

#include <cstdint>
#include <vector>

namespace eca {

using Index = std::int64_t;

inline Index wrap(Index a, Index n) {
  Index r = a % n;
  return r < 0 ? r + n : r;
}

// (j - i) mod n
inline Index ddist(Index i, Index j, Index n) { return wrap(j - i, n); }

inline Index dist(Index i, Index j, Index n) {
  Index d = ddist(i, j, n);
  return d < n - d ? d : n - d;
}

// shortest signed step from `from` to `to`; ties (n even, d = n/2) go forward
inline Index displacement(Index from, Index to, Index n) {
  Index d = ddist(from, to, n);
  return d <= n - d ? d : d - n;
}

inline bool parity(Index x) { return (x & 1) != 0; }

struct TimeLocation {
  Index t = 0;
  Index i = 0;
  friend bool operator==(const TimeLocation&, const TimeLocation&) = default;
};

bool descends(TimeLocation child, TimeLocation ancestor, Index n);

// locations i-r .. i+r, wrapped
std::vector<Index> neighborhood(Index i, Index r, Index n);

// number of locations in the wrapped interval [i, j]
inline Index interval_length(Index i, Index j, Index n) { return ddist(i, j, n) + 1; }

inline bool in_interval(Index x, Index i, Index j, Index n) { return ddist(i, x, n) <= ddist(i, j, n); }

}  // namespace eca
