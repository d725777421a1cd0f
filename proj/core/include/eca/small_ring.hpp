#pragma once

#include <cstdint>

#include "eca/rule.hpp"

// Rings of at most 32 cells packed into one integer (cell i is bit i); used by
// the exhaustive checks.
namespace eca::small {

inline std::uint32_t mask_of(int n) { return n >= 32 ? ~0u : (1u << n) - 1u; }

// bit i = cell i-1
inline std::uint32_t left_of(std::uint32_t c, int n) { return ((c << 1) | (c >> (n - 1))) & mask_of(n); }
// bit i = cell i+1
inline std::uint32_t right_of(std::uint32_t c, int n) { return ((c >> 1) | (c << (n - 1))) & mask_of(n); }

inline std::uint32_t match(std::uint32_t L, std::uint32_t C, std::uint32_t R, unsigned idx) {
  return ((idx & 4) ? L : ~L) & ((idx & 2) ? C : ~C) & ((idx & 1) ? R : ~R);
}

inline std::uint32_t step(std::uint32_t c, int n, const Rule& rule) {
  const std::uint32_t L = left_of(c, n), R = right_of(c, n);
  std::uint32_t out = 0;
  for (unsigned idx = 0; idx < 8; ++idx)
    if (rule(idx)) out |= match(L, c, R, idx);
  return out & mask_of(n);
}

inline bool bit(std::uint32_t c, std::int64_t i, int n) {
  std::int64_t j = i % n;
  if (j < 0) j += n;
  return (c >> j) & 1u;
}

inline std::uint32_t window(std::uint32_t c, std::int64_t i, int n, int k) {
  std::uint32_t w = 0;
  for (int d = -k; d <= k; ++d) w = (w << 1) | bit(c, i + d, n);
  return w;
}

}  // namespace eca::small
