#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eca {

// A short bit string; the leftmost symbol is the most significant bit, so a
// 3-pattern's value is the Wolfram table index of that neighbourhood.
struct Pattern {
  std::uint32_t bits = 0;
  int len = 0;

  static Pattern from_string(std::string_view s);
  std::string to_string() const;

  bool at(int j) const { return (bits >> (len - 1 - j)) & 1u; }
  bool center() const { return at(len / 2); }
  Pattern complement() const { return {bits ^ ((1u << len) - 1u), len}; }
  Pattern sub(int from, int length) const {
    return {(bits >> (len - from - length)) & ((1u << length) - 1u), length};
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

}  // namespace eca
