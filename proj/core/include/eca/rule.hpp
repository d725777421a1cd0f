#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace eca {

class Rule {
 public:
  Rule() = default;
  static Rule from_wolfram(int code);
  static Rule from_table(const std::array<std::uint8_t, 8>& table);

  // table index is 4*left + 2*centre + right
  bool operator()(unsigned idx) const { return (code_ >> (idx & 7u)) & 1u; }
  bool apply(bool l, bool c, bool r) const { return (*this)((l << 2) | (c << 1) | unsigned(r)); }
  int wolfram_code() const { return code_; }
  std::array<std::uint8_t, 8> table() const;

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  explicit Rule(int code) : code_(code) {}
  int code_ = 0;
};

Rule complement_rule(const Rule& r);

namespace rules {
inline constexpr int kOr = 254;
inline constexpr int kAnd = 128;
inline constexpr int kNor = 1;
inline constexpr int kNand = 127;
inline constexpr int kMaj = 232;
inline constexpr int kMin = 23;
inline constexpr int kFih = 77;
inline constexpr int kFuh = 178;
inline constexpr int kAll1 = 255;
inline constexpr int kAll0 = 0;
inline constexpr int kXor = 150;
inline constexpr int kIdentity = 204;
}  // namespace rules

// symbolic names (or, and, nor, nand, maj, min, fih, fuh, all1, all0, xor)
// or "wolfram:<0-255>"
Rule parse_rule(std::string_view name);
std::string rule_name(const Rule& r);

}  // namespace eca
