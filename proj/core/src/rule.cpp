#include "eca/rule.hpp"

#include <charconv>
#include <map>

#include "eca/errors.hpp"

namespace eca {

Rule Rule::from_wolfram(int code) {
  if (code < 0 || code > 255) throw ParameterError("wolfram code must lie in 0..255");
  return Rule(code);
}

Rule Rule::from_table(const std::array<std::uint8_t, 8>& table) {
  int code = 0;
  for (int idx = 0; idx < 8; ++idx) {
    if (table[idx] > 1) throw ParameterError("rule table entries must be 0 or 1");
    code |= table[idx] << idx;
  }
  return Rule(code);
}

std::array<std::uint8_t, 8> Rule::table() const {
  std::array<std::uint8_t, 8> t{};
  for (unsigned idx = 0; idx < 8; ++idx) t[idx] = (*this)(idx);
  return t;
}

Rule complement_rule(const Rule& r) {
  std::array<std::uint8_t, 8> t{};
  for (unsigned idx = 0; idx < 8; ++idx) t[idx] = 1 - r(7 - idx);
  return Rule::from_table(t);
}

namespace {
const std::map<std::string, int, std::less<>>& names() {
  static const std::map<std::string, int, std::less<>> m = {
      {"or", rules::kOr},     {"and", rules::kAnd},   {"nor", rules::kNor},   {"nand", rules::kNand},
      {"maj", rules::kMaj},   {"min", rules::kMin},   {"fih", rules::kFih},   {"fuh", rules::kFuh},
      {"all1", rules::kAll1}, {"all0", rules::kAll0}, {"xor", rules::kXor},
  };
  return m;
}
}  // namespace

Rule parse_rule(std::string_view name) {
  if (auto it = names().find(name); it != names().end()) return Rule::from_wolfram(it->second);
  constexpr std::string_view prefix = "wolfram:";
  if (name.substr(0, prefix.size()) == prefix) {
    auto digits = name.substr(prefix.size());
    int code = -1;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), code);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || code < 0 || code > 255)
      throw UnknownName("bad wolfram code in rule name: " + std::string(name));
    return Rule::from_wolfram(code);
  }
  throw UnknownName("unknown rule: " + std::string(name));
}

std::string rule_name(const Rule& r) {
  for (const auto& [name, code] : names())
    if (code == r.wolfram_code()) return name;
  return "wolfram:" + std::to_string(r.wolfram_code());
}

}  // namespace eca
