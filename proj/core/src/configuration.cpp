#include "eca/configuration.hpp"

#include <bit>

#include "eca/errors.hpp"
#include "eca/rule.hpp"

namespace eca {

Pattern Pattern::from_string(std::string_view s) {
  Pattern p;
  p.len = static_cast<int>(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw FormatError("pattern must be a 0/1 string");
    p.bits = (p.bits << 1) | unsigned(ch == '1');
  }
  return p;
}

std::string Pattern::to_string() const {
  std::string s(len, '0');
  for (int j = 0; j < len; ++j)
    if (at(j)) s[j] = '1';
  return s;
}

Configuration::Configuration(Index n) : n_(n) {
  if (n < 3) throw InvalidConfiguration("configuration length must be at least 3");
  words_.assign((n + 63) / 64, 0);
}

Configuration Configuration::from_string(std::string_view s) {
  Configuration c(static_cast<Index>(s.size()));
  for (Index i = 0; i < c.n_; ++i) {
    char ch = s[i];
    if (ch != '0' && ch != '1') throw FormatError("configuration must be a 0/1 string");
    if (ch == '1') c.set(i, true);
  }
  return c;
}

Configuration Configuration::ones(Index n) {
  Configuration c(n);
  for (auto& w : c.words_) w = ~0ull;
  c.trim();
  return c;
}

void Configuration::trim() {
  if (n_ & 63) words_.back() &= (1ull << (n_ & 63)) - 1;
}

void Configuration::set(Index i, bool v) {
  Index j = wrap(i, n_);
  std::uint64_t mask = 1ull << (j & 63);
  if (v)
    words_[j >> 6] |= mask;
  else
    words_[j >> 6] &= ~mask;
}

void Configuration::flip(Index i) {
  Index j = wrap(i, n_);
  words_[j >> 6] ^= 1ull << (j & 63);
}

Pattern Configuration::window(Index i, int r) const {
  Pattern p{0, 2 * r + 1};
  for (Index d = -r; d <= r; ++d) p.bits = (p.bits << 1) | unsigned(get(i + d));
  return p;
}

Index Configuration::popcount() const {
  Index s = 0;
  for (auto w : words_) s += std::popcount(w);
  return s;
}

Configuration Configuration::complemented() const {
  Configuration c = *this;
  for (auto& w : c.words_) w = ~w;
  c.trim();
  return c;
}

std::string Configuration::to_string() const {
  std::string s(n_, '0');
  for (Index i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

Index hamming(const Configuration& a, const Configuration& b) {
  if (a.size() != b.size()) throw ShapeMismatch("configurations differ in length");
  Index s = 0;
  for (std::size_t w = 0; w < a.words().size(); ++w) s += std::popcount(a.words()[w] ^ b.words()[w]);
  return s;
}

Configuration evolve_step(const Configuration& config, const Rule& rule) {
  const Index n = config.size();
  if (n < 3) throw InvalidConfiguration("configuration length must be at least 3");
  const auto& c = config.words();
  const std::size_t nw = c.size();
  Configuration out(n);
  auto& o = out.words();

  const std::uint64_t last_bit = config.get(n - 1);
  const std::uint64_t first_bit = config.get(0);
  const int code = rule.wolfram_code();

  for (std::size_t w = 0; w < nw; ++w) {
    std::uint64_t C = c[w];
    std::uint64_t L = (C << 1) | (w == 0 ? last_bit : c[w - 1] >> 63);
    std::uint64_t R = (C >> 1) | (w + 1 < nw ? c[w + 1] << 63 : 0);
    if (w + 1 == nw) {
      const int top = static_cast<int>((n - 1) & 63);
      R = (R & ~(1ull << top)) | (first_bit << top);
    }
    std::uint64_t acc = 0;
    for (unsigned idx = 0; idx < 8; ++idx) {
      if (!((code >> idx) & 1)) continue;
      acc |= ((idx & 4) ? L : ~L) & ((idx & 2) ? C : ~C) & ((idx & 1) ? R : ~R);
    }
    o[w] = acc;
  }
  out.trim();
  return out;
}

}  // namespace eca
