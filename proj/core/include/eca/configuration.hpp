#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "eca/pattern.hpp"
#include "eca/ring.hpp"

namespace eca {

class Rule;

// One time slice: a cyclic bit string, packed 64 cells per word (cell i is
// bit i % 64 of word i / 64). Bits past n in the last word are kept zero.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(Index n);

  static Configuration from_string(std::string_view s);
  static Configuration ones(Index n);

  template <class Rng>
  static Configuration random(Index n, Rng& rng) {
    Configuration c(n);
    for (auto& w : c.words_) w = static_cast<std::uint64_t>(rng());
    c.trim();
    return c;
  }

  Index size() const { return n_; }
  bool get(Index i) const {
    Index j = wrap(i, n_);
    return (words_[j >> 6] >> (j & 63)) & 1u;
  }
  bool operator[](Index i) const { return get(i); }
  void set(Index i, bool v);
  void flip(Index i);

  // the (2r+1)-window centred at i, leftmost cell most significant
  Pattern window(Index i, int r) const;

  Index popcount() const;
  Configuration complemented() const;
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }
  void trim();

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  Index n_ = 0;
  std::vector<std::uint64_t> words_;
};

Index hamming(const Configuration& a, const Configuration& b);

Configuration evolve_step(const Configuration& config, const Rule& rule);

}  // namespace eca
