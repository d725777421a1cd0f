#include "eca/environment.hpp"

#include <cmath>
#include <limits>

#include "eca/errors.hpp"

namespace eca {

Configuration EnvSource::row(Index t) {
  Configuration c(n());
  for (Index i = 0; i < n(); ++i)
    if (at(t, i)) c.set(i, true);
  return c;
}

Environment::Environment(std::vector<Configuration> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidConfiguration("environment needs at least one row");
  for (const auto& r : rows_)
    if (r.size() != rows_.front().size()) throw ShapeMismatch("environment rows differ in length");
}

Environment Environment::complemented() const {
  std::vector<Configuration> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(r.complemented());
  return Environment(std::move(rows));
}

Environment evolve(const Configuration& initial, const Rule& rule, Index m) {
  if (m < 1) throw ParameterError("evolve needs m >= 1");
  std::vector<Configuration> rows;
  rows.reserve(m);
  rows.push_back(initial);
  for (Index t = 1; t < m; ++t) rows.push_back(evolve_step(rows.back(), rule));
  return Environment(std::move(rows));
}

Environment materialize(EnvSource& src) {
  std::vector<Configuration> rows;
  rows.reserve(src.m());
  for (Index t = 0; t < src.m(); ++t) rows.push_back(src.row(t));
  return Environment(std::move(rows));
}

Index differing_cells(const Environment& a, const Environment& b) {
  if (a.m() != b.m() || a.n() != b.n()) throw ShapeMismatch("environments differ in shape");
  Index s = 0;
  for (Index t = 0; t < a.m(); ++t) s += hamming(a[t], b[t]);
  return s;
}

double env_distance(const Environment& a, const Environment& b) {
  return static_cast<double>(differing_cells(a, b)) / (static_cast<double>(a.m()) * static_cast<double>(a.n()));
}

LazyEnvironment::LazyEnvironment(Configuration initial, Rule rule, Index m)
    : current_(std::move(initial)), rule_(rule), m_(m) {
  if (m < 1) throw ParameterError("lazy environment needs m >= 1");
}

void LazyEnvironment::advance_to(Index t) {
  if (t < 0 || t >= m_) throw RangeError("time outside [0, m)");
  if (t < time_) throw TimeConformityViolation("lazy environment cannot rewind");
  while (time_ < t) {
    current_ = evolve_step(current_, rule_);
    ++time_;
  }
}

bool LazyEnvironment::at(Index t, Index i) {
  advance_to(t);
  return current_.get(i);
}

Configuration LazyEnvironment::row(Index t) {
  advance_to(t);
  return current_;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) { return mix64(a ^ mix64(b + 0x632be59bd9b4e019ull)); }

NoisyEnvironment::NoisyEnvironment(std::shared_ptr<EnvSource> base, double p, std::uint64_t seed)
    : base_(std::move(base)), seed_(seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("noise rate must lie in [0,1]");
  never_ = p == 0.0;
  threshold_ = p >= 1.0 ? std::numeric_limits<std::uint64_t>::max()
                        : static_cast<std::uint64_t>(std::ldexp(p, 64));
}

bool NoisyEnvironment::flipped(Index t, Index i) const {
  if (never_) return false;
  std::uint64_t h = hash_combine(hash_combine(seed_, static_cast<std::uint64_t>(t)), static_cast<std::uint64_t>(i));
  return h <= threshold_;
}

bool NoisyEnvironment::at(Index t, Index i) { return base_->at(t, i) != flipped(t, i); }

TiledEnvironment::TiledEnvironment(std::shared_ptr<EnvSource> base, Index copies)
    : base_(std::move(base)), copies_(copies) {
  if (copies < 1) throw ParameterError("tiling needs at least one copy");
}

SuffixComplementEnvironment::SuffixComplementEnvironment(std::shared_ptr<EnvSource> base, Index from)
    : base_(std::move(base)), from_(from) {}

Configuration SuffixComplementEnvironment::row(Index t) {
  Configuration r = base_->row(t);
  return t >= from_ ? r.complemented() : r;
}

}  // namespace eca
