#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "eca/configuration.hpp"
#include "eca/rule.hpp"

namespace eca {

// Read access to an m x n space-time matrix. Backends may compute rows on
// demand, so access is non-const.
class EnvSource {
 public:
  virtual ~EnvSource() = default;
  virtual Index n() const = 0;
  virtual Index m() const = 0;
  virtual bool at(Index t, Index i) = 0;
  virtual Configuration row(Index t);
};

// Every row kept in memory.
class Environment : public EnvSource {
 public:
  Environment() = default;
  explicit Environment(std::vector<Configuration> rows);

  Index n() const override { return rows_.empty() ? 0 : rows_.front().size(); }
  Index m() const override { return static_cast<Index>(rows_.size()); }
  bool at(Index t, Index i) override { return rows_.at(t).get(i); }
  Configuration row(Index t) override { return rows_.at(t); }

  bool get(Index t, Index i) const { return rows_.at(t).get(i); }
  const Configuration& operator[](Index t) const { return rows_.at(t); }
  Configuration& operator[](Index t) { return rows_.at(t); }
  const std::vector<Configuration>& rows() const { return rows_; }

  Environment complemented() const;

  friend bool operator==(const Environment& a, const Environment& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<Configuration> rows_;
};

Environment evolve(const Configuration& initial, const Rule& rule, Index m);
Environment materialize(EnvSource& src);

Index differing_cells(const Environment& a, const Environment& b);
double env_distance(const Environment& a, const Environment& b);

// Evolves on demand and keeps only the current row. Rows must be requested
// in non-decreasing time order.
class LazyEnvironment : public EnvSource {
 public:
  LazyEnvironment(Configuration initial, Rule rule, Index m);

  Index n() const override { return current_.size(); }
  Index m() const override { return m_; }
  bool at(Index t, Index i) override;
  Configuration row(Index t) override;

  Index current_time() const { return time_; }
  // rows held simultaneously at any point (instrumentation)
  int rows_retained() const { return 1; }

 private:
  void advance_to(Index t);
  Configuration current_;
  Rule rule_;
  Index m_;
  Index time_ = 0;
};

// Flips each cell independently with probability p; the flip decision is a
// hash of (seed, t, i), so no mask is stored.
class NoisyEnvironment : public EnvSource {
 public:
  NoisyEnvironment(std::shared_ptr<EnvSource> base, double p, std::uint64_t seed);

  Index n() const override { return base_->n(); }
  Index m() const override { return base_->m(); }
  bool at(Index t, Index i) override;
  bool flipped(Index t, Index i) const;

 private:
  std::shared_ptr<EnvSource> base_;
  std::uint64_t threshold_;
  std::uint64_t seed_;
  bool never_;
};

// A base ring of size p repeated `copies` times. Evolution commutes with
// tiling, so tiling an evolving base gives an evolving environment on the
// large ring without storing it.
class TiledEnvironment : public EnvSource {
 public:
  TiledEnvironment(std::shared_ptr<EnvSource> base, Index copies);

  Index n() const override { return base_->n() * copies_; }
  Index m() const override { return base_->m(); }
  bool at(Index t, Index i) override { return base_->at(t, wrap(i, base_->n())); }

 private:
  std::shared_ptr<EnvSource> base_;
  Index copies_;
};

// Rows t >= from are bitwise complemented.
class SuffixComplementEnvironment : public EnvSource {
 public:
  SuffixComplementEnvironment(std::shared_ptr<EnvSource> base, Index from);

  Index n() const override { return base_->n(); }
  Index m() const override { return base_->m(); }
  bool at(Index t, Index i) override { return base_->at(t, i) != (t >= from_); }
  Configuration row(Index t) override;

 private:
  std::shared_ptr<EnvSource> base_;
  Index from_;
};

std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b);

}  // namespace eca
