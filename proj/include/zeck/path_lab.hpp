#pragma once

// Explicit simple jump paths: exhaustive enumeration for small starts, exact
// uniform sampling for large ones, and per-dimension gap statistics.

#include "zeck/combinatorics.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace zeck {

class LatticePoint {
 public:
  explicit LatticePoint(std::vector<std::uint64_t> coords);

  std::size_t dim() const { return coords_.size(); }
  std::uint64_t operator[](std::size_t j) const { return coords_[j]; }
  std::span<const std::uint64_t> coords() const { return coords_; }
  bool is_origin() const;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<std::uint64_t> coords_;
};

/// Start point with every coordinate >= 1, end at the origin, and every
/// coordinate strictly decreasing from one point to the next. The constructor
/// rejects anything else with std::invalid_argument.
class JumpPath {
 public:
  explicit JumpPath(std::vector<LatticePoint> points);

  std::size_t dim() const { return points_.front().dim(); }
  /// Number of steps (points - 1).
  std::size_t length() const { return points_.size() - 1; }
  const LatticePoint& start() const { return points_.front(); }
  std::span<const LatticePoint> points() const { return points_; }

  friend bool operator==(const JumpPath&, const JumpPath&) = default;
  friend auto operator<=>(const JumpPath&, const JumpPath&) = default;

 private:
  std::vector<LatticePoint> points_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

class EnumerationCapExceeded : public std::length_error {
 public:
  EnumerationCapExceeded(ExactInt paths, std::uint64_t cap);
  const ExactInt& paths() const { return paths_; }
  std::uint64_t cap() const { return cap_; }

 private:
  ExactInt paths_;
  std::uint64_t cap_;
};

/// Every simple jump path from (n, ..., n), depth-first with the next point
/// taken in descending lexicographic order (the origin therefore last).
/// Throws EnumerationCapExceeded when s_d(n) > cap.
std::vector<JumpPath> enumerate_paths(unsigned dim, std::uint64_t n,
                                      std::uint64_t cap = kDefaultEnumerationCap);

/// Uniform sampler over all s_d(n) paths from (n, ..., n).
///
/// Draw order per path: the length k by exact inverse CDF (a uniform integer
/// below s_d(n) located among the cumulative counts t_d(1..k, n)), then for each
/// dimension in turn a uniform (k-1)-subset of {1, ..., n-1} by Floyd's method.
/// Counts factor over dimensions once k is fixed, so this is exactly uniform.
///
/// Randomness comes from std::mt19937_64; results are reproducible for a given
/// seed and build of the standard library.
class PathSampler {
 public:
  PathSampler(unsigned dim, std::uint64_t n);

  unsigned dim() const { return dim_; }
  std::uint64_t n() const { return n_; }

  std::uint64_t draw_length(std::mt19937_64& rng) const;
  JumpPath draw(std::mt19937_64& rng) const;

 private:
  ExactInt uniform_below_total(std::mt19937_64& rng) const;

  unsigned dim_;
  std::uint64_t n_;
  std::vector<ExactInt> cumulative_;  // cumulative_[k-1] = sum_{i<=k} t_d(i, n)
  std::size_t total_bits_;
};

/// One path drawn by a PathSampler from a generator seeded with `seed`.
JumpPath sample_path(unsigned dim, std::uint64_t n, std::uint64_t seed);

/// `count` consecutive draws from a single generator seeded with `seed`.
std::vector<JumpPath> sample_paths(unsigned dim, std::uint64_t n, std::uint64_t count, std::uint64_t seed);

/// Gap = x_{i,j} - x_{i+1,j}, recorded separately for each dimension j.
struct GapHistogram {
  std::vector<std::map<std::uint64_t, std::uint64_t>> per_dim;
  std::uint64_t total_steps = 0;
  std::uint64_t paths = 0;

  /// Accumulates one path; throws std::invalid_argument on a dimension mismatch.
  void add(const JumpPath& path);
};

/// Throws std::invalid_argument on an empty input or mixed dimensions.
GapHistogram gap_histogram(std::span<const JumpPath> paths);

/// Relative frequency of each length k in [1, n] over `samples` draws of
/// sample_paths(dim, n, samples, seed).
std::map<std::uint64_t, double> empirical_pmf(unsigned dim, std::uint64_t n, std::uint64_t samples,
                                              std::uint64_t seed);

}  // namespace zeck
