#pragma once

// Exact counts of simple jump paths: walks from a start point to the origin in
// which every coordinate strictly decreases at every step.
//
//   t_d(k; a_1..a_d) = prod_j C(a_j - 1, k - 1)     paths with exactly k steps
//   s_d(n)           = sum_{k=1..n} t_d(k; n..n)    all paths from (n, ..., n)

#include "zeck/exact.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace zeck {

/// C(n, k) by the multiplicative formula with exact division; 0 when k > n.
ExactInt binomial(std::uint64_t n, std::uint64_t k);

/// Row C(n, 0..n). Rows are memoized process-wide; the returned row is immutable
/// and safe to share between threads.
std::shared_ptr<const std::vector<ExactInt>> binomial_row(std::uint64_t n);

/// Number of simple jump paths of exactly k steps from `starts` to the origin.
/// Returns 0 for k > min(starts) so sums over k can run to any bound.
/// Throws std::invalid_argument on k == 0, empty `starts` or a zero start coordinate.
ExactInt path_count(std::uint64_t k, std::span<const std::uint64_t> starts);

/// t_d(k, n): path_count with the equal start (n, ..., n).
ExactInt path_count(unsigned dim, std::uint64_t k, std::uint64_t n);

/// s_d(n). Throws std::invalid_argument on dim == 0 or n == 0.
ExactInt total_paths(unsigned dim, std::uint64_t n);

/// Exact distribution of the step count K over all simple jump paths from
/// (start, ..., start), each path weighted equally.
class StepDistribution {
 public:
  StepDistribution(unsigned dim, std::uint64_t start, std::vector<ExactInt> counts);

  unsigned dim() const { return dim_; }
  std::uint64_t start() const { return start_; }
  /// Largest possible step count; support is {1, ..., max_steps()}.
  std::uint64_t max_steps() const { return start_; }

  const ExactInt& total() const { return total_; }
  /// t_d(k, start); k in [1, start], throws std::out_of_range otherwise.
  const ExactInt& count(std::uint64_t k) const;
  /// p_d(k, start) in lowest terms.
  const ExactRatio& probability(std::uint64_t k) const;

  std::span<const ExactInt> counts() const { return counts_; }
  std::span<const ExactRatio> pmf() const { return pmf_; }

 private:
  unsigned dim_;
  std::uint64_t start_;
  std::vector<ExactInt> counts_;  // index k - 1
  ExactInt total_;
  std::vector<ExactRatio> pmf_;  // index k - 1
};

/// p_d(., n) for the start (n, ..., n).
StepDistribution step_pmf(unsigned dim, std::uint64_t n);

}  // namespace zeck
