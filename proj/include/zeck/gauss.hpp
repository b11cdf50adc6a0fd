#pragma once

// Gaussian behaviour of the step count K for starts (n+1, ..., n+1): the
// standardized coordinate, the limiting Gaussian pmf with mean n/2 + 1 and
// variance n/(4d), Kolmogorov-Smirnov distance of the exact law to a fitted
// normal, and the asymptotic number of paths
//
//   s_d(n+1) ~ 2^(nd) (pi n / 2)^((1-d)/2) d^(-1/2).

#include "zeck/combinatorics.hpp"

#include <cstdint>
#include <vector>

namespace zeck {

/// k = mu + ell * sqrt(n) / 2 with mu = n/2 + 1. The offset k - mu is kept exact;
/// sqrt(n) is the only irrational piece.
struct Standardized {
  ExactRatio offset;  // k - mu
  std::uint64_t n = 0;

  /// ell^2 = 4 (k - mu)^2 / n, exact.
  ExactRatio ell_squared() const;
  double ell() const;
};

/// Throws std::invalid_argument unless 1 <= k <= n + 1 and n >= 1.
Standardized standardize(std::uint64_t k, unsigned dim, std::uint64_t n);

/// Standard normal CDF via erfc; absolute error well below 1e-15.
double normal_cdf(double x);

/// Normal density with the given mean and variance.
double normal_density(double x, double mean, double variance);

/// Limiting Gaussian pmf for start n + 1:
/// (2 pi n / (4d))^(-1/2) exp(-d (k - mu)^2 / (n/2)).
double gaussian_pmf_approx(unsigned dim, std::uint64_t n, std::uint64_t k);

enum class FitParameters {
  own_moments,  // the distribution's exact mean and variance
  limit,        // n/2 + 1 and n/(4d)
};

/// sup_k |F(k) - Phi((k + 1/2 - mean) / sd)| over the support.
/// Throws std::invalid_argument when dist.start() <= 2.
double ks_distance(const StepDistribution& dist, FitParameters fit = FitParameters::own_moments);

/// The asymptotic path count, held as log2 so large n*d never overflows.
struct AsymptoticCount {
  double log2_value = 0.0;
  double value() const;  // may be +inf
  double log_value() const;
};
AsymptoticCount asymptotic_total_paths(unsigned dim, std::uint64_t n);

/// s_d(n+1) divided by the asymptotic estimate, evaluated in log space.
double count_ratio(unsigned dim, std::uint64_t n);

struct GaussianSummary {
  unsigned dim = 0;
  std::uint64_t start = 0;  // n + 1
  double fit_mean = 0.0;
  double fit_variance = 0.0;
  double ks_distance = 0.0;
  double variance_ratio = 0.0;  // exact variance * 4d / n
  double count_ratio = 0.0;
};

/// Requires n >= 2.
GaussianSummary summarize(unsigned dim, std::uint64_t n, FitParameters fit = FitParameters::own_moments);

/// Step-count law when the start is itself drawn from (i, ..., i), i in [1, n],
/// every path from every start weighted equally. Entry k - 1 is P(K = k).
std::vector<ExactRatio> mixture_pmf(unsigned dim, std::uint64_t n);

}  // namespace zeck
