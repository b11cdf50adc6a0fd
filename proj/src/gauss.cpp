#include "zeck/gauss.hpp"

#include "zeck/dist_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zeck {

ExactRatio Standardized::ell_squared() const {
  return make_ratio(offset.get_num() * offset.get_num() * 4,
                    offset.get_den() * offset.get_den() * static_cast<unsigned long>(n));
}

double Standardized::ell() const {
  const double magnitude = std::sqrt(to_double(ell_squared()));
  return sgn(offset) < 0 ? -magnitude : magnitude;
}

Standardized standardize(std::uint64_t k, unsigned dim, std::uint64_t n) {
  if (dim == 0) throw std::invalid_argument("standardize: dim must be >= 1");
  if (n == 0) throw std::invalid_argument("standardize: n must be >= 1");
  if (k == 0 || k > n + 1) throw std::invalid_argument("standardize: k outside [1, n + 1]");
  return Standardized{ExactRatio(static_cast<unsigned long>(k)) - predicted_mean(n), n};
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_density(double x, double mean, double variance) {
  const double z = x - mean;
  return std::exp(-z * z / (2.0 * variance)) / std::sqrt(2.0 * std::numbers::pi * variance);
}

double gaussian_pmf_approx(unsigned dim, std::uint64_t n, std::uint64_t k) {
  if (dim == 0 || n == 0) throw std::invalid_argument("gaussian_pmf_approx: dim and n must be >= 1");
  if (k == 0 || k > n + 1) throw std::invalid_argument("gaussian_pmf_approx: k outside [1, n + 1]");
  const double nd = static_cast<double>(n);
  const double offset = static_cast<double>(k) - (nd / 2.0 + 1.0);
  const double variance = nd / (4.0 * dim);
  return std::exp(-static_cast<double>(dim) * offset * offset / (nd / 2.0)) / std::sqrt(2.0 * std::numbers::pi * variance);
}

double ks_distance(const StepDistribution& dist, FitParameters fit) {
  if (dist.start() <= 2) throw std::invalid_argument("ks_distance: start must be >= 3");
  const std::uint64_t n = dist.start() - 1;
  double mean = 0.0;
  double variance = 0.0;
  if (fit == FitParameters::own_moments) {
    mean = to_double(exact_mean(dist));
    variance = to_double(exact_variance(dist));
  } else {
    mean = static_cast<double>(n) / 2.0 + 1.0;
    variance = static_cast<double>(n) / (4.0 * dist.dim());
  }
  const double sd = std::sqrt(variance);

  ExactInt cumulative = 0;
  double sup = 0.0;
  for (std::uint64_t k = 1; k <= dist.max_steps(); ++k) {
    cumulative += dist.count(k);
    const double exact_cdf = to_double(make_ratio(cumulative, dist.total()));
    const double fitted = normal_cdf((static_cast<double>(k) + 0.5 - mean) / sd);
    sup = std::max(sup, std::abs(exact_cdf - fitted));
  }
  return std::clamp(sup, 0.0, 1.0);
}

double AsymptoticCount::value() const { return std::exp2(log2_value); }

double AsymptoticCount::log_value() const { return log2_value * std::numbers::ln2; }

AsymptoticCount asymptotic_total_paths(unsigned dim, std::uint64_t n) {
  if (dim == 0 || n == 0) throw std::invalid_argument("asymptotic_total_paths: dim and n must be >= 1");
  const double d = dim;
  const double nd = static_cast<double>(n);
  // d = 1 collapses to exactly n*d: both correction terms are multiplied by zero.
  double log2_value = nd * d;
  if (dim != 1) {
    log2_value += (1.0 - d) / 2.0 * std::log2(std::numbers::pi * nd / 2.0) - 0.5 * std::log2(d);
  }
  return AsymptoticCount{log2_value};
}

double count_ratio(unsigned dim, std::uint64_t n) {
  const double exact_log2 = log2_of(total_paths(dim, n + 1));
  return std::exp2(exact_log2 - asymptotic_total_paths(dim, n).log2_value);
}

GaussianSummary summarize(unsigned dim, std::uint64_t n, FitParameters fit) {
  if (n < 2) throw std::invalid_argument("summarize: n must be >= 2");
  const auto dist = step_pmf(dim, n + 1);
  const auto variance = exact_variance(dist);
  GaussianSummary s;
  s.dim = dim;
  s.start = n + 1;
  s.fit_mean = to_double(exact_mean(dist));
  s.fit_variance = to_double(variance);
  s.ks_distance = ks_distance(dist, fit);
  s.variance_ratio = to_double(variance * ExactRatio(4ul * dim) / ExactRatio(static_cast<unsigned long>(n)));
  s.count_ratio = count_ratio(dim, n);
  return s;
}

std::vector<ExactRatio> mixture_pmf(unsigned dim, std::uint64_t n) {
  if (dim == 0 || n == 0) throw std::invalid_argument("mixture_pmf: dim and n must be >= 1");
  std::vector<ExactInt> counts(n, 0);
  for (std::uint64_t start = 1; start <= n; ++start) {
    const auto row = binomial_row(start - 1);
    for (std::uint64_t k = 1; k <= start; ++k) counts[k - 1] += pow_int((*row)[k - 1], dim);
  }
  ExactInt total = 0;
  for (const auto& c : counts) total += c;
  std::vector<ExactRatio> pmf;
  pmf.reserve(n);
  for (const auto& c : counts) pmf.push_back(make_ratio(c, total));
  return pmf;
}

}  // namespace zeck
