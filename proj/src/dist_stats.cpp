#include "zeck/dist_stats.hpp"

#include <cmath>
#include <stdexcept>

namespace zeck {

ExactRatio exact_mean(const StepDistribution& dist) {
  // sum_k k t(k) / s, then one reduction.
  ExactInt weighted = 0;
  const auto counts = dist.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) weighted += counts[i] * static_cast<unsigned long>(i + 1);
  return make_ratio(weighted, dist.total());
}

ExactRatio exact_variance(const StepDistribution& dist) {
  ExactInt first = 0;
  ExactInt second = 0;
  const auto counts = dist.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto k = static_cast<unsigned long>(i + 1);
    first += counts[i] * k;
    second += counts[i] * (k * k);
  }
  // (s * sum k^2 t - (sum k t)^2) / s^2
  const ExactInt& s = dist.total();
  return make_ratio(s * second - first * first, s * s);
}

ExactRatio predicted_mean(std::uint64_t n) {
  return make_ratio(ExactInt(static_cast<unsigned long>(n)) + 2, 2);
}

std::optional<ExactRatio> predicted_variance(unsigned dim, std::uint64_t n) {
  const ExactInt nn = static_cast<unsigned long>(n);
  switch (dim) {
    case 1:
      return make_ratio(nn, 4);
    case 2:
      if (n == 0) return ExactRatio(0);
      return make_ratio(nn * nn, 8 * nn - 4);
    default:
      return std::nullopt;
  }
}

MomentReport moment_report(unsigned dim, std::uint64_t start) {
  if (start == 0) throw std::invalid_argument("moment_report: start must be >= 1");
  const auto dist = step_pmf(dim, start);
  const std::uint64_t n = start - 1;
  MomentReport r;
  r.dim = dim;
  r.start = start;
  r.mean = exact_mean(dist);
  r.variance = exact_variance(dist);
  r.predicted_mean = predicted_mean(n);
  r.predicted_variance = predicted_variance(dim, n);
  r.variance_bound = make_ratio(static_cast<unsigned long>(n), 4);
  r.bound_holds = r.variance <= r.variance_bound;
  return r;
}

bool verify_variance_bound(unsigned dim, std::uint64_t n) {
  if (dim == 0 || n == 0) throw std::invalid_argument("verify_variance_bound: dim and n must be >= 1");
  return exact_variance(step_pmf(dim, n + 1)) <= make_ratio(static_cast<unsigned long>(n), 4);
}

SquaredMomentIdentity squared_moment_identity(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("squared_moment_identity: n must be >= 1");
  SquaredMomentIdentity id;
  const auto row = binomial_row(n);
  id.lhs = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const auto kk = static_cast<unsigned long>(k);
    id.lhs += (*row)[k] * (*row)[k] * (kk * kk);
  }
  const ExactInt nn = static_cast<unsigned long>(n);
  id.rhs = nn * nn * binomial(2 * n - 2, n - 1);
  return id;
}

ChebyshevTail chebyshev_tail(const StepDistribution& dist, const ExactRatio& epsilon) {
  if (dist.start() < 3) throw std::invalid_argument("chebyshev_tail: start must be >= 3 (n >= 2)");
  if (epsilon <= 0) throw std::invalid_argument("chebyshev_tail: epsilon must be positive");
  if (!epsilon.get_num().fits_ulong_p() || !epsilon.get_den().fits_ulong_p())
    throw std::invalid_argument("chebyshev_tail: epsilon too large");

  const std::uint64_t n = dist.start() - 1;
  const auto p = epsilon.get_num().get_ui();
  const auto q = epsilon.get_den().get_ui();
  const ExactInt nn = static_cast<unsigned long>(n);

  // |k - (n/2 + 1)| >= n^(p/q) sqrt(n) / 2  <=>  |2k - n - 2|^(2q) >= n^(q + 2p)
  const ExactInt cutoff = pow_int(nn, q + 2 * p);
  ExactInt tail_count = 0;
  for (std::uint64_t k = 1; k <= dist.max_steps(); ++k) {
    ExactInt dev = ExactInt(static_cast<unsigned long>(2 * k)) - nn - 2;
    dev = abs(dev);
    if (pow_int(dev, 2 * q) >= cutoff) tail_count += dist.count(k);
  }

  ChebyshevTail out;
  out.tail_prob = make_ratio(tail_count, dist.total());
  out.bound = std::pow(static_cast<double>(n), -2.0 * to_double(epsilon));
  // tail <= n^(-2p/q)  <=>  tail^q * n^(2p) <= 1
  out.holds = pow_ratio(out.tail_prob, q) * ExactRatio(pow_int(nn, 2 * p)) <= 1;
  return out;
}

}  // namespace zeck
