#pragma once

// Exact moments of the step-count distribution and checks of the closed forms
// they are known to satisfy. All distributions here are indexed by the start
// coordinate n + 1, so the support of K is {1, ..., n + 1}.

#include "zeck/combinatorics.hpp"

#include <optional>

namespace zeck {

ExactRatio exact_mean(const StepDistribution& dist);

/// Var K = E[K^2] - (E K)^2.
ExactRatio exact_variance(const StepDistribution& dist);

/// n/2 + 1 for the start n + 1, valid in every dimension.
ExactRatio predicted_mean(std::uint64_t n);

/// Closed-form variance where one is known: n/4 for d = 1, n^2/(8n - 4) for d = 2.
std::optional<ExactRatio> predicted_variance(unsigned dim, std::uint64_t n);

struct MomentReport {
  unsigned dim = 0;
  std::uint64_t start = 0;  // n + 1
  ExactRatio mean;
  ExactRatio variance;
  ExactRatio predicted_mean;
  std::optional<ExactRatio> predicted_variance;  // d <= 2 only
  ExactRatio variance_bound;                     // n/4
  bool bound_holds = false;
};

/// Requires start >= 1.
MomentReport moment_report(unsigned dim, std::uint64_t start);

/// Var K for start n + 1 is at most n/4 (exact comparison).
bool verify_variance_bound(unsigned dim, std::uint64_t n);

/// sum_k k^2 C(n,k)^2 and n^2 C(2n-2, n-1); equal for every n >= 1.
struct SquaredMomentIdentity {
  ExactInt lhs;
  ExactInt rhs;
  bool holds() const { return lhs == rhs; }
};
SquaredMomentIdentity squared_moment_identity(std::uint64_t n);

struct ChebyshevTail {
  ExactRatio tail_prob;  // P(|K - (n/2 + 1)| >= n^eps * sqrt(n) / 2)
  double bound = 0.0;    // n^(-2 eps)
  bool holds = false;    // tail_prob <= n^(-2 eps), decided exactly
};

/// Tail beyond n^eps standard-deviation bounds, with sqrt(n)/2 standing in for
/// the standard deviation. The cutoff comparison and the final inequality are
/// both decided in exact arithmetic. Throws std::invalid_argument when the
/// start is below 3 (n = 1 is degenerate) or eps <= 0.
ChebyshevTail chebyshev_tail(const StepDistribution& dist, const ExactRatio& epsilon);

}  // namespace zeck
