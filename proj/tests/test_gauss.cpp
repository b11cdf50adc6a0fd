#include "zeck/gauss.hpp"

#include "zeck/dist_stats.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace zeck;

TEST_CASE("standardize") {
  const auto at_mean = standardize(6, 2, 10);
  CHECK(at_mean.offset == 0);
  CHECK(at_mean.ell() == 0.0);

  const auto one = standardize(4, 1, 4);
  CHECK(one.ell_squared() == 1);
  CHECK(one.ell() == 1.0);

  const auto minus_three = standardize(1, 3, 9);
  CHECK(minus_three.offset == ExactRatio(-9, 2));
  CHECK(minus_three.ell_squared() == 9);
  CHECK(minus_three.ell() == -3.0);

  CHECK_THROWS_AS(standardize(0, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(standardize(6, 1, 4), std::invalid_argument);
}

TEST_CASE("normal_cdf reference values") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-14));
  CHECK(normal_cdf(-1.959963984540054) == doctest::Approx(0.025).epsilon(1e-13));
  CHECK(normal_cdf(-8.0) == doctest::Approx(6.220960574271785e-16).epsilon(1e-10));
}

TEST_CASE("gaussian_pmf_approx peak and exact comparisons") {
  CHECK(gaussian_pmf_approx(3, 10, 6) == doctest::Approx(1.0 / std::sqrt(2 * std::numbers::pi * 10.0 / 12.0)));

  // exact p_1(51,101) = C(100,50)/2^100, p_2(51,101) = C(100,50)^2/C(200,100)
  const double exact1 = to_double(step_pmf(1, 101).probability(51));
  const double exact2 = to_double(step_pmf(2, 101).probability(51));
  CHECK(exact1 == doctest::Approx(0.07958923738717877).epsilon(1e-14));
  CHECK(exact2 == doctest::Approx(0.11241557570404212).epsilon(1e-14));
  CHECK(std::abs(gaussian_pmf_approx(1, 100, 51) / exact1 - 1.0) < 0.02);
  CHECK(std::abs(gaussian_pmf_approx(2, 100, 51) / exact2 - 1.0) < 0.02);
}

TEST_CASE("gaussian_pmf_approx sums closer to one as n grows") {
  auto mass = [](unsigned d, std::uint64_t n) {
    double s = 0.0;
    for (std::uint64_t k = 1; k <= n + 1; ++k) s += gaussian_pmf_approx(d, n, k);
    return s;
  };
  for (unsigned d = 1; d <= 4; ++d) CHECK(std::abs(mass(d, 400) - 1.0) < std::abs(mass(d, 100) - 1.0) + 1e-15);
}

TEST_CASE("ks_distance decays under doubling") {
  for (unsigned d = 1; d <= 3; ++d) {
    double previous = 1.0;
    for (std::uint64_t n : {50u, 100u, 200u, 400u}) {
      const double ks = ks_distance(step_pmf(d, n + 1));
      CHECK(ks >= 0.0);
      CHECK(ks < previous);
      previous = ks;
    }
  }
  CHECK_THROWS_AS(ks_distance(step_pmf(2, 2)), std::invalid_argument);
  const double ks10 = ks_distance(step_pmf(2, 10));
  CHECK(ks10 > 0.0);
  CHECK(ks10 < 0.05);
}

TEST_CASE("ks_distance with limit parameters") {
  // d = 1 limit parameters coincide with the exact moments.
  const auto dist = step_pmf(1, 101);
  CHECK(ks_distance(dist, FitParameters::limit) == doctest::Approx(ks_distance(dist)).epsilon(1e-12));
  CHECK(ks_distance(step_pmf(3, 101), FitParameters::limit) >= 0.0);
}

TEST_CASE("asymptotic_total_paths") {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(asymptotic_total_paths(1, n).log2_value == static_cast<double>(n));
    CHECK(count_ratio(1, n) == 1.0);
  }
  CHECK(asymptotic_total_paths(1, 10).value() == 1024.0);

  const double r = count_ratio(2, 100);
  CHECK(r == doctest::Approx(0.9987507861262519).epsilon(1e-12));

  // Large n * d stays finite in log space.
  const auto big = asymptotic_total_paths(7, 400);
  CHECK(std::isfinite(big.log2_value));
  CHECK(big.log_value() == doctest::Approx(big.log2_value * std::numbers::ln2));
}

TEST_CASE("count_ratio approaches one monotonically") {
  for (unsigned d = 2; d <= 7; ++d) {
    double previous = INFINITY;
    for (std::uint64_t n : {25u, 50u, 100u, 200u, 400u}) {
      const double err = std::abs(count_ratio(d, n) - 1.0);
      CHECK(err < previous);
      previous = err;
    }
  }
}

TEST_CASE("variance ratio approaches one") {
  for (unsigned d = 2; d <= 4; ++d) {
    double previous = INFINITY;
    for (std::uint64_t n : {50u, 100u, 200u, 400u, 800u}) {
      const auto s = summarize(d, n);
      const double err = std::abs(s.variance_ratio - 1.0);
      CHECK(err < previous);
      previous = err;
    }
  }
  CHECK(summarize(1, 100).variance_ratio == 1.0);
}

TEST_CASE("summarize fields") {
  const auto s = summarize(2, 9);
  CHECK(s.start == 10);
  CHECK(s.fit_mean == doctest::Approx(5.5));
  CHECK(s.fit_variance == doctest::Approx(81.0 / 68.0));
  CHECK(s.ks_distance >= 0.0);
  CHECK(s.ks_distance <= 1.0);
  CHECK_THROWS_AS(summarize(2, 1), std::invalid_argument);
}

TEST_CASE("mixture_pmf over starts") {
  // d = 2, n = 2: start 1 has one 1-step path; start 2 has one 1-step and one 2-step.
  const auto pmf = mixture_pmf(2, 2);
  REQUIRE(pmf.size() == 2);
  CHECK(pmf[0] == ExactRatio(2, 3));
  CHECK(pmf[1] == ExactRatio(1, 3));

  ExactRatio sum = 0;
  for (const auto& p : mixture_pmf(3, 30)) sum += p;
  CHECK(sum == 1);
}
