#include "zeck/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace zeck {

namespace {

class BinomialRowCache {
 public:
  std::shared_ptr<const std::vector<ExactInt>> row(std::uint64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = rows_.find(n); it != rows_.end()) return it->second;
    }
    auto fresh = std::make_shared<const std::vector<ExactInt>>(compute(n));
    std::unique_lock lock(mutex_);
    return rows_.try_emplace(n, std::move(fresh)).first->second;
  }

 private:
  // C(n, k+1) = C(n, k) * (n - k) / (k + 1), where the division is exact.
  static std::vector<ExactInt> compute(std::uint64_t n) {
    std::vector<ExactInt> row(n + 1);
    row[0] = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      ExactInt next = row[k] * static_cast<unsigned long>(n - k);
      mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(k + 1));
      row[k + 1] = std::move(next);
    }
    return row;
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const std::vector<ExactInt>>> rows_;
};

BinomialRowCache& row_cache() {
  static BinomialRowCache cache;
  return cache;
}

}  // namespace

ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  ExactInt acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc *= static_cast<unsigned long>(n - i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return acc;
}

std::shared_ptr<const std::vector<ExactInt>> binomial_row(std::uint64_t n) {
  return row_cache().row(n);
}

ExactInt path_count(std::uint64_t k, std::span<const std::uint64_t> starts) {
  if (starts.empty()) throw std::invalid_argument("path_count: need at least one dimension");
  if (k == 0) throw std::invalid_argument("path_count: k must be >= 1");
  if (std::ranges::find(starts, 0u) != starts.end())
    throw std::invalid_argument("path_count: start coordinates must be >= 1");
  if (k > std::ranges::min(starts)) return 0;

  ExactInt product = 1;
  for (const auto a : starts) product *= (*binomial_row(a - 1))[k - 1];
  return product;
}

ExactInt path_count(unsigned dim, std::uint64_t k, std::uint64_t n) {
  if (dim == 0) throw std::invalid_argument("path_count: dim must be >= 1");
  if (k == 0) throw std::invalid_argument("path_count: k must be >= 1");
  if (n == 0) throw std::invalid_argument("path_count: start coordinates must be >= 1");
  if (k > n) return 0;
  return pow_int((*binomial_row(n - 1))[k - 1], dim);
}

ExactInt total_paths(unsigned dim, std::uint64_t n) {
  if (dim == 0 || n == 0) throw std::invalid_argument("total_paths: dim and n must be >= 1");
  const auto row = binomial_row(n - 1);
  ExactInt sum = 0;
  for (const auto& c : *row) sum += pow_int(c, dim);
  return sum;
}

StepDistribution::StepDistribution(unsigned dim, std::uint64_t start, std::vector<ExactInt> counts)
    : dim_(dim), start_(start), counts_(std::move(counts)) {
  if (dim_ == 0 || start_ == 0) throw std::invalid_argument("StepDistribution: dim and start must be >= 1");
  if (counts_.size() != start_)
    throw std::invalid_argument("StepDistribution: need one count per k in [1, start]");
  total_ = 0;
  for (const auto& c : counts_) {
    if (c < 0) throw std::invalid_argument("StepDistribution: negative count");
    total_ += c;
  }
  if (total_ == 0) throw std::invalid_argument("StepDistribution: empty distribution");
  pmf_.reserve(counts_.size());
  for (const auto& c : counts_) pmf_.push_back(make_ratio(c, total_));
}

const ExactInt& StepDistribution::count(std::uint64_t k) const {
  if (k == 0 || k > start_) throw std::out_of_range("StepDistribution: k outside [1, start]");
  return counts_[k - 1];
}

const ExactRatio& StepDistribution::probability(std::uint64_t k) const {
  if (k == 0 || k > start_) throw std::out_of_range("StepDistribution: k outside [1, start]");
  return pmf_[k - 1];
}

StepDistribution step_pmf(unsigned dim, std::uint64_t n) {
  if (dim == 0 || n == 0) throw std::invalid_argument("step_pmf: dim and n must be >= 1");
  const auto row = binomial_row(n - 1);
  std::vector<ExactInt> counts;
  counts.reserve(n);
  for (const auto& c : *row) counts.push_back(pow_int(c, dim));
  return StepDistribution(dim, n, std::move(counts));
}

}  // namespace zeck
