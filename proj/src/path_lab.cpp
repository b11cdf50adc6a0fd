#include "zeck/path_lab.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_set>

namespace zeck {

LatticePoint::LatticePoint(std::vector<std::uint64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("LatticePoint: dimension must be >= 1");
}

bool LatticePoint::is_origin() const {
  return std::ranges::all_of(coords_, [](std::uint64_t c) { return c == 0; });
}

JumpPath::JumpPath(std::vector<LatticePoint> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw std::invalid_argument("JumpPath: needs a start point and the origin");
  const std::size_t d = points_.front().dim();
  if (std::ranges::any_of(points_.front().coords(), [](std::uint64_t c) { return c == 0; }))
    throw std::invalid_argument("JumpPath: start coordinates must be >= 1");
  if (!points_.back().is_origin()) throw std::invalid_argument("JumpPath: must end at the origin");
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const auto& here = points_[i];
    const auto& next = points_[i + 1];
    if (next.dim() != d) throw std::invalid_argument("JumpPath: mixed dimensions");
    for (std::size_t j = 0; j < d; ++j) {
      if (!(here[j] > next[j]))
        throw std::invalid_argument("JumpPath: coordinate " + std::to_string(j) + " does not decrease at step " +
                                    std::to_string(i + 1));
    }
  }
}

EnumerationCapExceeded::EnumerationCapExceeded(ExactInt paths, std::uint64_t cap)
    : std::length_error("enumeration would produce " + paths.get_str() + " paths, above the cap of " +
                        std::to_string(cap) + "; sample instead"),
      paths_(std::move(paths)),
      cap_(cap) {}

std::vector<JumpPath> enumerate_paths(unsigned dim, std::uint64_t n, std::uint64_t cap) {
  const ExactInt total = total_paths(dim, n);
  if (total > ExactInt(std::to_string(cap))) throw EnumerationCapExceeded(total, cap);

  std::vector<JumpPath> out;
  out.reserve(total.get_ui());
  std::vector<LatticePoint> prefix{LatticePoint(std::vector<std::uint64_t>(dim, n))};
  const LatticePoint origin(std::vector<std::uint64_t>(dim, 0));

  std::function<void()> extend = [&]() {
    const auto here = prefix.back().coords();
    const bool has_interior = std::ranges::all_of(here, [](std::uint64_t c) { return c >= 2; });
    if (has_interior) {
      // Odometer over [1, here_j - 1]^d, most significant coordinate first, counting down.
      std::vector<std::uint64_t> next(here.begin(), here.end());
      for (auto& c : next) c -= 1;
      while (true) {
        prefix.emplace_back(next);
        extend();
        prefix.pop_back();
        std::size_t j = dim;
        while (j > 0 && next[j - 1] == 1) {
          next[j - 1] = here[j - 1] - 1;
          --j;
        }
        if (j == 0) break;
        --next[j - 1];
      }
    }
    prefix.push_back(origin);
    out.emplace_back(prefix);
    prefix.pop_back();
  };
  extend();
  return out;
}

PathSampler::PathSampler(unsigned dim, std::uint64_t n) : dim_(dim), n_(n) {
  const auto dist = step_pmf(dim, n);
  cumulative_.reserve(n);
  ExactInt acc = 0;
  for (const auto& c : dist.counts()) {
    acc += c;
    cumulative_.push_back(acc);
  }
  total_bits_ = mpz_sizeinbase(cumulative_.back().get_mpz_t(), 2);
}

ExactInt PathSampler::uniform_below_total(std::mt19937_64& rng) const {
  const std::size_t words = (total_bits_ + 63) / 64;
  const std::size_t spare = words * 64 - total_bits_;
  std::vector<std::uint64_t> buffer(words);
  ExactInt r;
  do {
    for (auto& w : buffer) w = rng();
    buffer.front() >>= spare;  // most significant word first
    mpz_import(r.get_mpz_t(), words, 1, sizeof(std::uint64_t), 0, 0, buffer.data());
  } while (r >= cumulative_.back());
  return r;
}

std::uint64_t PathSampler::draw_length(std::mt19937_64& rng) const {
  const ExactInt r = uniform_below_total(rng);
  const auto it = std::ranges::upper_bound(cumulative_, r);
  return static_cast<std::uint64_t>(it - cumulative_.begin()) + 1;
}

JumpPath PathSampler::draw(std::mt19937_64& rng) const {
  const std::uint64_t k = draw_length(rng);
  const std::uint64_t interior = k - 1;

  // Floyd's subset sampling of `interior` values from {1, ..., n-1}, descending.
  std::vector<std::vector<std::uint64_t>> per_dim(dim_);
  for (auto& chosen : per_dim) {
    std::unordered_set<std::uint64_t> picked;
    for (std::uint64_t top = n_ - interior; top <= n_ - 1 && interior > 0; ++top) {
      std::uniform_int_distribution<std::uint64_t> pick(1, top);
      const std::uint64_t v = pick(rng);
      picked.insert(picked.contains(v) ? top : v);
    }
    chosen.assign(picked.begin(), picked.end());
    std::ranges::sort(chosen, std::greater<>{});
  }

  std::vector<LatticePoint> points;
  points.reserve(k + 1);
  points.emplace_back(std::vector<std::uint64_t>(dim_, n_));
  for (std::uint64_t i = 0; i < interior; ++i) {
    std::vector<std::uint64_t> coords(dim_);
    for (unsigned j = 0; j < dim_; ++j) coords[j] = per_dim[j][i];
    points.emplace_back(std::move(coords));
  }
  points.emplace_back(std::vector<std::uint64_t>(dim_, 0));
  return JumpPath(std::move(points));
}

JumpPath sample_path(unsigned dim, std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return PathSampler(dim, n).draw(rng);
}

std::vector<JumpPath> sample_paths(unsigned dim, std::uint64_t n, std::uint64_t count, std::uint64_t seed) {
  const PathSampler sampler(dim, n);
  std::mt19937_64 rng(seed);
  std::vector<JumpPath> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(sampler.draw(rng));
  return out;
}

void GapHistogram::add(const JumpPath& path) {
  if (per_dim.empty()) per_dim.resize(path.dim());
  if (per_dim.size() != path.dim()) throw std::invalid_argument("gap_histogram: paths differ in dimension");
  const auto pts = path.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    for (std::size_t j = 0; j < per_dim.size(); ++j) ++per_dim[j][pts[i][j] - pts[i + 1][j]];
  total_steps += path.length();
  ++paths;
}

GapHistogram gap_histogram(std::span<const JumpPath> paths) {
  if (paths.empty()) throw std::invalid_argument("gap_histogram: no paths");
  GapHistogram h;
  for (const auto& p : paths) h.add(p);
  return h;
}

std::map<std::uint64_t, double> empirical_pmf(unsigned dim, std::uint64_t n, std::uint64_t samples,
                                              std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("empirical_pmf: samples must be >= 1");
  const PathSampler sampler(dim, n);
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hits(n + 1, 0);
  for (std::uint64_t i = 0; i < samples; ++i) ++hits[sampler.draw(rng).length()];
  std::map<std::uint64_t, double> freq;
  for (std::uint64_t k = 1; k <= n; ++k) freq[k] = static_cast<double>(hits[k]) / static_cast<double>(samples);
  return freq;
}

}  // namespace zeck
