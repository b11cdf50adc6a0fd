#include "zeck/seqgen.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zeck {

namespace {

std::uint64_t saturating_add(std::uint64_t x, std::uint64_t y) {
  const auto max = std::numeric_limits<std::uint64_t>::max();
  return x > max - y ? max : x + y;
}

}  // namespace

std::string_view to_string(SequenceKind kind) { return kind == SequenceKind::simple ? "simple" : "compound"; }

SequenceKind parse_sequence_kind(std::string_view text) {
  if (text == "simple") return SequenceKind::simple;
  if (text == "compound") return SequenceKind::compound;
  throw std::invalid_argument("unknown sequence kind '" + std::string(text) + "'");
}

GridPos position_at(unsigned dim, std::size_t index) {
  if (dim == 1) return {static_cast<std::uint32_t>(index + 1), 0};
  if (dim != 2) throw std::invalid_argument("sequence grids support dim 1 or 2");
  // Diagonal k holds indices [k(k-1)/2, k(k+1)/2), filled from (k,1) to (1,k).
  std::size_t k = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (k * (k - 1) / 2 > index) --k;
  while (k * (k + 1) / 2 <= index) ++k;
  const std::size_t offset = index - k * (k - 1) / 2;
  return {static_cast<std::uint32_t>(k - offset), static_cast<std::uint32_t>(1 + offset)};
}

bool may_follow(SequenceKind kind, unsigned dim, GridPos from, GridPos to) {
  if (dim == 1) return to.a < from.a;
  if (kind == SequenceKind::simple) return to.a < from.a && to.b < from.b;
  return to.a <= from.a && to.b <= from.b && to != from;
}

SequenceGrid::SequenceGrid(SequenceKind kind, unsigned dim) : kind_(kind), dim_(dim) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("sequence grids support dim 1 or 2");
}

std::optional<std::uint64_t> SequenceGrid::value_at(GridPos pos) const {
  for (const auto& e : entries_)
    if (e.pos == pos) return e.value;
  return std::nullopt;
}

std::size_t SequenceGrid::complete_diagonals() const {
  if (dim_ == 1) return entries_.size();
  std::size_t k = 0;
  while ((k + 1) * (k + 2) / 2 <= entries_.size()) ++k;
  return k;
}

void SequenceGrid::append(std::uint64_t value) {
  if (value == 0) throw std::invalid_argument("grid values must be positive");
  if (!entries_.empty() && value <= entries_.back().value)
    throw std::invalid_argument("grid values must strictly increase");
  entries_.push_back({next_position(), value});
  next_candidate_ = std::max(next_candidate_, value + 1);
}

void SequenceGrid::set_next_candidate(std::uint64_t candidate) {
  if (candidate == 0 || (!entries_.empty() && candidate <= entries_.back().value))
    throw std::invalid_argument("next candidate must exceed every grid value");
  next_candidate_ = candidate;
}

std::uint64_t Decomposition::sum() const {
  std::uint64_t s = 0;
  for (const auto& p : parts) s = saturating_add(s, p.value);
  return s;
}

bool is_legal(const SequenceGrid& grid, const Decomposition& d) {
  if (d.parts.empty()) return false;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto stored = grid.value_at(d.parts[i].pos);
    if (!stored || *stored != d.parts[i].value) return false;
    if (i + 1 < d.parts.size() && !may_follow(grid.kind(), grid.dim(), d.parts[i].pos, d.parts[i + 1].pos))
      return false;
  }
  // Following is a strict partial order, so a legal chain never revisits a position.
  return true;
}

RepresentabilitySearch::RepresentabilitySearch(const SequenceGrid& grid) : kind_(grid.kind()), dim_(grid.dim()) {
  sync(grid);
}

void RepresentabilitySearch::sync(const SequenceGrid& grid) {
  if (grid.kind() != kind_ || grid.dim() != dim_) throw std::invalid_argument("search bound to another grid kind");
  const auto& all = grid.entries();
  if (all.size() < entries_.size()) throw std::invalid_argument("grid shrank under the search");
  for (std::size_t idx = entries_.size(); idx < all.size(); ++idx) {
    std::vector<std::size_t> followers;
    std::uint64_t total = 0;
    for (std::size_t j = idx; j-- > 0;) {
      if (may_follow(kind_, dim_, all[idx].pos, entries_[j].pos)) {
        followers.push_back(j);
        total = saturating_add(total, entries_[j].value);
      }
    }
    entries_.push_back(all[idx]);
    followers_.push_back(std::move(followers));
    follower_sum_.push_back(total);
    failed_.emplace_back();
  }
}

bool RepresentabilitySearch::chain_below(std::size_t idx, std::uint64_t remaining, std::vector<std::size_t>& chain) {
  if (remaining > follower_sum_[idx] || failed_[idx].contains(remaining)) return false;
  for (const auto j : followers_[idx]) {
    const auto v = entries_[j].value;
    if (v > remaining) continue;
    chain.push_back(j);
    if (v == remaining || chain_below(j, remaining - v, chain)) return true;
    chain.pop_back();
  }
  failed_[idx].insert(remaining);
  return false;
}

void RepresentabilitySearch::collect_below(std::size_t idx, std::uint64_t remaining, std::vector<std::size_t>& chain,
                                           std::vector<Decomposition>& out) {
  if (remaining > follower_sum_[idx] || failed_[idx].contains(remaining)) return;
  const auto before = out.size();
  for (const auto j : followers_[idx]) {
    const auto v = entries_[j].value;
    if (v > remaining) continue;
    chain.push_back(j);
    if (v == remaining)
      out.push_back(materialize(chain));
    else
      collect_below(j, remaining - v, chain, out);
    chain.pop_back();
  }
  if (out.size() == before) failed_[idx].insert(remaining);
}

Decomposition RepresentabilitySearch::materialize(const std::vector<std::size_t>& chain) const {
  Decomposition d;
  d.parts.reserve(chain.size());
  for (const auto i : chain) d.parts.push_back(entries_[i]);
  return d;
}

std::optional<Decomposition> RepresentabilitySearch::find(std::uint64_t m) {
  std::vector<std::size_t> chain;
  for (std::size_t i = entries_.size(); i-- > 0;) {
    const auto v = entries_[i].value;
    if (v > m) continue;
    chain.assign(1, i);
    if (v == m || chain_below(i, m - v, chain)) return materialize(chain);
  }
  return std::nullopt;
}

std::vector<Decomposition> RepresentabilitySearch::find_all(std::uint64_t m) {
  std::vector<Decomposition> out;
  std::vector<std::size_t> chain;
  for (std::size_t i = entries_.size(); i-- > 0;) {
    const auto v = entries_[i].value;
    if (v > m) continue;
    chain.assign(1, i);
    if (v == m)
      out.push_back(materialize(chain));
    else
      collect_below(i, m - v, chain, out);
  }
  return out;
}

std::optional<Decomposition> is_representable(const SequenceGrid& grid, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("is_representable: m must be >= 1");
  return RepresentabilitySearch(grid).find(m);
}

std::vector<Decomposition> enumerate_decompositions(const SequenceGrid& grid, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("enumerate_decompositions: m must be >= 1");
  return RepresentabilitySearch(grid).find_all(m);
}

SequenceBuilder::SequenceBuilder(SequenceKind kind, unsigned dim) : grid_(kind, dim), search_(grid_) {}

SequenceBuilder::SequenceBuilder(SequenceGrid grid) : grid_(std::move(grid)), search_(grid_) {}

SequenceBuilder::Step SequenceBuilder::advance() {
  Step step;
  step.candidate = grid_.next_candidate();
  step.witness = search_.find(step.candidate);
  step.admitted = !step.witness.has_value();
  if (step.admitted) {
    grid_.append(step.candidate);
    search_.sync(grid_);
  } else {
    grid_.set_next_candidate(step.candidate + 1);
  }
  return step;
}

void SequenceBuilder::grow_to(std::size_t terms, const std::function<void(const Step&)>& on_step) {
  while (grid_.size() < terms) {
    const auto step = advance();
    if (on_step) on_step(step);
  }
}

SequenceGrid build_sequence(SequenceKind kind, unsigned dim, std::size_t terms) {
  if (terms == 0) throw std::invalid_argument("build_sequence: terms must be >= 1");
  SequenceBuilder builder(kind, dim);
  builder.grow_to(terms);
  return builder.grid();
}

std::string grid_to_json(const SequenceGrid& grid) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(grid.kind());
  j["dim"] = grid.dim();
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : grid.entries()) {
    nlohmann::ordered_json item;
    item["a"] = e.pos.a;
    if (grid.dim() == 2) item["b"] = e.pos.b;
    item["value"] = e.value;
    entries.push_back(std::move(item));
  }
  j["entries"] = std::move(entries);
  j["next_candidate"] = grid.next_candidate();
  return j.dump(2);
}

SequenceGrid grid_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    const auto kind = parse_sequence_kind(j.at("kind").get<std::string>());
    const auto dim = j.at("dim").get<unsigned>();
    SequenceGrid grid(kind, dim);
    for (const auto& item : j.at("entries")) {
      const GridPos pos{item.at("a").get<std::uint32_t>(), dim == 2 ? item.at("b").get<std::uint32_t>() : 0u};
      if (pos != grid.next_position())
        throw std::invalid_argument("snapshot entries are not in diagonal order");
      const auto value = item.at("value").get<std::uint64_t>();
      if (grid.size() == 0 && value != 1) throw std::invalid_argument("snapshot must start with value 1");
      grid.append(value);
    }
    grid.set_next_candidate(j.at("next_candidate").get<std::uint64_t>());
    return grid;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed grid snapshot: ") + e.what());
  }
}

}  // namespace zeck
