#pragma once

// Greedy Zeckendorf-style sequences on the 1D and 2D positive lattice.
//
// Positions are filled in diagonal order: (1,1), then (2,1), (1,2), then
// (3,1), (2,2), (1,3), ... Each natural number, in increasing order, is tested
// against the values already placed; it is admitted at the next open position
// exactly when no legal chain of placed values sums to it.
//
// A chain lists distinct positions from the largest down. Between consecutive
// positions:
//   simple   - every coordinate strictly decreases;
//   compound - no coordinate increases (and the positions differ).
// In one dimension the two rules coincide and the sequence is the powers of 2.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace zeck {

enum class SequenceKind { simple, compound };

std::string_view to_string(SequenceKind kind);
/// Accepts "simple" or "compound"; throws std::invalid_argument otherwise.
SequenceKind parse_sequence_kind(std::string_view text);

/// Grid position; b is 0 for one-dimensional grids.
struct GridPos {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
  friend auto operator<=>(const GridPos&, const GridPos&) = default;
};

/// The position filled by the `index`-th admitted value (0-based).
GridPos position_at(unsigned dim, std::size_t index);

/// True when `to` may directly follow `from` in a chain of the given kind.
bool may_follow(SequenceKind kind, unsigned dim, GridPos from, GridPos to);

struct GridEntry {
  GridPos pos;
  std::uint64_t value = 0;
  friend bool operator==(const GridEntry&, const GridEntry&) = default;
};

class SequenceGrid {
 public:
  SequenceGrid(SequenceKind kind, unsigned dim);

  SequenceKind kind() const { return kind_; }
  unsigned dim() const { return dim_; }
  /// Entries in insertion order; values strictly increase along it.
  const std::vector<GridEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t next_candidate() const { return next_candidate_; }

  std::optional<std::uint64_t> value_at(GridPos pos) const;
  GridPos next_position() const { return position_at(dim_, entries_.size()); }
  /// Number of completely filled diagonals (dim 2); number of entries (dim 1).
  std::size_t complete_diagonals() const;

  /// Places `value` at next_position(); it must exceed every value already present.
  void append(std::uint64_t value);
  /// Requires candidate > last value.
  void set_next_candidate(std::uint64_t candidate);

  friend bool operator==(const SequenceGrid&, const SequenceGrid&) = default;

 private:
  SequenceKind kind_;
  unsigned dim_;
  std::vector<GridEntry> entries_;
  std::uint64_t next_candidate_ = 1;
};

/// A chain of grid entries from the largest position down.
struct Decomposition {
  std::vector<GridEntry> parts;
  std::uint64_t sum() const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Checks distinctness, ordering under the kind's step rule, and that every
/// part matches the value stored in `grid`.
bool is_legal(const SequenceGrid& grid, const Decomposition& d);

/// Memoized depth-first search for chains summing to a target.
///
/// Chains are explored from larger values to smaller ones. A branch below
/// position p with remaining target r is cut when r exceeds the total of the
/// values that may follow p; every (p, r) that fails is remembered. Values
/// that may follow p are fixed once p is placed (later positions lie on later
/// diagonals), so the failure memo stays valid while the grid grows.
class RepresentabilitySearch {
 public:
  explicit RepresentabilitySearch(const SequenceGrid& grid);

  /// Registers entries appended to the grid since the last call.
  void sync(const SequenceGrid& grid);

  std::optional<Decomposition> find(std::uint64_t m);
  std::vector<Decomposition> find_all(std::uint64_t m);

 private:
  bool chain_below(std::size_t idx, std::uint64_t remaining, std::vector<std::size_t>& chain);
  void collect_below(std::size_t idx, std::uint64_t remaining, std::vector<std::size_t>& chain,
                     std::vector<Decomposition>& out);
  Decomposition materialize(const std::vector<std::size_t>& chain) const;

  SequenceKind kind_;
  unsigned dim_;
  std::vector<GridEntry> entries_;
  std::vector<std::vector<std::size_t>> followers_;  // descending value
  std::vector<std::uint64_t> follower_sum_;          // saturating
  std::vector<std::unordered_set<std::uint64_t>> failed_;
};

/// Witness for m over the current grid, if any chain (a single entry counts) sums to m.
std::optional<Decomposition> is_representable(const SequenceGrid& grid, std::uint64_t m);

/// Every chain summing to m, ordered by descending lead position then
/// lexicographically along the chain.
std::vector<Decomposition> enumerate_decompositions(const SequenceGrid& grid, std::uint64_t m);

/// Drives the greedy construction one candidate at a time.
class SequenceBuilder {
 public:
  struct Step {
    std::uint64_t candidate = 0;
    bool admitted = false;
    std::optional<Decomposition> witness;  // set when skipped
  };

  SequenceBuilder(SequenceKind kind, unsigned dim);
  /// Resumes from a snapshot; the grid must have been produced by this construction.
  explicit SequenceBuilder(SequenceGrid grid);

  /// Tests grid().next_candidate() and admits or skips it.
  Step advance();
  /// Advances until the grid holds `terms` entries. `on_step` sees every candidate.
  void grow_to(std::size_t terms, const std::function<void(const Step&)>& on_step = {});

  const SequenceGrid& grid() const { return grid_; }

 private:
  SequenceGrid grid_;
  RepresentabilitySearch search_;
};

/// Fresh construction up to `terms` entries.
SequenceGrid build_sequence(SequenceKind kind, unsigned dim, std::size_t terms);

/// Snapshot format: {"kind", "dim", "entries": [{"a", "b", "value"}], "next_candidate"};
/// "b" is omitted for dim 1. Parsing validates the diagonal order, increasing
/// values, and y(1,1) = 1, throwing std::invalid_argument on violation.
std::string grid_to_json(const SequenceGrid& grid);
SequenceGrid grid_from_json(std::string_view text);

}  // namespace zeck
