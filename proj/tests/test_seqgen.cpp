#include "zeck/seqgen.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace zeck;

namespace {

// Rows listed from b = 1 upward; entry [b-1][a-1] is the value at (a, b).
// Two cells differ from the commonly printed tables, which show 154 at (9,1)
// (simple) and 4966 at (5,5) (compound). Both printed values already have legal
// decompositions when their cell is filled; see "printed outliers" below.
const std::vector<std::vector<std::uint64_t>> kSimpleTable{
    {1, 2, 4, 8, 16, 29, 54, 90, 159}, {3, 5, 9, 17, 30, 56, 93, 160}, {7, 12, 20, 33, 59, 100, 171},
    {14, 24, 40, 66, 107, 184},        {28, 48, 74, 123, 198},         {50, 82, 139, 230},
    {84, 155, 259},                    {157, 263},                     {280}};

const std::vector<std::vector<std::uint64_t>> kCompoundTable{
    {1, 2, 6, 18, 46, 140, 366, 1042, 2270}, {4, 10, 22, 56, 168, 370, 1052, 2592}, {16, 38, 94, 184, 476, 1102, 2630},
    {44, 112, 296, 520, 1146, 2952},         {138, 342, 862, 1522, 4960},           {364, 908, 2008, 5100},
    {954, 2182, 5328},                       {2200, 6054},                          {6992}};

void check_table(const SequenceGrid& grid, const std::vector<std::vector<std::uint64_t>>& table) {
  std::size_t cells = 0;
  for (std::size_t b = 0; b < table.size(); ++b)
    for (std::size_t a = 0; a < table[b].size(); ++a) {
      const GridPos pos{static_cast<std::uint32_t>(a + 1), static_cast<std::uint32_t>(b + 1)};
      INFO("a=" << pos.a << " b=" << pos.b);
      REQUIRE(grid.value_at(pos).has_value());
      CHECK(*grid.value_at(pos) == table[b][a]);
      ++cells;
    }
  CHECK(cells == grid.size());
}

std::vector<std::uint64_t> values_of(const Decomposition& d) {
  std::vector<std::uint64_t> v;
  for (const auto& p : d.parts) v.push_back(p.value);
  return v;
}

std::vector<testing::Cell> cells_of(const SequenceGrid& g) {
  std::vector<testing::Cell> cells;
  for (const auto& e : g.entries()) cells.push_back({e.pos.a, e.pos.b, e.value});
  return cells;
}

}  // namespace

TEST_CASE("diagonal fill order") {
  CHECK(position_at(2, 0) == GridPos{1, 1});
  CHECK(position_at(2, 1) == GridPos{2, 1});
  CHECK(position_at(2, 2) == GridPos{1, 2});
  CHECK(position_at(2, 3) == GridPos{3, 1});
  CHECK(position_at(2, 4) == GridPos{2, 2});
  CHECK(position_at(2, 5) == GridPos{1, 3});
  CHECK(position_at(2, 44) == GridPos{1, 9});
  CHECK(position_at(2, 45) == GridPos{10, 1});
  CHECK(position_at(1, 4) == GridPos{5, 0});
  for (std::size_t i = 0; i < 5000; ++i) {
    const auto p = position_at(2, i);
    const std::size_t k = p.a + p.b - 1;
    CHECK(k * (k - 1) / 2 + (p.b - 1) == i);
  }
}

TEST_CASE("step rules") {
  CHECK(may_follow(SequenceKind::simple, 2, {3, 3}, {2, 2}));
  CHECK_FALSE(may_follow(SequenceKind::simple, 2, {3, 3}, {3, 2}));
  CHECK(may_follow(SequenceKind::compound, 2, {3, 3}, {3, 2}));
  CHECK_FALSE(may_follow(SequenceKind::compound, 2, {3, 3}, {3, 3}));
  CHECK_FALSE(may_follow(SequenceKind::compound, 2, {2, 1}, {1, 2}));
  CHECK(may_follow(SequenceKind::simple, 1, {4, 0}, {1, 0}));
}

TEST_CASE("1D sequence is the powers of two") {
  for (const auto kind : {SequenceKind::simple, SequenceKind::compound}) {
    const auto grid = build_sequence(kind, 1, 10);
    std::vector<std::uint64_t> values;
    for (const auto& e : grid.entries()) values.push_back(e.value);
    CHECK(values == std::vector<std::uint64_t>{1, 2, 4, 8, 16, 32, 64, 128, 256, 512});
  }
  CHECK(build_sequence(SequenceKind::simple, 1, 20).entries() == build_sequence(SequenceKind::compound, 1, 20).entries());
}

TEST_CASE("simple 2D golden table") {
  const auto grid = build_sequence(SequenceKind::simple, 2, 45);
  CHECK(grid.complete_diagonals() == 9);
  check_table(grid, kSimpleTable);
}

TEST_CASE("compound 2D golden table") {
  const auto grid = build_sequence(SequenceKind::compound, 2, 45);
  check_table(grid, kCompoundTable);
}

TEST_CASE("printed outliers 154 and 4966 are representable when their cell opens") {
  const auto simple = build_sequence(SequenceKind::simple, 2, 36);  // through (1,8) = 157
  REQUIRE(simple.entries().back() == GridEntry{{1, 8}, 157});
  const auto w154 = is_representable(simple, 154);
  REQUIRE(w154.has_value());
  CHECK(w154->parts == std::vector<GridEntry>{{{3, 6}, 139}, {{2, 3}, 12}, {{1, 2}, 3}});
  CHECK_FALSE(is_representable(simple, 159).has_value());

  const auto compound = build_sequence(SequenceKind::compound, 2, 40);  // through (6,4) = 2952
  REQUIRE(compound.entries().back() == GridEntry{{6, 4}, 2952});
  const auto w4966 = is_representable(compound, 4966);
  REQUIRE(w4966.has_value());
  CHECK(is_legal(compound, *w4966));
  CHECK(w4966->sum() == 4966);
  for (std::uint64_t m = 2953; m < 4960; ++m) REQUIRE(is_representable(compound, m).has_value());
  CHECK_FALSE(is_representable(compound, 4960).has_value());
}

TEST_CASE("is_representable examples") {
  SequenceGrid just_one(SequenceKind::simple, 2);
  just_one.append(1);
  const auto w1 = is_representable(just_one, 1);
  REQUIRE(w1.has_value());
  CHECK(values_of(*w1) == std::vector<std::uint64_t>{1});
  CHECK_FALSE(is_representable(just_one, 2).has_value());

  const auto five = build_sequence(SequenceKind::simple, 2, 5);  // ... (2,2) = 5
  REQUIRE(five.entries().back() == GridEntry{{2, 2}, 5});
  const auto w6 = is_representable(five, 6);
  REQUIRE(w6.has_value());
  CHECK(w6->parts == std::vector<GridEntry>{{{2, 2}, 5}, {{1, 1}, 1}});
  CHECK_THROWS_AS(is_representable(five, 0), std::invalid_argument);
}

TEST_CASE("decompositions of 25 and 160") {
  const auto simple = build_sequence(SequenceKind::simple, 2, 45);
  const auto d25 = enumerate_decompositions(simple, 25);
  REQUIRE(d25.size() == 2);
  CHECK(values_of(d25[0]) == std::vector<std::uint64_t>{24, 1});
  CHECK(values_of(d25[1]) == std::vector<std::uint64_t>{20, 5});
  CHECK(is_representable(simple, 25).has_value());

  const auto compound = build_sequence(SequenceKind::compound, 2, 45);
  const auto d160 = enumerate_decompositions(compound, 160);
  std::vector<std::vector<std::uint64_t>> sets;
  for (const auto& d : d160) {
    CHECK(is_legal(compound, d));
    CHECK(d.sum() == 160);
    sets.push_back(values_of(d));
  }
  CHECK(std::ranges::find(sets, std::vector<std::uint64_t>{112, 38, 10}) != sets.end());
  CHECK(std::ranges::find(sets, std::vector<std::uint64_t>{140, 18, 2}) != sets.end());

  std::uint64_t everything = 0;
  for (const auto& e : simple.entries()) everything += e.value;
  CHECK(enumerate_decompositions(simple, everything + 1).empty());
}

TEST_CASE("search agrees with exhaustive subset enumeration") {
  for (const auto kind : {SequenceKind::simple, SequenceKind::compound}) {
    const auto grid = build_sequence(kind, 2, 15);
    const auto cells = cells_of(grid);
    auto follows = [kind](const testing::Cell& x, const testing::Cell& y) {
      if (kind == SequenceKind::simple) return y.a < x.a && y.b < x.b;
      return y.a <= x.a && y.b <= x.b && !(y.a == x.a && y.b == x.b);
    };
    for (std::uint64_t m = 1; m <= 400; ++m) {
      const auto brute = testing::brute_force_chains(cells, m, follows);
      std::vector<std::vector<std::uint64_t>> found;
      for (const auto& d : enumerate_decompositions(grid, m)) {
        CHECK(is_legal(grid, d));
        found.push_back(values_of(d));
      }
      std::ranges::sort(found);
      INFO("kind=" << to_string(kind) << " m=" << m);
      CHECK(found == brute);
      CHECK(is_representable(grid, m).has_value() == !brute.empty());
    }
  }
}

TEST_CASE("greedy soundness during construction") {
  for (const auto kind : {SequenceKind::simple, SequenceKind::compound}) {
    SequenceBuilder builder(kind, 2);
    std::uint64_t previous = 0;
    while (builder.grid().size() < 45) {
      const SequenceGrid before = builder.grid();
      const auto step = builder.advance();
      const auto all = enumerate_decompositions(before, step.candidate);
      INFO("kind=" << to_string(kind) << " m=" << step.candidate);
      if (step.admitted) {
        REQUIRE(all.empty());
        CHECK(step.candidate > previous);
        previous = step.candidate;
      } else {
        REQUIRE_FALSE(all.empty());
        REQUIRE(step.witness.has_value());
        CHECK(is_legal(before, *step.witness));
        CHECK(step.witness->sum() == step.candidate);
      }
    }
  }
}

TEST_CASE("is_legal rejects malformed chains") {
  const auto grid = build_sequence(SequenceKind::simple, 2, 10);
  CHECK_FALSE(is_legal(grid, Decomposition{}));
  CHECK_FALSE(is_legal(grid, Decomposition{{{{2, 1}, 2}, {{1, 1}, 1}}}));   // same row
  CHECK_FALSE(is_legal(grid, Decomposition{{{{2, 2}, 6}}}));                 // wrong value
  CHECK_FALSE(is_legal(grid, Decomposition{{{{1, 1}, 1}, {{2, 2}, 5}}}));   // ascending
  CHECK(is_legal(grid, Decomposition{{{{2, 2}, 5}, {{1, 1}, 1}}}));
}

TEST_CASE("snapshot round trip and resume") {
  const auto full = build_sequence(SequenceKind::compound, 2, 21);
  const auto text = grid_to_json(full);
  CHECK(grid_from_json(text) == full);

  const auto partial = build_sequence(SequenceKind::compound, 2, 10);
  SequenceBuilder resumed(grid_from_json(grid_to_json(partial)));
  resumed.grow_to(21);
  CHECK(resumed.grid() == full);

  const auto one_d = build_sequence(SequenceKind::simple, 1, 6);
  const auto one_text = grid_to_json(one_d);
  CHECK(one_text.find("\"b\"") == std::string::npos);
  CHECK(grid_from_json(one_text) == one_d);
}

TEST_CASE("snapshot validation") {
  CHECK_THROWS_AS(grid_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(grid_from_json(R"({"kind":"fancy","dim":2,"entries":[],"next_candidate":1})"), std::invalid_argument);
  CHECK_THROWS_AS(grid_from_json(R"({"kind":"simple","dim":3,"entries":[],"next_candidate":1})"), std::invalid_argument);
  CHECK_THROWS_AS(grid_from_json(R"({"kind":"simple","dim":2,"entries":[{"a":1,"b":1,"value":1},{"a":1,"b":2,"value":2}],"next_candidate":3})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_from_json(R"({"kind":"simple","dim":2,"entries":[{"a":1,"b":1,"value":1},{"a":2,"b":1,"value":1}],"next_candidate":3})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_from_json(R"({"kind":"simple","dim":2,"entries":[{"a":1,"b":1,"value":2}],"next_candidate":3})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_from_json(R"({"kind":"simple","dim":2,"entries":[{"a":1,"b":1,"value":1}],"next_candidate":1})"),
                  std::invalid_argument);
}
