#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "lrpic/error.hpp"
#include "lrpic/tableaux.hpp"

using namespace lrpic;

namespace {

// Brute force: every filling with entries in 1..m, kept if semistandard.
std::vector<std::vector<std::vector<int>>> brute_force_ssyt(const Partition& shape, int m) {
  const auto cs = cells(shape);
  std::vector<int> flat(cs.size(), 1);
  std::vector<std::vector<std::vector<int>>> out;
  if (cs.empty()) {
    out.emplace_back();
    return out;
  }
  while (true) {
    std::vector<std::vector<int>> rows;
    for (int part : shape.parts()) rows.emplace_back(static_cast<std::size_t>(part));
    for (std::size_t k = 0; k < cs.size(); ++k) rows[cs[k].row - 1][cs[k].col - 1] = flat[k];
    bool ok = true;
    for (Cell c : cs) {
      const int v = rows[c.row - 1][c.col - 1];
      if (c.col > 1 && rows[c.row - 1][c.col - 2] > v) ok = false;
      if (c.row > 1 && rows[c.row - 2][c.col - 1] >= v) ok = false;
    }
    if (ok) out.push_back(rows);
    std::size_t k = cs.size();
    while (k > 0 && flat[k - 1] == m) flat[--k] = 1;
    if (k == 0) break;
    ++flat[k - 1];
  }
  return out;
}

Tableau example_t() { return Tableau(Partition{3, 2}, {{1, 2, 2}, {3, 4}}); }

}  // namespace

TEST_CASE("make_tableau validates") {
  CHECK_NOTHROW(example_t());
  CHECK_NOTHROW(Tableau(Partition{3, 2}, {{1, 2, 4}, {2, 3}}));
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidInstance;
  };
  CHECK(code([] { Tableau(Partition{2, 1}, {{1, 2}, {1}}); }) == Errc::ColumnNotStrictlyIncreasing);
  CHECK(code([] { Tableau(Partition{2, 1}, {{2, 1}, {3}}); }) == Errc::RowNotWeaklyIncreasing);
  CHECK(code([] { Tableau(Partition{2, 1}, {{1, 2}}); }) == Errc::ShapeMismatch);
  CHECK(code([] { Tableau(Partition{2, 1}, {{1, 2}, {2, 3}}); }) == Errc::ShapeMismatch);
  CHECK(code([] { example_t().at({2, 3}); }) == Errc::CellOutsideShape);
}

TEST_CASE("enumerate_ssyt against brute force") {
  CHECK(enumerate_ssyt(Partition{1}, 3).size() == 3);
  const auto two = enumerate_ssyt(Partition{2}, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].rows() == std::vector<std::vector<int>>{{1, 1}});
  CHECK(two[1].rows() == std::vector<std::vector<int>>{{1, 2}});
  CHECK(two[2].rows() == std::vector<std::vector<int>>{{2, 2}});
  CHECK(enumerate_ssyt(Partition{2, 1}, 3).size() == 8);
  CHECK(enumerate_ssyt(Partition{1, 1, 1}, 2).empty());
  CHECK(enumerate_ssyt(Partition{}, 1).size() == 1);

  for (int n = 0; n <= 5; ++n) {
    for (const auto& shape : partitions_of(n)) {
      std::size_t previous = 0;
      for (int m = 1; m <= 4; ++m) {
        const auto fast = enumerate_ssyt(shape, m);
        const auto slow = brute_force_ssyt(shape, m);
        REQUIRE(fast.size() == slow.size());
        // Brute force walks fillings lexicographically too.
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k].rows() == slow[k]);
        CHECK(fast.size() >= previous);
        if (m < shape.length()) CHECK(fast.empty());
        previous = fast.size();
      }
    }
  }
}

TEST_CASE("level sets and p") {
  const Tableau t = example_t();
  CHECK(level_set(t, 2) == std::vector<Cell>{{1, 3}, {1, 2}});
  CHECK(level_set(t, 5).empty());
  CHECK(level_set(t, 1) == std::vector<Cell>{{1, 1}});
  CHECK(level_position(t, {1, 2}) == 2);
  CHECK(level_position(t, {1, 3}) == 1);
  CHECK(level_position(t, {2, 2}) == 1);

  const Tableau u(Partition{2, 2, 1}, {{1, 2}, {2, 3}, {4}});
  CHECK(level_position(u, {1, 2}) == 1);
  CHECK(level_position(u, {2, 1}) == 2);
  CHECK_THROWS_AS(level_position(u, {3, 2}), Error);
}

TEST_CASE("level set order and (entry, p) uniqueness on all small tableaux") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& shape : partitions_of(n)) {
      for (const auto& t : enumerate_ssyt(shape, 4)) {
        std::set<std::pair<int, int>> keys;
        for (Cell c : cells(shape)) keys.insert({t.at(c), level_position(t, c)});
        CHECK(keys.size() == cells(shape).size());
        for (int k = 1; k <= 4; ++k) {
          const auto level = level_set(t, k);
          for (std::size_t i = 1; i < level.size(); ++i) {
            CHECK(level[i - 1].row <= level[i].row);
            CHECK(level[i - 1].col > level[i].col);
          }
        }
      }
    }
  }
}

TEST_CASE("readings") {
  const Tableau t(Partition{4, 3, 1}, {{1, 2, 2, 3}, {2, 3, 4}, {5}});
  CHECK(middle_eastern_reading(t).letters == std::vector<int>{3, 2, 2, 1, 4, 3, 2, 5});
  CHECK(far_eastern_reading(t).letters == std::vector<int>{3, 2, 4, 2, 3, 1, 2, 5});

  CHECK(middle_eastern_reading(Tableau(Partition{1}, {{7}})).letters == std::vector<int>{7});
  CHECK(far_eastern_reading(Tableau(Partition{1, 1, 1}, {{1}, {2}, {3}})).letters == std::vector<int>{1, 2, 3});

  const Word me = middle_eastern_reading(example_t());
  CHECK(me.letters == std::vector<int>{2, 2, 1, 4, 3});
  CHECK(me.cells == std::vector<Cell>{{1, 3}, {1, 2}, {1, 1}, {2, 2}, {2, 1}});
  CHECK(far_eastern_reading(example_t()).letters == std::vector<int>{2, 2, 4, 1, 3});
}

TEST_CASE("reading_by_order") {
  const Tableau t(Partition{2, 1}, {{1, 2}, {2}});
  const TotalOrder order(std::vector<Cell>{{1, 2}, {1, 1}, {2, 1}});
  CHECK(reading_by_order(t, order).letters == std::vector<int>{2, 1, 2});

  const TotalOrder row_major(cells(t.shape()));
  CHECK_THROWS_AS(reading_by_order(t, row_major), Error);
  const TotalOrder partial(std::vector<Cell>{{1, 2}, {1, 1}});
  CHECK_THROWS_AS(reading_by_order(t, partial), Error);

  // Both named readings are admissible readings.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& shape : partitions_of(n)) {
      const auto cs = cells(shape);
      for (const auto& u : enumerate_ssyt(shape, 3)) {
        CHECK(reading_by_order(u, jay_order(cs)) == middle_eastern_reading(u));
        CHECK(reading_by_order(u, eff_order(cs)) == far_eastern_reading(u));
      }
    }
  }
}

TEST_CASE("weight") {
  CHECK(weight(example_t(), 5) == std::vector<int>{1, 2, 1, 1, 0});
  CHECK(weight(Tableau(), 3) == std::vector<int>{0, 0, 0});
  CHECK(weight(Tableau(Partition{3}, {{1, 1, 1}}), 2) == std::vector<int>{3, 0});
  CHECK_THROWS_AS(weight(example_t(), 3), Error);
}

TEST_CASE("render") {
  CHECK(render(example_t()) == "1 2 2\n3 4\n");
}
