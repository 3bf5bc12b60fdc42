#include <doctest.h>

#include <algorithm>
#include <random>

#include "lrpic/error.hpp"
#include "lrpic/shapes.hpp"

using namespace lrpic;

namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected lrpic::Error");
  return Errc::InvalidInstance;
}

std::vector<Cell> cell_list(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Cell> out;
  for (auto [r, c] : xs) out.push_back({r, c});
  return out;
}

}  // namespace

TEST_CASE("partitions are canonical") {
  CHECK(Partition({3, 1, 1}).parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition().empty());
  CHECK(Partition({}).size() == 0);
  CHECK(Partition({2, 2, 0, 0}) == Partition({2, 2}));
  CHECK(Partition({2, 2, 0, 0}).length() == 2);
  CHECK(Partition({4, 3, 2, 1}).size() == 10);
  CHECK(Partition({3, 1}).part(5) == 0);
}

TEST_CASE("partition errors") {
  CHECK(error_code([] { Partition({1, 2}); }) == Errc::NotWeaklyDecreasing);
  CHECK(error_code([] { Partition({2, -1}); }) == Errc::NegativePart);
  CHECK(error_code([] { Partition({-1}); }) == Errc::NegativePart);
  CHECK(error_code([] { make_cell(0, 1); }) == Errc::InvalidCell);
}

TEST_CASE("cells of a diagram") {
  CHECK(cells(Partition{2, 2, 1}) == cell_list({{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}}));
  CHECK(cells(Partition{}).empty());
  CHECK(cells(Partition{1, 1, 1}) == cell_list({{1, 1}, {2, 1}, {3, 1}}));
}

TEST_CASE("partitions_of matches the partition numbers") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    CHECK(ps.size() == static_cast<std::size_t>(expected[n]));
    for (const auto& p : ps) CHECK(p.size() == n);
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
  }
}

TEST_CASE("skew shapes") {
  SUBCASE("worked instance") {
    const auto s = skew(Partition{4, 3, 2, 1}, Partition{3, 1, 1});
    CHECK(s.cells() == cell_list({{1, 4}, {2, 2}, {2, 3}, {3, 2}, {4, 1}}));
  }
  SUBCASE("(2,2) minus (1)") {
    CHECK(skew(Partition{2, 2}, Partition{1}).cells() == cell_list({{1, 2}, {2, 1}, {2, 2}}));
  }
  SUBCASE("empty") {
    CHECK(skew(Partition{3, 1}, Partition{3, 1}).cells().empty());
  }
  SUBCASE("not contained") {
    CHECK(error_code([] { skew(Partition{2, 2}, Partition{3}); }) == Errc::NotContained);
    CHECK(error_code([] { skew(Partition{2}, Partition{1, 1}); }) == Errc::NotContained);
  }
  SUBCASE("cell count is the size difference") {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& nu : partitions_of(n)) {
        for (int k = 0; k <= n; ++k) {
          for (const auto& lambda : partitions_of(k)) {
            if (!lambda.contained_in(nu)) continue;
            const auto s = skew(nu, lambda);
            CHECK(static_cast<int>(s.cells().size()) == nu.size() - lambda.size());
            for (Cell c : s.cells()) CHECK(s.contains(c));
          }
        }
      }
    }
  }
}

TEST_CASE("add_box") {
  SUBCASE("opens a new row") {
    const auto r = add_box(Partition{2, 1}, 3);
    CHECK(r.shape == std::vector<int>{2, 1, 1});
    CHECK(r.cell == Cell{3, 1});
    CHECK(r.is_partition);
  }
  SUBCASE("first row is always valid") {
    const auto r = add_box(Partition{2, 1}, 1);
    CHECK(r.shape == std::vector<int>{3, 1});
    CHECK(r.cell == Cell{1, 3});
    CHECK(r.is_partition);
  }
  SUBCASE("invalid addition is reported") {
    const auto r = add_box(Partition{2, 2}, 2);
    CHECK(r.shape == std::vector<int>{2, 3});
    CHECK(r.cell == Cell{2, 3});
    CHECK_FALSE(r.is_partition);
  }
  SUBCASE("skipping a row is invalid") {
    CHECK_FALSE(add_box(Partition{2}, 3).is_partition);
  }
  SUBCASE("letter must be positive") {
    CHECK(error_code([] { add_box(Partition{1}, 0); }) == Errc::LetterOutOfRange);
  }
  SUBCASE("size grows by one and exactly one part changes") {
    for (int n = 0; n <= 6; ++n) {
      for (const auto& p : partitions_of(n)) {
        for (int i = 1; i <= p.length() + 2; ++i) {
          const auto r = add_box(p, i);
          int total = 0;
          int changed = 0;
          for (std::size_t k = 0; k < r.shape.size(); ++k) {
            total += r.shape[k];
            if (r.shape[k] != p.part(static_cast<int>(k) + 1)) ++changed;
          }
          CHECK(total == p.size() + 1);
          CHECK(changed == 1);
          // Validity agrees with trying to build a partition from the result.
          bool valid = true;
          try {
            (void)Partition(r.shape);
          } catch (const Error&) {
            valid = false;
          }
          CHECK(valid == r.is_partition);
        }
      }
    }
  }
}

TEST_CASE("add_sequence") {
  SUBCASE("31212 on (2,1)") {
    const std::vector<int> letters{3, 1, 2, 1, 2};
    const auto r = add_sequence(Partition{2, 1}, letters);
    REQUIRE(r.ok());
    CHECK(*r.final_shape == Partition{4, 3, 1});
    CHECK(r.steps.size() == 5);
    CHECK(std::all_of(r.steps.begin(), r.steps.end(), [](const AdditionStep& s) { return s.valid; }));
    CHECK(r.steps[0].cell == Cell{3, 1});
    CHECK(r.steps[1].cell == Cell{1, 3});
    CHECK(r.steps[2].cell == Cell{2, 2});
    CHECK(r.steps[3].cell == Cell{1, 4});
    CHECK(r.steps[4].cell == Cell{2, 3});
  }
  SUBCASE("22133 on (2,1) fails at the second letter") {
    const std::vector<int> letters{2, 2, 1, 3, 3};
    const auto r = add_sequence(Partition{2, 1}, letters);
    CHECK_FALSE(r.ok());
    REQUIRE(r.failed_at.has_value());
    CHECK(*r.failed_at == 1);  // step 2
    CHECK(r.steps.size() == 2);
    CHECK(r.steps[0].valid);
    CHECK_FALSE(r.steps[1].valid);
    CHECK(r.steps[1].cell == Cell{2, 3});
    CHECK_FALSE(r.final_shape.has_value());
  }
  SUBCASE("22143 on (3,1,1)") {
    const std::vector<int> letters{2, 2, 1, 4, 3};
    const auto r = add_sequence(Partition{3, 1, 1}, letters);
    REQUIRE(r.ok());
    CHECK(*r.final_shape == Partition{4, 3, 2, 1});
    const std::vector<Cell> dest{{2, 2}, {2, 3}, {1, 4}, {4, 1}, {3, 2}};
    for (std::size_t k = 0; k < dest.size(); ++k) CHECK(r.steps[k].cell == dest[k]);
  }
  SUBCASE("empty word") {
    const auto r = add_sequence(Partition{2}, std::vector<int>{});
    CHECK(r.ok());
    CHECK(*r.final_shape == Partition{2});
  }
}

TEST_CASE("add_sequence properties on random words") {
  std::mt19937 rng(20260415);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto shapes = partitions_of(static_cast<int>(rng() % 6));
    const Partition lambda = shapes[rng() % shapes.size()];
    std::vector<int> letters(rng() % 8);
    for (int& v : letters) v = 1 + static_cast<int>(rng() % 5);
    const auto r = add_sequence(lambda, letters);
    if (r.ok()) {
      CHECK(r.steps.size() == letters.size());
      CHECK(r.final_shape->size() == lambda.size() + static_cast<int>(letters.size()));
      std::vector<int> rows;
      for (const auto& s : r.steps) rows.push_back(s.cell.row);
      CHECK(rows == letters);
    } else {
      // Prefix monotone: the failing step is the last one recorded.
      CHECK(*r.failed_at + 1 == r.steps.size());
      for (std::size_t k = 0; k + 1 < r.steps.size(); ++k) CHECK(r.steps[k].valid);
      CHECK_FALSE(r.steps.back().valid);
    }
  }
}
