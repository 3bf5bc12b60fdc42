#include <doctest.h>

#include <algorithm>
#include <set>

#include "lrpic/error.hpp"
#include "lrpic/lr.hpp"
#include "lrpic/pictures.hpp"

using namespace lrpic;

namespace {

Picture example_f() {
  return Picture({{{1, 1}, {1, 4}}, {{1, 2}, {2, 3}}, {{1, 3}, {2, 2}}, {{2, 1}, {3, 2}}, {{2, 2}, {4, 1}}});
}

Picture example_f_prime() {
  return Picture({{{1, 1}, {1, 4}}, {{1, 2}, {2, 2}}, {{1, 3}, {4, 1}}, {{2, 1}, {2, 3}}, {{2, 2}, {3, 2}}});
}

// Definition check written out directly: for all x, y with x <=_P y,
// rank(f(x)) <= rank(f(y)), in both directions.
bool definitional_picture(const std::vector<CellPair>& pairs, const TotalOrder& domain_order,
                          const TotalOrder& codomain_order) {
  for (const auto& [x, fx] : pairs) {
    for (const auto& [y, fy] : pairs) {
      const bool xy = x.row <= y.row && x.col <= y.col;
      if (xy && codomain_order.position(fx) > codomain_order.position(fy)) return false;
      const bool fxy = fx.row <= fy.row && fx.col <= fy.col;
      if (fxy && domain_order.position(x) > domain_order.position(y)) return false;
    }
  }
  return true;
}

// Brute force over all |mu|! bijections.
std::set<Picture> brute_force_pictures(const Partition& mu, const SkewShape& s, const TotalOrder& domain_order,
                                       const TotalOrder& codomain_order) {
  const auto domain = cells(mu);
  auto codomain = s.cells();
  std::set<Picture> out;
  if (domain.size() != codomain.size()) return out;
  std::sort(codomain.begin(), codomain.end());
  do {
    std::vector<CellPair> pairs;
    for (std::size_t k = 0; k < domain.size(); ++k) pairs.emplace_back(domain[k], codomain[k]);
    if (definitional_picture(pairs, domain_order, codomain_order)) out.insert(Picture(pairs));
  } while (std::next_permutation(codomain.begin(), codomain.end()));
  return out;
}

}  // namespace

TEST_CASE("is_standard") {
  const auto nu_skew = skew(Partition{4, 3, 2, 1}, Partition{3, 1, 1}).cells();
  CHECK(is_standard(example_f().pairs(), jay_order(nu_skew)));
  const std::vector<CellPair> single{{{1, 1}, {1, 1}}};
  CHECK(is_standard(single, jay_order(std::vector<Cell>{{1, 1}})));
  const std::vector<CellPair> row{{{1, 1}, {1, 4}}, {{1, 2}, {2, 3}}};
  CHECK(is_standard(row, jay_order(std::vector<Cell>{{1, 4}, {2, 3}})));
  const std::vector<CellPair> swapped{{{1, 1}, {2, 3}}, {{1, 2}, {1, 4}}};
  CHECK_FALSE(is_standard(swapped, jay_order(std::vector<Cell>{{1, 4}, {2, 3}})));
}

TEST_CASE("is_picture on the worked instance") {
  const auto mu = jay_order(cells(Partition{3, 2}));
  const auto codomain = jay_order(skew(Partition{4, 3, 2, 1}, Partition{3, 1, 1}).cells());
  CHECK(is_picture(example_f().pairs(), mu, codomain));
  CHECK(is_picture(example_f_prime().pairs(), mu, codomain));

  // Sending (1,1) to (4,1) is never a picture: (1,1) <=_P every cell of mu,
  // so its image must come first in <=_J, and (4,1) comes last.
  auto codomain_cells = skew(Partition{4, 3, 2, 1}, Partition{3, 1, 1}).cells();
  std::sort(codomain_cells.begin(), codomain_cells.end());
  const auto domain_cells = cells(Partition{3, 2});
  std::size_t completions = 0;
  do {
    if (codomain_cells[0] != Cell{4, 1}) continue;
    std::vector<CellPair> pairs;
    for (std::size_t k = 0; k < domain_cells.size(); ++k) pairs.emplace_back(domain_cells[k], codomain_cells[k]);
    ++completions;
    CHECK_FALSE(is_picture(pairs, mu, codomain));
  } while (std::next_permutation(codomain_cells.begin(), codomain_cells.end()));
  CHECK(completions == 24);

  // Not a bijection.
  std::vector<CellPair> doubled = example_f().pairs();
  doubled[1].second = doubled[0].second;
  CHECK_FALSE(is_picture(doubled, mu, codomain));
}

TEST_CASE("enumerate_pictures") {
  SUBCASE("worked instance has exactly f and f'") {
    const auto pictures = enumerate_pictures(Partition{3, 2}, skew(Partition{4, 3, 2, 1}, Partition{3, 1, 1}));
    REQUIRE(pictures.size() == 2);
    CHECK(std::set<Picture>(pictures.begin(), pictures.end()) ==
          std::set<Picture>{example_f(), example_f_prime()});
    CHECK(std::is_sorted(pictures.begin(), pictures.end()));
  }
  SUBCASE("single box") {
    const auto pictures = enumerate_pictures(Partition{1}, skew(Partition{2}, Partition{1}));
    REQUIRE(pictures.size() == 1);
    CHECK(pictures[0] == Picture({{{1, 1}, {1, 2}}}));
  }
  SUBCASE("count equals the lattice oracle") {
    const auto pictures = enumerate_pictures(Partition{2, 1}, skew(Partition{3, 2, 1}, Partition{2, 1}));
    CHECK(static_cast<long long>(pictures.size()) ==
          lr_coefficient_lattice(LRInstance(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1})));
  }
  SUBCASE("size mismatch") {
    CHECK_THROWS_AS(enumerate_pictures(Partition{2}, skew(Partition{2}, Partition{1})), Error);
  }
  SUBCASE("empty") {
    CHECK(enumerate_pictures(Partition{}, skew(Partition{2}, Partition{2})).size() == 1);
  }
}

TEST_CASE("pruned enumeration equals brute force") {
  for (const auto& inst : all_instances(6)) {
    const auto domain = cells(inst.mu());
    const auto codomain = inst.skew().cells();
    const auto jj = enumerate_pictures(inst.mu(), inst.skew());
    CHECK(std::set<Picture>(jj.begin(), jj.end()) ==
          brute_force_pictures(inst.mu(), inst.skew(), jay_order(domain), jay_order(codomain)));
    const auto ff = enumerate_pictures(inst.mu(), inst.skew(), eff_order(domain), eff_order(codomain));
    CHECK(std::set<Picture>(ff.begin(), ff.end()) ==
          brute_force_pictures(inst.mu(), inst.skew(), eff_order(domain), eff_order(codomain)));
  }
}

TEST_CASE("picture counts equal the lattice oracle up to size 8") {
  for (const auto& inst : all_instances(8)) {
    CHECK(static_cast<long long>(enumerate_pictures(inst.mu(), inst.skew()).size()) == lr_coefficient_lattice(inst));
  }
}

TEST_CASE("admissible-order pictures coincide with classical pictures") {
  for (const auto& inst : all_instances(7)) {
    const auto classic = enumerate_pictures(inst.mu(), inst.skew());
    const std::set<Picture> classic_set(classic.begin(), classic.end());
    const auto skew_orders = enumerate_admissible_orders(inst.skew().cells());
    const auto mu_orders = enumerate_admissible_orders(cells(inst.mu()));
    for (const auto& a : skew_orders) {
      for (const auto& a_prime : mu_orders) {
        const auto generalized = enumerate_pictures(inst.mu(), inst.skew(), a_prime, a);
        CHECK(std::set<Picture>(generalized.begin(), generalized.end()) == classic_set);
      }
    }
  }
}
