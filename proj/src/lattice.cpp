// Littlewood-Richardson coefficients by the lattice-word rule. This file
// deliberately uses nothing but Partition so that it stays an independent
// check on the picture and crystal code paths.

#include <vector>

#include "lrpic/lr.hpp"

namespace lrpic {

namespace {

struct LatticeSearch {
  const Partition& inner;
  const Partition& outer;
  const Partition& content;
  // filling[r-1][c-1], 0 outside the skew shape.
  std::vector<std::vector<int>> filling;
  std::vector<int> used;  // used[v] = copies of v placed so far
  long long count = 0;

  // Cells are visited in reverse row reading order: rows top to bottom,
  // each from right to left. Both neighbours that constrain a cell (right
  // and above) are therefore already filled.
  void place(int row, int col) {
    if (row > outer.length()) {
      ++count;
      return;
    }
    if (col <= inner.part(row)) {
      const int next_row = row + 1;
      place(next_row, outer.part(next_row));
      return;
    }
    int hi = content.length();
    if (col < outer.part(row)) hi = std::min(hi, filling[row - 1][col]);
    int lo = 1;
    if (row > 1 && col > inner.part(row - 1)) lo = filling[row - 2][col - 1] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= content.part(v)) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      ++used[v];
      filling[row - 1][col - 1] = v;
      place(row, col - 1);
      filling[row - 1][col - 1] = 0;
      --used[v];
    }
  }
};

}  // namespace

long long lr_coefficient_lattice(const LRInstance& inst) {
  const Partition& inner = inst.lambda();
  const Partition& outer = inst.nu();
  const Partition& content = inst.mu();
  if (!inner.contained_in(outer) || inner.size() + content.size() != outer.size()) return 0;
  LatticeSearch search{inner, outer, content, {}, std::vector<int>(content.length() + 2, 0)};
  for (int part : outer.parts()) search.filling.emplace_back(static_cast<std::size_t>(part), 0);
  search.place(1, outer.part(1));
  return search.count;
}

}  // namespace lrpic
