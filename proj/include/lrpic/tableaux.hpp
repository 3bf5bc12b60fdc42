#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lrpic/order.hpp"
#include "lrpic/shapes.hpp"

namespace lrpic {

/// A semistandard Young tableau: rows weakly increase, columns strictly
/// increase. Entries are positive integers; bounds are checked by the
/// operations that need them.
class Tableau {
 public:
  Tableau() = default;
  /// Throws ShapeMismatch, EntryExceedsBound (entry < 1),
  /// RowNotWeaklyIncreasing or ColumnNotStrictlyIncreasing.
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  /// T_{i,j}. Throws Errc::CellOutsideShape.
  int at(Cell c) const;
  bool contains(Cell c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.col <= shape_.part(c.row);
  }

  friend bool operator==(const Tableau& a, const Tableau& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const Tableau& a, const Tableau& b) { return a.rows_ <=> b.rows_; }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

inline Tableau make_tableau(Partition shape, std::vector<std::vector<int>> rows) {
  return Tableau(std::move(shape), std::move(rows));
}

/// One row per line, entries separated by single spaces.
std::string render(const Tableau& t);
std::ostream& operator<<(std::ostream& os, const Tableau& t);

/// A reading of a tableau: letters together with the cell each came from.
struct Word {
  std::vector<int> letters;
  std::vector<Cell> cells;

  friend bool operator==(const Word&, const Word&) = default;
};

/// All SSYT of `shape` with entries in {1..max_entry}, lexicographic in the
/// row-major entry sequence.
std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry);

/// T^(k) sorted by increasing row / decreasing column, i.e. right to left.
std::vector<Cell> level_set(const Tableau& t, int k);

/// p(T;i,j): 1-based position of `c` within level_set(t, t.at(c)),
/// counting from the right. Throws Errc::CellOutsideShape.
int level_position(const Tableau& t, Cell c);

/// Rows right to left, top row first (order <=_J).
Word middle_eastern_reading(const Tableau& t);
/// Columns top to bottom, rightmost column first (order <=_F).
Word far_eastern_reading(const Tableau& t);

/// Reads entries along an admissible order on the shape's cells.
/// Throws OrderCellMismatch or OrderNotAdmissible.
Word reading_by_order(const Tableau& t, const TotalOrder& order);

/// Reads along `order` without validating it.
Word read_along(const Tableau& t, const TotalOrder& order);

/// Content vector: component k-1 counts entries equal to k.
/// Throws Errc::EntryExceedsBound if an entry exceeds max_entry.
std::vector<int> weight(const Tableau& t, int max_entry);

}  // namespace lrpic
