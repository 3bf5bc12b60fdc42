#include "lrpic/tableaux.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "lrpic/error.hpp"

namespace lrpic {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length()) {
    throw Error(Errc::ShapeMismatch, std::to_string(rows_.size()) + " rows for shape (" +
                                         to_string(shape_) + ")");
  }
  for (int i = 1; i <= shape_.length(); ++i) {
    const auto& row = rows_[i - 1];
    if (static_cast<int>(row.size()) != shape_.part(i)) {
      throw Error(Errc::ShapeMismatch, "row " + std::to_string(i) + " has length " +
                                           std::to_string(row.size()) + ", shape wants " +
                                           std::to_string(shape_.part(i)));
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) {
        throw Error(Errc::EntryExceedsBound, "entries must be positive, got " + std::to_string(row[j]));
      }
      if (j > 0 && row[j - 1] > row[j]) {
        throw Error(Errc::RowNotWeaklyIncreasing,
                    "row " + std::to_string(i) + " at column " + std::to_string(j + 1));
      }
      if (i > 1 && rows_[i - 2][j] >= row[j]) {
        throw Error(Errc::ColumnNotStrictlyIncreasing,
                    "column " + std::to_string(j + 1) + " at row " + std::to_string(i));
      }
    }
  }
}

int Tableau::at(Cell c) const {
  if (!contains(c)) {
    throw Error(Errc::CellOutsideShape, to_string(c) + " not in (" + to_string(shape_) + ")");
  }
  return rows_[c.row - 1][c.col - 1];
}

std::string render(const Tableau& t) {
  std::string out;
  for (const auto& row : t.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << render(t); }

namespace {

// Row-major backtracking. Each cell's lower bound is max(left, up + 1); its
// upper bound leaves room for the strictly increasing cells below it.
struct SsytSearch {
  const Partition& shape;
  int max_entry;
  std::vector<std::vector<int>> rows;
  std::vector<Tableau> out;

  void fill(int i, int j) {
    if (i > shape.length()) {
      out.emplace_back(Tableau(shape, rows));
      return;
    }
    if (j > shape.part(i)) {
      fill(i + 1, 1);
      return;
    }
    int lo = 1;
    if (j > 1) lo = rows[i - 1][j - 2];
    if (i > 1) lo = std::max(lo, rows[i - 2][j - 1] + 1);
    int below = 0;
    for (int r = i + 1; r <= shape.length() && shape.part(r) >= j; ++r) ++below;
    const int hi = max_entry - below;
    for (int v = lo; v <= hi; ++v) {
      rows[i - 1][j - 1] = v;
      fill(i, j + 1);
    }
  }
};

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& shape, int max_entry) {
  if (max_entry < shape.length()) return {};
  SsytSearch search{shape, max_entry, {}, {}};
  for (int part : shape.parts()) search.rows.emplace_back(static_cast<std::size_t>(part), 0);
  search.fill(1, 1);
  return std::move(search.out);
}

std::vector<Cell> level_set(const Tableau& t, int k) {
  std::vector<Cell> out;
  for (int i = 1; i <= t.shape().length(); ++i) {
    const auto& row = t.rows()[i - 1];
    for (int j = static_cast<int>(row.size()); j >= 1; --j) {
      if (row[j - 1] == k) out.push_back({i, j});
    }
  }
  return out;
}

int level_position(const Tableau& t, Cell c) {
  const int k = t.at(c);
  const auto level = level_set(t, k);
  const auto it = std::find(level.begin(), level.end(), c);
  return static_cast<int>(it - level.begin()) + 1;
}

Word read_along(const Tableau& t, const TotalOrder& order) {
  Word w;
  w.cells = order.cells();
  w.letters.reserve(w.cells.size());
  for (Cell c : w.cells) w.letters.push_back(t.rows()[c.row - 1][c.col - 1]);
  return w;
}

Word middle_eastern_reading(const Tableau& t) {
  const auto domain = cells(t.shape());
  return read_along(t, jay_order(domain));
}

Word far_eastern_reading(const Tableau& t) {
  const auto domain = cells(t.shape());
  return read_along(t, eff_order(domain));
}

Word reading_by_order(const Tableau& t, const TotalOrder& order) {
  if (!order.same_domain(cells(t.shape()))) {
    throw Error(Errc::OrderCellMismatch, "order does not list the cells of (" +
                                             to_string(t.shape()) + ")");
  }
  if (!is_admissible_order(order)) {
    throw Error(Errc::OrderNotAdmissible, "reading order is not admissible");
  }
  return read_along(t, order);
}

std::vector<int> weight(const Tableau& t, int max_entry) {
  std::vector<int> out(static_cast<std::size_t>(std::max(max_entry, 0)), 0);
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (v > max_entry) {
        throw Error(Errc::EntryExceedsBound,
                    std::to_string(v) + " exceeds bound " + std::to_string(max_entry));
      }
      ++out[static_cast<std::size_t>(v - 1)];
    }
  }
  return out;
}

}  // namespace lrpic
