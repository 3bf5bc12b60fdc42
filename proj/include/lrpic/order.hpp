#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lrpic/shapes.hpp"

namespace lrpic {

// (a,b) <=_P (c,d) iff a <= c and b <= d. Partial order.
bool leq_P(Cell x, Cell y) noexcept;
// (a,b) <=_J (c,d) iff a < c, or a = c and b >= d. Rows top to bottom, each right to left.
bool leq_J(Cell x, Cell y) noexcept;
// (a,b) <=_F (c,d) iff b > d, or b = d and a <= c. Columns right to left, each top to bottom.
bool leq_F(Cell x, Cell y) noexcept;

/// True when an admissible order must place x strictly before y:
/// x != y, x.row <= y.row and x.col >= y.col.
bool must_precede(Cell x, Cell y) noexcept;

/// A total order on a finite cell set, stored as the listing that realizes
/// it (earlier means smaller).
class TotalOrder {
 public:
  TotalOrder() = default;
  /// Throws Errc::DuplicateCell or Errc::InvalidCell.
  explicit TotalOrder(std::vector<Cell> listing);

  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool contains(Cell c) const noexcept { return position(c) >= 0; }

  /// 0-based position of c in the listing, or -1.
  int position(Cell c) const noexcept {
    if (c.row < 1 || c.col < 1 || c.row > rows_ || c.col > cols_) return -1;
    return rank_[static_cast<std::size_t>((c.row - 1) * cols_ + (c.col - 1))];
  }

  /// x strictly before y. Both must be in the domain.
  bool before(Cell x, Cell y) const noexcept { return position(x) < position(y); }

  /// Same cell set, ignoring the order.
  bool same_domain(std::span<const Cell> other) const;

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<Cell> cells_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> rank_;
};

TotalOrder jay_order(std::span<const Cell> domain);
TotalOrder eff_order(std::span<const Cell> domain);

bool is_admissible_order(const TotalOrder& order);

/// Every admissible order on `domain`, i.e. every linear extension of
/// must_precede. The enumeration branches on the available cells in
/// row-major order, so the output order is deterministic.
std::vector<TotalOrder> enumerate_admissible_orders(std::span<const Cell> domain,
                                                    std::optional<std::size_t> limit = std::nullopt);

}  // namespace lrpic
