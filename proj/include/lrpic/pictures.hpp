#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lrpic/order.hpp"
#include "lrpic/shapes.hpp"

namespace lrpic {

using CellPair = std::pair<Cell, Cell>;

/// A bijection between the cells of mu and a skew shape, kept as explicit
/// (domain, image) pairs sorted by domain cell in row-major order.
class Picture {
 public:
  Picture() = default;
  /// Sorts the pairs; does not check any standardness condition.
  explicit Picture(std::vector<CellPair> pairs);

  const std::vector<CellPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }

  std::optional<Cell> image(Cell domain_cell) const;
  std::optional<Cell> preimage(Cell image_cell) const;

  friend bool operator==(const Picture&, const Picture&) = default;
  friend auto operator<=>(const Picture& a, const Picture& b) { return a.pairs_ <=> b.pairs_; }

 private:
  std::vector<CellPair> pairs_;
};

/// "(1,1)->(1,4) (1,2)->(2,3) ..."
std::string render(const Picture& f);

/// For all domain pairs x <=_P y, f(x) is weakly before f(y) in
/// `codomain_order`. Images outside the order fail the check.
bool is_standard(std::span<const CellPair> mapping, const TotalOrder& codomain_order);

/// Bijective from domain_order's cells onto codomain_order's cells, standard
/// into codomain_order, with a standard inverse into domain_order. With both
/// orders <=_J this is the classical picture condition.
bool is_picture(std::span<const CellPair> mapping, const TotalOrder& domain_order,
                const TotalOrder& codomain_order);

/// P(mu, skew : codomain_order, domain_order). Domain cells are assigned in
/// domain_order sequence; an image must be <=_P-minimal among the unused
/// codomain cells, and both standardness conditions are checked against the
/// pairs fixed so far. Output is sorted (see Picture's ordering).
/// Throws SizeMismatch if |mu| != |skew|, OrderCellMismatch if an order does
/// not list the right cells.
std::vector<Picture> enumerate_pictures(const Partition& mu, const SkewShape& skew,
                                        const TotalOrder& domain_order,
                                        const TotalOrder& codomain_order);

/// Classical pictures: both orders are <=_J.
std::vector<Picture> enumerate_pictures(const Partition& mu, const SkewShape& skew);

}  // namespace lrpic
