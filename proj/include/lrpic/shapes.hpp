#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lrpic {

/// A box of a Young diagram in 1-based (row, column) coordinates.
struct Cell {
  int row = 1;
  int col = 1;

  // Row-major comparison; this is NOT any of the orders used for pictures.
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Throws Errc::InvalidCell unless row >= 1 and col >= 1.
Cell make_cell(int row, int col);

std::ostream& operator<<(std::ostream& os, Cell c);
std::string to_string(Cell c);

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros. Also serves as a dominant weight and as a Young diagram.
class Partition {
 public:
  Partition() = default;
  /// Throws Errc::NegativePart or Errc::NotWeaklyDecreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }

  /// lambda_i with 1-based i; zero beyond the stored parts.
  int part(int i) const noexcept {
    return i >= 1 && static_cast<std::size_t>(i) <= parts_.size() ? parts_[i - 1] : 0;
  }

  /// Number of nonzero parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// |lambda|, the number of boxes.
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return parts_.empty(); }

  /// Cellwise containment: this_i <= other_i for all i.
  bool contained_in(const Partition& other) const noexcept;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

/// "3,1,1"; the empty partition prints as "".
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// {(i,j) : 1 <= j <= lambda_i}, row-major.
std::vector<Cell> cells(const Partition& shape);

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// The skew diagram outer \ inner.
class SkewShape {
 public:
  SkewShape() = default;
  /// Throws Errc::NotContained unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }

  /// {(i,j) : inner_i < j <= outer_i}, row-major.
  std::vector<Cell> cells() const;
  bool contains(Cell c) const noexcept;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

inline SkewShape skew(Partition outer, Partition inner) {
  return SkewShape(std::move(outer), std::move(inner));
}

/// One box addition lambda[i]. The shape may fail to be a partition; that
/// is reported through is_partition rather than thrown.
struct BoxAddition {
  std::vector<int> shape;
  Cell cell;
  bool is_partition = false;
};

/// Adds a box to row `letter` (>= 1). Rows past the end of lambda count as
/// empty, so the letter may open a new row.
BoxAddition add_box(const Partition& lambda, int letter);

struct AdditionStep {
  int letter = 0;
  Cell cell;  // destination of the added box
  bool valid = false;

  friend bool operator==(const AdditionStep&, const AdditionStep&) = default;
};

/// Result of lambda[i_1, ..., i_N].
///
/// Steps are applied left to right and stop at the first addition whose
/// shape is not a partition. That failing step is the last recorded one and
/// `failed_at` holds its 0-based index; `final_shape` is then empty.
struct AdditionResult {
  std::optional<Partition> final_shape;
  std::vector<AdditionStep> steps;
  std::optional<std::size_t> failed_at;

  bool ok() const noexcept { return !failed_at.has_value(); }
};

AdditionResult add_sequence(const Partition& lambda, std::span<const int> letters);

}  // namespace lrpic
