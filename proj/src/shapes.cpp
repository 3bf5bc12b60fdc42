#include "lrpic/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lrpic/error.hpp"

namespace lrpic {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case Errc::NegativePart: return "NegativePart";
    case Errc::NotContained: return "NotContained";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::RowNotWeaklyIncreasing: return "RowNotWeaklyIncreasing";
    case Errc::ColumnNotStrictlyIncreasing: return "ColumnNotStrictlyIncreasing";
    case Errc::CellOutsideShape: return "CellOutsideShape";
    case Errc::InvalidCell: return "InvalidCell";
    case Errc::DuplicateCell: return "DuplicateCell";
    case Errc::OrderCellMismatch: return "OrderCellMismatch";
    case Errc::OrderNotAdmissible: return "OrderNotAdmissible";
    case Errc::EntryExceedsBound: return "EntryExceedsBound";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::LetterOutOfRange: return "LetterOutOfRange";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotAPicture: return "NotAPicture";
    case Errc::NotLRCrystal: return "NotLRCrystal";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::InvalidInstance: return "InvalidInstance";
  }
  return "Unknown";
}

Cell make_cell(int row, int col) {
  if (row < 1 || col < 1) {
    throw Error(Errc::InvalidCell, "cell (" + std::to_string(row) + "," + std::to_string(col) + ")");
  }
  return Cell{row, col};
}

std::ostream& operator<<(std::ostream& os, Cell c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

std::string to_string(Cell c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw Error(Errc::NegativePart, "part " + std::to_string(i + 1) + " is " + std::to_string(parts_[i]));
    }
    if (i > 0 && parts_[i - 1] < parts_[i]) {
      throw Error(Errc::NotWeaklyDecreasing,
                  "part " + std::to_string(i) + " < part " + std::to_string(i + 1));
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contained_in(const Partition& other) const noexcept {
  if (length() > other.length()) return false;
  for (int i = 1; i <= length(); ++i) {
    if (part(i) > other.part(i)) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << to_string(p) << ')';
}

std::vector<Cell> cells(const Partition& shape) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(shape.size()));
  for (int i = 1; i <= shape.length(); ++i) {
    for (int j = 1; j <= shape.part(i); ++j) out.push_back({i, j});
  }
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions_rec(remaining - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!inner_.contained_in(outer_)) {
    throw Error(Errc::NotContained,
                "(" + to_string(inner_) + ") is not contained in (" + to_string(outer_) + ")");
  }
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int i = 1; i <= outer_.length(); ++i) {
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
  }
  return out;
}

bool SkewShape::contains(Cell c) const noexcept {
  return c.row >= 1 && c.col > inner_.part(c.row) && c.col <= outer_.part(c.row);
}

BoxAddition add_box(const Partition& lambda, int letter) {
  if (letter < 1) {
    throw Error(Errc::LetterOutOfRange, "addition letter " + std::to_string(letter));
  }
  BoxAddition out;
  out.shape = lambda.parts();
  if (out.shape.size() < static_cast<std::size_t>(letter)) out.shape.resize(letter, 0);
  int& row = out.shape[letter - 1];
  ++row;
  out.cell = Cell{letter, row};
  // Only the incremented row can break monotonicity, and only against the row above.
  out.is_partition = letter == 1 || out.shape[letter - 2] >= row;
  return out;
}

AdditionResult add_sequence(const Partition& lambda, std::span<const int> letters) {
  AdditionResult result;
  result.steps.reserve(letters.size());
  Partition current = lambda;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    BoxAddition step = add_box(current, letters[k]);
    result.steps.push_back({letters[k], step.cell, step.is_partition});
    if (!step.is_partition) {
      result.failed_at = k;
      return result;
    }
    current = Partition(std::move(step.shape));
  }
  result.final_shape = std::move(current);
  return result;
}

}  // namespace lrpic
