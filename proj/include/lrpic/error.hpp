#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrpic {

enum class Errc {
  NotWeaklyDecreasing,
  NegativePart,
  NotContained,
  ShapeMismatch,
  RowNotWeaklyIncreasing,
  ColumnNotStrictlyIncreasing,
  CellOutsideShape,
  InvalidCell,
  DuplicateCell,
  OrderCellMismatch,
  OrderNotAdmissible,
  EntryExceedsBound,
  IndexOutOfRange,
  LetterOutOfRange,
  SizeMismatch,
  NotAPicture,
  NotLRCrystal,
  RankTooSmall,
  InvalidInstance,
};

std::string_view errc_name(Errc code);

// All library precondition failures surface as this exception type.
class Error : public std::invalid_argument {
 public:
  Error(Errc code, const std::string& what)
      : std::invalid_argument(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lrpic
