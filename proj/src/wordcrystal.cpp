#include "lrpic/wordcrystal.hpp"

#include <set>
#include <string>

#include "lrpic/error.hpp"

namespace lrpic {

ReducedSignature reduced_signature(std::span<const int> word, int i, int letter_bound) {
  if (i < 1 || i >= letter_bound) {
    throw Error(Errc::IndexOutOfRange,
                "index " + std::to_string(i) + " outside 1.." + std::to_string(letter_bound - 1));
  }
  ReducedSignature sig;
  // Single left-to-right pass with a stack of open '+'; a '-' closes the
  // nearest open '+' to its left, which is the same as repeated cancellation
  // of adjacent "+-" pairs.
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int letter = word[k];
    if (letter < 1 || letter > letter_bound) {
      throw Error(Errc::LetterOutOfRange,
                  "letter " + std::to_string(letter) + " outside 1.." + std::to_string(letter_bound));
    }
    if (letter == i) {
      sig.plus.push_back(k);
    } else if (letter == i + 1) {
      if (sig.plus.empty()) {
        sig.minus.push_back(k);
      } else {
        sig.plus.pop_back();
      }
    }
  }
  return sig;
}

std::optional<Letters> lowering_operator(std::span<const int> word, int i, int letter_bound) {
  const auto sig = reduced_signature(word, i, letter_bound);
  if (sig.plus.empty()) return std::nullopt;
  Letters out(word.begin(), word.end());
  out[sig.plus.front()] = i + 1;
  return out;
}

std::optional<Letters> raising_operator(std::span<const int> word, int i, int letter_bound) {
  const auto sig = reduced_signature(word, i, letter_bound);
  if (sig.minus.empty()) return std::nullopt;
  Letters out(word.begin(), word.end());
  out[sig.minus.back()] = i;
  return out;
}

EmbeddingReport verify_embedding(const Partition& shape, int max_entry, const TotalOrder& order) {
  EmbeddingReport report;
  const auto tableaux = enumerate_ssyt(shape, max_entry);
  report.tableaux = tableaux.size();

  std::vector<Letters> images;
  images.reserve(tableaux.size());
  for (const auto& t : tableaux) images.push_back(reading_by_order(t, order).letters);
  if (tableaux.empty()) {
    // Still validate the order against the shape.
    if (!order.same_domain(cells(shape))) {
      throw Error(Errc::OrderCellMismatch, "order does not list the cells of (" + to_string(shape) + ")");
    }
    if (!is_admissible_order(order)) throw Error(Errc::OrderNotAdmissible, "order is not admissible");
  }
  const std::set<Letters> image_set(images.begin(), images.end());

  for (std::size_t k = 0; k < images.size(); ++k) {
    for (int i = 1; i < max_entry; ++i) {
      for (bool lowering : {true, false}) {
        auto moved = lowering ? lowering_operator(images[k], i, max_entry)
                              : raising_operator(images[k], i, max_entry);
        if (moved && !image_set.contains(*moved)) {
          report.ok = false;
          report.counterexample = EmbeddingCounterexample{tableaux[k], i, lowering, std::move(*moved)};
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace lrpic
