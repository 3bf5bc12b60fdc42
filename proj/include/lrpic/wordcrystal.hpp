#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lrpic/order.hpp"
#include "lrpic/shapes.hpp"
#include "lrpic/tableaux.hpp"

namespace lrpic {

// Kashiwara operators on words b_1 (x) ... (x) b_N over B_1 = {1, ..., n+1},
// computed with the signature rule: letter i is '+', letter i+1 is '-',
// adjacent "+-" pairs cancel until the reduced form is "-...-+...+".
// Lowering changes the leftmost surviving '+' (i -> i+1); raising changes
// the rightmost surviving '-' (i+1 -> i). An empty optional is the zero.
//
// `letter_bound` is n+1. Index i must lie in {1..n} (IndexOutOfRange) and
// every letter in {1..n+1} (LetterOutOfRange).

using Letters = std::vector<int>;

/// Positions that survive cancellation: unmatched '-' then unmatched '+'.
struct ReducedSignature {
  std::vector<std::size_t> minus;
  std::vector<std::size_t> plus;
};

ReducedSignature reduced_signature(std::span<const int> word, int i, int letter_bound);

std::optional<Letters> lowering_operator(std::span<const int> word, int i, int letter_bound);
std::optional<Letters> raising_operator(std::span<const int> word, int i, int letter_bound);

struct EmbeddingCounterexample {
  Tableau tableau;
  int index = 0;
  bool lowering = true;
  Letters image;  // the operator's output, which has no preimage
};

struct EmbeddingReport {
  bool ok = true;
  std::size_t tableaux = 0;
  std::optional<EmbeddingCounterexample> counterexample;
};

/// Checks that {read(T, order) : T in SSYT(shape, max_entry)} is closed under
/// every lowering and raising operator. Throws OrderCellMismatch or
/// OrderNotAdmissible for a bad order.
EmbeddingReport verify_embedding(const Partition& shape, int max_entry, const TotalOrder& order);

}  // namespace lrpic
