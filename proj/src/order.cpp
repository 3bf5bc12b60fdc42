#include "lrpic/order.hpp"

#include <algorithm>

#include "lrpic/error.hpp"

namespace lrpic {

bool leq_P(Cell x, Cell y) noexcept { return x.row <= y.row && x.col <= y.col; }

bool leq_J(Cell x, Cell y) noexcept {
  return x.row < y.row || (x.row == y.row && x.col >= y.col);
}

bool leq_F(Cell x, Cell y) noexcept {
  return x.col > y.col || (x.col == y.col && x.row <= y.row);
}

bool must_precede(Cell x, Cell y) noexcept {
  return x != y && x.row <= y.row && x.col >= y.col;
}

TotalOrder::TotalOrder(std::vector<Cell> listing) : cells_(std::move(listing)) {
  for (Cell c : cells_) {
    if (c.row < 1 || c.col < 1) throw Error(Errc::InvalidCell, "order contains " + to_string(c));
    rows_ = std::max(rows_, c.row);
    cols_ = std::max(cols_, c.col);
  }
  rank_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), -1);
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    const Cell c = cells_[k];
    int& slot = rank_[static_cast<std::size_t>((c.row - 1) * cols_ + (c.col - 1))];
    if (slot >= 0) throw Error(Errc::DuplicateCell, "order lists " + to_string(c) + " twice");
    slot = static_cast<int>(k);
  }
}

bool TotalOrder::same_domain(std::span<const Cell> other) const {
  if (other.size() != cells_.size()) return false;
  return std::all_of(other.begin(), other.end(), [this](Cell c) { return contains(c); });
}

namespace {

template <class Leq>
TotalOrder sorted_order(std::span<const Cell> domain, Leq leq) {
  std::vector<Cell> listing(domain.begin(), domain.end());
  std::sort(listing.begin(), listing.end(),
            [&](Cell x, Cell y) { return x != y && leq(x, y); });
  return TotalOrder(std::move(listing));
}

}  // namespace

TotalOrder jay_order(std::span<const Cell> domain) { return sorted_order(domain, leq_J); }
TotalOrder eff_order(std::span<const Cell> domain) { return sorted_order(domain, leq_F); }

bool is_admissible_order(const TotalOrder& order) {
  const auto& listing = order.cells();
  for (std::size_t i = 0; i < listing.size(); ++i) {
    for (std::size_t j = i + 1; j < listing.size(); ++j) {
      if (must_precede(listing[j], listing[i])) return false;
    }
  }
  return true;
}

namespace {

struct ExtensionSearch {
  std::vector<Cell> domain;                       // row-major
  std::vector<std::vector<std::size_t>> succ;     // must_precede edges
  std::vector<int> pending;                       // unplaced predecessors
  std::vector<bool> placed;
  std::vector<Cell> prefix;
  std::vector<TotalOrder> out;
  std::optional<std::size_t> limit;

  bool full() const { return limit && out.size() >= *limit; }

  void run() {
    if (full()) return;
    if (prefix.size() == domain.size()) {
      out.emplace_back(prefix);
      return;
    }
    for (std::size_t v = 0; v < domain.size(); ++v) {
      if (placed[v] || pending[v] != 0) continue;
      placed[v] = true;
      prefix.push_back(domain[v]);
      for (std::size_t w : succ[v]) --pending[w];
      run();
      for (std::size_t w : succ[v]) ++pending[w];
      prefix.pop_back();
      placed[v] = false;
      if (full()) return;
    }
  }
};

}  // namespace

std::vector<TotalOrder> enumerate_admissible_orders(std::span<const Cell> domain,
                                                    std::optional<std::size_t> limit) {
  ExtensionSearch search;
  search.domain.assign(domain.begin(), domain.end());
  std::sort(search.domain.begin(), search.domain.end());
  if (std::adjacent_find(search.domain.begin(), search.domain.end()) != search.domain.end()) {
    throw Error(Errc::DuplicateCell, "cell set has duplicates");
  }
  const std::size_t n = search.domain.size();
  search.succ.resize(n);
  search.pending.assign(n, 0);
  search.placed.assign(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (must_precede(search.domain[a], search.domain[b])) {
        search.succ[a].push_back(b);
        ++search.pending[b];
      }
    }
  }
  search.limit = limit;
  if (limit && *limit == 0) return {};
  search.run();
  return std::move(search.out);
}

}  // namespace lrpic
