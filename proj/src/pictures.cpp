#include "lrpic/pictures.hpp"

#include <algorithm>

#include "lrpic/error.hpp"

namespace lrpic {

Picture::Picture(std::vector<CellPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

std::optional<Cell> Picture::image(Cell domain_cell) const {
  const auto it = std::lower_bound(pairs_.begin(), pairs_.end(), domain_cell,
                                   [](const CellPair& p, Cell c) { return p.first < c; });
  if (it == pairs_.end() || it->first != domain_cell) return std::nullopt;
  return it->second;
}

std::optional<Cell> Picture::preimage(Cell image_cell) const {
  for (const auto& [x, y] : pairs_) {
    if (y == image_cell) return x;
  }
  return std::nullopt;
}

std::string render(const Picture& f) {
  std::string out;
  for (const auto& [x, y] : f.pairs()) {
    if (!out.empty()) out += ' ';
    out += to_string(x) + "->" + to_string(y);
  }
  return out;
}

bool is_standard(std::span<const CellPair> mapping, const TotalOrder& codomain_order) {
  for (const auto& [x, fx] : mapping) {
    if (!codomain_order.contains(fx)) return false;
  }
  for (const auto& [x, fx] : mapping) {
    for (const auto& [y, fy] : mapping) {
      if (leq_P(x, y) && codomain_order.position(fx) > codomain_order.position(fy)) return false;
    }
  }
  return true;
}

bool is_picture(std::span<const CellPair> mapping, const TotalOrder& domain_order,
                const TotalOrder& codomain_order) {
  if (mapping.size() != domain_order.size() || mapping.size() != codomain_order.size()) return false;
  std::vector<bool> seen_domain(mapping.size(), false);
  std::vector<bool> seen_image(mapping.size(), false);
  std::vector<CellPair> inverse;
  inverse.reserve(mapping.size());
  for (const auto& [x, fx] : mapping) {
    const int dx = domain_order.position(x);
    const int cx = codomain_order.position(fx);
    if (dx < 0 || cx < 0 || seen_domain[dx] || seen_image[cx]) return false;
    seen_domain[dx] = true;
    seen_image[cx] = true;
    inverse.emplace_back(fx, x);
  }
  return is_standard(mapping, codomain_order) && is_standard(inverse, domain_order);
}

namespace {

struct PictureSearch {
  std::vector<Cell> domain;    // in domain-order sequence
  std::vector<Cell> codomain;  // row-major
  const TotalOrder& domain_order;
  const TotalOrder& codomain_order;
  std::vector<bool> used;
  std::vector<CellPair> assigned;
  std::vector<Picture> out;

  bool admissible_image(Cell x, std::size_t candidate) const {
    const Cell y = codomain[candidate];
    for (std::size_t c = 0; c < codomain.size(); ++c) {
      // Anything <=_P y still unused would need a preimage later than x.
      if (c != candidate && !used[c] && leq_P(codomain[c], y)) return false;
    }
    for (const auto& [px, py] : assigned) {
      if (leq_P(px, x) && !codomain_order.before(py, y)) return false;
      if (leq_P(x, px) && !codomain_order.before(y, py)) return false;
      if (leq_P(py, y) && !domain_order.before(px, x)) return false;
      if (leq_P(y, py) && !domain_order.before(x, px)) return false;
    }
    return true;
  }

  void run() {
    const std::size_t k = assigned.size();
    if (k == domain.size()) {
      out.emplace_back(assigned);
      return;
    }
    const Cell x = domain[k];
    for (std::size_t c = 0; c < codomain.size(); ++c) {
      if (used[c] || !admissible_image(x, c)) continue;
      used[c] = true;
      assigned.emplace_back(x, codomain[c]);
      run();
      assigned.pop_back();
      used[c] = false;
    }
  }
};

}  // namespace

std::vector<Picture> enumerate_pictures(const Partition& mu, const SkewShape& skew,
                                        const TotalOrder& domain_order,
                                        const TotalOrder& codomain_order) {
  if (mu.size() != skew.size()) {
    throw Error(Errc::SizeMismatch, "|mu| = " + std::to_string(mu.size()) + " but |skew| = " +
                                        std::to_string(skew.size()));
  }
  const auto codomain = skew.cells();
  if (!domain_order.same_domain(cells(mu))) {
    throw Error(Errc::OrderCellMismatch, "domain order does not list the cells of mu");
  }
  if (!codomain_order.same_domain(codomain)) {
    throw Error(Errc::OrderCellMismatch, "codomain order does not list the cells of the skew shape");
  }
  PictureSearch search{domain_order.cells(), codomain, domain_order, codomain_order,
                       std::vector<bool>(codomain.size(), false), {}, {}};
  search.assigned.reserve(codomain.size());
  search.run();
  std::sort(search.out.begin(), search.out.end());
  return std::move(search.out);
}

std::vector<Picture> enumerate_pictures(const Partition& mu, const SkewShape& skew) {
  const auto domain = cells(mu);
  const auto codomain = skew.cells();
  return enumerate_pictures(mu, skew, jay_order(domain), jay_order(codomain));
}

}  // namespace lrpic
