#include "lrpic/lr.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lrpic/error.hpp"

namespace lrpic {

LRInstance::LRInstance(Partition lambda, Partition mu, Partition nu, std::optional<int> rank_bound)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), nu_(std::move(nu)) {
  if (lambda_.size() + mu_.size() != nu_.size()) {
    throw Error(Errc::InvalidInstance, "|lambda| + |mu| = " + std::to_string(lambda_.size() + mu_.size()) +
                                           " but |nu| = " + std::to_string(nu_.size()));
  }
  if (!lambda_.contained_in(nu_)) {
    throw Error(Errc::NotContained, "lambda (" + to_string(lambda_) + ") not inside nu (" +
                                        to_string(nu_) + ")");
  }
  rank_bound_ = rank_bound.value_or(std::max(1, nu_.length()));
  if (rank_bound_ < std::max(1, nu_.length())) {
    throw Error(Errc::RankTooSmall, "rank bound " + std::to_string(rank_bound_) + " below the " +
                                        std::to_string(nu_.length()) + " rows of nu");
  }
}

std::string to_string(const LRInstance& inst) {
  std::ostringstream os;
  os << "lambda=" << inst.lambda() << " mu=" << inst.mu() << " nu=" << inst.nu();
  return os.str();
}

std::vector<LRInstance> all_instances(int max_size) {
  std::vector<LRInstance> out;
  for (int n = 0; n <= max_size; ++n) {
    for (const auto& nu : partitions_of(n)) {
      for (int k = 0; k <= n; ++k) {
        for (const auto& lambda : partitions_of(k)) {
          if (!lambda.contained_in(nu)) continue;
          for (const auto& mu : partitions_of(n - k)) out.emplace_back(lambda, mu, nu);
        }
      }
    }
  }
  return out;
}

namespace {

bool content_matches(const Tableau& t, const LRInstance& inst) {
  std::vector<int> counts(static_cast<std::size_t>(inst.rank_bound()) + 1, 0);
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (v > inst.rank_bound()) return false;
      ++counts[static_cast<std::size_t>(v)];
    }
  }
  for (int r = 1; r <= inst.rank_bound(); ++r) {
    if (counts[static_cast<std::size_t>(r)] != inst.nu().part(r) - inst.lambda().part(r)) return false;
  }
  return true;
}

bool addition_lands(const Word& w, const LRInstance& inst) {
  const auto result = add_sequence(inst.lambda(), w.letters);
  return result.ok() && *result.final_shape == inst.nu();
}

void check_order_on_mu(const LRInstance& inst, const TotalOrder& order) {
  if (!order.same_domain(cells(inst.mu()))) {
    throw Error(Errc::OrderCellMismatch, "order does not list the cells of mu (" + to_string(inst.mu()) + ")");
  }
  if (!is_admissible_order(order)) throw Error(Errc::OrderNotAdmissible, "order on mu is not admissible");
}

}  // namespace

std::vector<Tableau> lr_filter(const LRInstance& inst, const TotalOrder& order) {
  check_order_on_mu(inst, order);
  std::vector<Tableau> out;
  for (auto& t : enumerate_ssyt(inst.mu(), inst.rank_bound())) {
    // The content test is implied by landing on nu; it only skips work.
    if (!content_matches(t, inst)) continue;
    if (addition_lands(read_along(t, order), inst)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Tableau> lr_crystals(const LRInstance& inst) {
  return lr_filter(inst, jay_order(cells(inst.mu())));
}

bool is_lr_crystal(const Tableau& t, const LRInstance& inst) {
  if (t.shape() != inst.mu()) return false;
  return addition_lands(middle_eastern_reading(t), inst);
}

Tableau phi(const Picture& f, const LRInstance& inst) {
  const auto domain = cells(inst.mu());
  const auto codomain = inst.skew().cells();
  if (!is_picture(f.pairs(), jay_order(domain), jay_order(codomain))) {
    throw Error(Errc::NotAPicture, render(f));
  }
  std::vector<std::vector<int>> rows;
  for (int part : inst.mu().parts()) rows.emplace_back(static_cast<std::size_t>(part), 0);
  for (const auto& [x, fx] : f.pairs()) rows[x.row - 1][x.col - 1] = fx.row;
  return Tableau(inst.mu(), std::move(rows));
}

Picture psi_unchecked(const Tableau& t, const LRInstance& inst) {
  std::vector<CellPair> pairs;
  pairs.reserve(static_cast<std::size_t>(t.shape().size()));
  // p(T;i,j) for every cell in one sweep: within a level set, cells are met
  // in right-to-left order when rows go top to bottom and columns right to left.
  std::vector<int> seen(static_cast<std::size_t>(inst.rank_bound()) + 2, 0);
  const TotalOrder order = jay_order(cells(t.shape()));
  for (Cell c : order.cells()) {
    const int k = t.at(c);
    if (static_cast<std::size_t>(k) >= seen.size()) seen.resize(static_cast<std::size_t>(k) + 1, 0);
    const int p = ++seen[static_cast<std::size_t>(k)];
    pairs.emplace_back(c, Cell{k, inst.lambda().part(k) + p});
  }
  return Picture(std::move(pairs));
}

Picture psi(const Tableau& t, const LRInstance& inst) {
  if (!is_lr_crystal(t, inst)) throw Error(Errc::NotLRCrystal, "\n" + render(t));
  return psi_unchecked(t, inst);
}

BijectionReport verify_bijection(const LRInstance& inst) {
  BijectionReport report;
  const auto pictures = enumerate_pictures(inst.mu(), inst.skew());
  const auto crystals = lr_crystals(inst);
  report.pictures = pictures.size();
  report.crystals = crystals.size();
  const std::set<Tableau> crystal_set(crystals.begin(), crystals.end());
  const std::set<Picture> picture_set(pictures.begin(), pictures.end());

  auto fail = [&](const std::string& what) {
    report.ok = false;
    report.counterexample = what;
    return report;
  };

  for (const auto& f : pictures) {
    Tableau t;
    try {
      t = phi(f, inst);
    } catch (const Error& e) {
      return fail("phi failed on picture " + render(f) + ": " + e.what());
    }
    if (!crystal_set.contains(t)) return fail("phi(f) not a crystal for picture " + render(f));
    if (psi_unchecked(t, inst) != f) return fail("psi(phi(f)) != f for picture " + render(f));
  }
  for (const auto& t : crystals) {
    const Picture g = psi_unchecked(t, inst);
    if (!picture_set.contains(g)) return fail("psi(T) not a picture for tableau " + render(t));
    if (phi(g, inst) != t) return fail("phi(psi(T)) != T for tableau " + render(t));
  }
  if (pictures.size() != crystals.size()) {
    return fail("counts differ: " + std::to_string(pictures.size()) + " pictures, " +
                std::to_string(crystals.size()) + " crystals");
  }
  return report;
}

bool lemma_add_check(const Picture& f, const LRInstance& inst) {
  const Tableau t = phi(f, inst);
  const Word w = middle_eastern_reading(t);
  const auto result = add_sequence(inst.lambda(), w.letters);
  if (!result.ok()) return false;
  for (std::size_t k = 0; k < w.cells.size(); ++k) {
    if (f.image(w.cells[k]) != result.steps[k].cell) return false;
  }
  return true;
}

bool lemma_destination_check(const Tableau& t, const LRInstance& inst) {
  const Picture g = psi(t, inst);
  const Word w = middle_eastern_reading(t);
  const auto result = add_sequence(inst.lambda(), w.letters);
  if (!result.ok()) return false;
  for (std::size_t k = 0; k < w.cells.size(); ++k) {
    if (g.image(w.cells[k]) != result.steps[k].cell) return false;
  }
  return true;
}

std::map<Partition, int> decompose_tensor(const Partition& lambda, const Partition& mu,
                                          int rank_bound, const TotalOrder& order) {
  if (lambda.length() > rank_bound || mu.length() > rank_bound) {
    throw Error(Errc::RankTooSmall, "rank bound " + std::to_string(rank_bound) + " for lambda (" +
                                        to_string(lambda) + "), mu (" + to_string(mu) + ")");
  }
  if (!order.same_domain(cells(mu))) {
    throw Error(Errc::OrderCellMismatch, "order does not list the cells of mu (" + to_string(mu) + ")");
  }
  if (!is_admissible_order(order)) throw Error(Errc::OrderNotAdmissible, "order on mu is not admissible");
  std::map<Partition, int> out;
  for (const auto& t : enumerate_ssyt(mu, rank_bound)) {
    const auto result = add_sequence(lambda, read_along(t, order).letters);
    if (result.ok() && result.final_shape->length() <= rank_bound) ++out[*result.final_shape];
  }
  return out;
}

CountTriple lr_coefficient_all_methods(const LRInstance& inst) {
  CountTriple counts;
  counts.pictures = static_cast<long long>(enumerate_pictures(inst.mu(), inst.skew()).size());
  counts.crystals = static_cast<long long>(lr_crystals(inst).size());
  counts.lattice = lr_coefficient_lattice(inst);
  return counts;
}

ConjectureReport conjecture_experiment(const LRInstance& inst, const TotalOrder& skew_order,
                                       const TotalOrder& mu_order) {
  if (!is_admissible_order(skew_order)) {
    throw Error(Errc::OrderNotAdmissible, "order on the skew shape is not admissible");
  }
  ConjectureReport report;
  const auto crystals = lr_filter(inst, mu_order);
  const auto pictures = enumerate_pictures(inst.mu(), inst.skew(), mu_order, skew_order);
  report.crystals = crystals.size();
  report.pictures = pictures.size();
  std::set<Picture> image;
  for (const auto& t : crystals) image.insert(psi_unchecked(t, inst));
  report.injective = image.size() == crystals.size();
  report.image_matches = image == std::set<Picture>(pictures.begin(), pictures.end());
  return report;
}

SweepSummary sweep(int max_size) {
  SweepSummary summary;
  for (auto& inst : all_instances(max_size)) {
    SweepEntry entry{inst, {}, verify_bijection(inst)};
    entry.counts.pictures = static_cast<long long>(entry.bijection.pictures);
    entry.counts.crystals = static_cast<long long>(entry.bijection.crystals);
    entry.counts.lattice = lr_coefficient_lattice(inst);
    if (!entry.counts.agree()) ++summary.count_mismatches;
    if (!entry.bijection.ok) ++summary.bijection_failures;
    summary.entries.push_back(std::move(entry));
  }
  return summary;
}

}  // namespace lrpic
