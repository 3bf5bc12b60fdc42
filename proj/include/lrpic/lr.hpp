#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrpic/order.hpp"
#include "lrpic/pictures.hpp"
#include "lrpic/shapes.hpp"
#include "lrpic/tableaux.hpp"

namespace lrpic {

/// A triple (lambda, mu, nu) with |lambda| + |mu| = |nu| and lambda inside
/// nu. rank_bound is n+1, the largest letter allowed in a tableau.
class LRInstance {
 public:
  LRInstance() = default;
  /// rank_bound defaults to max(1, number of rows of nu). Throws
  /// InvalidInstance (size mismatch), NotContained, or RankTooSmall.
  LRInstance(Partition lambda, Partition mu, Partition nu, std::optional<int> rank_bound = std::nullopt);

  const Partition& lambda() const noexcept { return lambda_; }
  const Partition& mu() const noexcept { return mu_; }
  const Partition& nu() const noexcept { return nu_; }
  int rank_bound() const noexcept { return rank_bound_; }
  SkewShape skew() const { return SkewShape(nu_, lambda_); }

  friend bool operator==(const LRInstance&, const LRInstance&) = default;

 private:
  Partition lambda_;
  Partition mu_;
  Partition nu_;
  int rank_bound_ = 1;
};

std::string to_string(const LRInstance& inst);

/// Every instance with |nu| <= max_size, in a fixed order (by |nu|, then nu,
/// lambda, mu as generated by partitions_of).
std::vector<LRInstance> all_instances(int max_size);

/// B(mu)^nu_lambda[A]: tableaux T in SSYT(mu, rank_bound) whose reading along
/// `order` can be added to lambda one box at a time, staying a partition,
/// and ends at nu. Throws OrderCellMismatch / OrderNotAdmissible.
std::vector<Tableau> lr_filter(const LRInstance& inst, const TotalOrder& order);

/// B(mu)^nu_lambda, read with the middle-eastern reading.
std::vector<Tableau> lr_crystals(const LRInstance& inst);

/// True iff T lies in B(mu)^nu_lambda.
bool is_lr_crystal(const Tableau& t, const LRInstance& inst);

/// Phi(f)_{i,j} = row of f(i,j). Throws NotAPicture unless f is a classical
/// picture from mu onto nu \ lambda.
Tableau phi(const Picture& f, const LRInstance& inst);

/// Psi(T)(i,j) = (T_{i,j}, lambda_{T_{i,j}} + p(T;i,j)). Throws NotLRCrystal
/// unless T is in B(mu)^nu_lambda.
Picture psi(const Tableau& t, const LRInstance& inst);

/// Psi without the membership check, used where the input crystal set is
/// different from B(mu)^nu_lambda.
Picture psi_unchecked(const Tableau& t, const LRInstance& inst);

struct BijectionReport {
  std::size_t pictures = 0;
  std::size_t crystals = 0;
  bool ok = true;
  std::string counterexample;  // empty when ok
};

/// Enumerates both sides and checks that Phi lands in the crystals, Psi
/// lands in the pictures, and both composites are identities.
BijectionReport verify_bijection(const LRInstance& inst);

/// The k-th letter of ME(Phi(f)) is read from a cell that f sends to the
/// destination of the k-th box addition.
bool lemma_add_check(const Picture& f, const LRInstance& inst);

/// Psi(T) sends every cell to the destination of the box its letter adds.
bool lemma_destination_check(const Tableau& t, const LRInstance& inst);

/// B(lambda) (x) B(mu) for GL(rank_bound): the multiset of nu obtained by
/// adding the readings of SSYT(mu, rank_bound) to lambda, keeping only
/// additions that stay partitions with at most rank_bound rows.
/// Throws RankTooSmall if lambda or mu has more than rank_bound rows.
std::map<Partition, int> decompose_tensor(const Partition& lambda, const Partition& mu,
                                          int rank_bound, const TotalOrder& order);

/// Independent oracle for c^nu_{lambda,mu}: counts semistandard fillings of
/// nu \ lambda with content mu whose reverse row reading is a lattice word.
long long lr_coefficient_lattice(const LRInstance& inst);

struct CountTriple {
  long long pictures = 0;
  long long crystals = 0;
  long long lattice = 0;

  bool agree() const noexcept { return pictures == crystals && crystals == lattice; }
  friend bool operator==(const CountTriple&, const CountTriple&) = default;
};

CountTriple lr_coefficient_all_methods(const LRInstance& inst);

/// Outcome of testing whether Psi maps B(mu)^nu_lambda[A'] bijectively onto
/// P(mu, nu \ lambda : A, A'). Reports; never asserts.
struct ConjectureReport {
  std::size_t crystals = 0;     // |B(mu)^nu_lambda[A']|
  std::size_t pictures = 0;     // |P(mu, nu \ lambda : A, A')|
  bool injective = false;       // Psi is injective on the crystal set
  bool image_matches = false;   // Psi's image equals the picture set
  bool holds() const noexcept { return injective && image_matches; }
};

/// skew_order is A on nu \ lambda, mu_order is A' on mu. Both must be
/// admissible (OrderNotAdmissible) and list the right cells.
ConjectureReport conjecture_experiment(const LRInstance& inst, const TotalOrder& skew_order,
                                       const TotalOrder& mu_order);

struct SweepEntry {
  LRInstance instance;
  CountTriple counts;
  BijectionReport bijection;
};

struct SweepSummary {
  std::vector<SweepEntry> entries;
  std::size_t count_mismatches = 0;
  std::size_t bijection_failures = 0;
  bool ok() const noexcept { return count_mismatches == 0 && bijection_failures == 0; }
};

/// Triple counts and the Phi/Psi bijection check over all_instances(max_size).
SweepSummary sweep(int max_size);

}  // namespace lrpic
