#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sclkit/engine.hpp"
#include "sclkit/word.hpp"

namespace sclkit {

/// A real-valued function on words with a uniformly bounded homomorphism
/// deviation. Carries a running defect record: the best lower bound for the
/// defect observed so far, with the witnessing pair. The record is shared
/// across copies and guarded for concurrent sampling.
class Quasimorphism {
public:
  Quasimorphism(std::string name, GroupTag tag, std::function<double(const Word&)> evaluator);

  const std::string& name() const noexcept { return name_; }
  GroupTag tag() const noexcept { return tag_; }

  double evaluate(const Word& w) const { return eval_(w); }
  double operator()(const Word& w) const { return eval_(w); }

  double defect_lower_bound() const;
  std::optional<std::pair<Word, Word>> defect_witness() const;
  /// Records |f(xy)-f(x)-f(y)| = value for the pair (x, y); keeps the max.
  void observe_defect(double value, const Word& x, const Word& y) const;

private:
  struct DefectState;
  std::string name_;
  GroupTag tag_;
  std::function<double(const Word&)> eval_;
  std::shared_ptr<DefectState> state_;
};

/// The abelianization homomorphism of the braid groups as a quasimorphism
/// (defect 0).
Quasimorphism builtin_exponent_sum();

/// Counting quasimorphism on free words: occurrences of the pattern minus
/// occurrences of its inverse. Pattern must be nonempty, cyclically reduced,
/// on free letters.
Quasimorphism builtin_brooks(const Word& pattern);

/// Index-addressable word-pair source: at(k) depends only on (seed, k).
struct PairSampler {
  std::function<std::pair<Word, Word>(std::uint64_t)> at;
};

PairSampler free_pair_sampler(std::uint64_t seed, int rank, int max_len);
PairSampler braid_pair_sampler(std::uint64_t seed, int strands, int max_len);

struct DefectEstimate {
  double value = 0;
  std::optional<std::pair<Word, Word>> witness;
  std::uint64_t trials = 0;
};

/// Max of |f(xy)-f(x)-f(y)| over sampled pairs — a lower bound for the true
/// defect, with witness. Parallel over sample indices; identical output to the
/// serial reference for the same sampler and trial count.
DefectEstimate defect_estimate(const Quasimorphism& f, const PairSampler& sampler,
                               std::uint64_t trials);
DefectEstimate defect_estimate_serial(const Quasimorphism& f, const PairSampler& sampler,
                                      std::uint64_t trials);

struct HomogenizationEstimate {
  double value = 0;
  double error_bound = 0;  // defect_bound_used / exponent_used
  int exponent_used = 1;
  double defect_bound_used = 0;
};

/// f(g^N)/N with the standard error bound defect_bound/N against the
/// homogenization limit. defect_bound is caller-supplied (exact defects are
/// generally unknown; pass a defect estimate and read the bound as empirical).
HomogenizationEstimate homogenize_estimate(const Quasimorphism& f, const Word& g, int N,
                                           double defect_bound);

struct CommutingAdditivityReport {
  double deviation = 0;       // |phi_N(xy) - phi_N(x) - phi_N(y)|
  double bound = 0;           // 3 * defect_bound / N
  bool within_bound = false;
  bool power_identity_ok = false;  // (xy)^N x^-N y^-N trivial in the engine
  int exponent_used = 1;
};

/// Additivity of the homogenization on commuting x, y. Inputs that do not
/// commute in the tagged group are rejected with the commutator as witness.
CommutingAdditivityReport commuting_additivity_check(const Quasimorphism& f, const Word& x,
                                                     const Word& y, int N, double defect_bound,
                                                     const EngineContext& ctx);

/// Commutator pairs (a_k, b_k), at most 2n-1 of them, whose product is freely
/// equal to (xy)^n x^-n y^-n.
std::vector<std::pair<Word, Word>> telescope_factorization(const Word& x, const Word& y, int n);

/// (xy)^n x^-n y^-n as a reduced word.
Word telescope_target(const Word& x, const Word& y, int n);

/// Reduced product of the commutators of the given entry pairs.
Word commutator_product(const std::vector<std::pair<Word, Word>>& pairs);

/// (k-1)*defect + sum |subgroup_values[i]|.
double decomposition_bound(double defect, int k, const std::vector<double>& subgroup_values);

enum class SearchStatus { Found, NoneFound, BudgetExhausted };

struct ClSearchResult {
  SearchStatus status = SearchStatus::NoneFound;
  std::optional<int> commutator_count;
  std::vector<std::pair<Word, Word>> factorization;  // valid when status == Found
  std::uint64_t candidates_tried = 0;
};

inline constexpr std::uint64_t kDefaultClBudget = 5'000'000;

/// Smallest k <= k_max with w a product of k commutators whose entries have
/// reduced length <= entry_length_cap; an upper-bound search, never a proof of
/// exact commutator length. k = 1 is decided completely (within the cap) via
/// commutator normal forms; k >= 2 searches first entries breadth-first by
/// total length with lexicographic tie-breaking. Budget exhaustion is reported
/// distinctly from a completed search that found nothing; the budget is a work
/// cap checked at deterministic batch boundaries, so runs may overshoot it by
/// one batch and tiny budgets still complete at least one batch.
ClSearchResult cl_upper_search(const Word& w, int k_max, int entry_length_cap,
                               std::uint64_t budget = kDefaultClBudget);
ClSearchResult cl_upper_search_serial(const Word& w, int k_max, int entry_length_cap,
                                      std::uint64_t budget = kDefaultClBudget);

/// The classical two-commutator factorization of [a,b]^3 (Culler's identity),
/// shipped as a frozen replayable value.
std::vector<std::pair<Word, Word>> culler_factorization();

}  // namespace sclkit
