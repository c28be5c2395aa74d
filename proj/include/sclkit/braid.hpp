#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sclkit/word.hpp"

namespace sclkit {

inline constexpr int kInfiniteStrands = 0;
inline constexpr std::uint64_t kDefaultReductionBudget = 1'000'000;

/// Scopes braid-word equality: the strand count n (generators s1..s(n-1) are
/// admissible) or the union over all n, plus the handle-reduction budget.
/// An immutable configuration value.
struct BraidContext {
  int strand_count = kInfiniteStrands;
  std::uint64_t reduction_budget = kDefaultReductionBudget;

  static BraidContext infinite(std::uint64_t budget = kDefaultReductionBudget) {
    return {kInfiniteStrands, budget};
  }
  static BraidContext strands(int n, std::uint64_t budget = kDefaultReductionBudget) {
    if (n < 1) throw DomainError("strand count must be >= 1");
    return {n, budget};
  }
  bool is_infinite() const noexcept { return strand_count == kInfiniteStrands; }
};

bool is_admissible(const Word& u, const BraidContext& ctx);
void require_admissible(const Word& u, const BraidContext& ctx);

/// Dehornoy handle reduction: rewrites u to a handle-free word representing
/// the same braid. The result is empty iff u is trivial in the braid group.
/// Each handle reduction and each letter it writes counts against
/// ctx.reduction_budget; exhausting it throws BudgetExceededError, never a
/// wrong answer.
Word handle_reduce(const Word& u, const BraidContext& ctx);

/// Decides u = v in the braid group of ctx. Refutes quickly by exponent sum
/// and underlying permutation before reducing u v^-1.
bool braid_equal(const Word& u, const Word& v, const BraidContext& ctx);

/// The abelianization homomorphism to Z: sum of letter signs.
long long exponent_sum(const Word& u);

/// Permutation of {1..n}; image(i) in the convention where composing words
/// multiplies permutations via compose() below.
class Permutation {
public:
  explicit Permutation(int n);
  static Permutation identity(int n) { return Permutation(n); }
  static Permutation transposition(int n, int i);  // (i, i+1), 1 <= i < n
  /// images[x-1] = p(x); must be a bijection on {1..n}.
  static Permutation from_one_line(const std::vector<int>& images);

  int degree() const noexcept { return static_cast<int>(image_.size()); }
  int apply(int i) const;  // 1-based

  /// (*this) after `inner`: result.apply(i) = this->apply(inner.apply(i)).
  Permutation compose(const Permutation& inner) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;  // 0-based storage
};

/// Image of u under s_i -> (i, i+1); a homomorphism with respect to compose().
Permutation underlying_permutation(const Word& u, int n);

/// Strand indices touched by the handle-reduced form of u: {i, i+1} for every
/// surviving s_i. An effective upper-bound witness set for the minimal strand
/// set, not the provable minimum (no conjugacy search is performed).
std::set<int> strand_support(const Word& u, const BraidContext& ctx);

/// s_i -> s_{i+k}; an injective endomorphism of the infinite braid group.
Word shift(const Word& u, int k);

/// The positive braid word in which each strand pair crosses at most once,
/// realizing the given underlying permutation. Built from a reduced
/// adjacent-transposition expression.
Word positive_permutation_braid(const Permutation& p);

/// Positive permutation braid swapping the strand blocks
/// [a, a+n-1] and [b, b+n-1] (disjoint, a < b) while keeping each block's
/// strands parallel. Conjugating a word supported on block a by it yields the
/// word shifted to block b; certificates verify that contract rather than
/// assuming it.
Word block_transposition_braid(int block_size, int first_block_start, int second_block_start);

}  // namespace sclkit
