#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sclkit/autfree.hpp"
#include "sclkit/certify.hpp"
#include "sclkit/quasimorphism.hpp"
#include "sclkit/word.hpp"

namespace sclkit {

/// Which concrete realization backs a commuting family of subgroup copies.
/// Mcg is the stable mapping class placeholder: the family exists abstractly
/// but owns no word-problem engine, so certificate construction refuses.
enum class FamilyKind { Braid, Aut, Mcg };

/// m pairwise-commuting copies of a base group, each conjugate to the first
/// by a recorded conjugator. Braid copies live on disjoint strand blocks of
/// size base_size inside B_{m*base_size}; aut copies act on disjoint letter
/// blocks of rank base_size inside F_{m*base_size}. conjugators[0] is the
/// identity. Builders engine-check the commuting and conjugacy contracts on
/// sample words before returning.
struct CommutingFamily {
  FamilyKind kind = FamilyKind::Braid;
  int copies = 1;      // m
  int base_size = 2;   // strand count of a block, or block rank
  std::vector<Word> braid_conjugators;            // kind == Braid
  std::vector<FreeAutomorphism> aut_conjugators;  // kind == Aut

  int total_size() const noexcept { return copies * base_size; }
};

CommutingFamily build_braid_family(int block_strands, int copies);
CommutingFamily build_aut_family(int block_rank, int copies);
/// Abstract placeholder only; carries no conjugators and no engine.
CommutingFamily build_mcg_family(int genus, int copies);

/// The i-th copy of a base element (copy is 1-based). Braid words shift to
/// strand block i; automorphisms block-embed.
Word braid_copy(const CommutingFamily& fam, const Word& u, int copy);
FreeAutomorphism aut_copy(const CommutingFamily& fam, const FreeAutomorphism& u, int copy);

/// The whole swindle identity as a replayable certificate: expands
/// [x_1..x_m, y_1..y_m], sorts the factors into per-copy commutators with
/// engine-checked commuting swaps, and rewrites each [x_i, y_i] as the
/// recorded conjugate of [x_1, y_1]. Aut families certify over abstract atom
/// words with the copies and conjugators as table atoms.
Certificate swindle_certificate(const CommutingFamily& fam, const Word& x, const Word& y,
                                std::uint64_t budget = kDefaultReductionBudget);
Certificate swindle_certificate(const CommutingFamily& fam, const FreeAutomorphism& x,
                                const FreeAutomorphism& y);

/// The vanishing estimate the swindle forces, at homogenization exponent N:
///   m * |phi_N([x, y])| <= defect_bound + m*defect_bound/N + 3(m-1)*defect_bound/N
/// (phi_N(g) = f(g^N)/N). Every term is reported separately.
struct SwindleBound {
  std::string qm_name;
  int copies = 0;
  int exponent = 0;          // N
  double defect_bound = 0;
  double phi_commutator = 0; // phi_N([x, y])
  double lhs = 0;            // copies * |phi_commutator|
  double defect_term = 0;    // defect_bound
  double epsilon_term = 0;   // copies * defect_bound / N
  double slack_term = 0;     // 3 * (copies - 1) * defect_bound / N
  double rhs = 0;
  bool holds = false;
};

SwindleBound swindle_quasimorphism_bound(const Quasimorphism& f, const CommutingFamily& fam,
                                         const Word& x, const Word& y, int exponent,
                                         double defect_bound);

/// Aut families have no builtin quasimorphism; callers plug an evaluator on
/// automorphisms.
SwindleBound swindle_quasimorphism_bound(const std::string& name,
                                         const std::function<double(const FreeAutomorphism&)>& f,
                                         const CommutingFamily& fam, const FreeAutomorphism& x,
                                         const FreeAutomorphism& y, int exponent,
                                         double defect_bound);

}  // namespace sclkit
