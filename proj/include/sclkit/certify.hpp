#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sclkit/autfree.hpp"
#include "sclkit/engine.hpp"
#include "sclkit/word.hpp"

namespace sclkit {

/// A product expression: the group element is the ordered product of the
/// factors. Factors may be empty words.
using FactorSeq = std::vector<Word>;

Word seq_product(const FactorSeq& seq);

enum class StepKind {
  FreeReduction,           // before and after have freely equal products
  RelatorInsertion,        // after = before with a group-trivial factor inserted
  ConjugationSubstitution, // one factor replaced by conjugator.base.conjugator^-1
  CommutingSwap,           // two adjacent factors that commute in the group swap
  EngineEquality,          // products compare equal under the group engine
};

std::string_view step_kind_name(StepKind kind);
StepKind parse_step_kind(std::string_view name);

/// One link of an equality chain. `before` must continue the chain exactly;
/// the step's own data justifies `after`. Engine-invoking kinds carry the
/// reduction budget they are replayed with.
struct Step {
  StepKind kind = StepKind::FreeReduction;
  FactorSeq before;
  FactorSeq after;
  std::size_t position = 0;  // factor index (0-based); used by insertion/swap/substitution
  Word relator;              // relator-insertion: the inserted group-trivial factor
  Word conjugator;           // conjugation-substitution
  Word base;                 // conjugation-substitution
  std::uint64_t budget = kDefaultReductionBudget;
};

/// A replayable claim that two words are equal in the tagged group, as a chain
/// of independently checkable steps from claim.left to claim.right. For the
/// aut tag, words are abstract atom words and `atoms` maps letter e<k> to a
/// witnessed automorphism; products of atoms compose left to right.
struct Certificate {
  GroupTag group_tag = GroupTag::Free;
  int context = 0;  // braid: strand count (0 = infinite); aut: ambient rank; free: 0
  std::pair<Word, Word> claim;
  std::vector<FreeAutomorphism> atoms;
  std::vector<Step> steps;
};

enum class VerdictStatus { Accepted, Rejected, Inconclusive };

struct Verdict {
  VerdictStatus status = VerdictStatus::Rejected;
  std::size_t step_index = 0;  // 1-based; 0 means the claim/chain level
  std::string reason;

  bool accepted() const noexcept { return status == VerdictStatus::Accepted; }
};

/// Replays every step. Accepted iff the chain connects claim.left to
/// claim.right and each step checks out. A budget-exhausted engine call makes
/// the verdict Inconclusive, never Rejected. The lowest failing step index is
/// reported; steps are checked in parallel, with a serial reference.
Verdict verify(const Certificate& cert);
Verdict verify_serial(const Certificate& cert);

/// Versioned line-based text (.gcert). serialize always appends an integrity
/// trailer so that byte-level tampering is caught at deserialize time;
/// deserialize accepts files without the trailer (hand-written certificates)
/// and rejects any trailer mismatch.
std::string serialize(const Certificate& cert);
Certificate deserialize(std::string_view text);

/// Certificate exhibiting w as the product of the given commutators: the
/// chain expands w into the 4k entry factors and regroups. Free-group claim.
Certificate factorization_certificate(const Word& w,
                                      const std::vector<std::pair<Word, Word>>& pairs);

}  // namespace sclkit
