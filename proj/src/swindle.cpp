#include "sclkit/swindle.hpp"

#include <cmath>
#include <utility>

#include "sclkit/braid.hpp"
#include "sclkit/errors.hpp"

namespace sclkit {
namespace {

Word atom_letter(int k, int sign = +1) { return Word::single(Alphabet::Abstract, k, sign); }

/// Shared chain assembly: expand the big commutator, bubble the factors into
/// per-copy order with commuting swaps (stable, so swapped factors always come
/// from different copies), group, then rewrite copies 2..m as conjugates.
Certificate build_swindle_chain(GroupTag tag, int context, std::vector<FreeAutomorphism> atoms,
                                const std::vector<Word>& xw, const std::vector<Word>& yw,
                                const std::vector<Word>& conjugators, std::uint64_t budget) {
  const int m = static_cast<int>(xw.size());
  Certificate cert;
  cert.group_tag = tag;
  cert.context = context;
  cert.atoms = std::move(atoms);

  Word big_x, big_y;
  for (const Word& w : xw) big_x = multiply(big_x, w);
  for (const Word& w : yw) big_y = multiply(big_y, w);
  cert.claim.first = commutator(big_x, big_y);

  FactorSeq seq;
  std::vector<int> key;
  for (int i = 0; i < m; ++i) {
    seq.push_back(xw[static_cast<std::size_t>(i)]);
    key.push_back(i);
  }
  for (int i = 0; i < m; ++i) {
    seq.push_back(yw[static_cast<std::size_t>(i)]);
    key.push_back(i);
  }
  for (int i = m - 1; i >= 0; --i) {
    seq.push_back(invert(xw[static_cast<std::size_t>(i)]));
    key.push_back(i);
  }
  for (int i = m - 1; i >= 0; --i) {
    seq.push_back(invert(yw[static_cast<std::size_t>(i)]));
    key.push_back(i);
  }

  Step expand;
  expand.kind = StepKind::FreeReduction;
  expand.before = {cert.claim.first};
  expand.after = seq;
  cert.steps.push_back(std::move(expand));

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
      if (key[p] <= key[p + 1]) continue;
      Step st;
      st.kind = StepKind::CommutingSwap;
      st.position = p;
      st.budget = budget;
      st.before = seq;
      std::swap(seq[p], seq[p + 1]);
      std::swap(key[p], key[p + 1]);
      st.after = seq;
      cert.steps.push_back(std::move(st));
      changed = true;
    }
  }

  FactorSeq grouped;
  for (int i = 0; i < m; ++i)
    grouped.push_back(commutator(xw[static_cast<std::size_t>(i)], yw[static_cast<std::size_t>(i)]));
  Step group;
  group.kind = StepKind::FreeReduction;
  group.before = seq;
  group.after = grouped;
  cert.steps.push_back(std::move(group));

  const Word base = grouped[0];
  FactorSeq current = grouped;
  for (int i = 2; i <= m; ++i) {
    Step st;
    st.kind = StepKind::ConjugationSubstitution;
    st.position = static_cast<std::size_t>(i - 1);
    st.budget = budget;
    st.conjugator = conjugators[static_cast<std::size_t>(i - 1)];
    st.base = base;
    st.before = current;
    current[static_cast<std::size_t>(i - 1)] = conjugate(base, st.conjugator);
    st.after = current;
    cert.steps.push_back(std::move(st));
  }

  cert.claim.second = seq_product(current);
  Step finish;
  finish.kind = StepKind::FreeReduction;
  finish.before = current;
  finish.after = {cert.claim.second};
  cert.steps.push_back(std::move(finish));
  return cert;
}

Word block_generator_word(int block_strands) {
  std::vector<Generator> letters;
  for (int k = 1; k < block_strands; ++k)
    letters.push_back({Alphabet::Braid, k, +1});
  return Word::from_letters(std::move(letters));
}

void check_braid_invariants(const CommutingFamily& fam) {
  const BraidContext ctx = BraidContext::strands(fam.total_size());
  const std::vector<Word> samples = {Word::single(Alphabet::Braid, 1),
                                     block_generator_word(fam.base_size)};
  const auto copy_of = [&](const Word& u, int i) { return braid_copy(fam, u, i); };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < fam.copies; ++i) pairs.emplace_back(i, i + 1);
  if (fam.copies > 2) pairs.emplace_back(1, fam.copies);
  for (const auto& [i, j] : pairs) {
    for (const Word& u : samples) {
      const Word a = copy_of(u, i);
      const Word b = copy_of(u, j);
      if (!braid_equal(multiply(a, b), multiply(b, a), ctx))
        throw DomainError("family invariant violated: copies " + std::to_string(i) + " and " +
                          std::to_string(j) + " do not commute");
    }
  }
  for (int i = 2; i <= fam.copies; ++i) {
    const Word& beta = fam.braid_conjugators[static_cast<std::size_t>(i - 1)];
    for (const Word& u : samples) {
      if (!braid_equal(conjugate(copy_of(u, 1), beta), copy_of(u, i), ctx))
        throw DomainError("family invariant violated: conjugator " + std::to_string(i) +
                          " does not carry copy 1 to copy " + std::to_string(i));
    }
  }
}

void check_aut_invariants(const CommutingFamily& fam) {
  const int r = fam.base_size;
  const std::vector<FreeAutomorphism> samples = {transvection(r, 1, 2), letter_swap(r, 1, 2)};
  const auto copy_of = [&](const FreeAutomorphism& u, int i) { return aut_copy(fam, u, i); };
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < fam.copies; ++i) pairs.emplace_back(i, i + 1);
  if (fam.copies > 2) pairs.emplace_back(1, fam.copies);
  for (const auto& [i, j] : pairs) {
    for (const FreeAutomorphism& u : samples) {
      const FreeAutomorphism a = copy_of(u, i);
      const FreeAutomorphism b = copy_of(u, j);
      if (!aut_equal(compose(a, b), compose(b, a)))
        throw DomainError("family invariant violated: copies " + std::to_string(i) + " and " +
                          std::to_string(j) + " do not commute");
    }
  }
  for (int i = 2; i <= fam.copies; ++i) {
    const FreeAutomorphism& c = fam.aut_conjugators[static_cast<std::size_t>(i - 1)];
    for (const FreeAutomorphism& u : samples) {
      if (!aut_equal(compose(compose(c, copy_of(u, 1)), c.inverse()), copy_of(u, i)))
        throw DomainError("family invariant violated: conjugator " + std::to_string(i) +
                          " does not carry copy 1 to copy " + std::to_string(i));
    }
  }
}

Permutation block_swap_permutation(int copies, int i) {
  std::vector<int> images(static_cast<std::size_t>(copies));
  for (int k = 1; k <= copies; ++k) images[static_cast<std::size_t>(k - 1)] = k;
  images[0] = i;
  images[static_cast<std::size_t>(i - 1)] = 1;
  return Permutation::from_one_line(images);
}

}  // namespace

CommutingFamily build_braid_family(int block_strands, int copies) {
  if (block_strands < 2) throw DomainError("braid blocks need at least 2 strands");
  if (copies < 1) throw DomainError("need at least one copy");
  CommutingFamily fam;
  fam.kind = FamilyKind::Braid;
  fam.copies = copies;
  fam.base_size = block_strands;
  fam.braid_conjugators.push_back(Word{});
  for (int i = 2; i <= copies; ++i)
    fam.braid_conjugators.push_back(
        block_transposition_braid(block_strands, 1, (i - 1) * block_strands + 1));
  check_braid_invariants(fam);
  return fam;
}

CommutingFamily build_aut_family(int block_rank, int copies) {
  if (block_rank < 2) throw DomainError("aut blocks need rank at least 2");
  if (copies < 1) throw DomainError("need at least one copy");
  CommutingFamily fam;
  fam.kind = FamilyKind::Aut;
  fam.copies = copies;
  fam.base_size = block_rank;
  fam.aut_conjugators.push_back(FreeAutomorphism::identity(copies * block_rank));
  for (int i = 2; i <= copies; ++i)
    fam.aut_conjugators.push_back(permutation_automorphism(block_swap_permutation(copies, i),
                                                           block_rank, copies * block_rank));
  check_aut_invariants(fam);
  return fam;
}

CommutingFamily build_mcg_family(int genus, int copies) {
  if (genus < 1) throw DomainError("genus must be >= 1");
  if (copies < 1) throw DomainError("need at least one copy");
  CommutingFamily fam;
  fam.kind = FamilyKind::Mcg;
  fam.copies = copies;
  fam.base_size = genus;
  return fam;
}

Word braid_copy(const CommutingFamily& fam, const Word& u, int copy) {
  if (fam.kind != FamilyKind::Braid) throw DomainError("not a braid family");
  if (copy < 1 || copy > fam.copies) throw DomainError("copy index out of range");
  require_admissible(u, BraidContext::strands(fam.base_size));
  return shift(u, (copy - 1) * fam.base_size);
}

FreeAutomorphism aut_copy(const CommutingFamily& fam, const FreeAutomorphism& u, int copy) {
  if (fam.kind != FamilyKind::Aut) throw DomainError("not an aut family");
  if (copy < 1 || copy > fam.copies) throw DomainError("copy index out of range");
  if (u.rank() != fam.base_size) throw DomainError("rank does not match the family blocks");
  return block_embed(u, copy, fam.total_size());
}

Certificate swindle_certificate(const CommutingFamily& fam, const Word& x, const Word& y,
                                std::uint64_t budget) {
  if (fam.kind == FamilyKind::Mcg)
    throw NoEngineError(
        "mapping class families carry no word-problem engine; certificates cannot be replayed");
  if (fam.kind != FamilyKind::Braid) throw DomainError("word entries need a braid family");
  std::vector<Word> xw, yw;
  for (int i = 1; i <= fam.copies; ++i) {
    xw.push_back(braid_copy(fam, x, i));
    yw.push_back(braid_copy(fam, y, i));
  }
  return build_swindle_chain(GroupTag::Braid, fam.total_size(), {}, xw, yw,
                             fam.braid_conjugators, budget);
}

Certificate swindle_certificate(const CommutingFamily& fam, const FreeAutomorphism& x,
                                const FreeAutomorphism& y) {
  if (fam.kind == FamilyKind::Mcg)
    throw NoEngineError(
        "mapping class families carry no word-problem engine; certificates cannot be replayed");
  if (fam.kind != FamilyKind::Aut) throw DomainError("automorphism entries need an aut family");
  if (x.rank() != fam.base_size || y.rank() != fam.base_size)
    throw DomainError("rank does not match the family blocks");
  if (!x.has_inverse_witness() || !y.has_inverse_witness())
    throw DomainError("certificate atoms need inverse witnesses");

  const int m = fam.copies;
  std::vector<FreeAutomorphism> atoms;
  for (int i = 1; i <= m; ++i) atoms.push_back(aut_copy(fam, x, i));
  for (int i = 1; i <= m; ++i) atoms.push_back(aut_copy(fam, y, i));
  for (int i = 2; i <= m; ++i) atoms.push_back(fam.aut_conjugators[static_cast<std::size_t>(i - 1)]);

  std::vector<Word> xw, yw, conjugators;
  conjugators.push_back(Word{});
  for (int i = 1; i <= m; ++i) {
    xw.push_back(atom_letter(i));
    yw.push_back(atom_letter(m + i));
  }
  for (int i = 2; i <= m; ++i) conjugators.push_back(atom_letter(2 * m + i - 1));

  return build_swindle_chain(GroupTag::Aut, fam.total_size(), std::move(atoms), xw, yw,
                             conjugators, kDefaultReductionBudget);
}

namespace {

SwindleBound fill_bound(std::string name, int copies, int exponent, double defect_bound,
                        double phi_commutator) {
  SwindleBound b;
  b.qm_name = std::move(name);
  b.copies = copies;
  b.exponent = exponent;
  b.defect_bound = defect_bound;
  b.phi_commutator = phi_commutator;
  b.lhs = copies * std::fabs(phi_commutator);
  b.defect_term = defect_bound;
  b.epsilon_term = copies * defect_bound / exponent;
  b.slack_term = 3.0 * (copies - 1) * defect_bound / exponent;
  b.rhs = b.defect_term + b.epsilon_term + b.slack_term;
  b.holds = b.lhs <= b.rhs + 1e-9;
  return b;
}

}  // namespace

SwindleBound swindle_quasimorphism_bound(const Quasimorphism& f, const CommutingFamily& fam,
                                         const Word& x, const Word& y, int exponent,
                                         double defect_bound) {
  if (fam.kind != FamilyKind::Braid)
    throw DomainError("word-valued quasimorphisms pair with braid families");
  if (f.tag() != GroupTag::Braid)
    throw DomainError("quasimorphism tag '" + std::string(group_tag_name(f.tag())) +
                      "' does not match the braid family");
  if (exponent < 1) throw DomainError("homogenization exponent must be >= 1");
  if (defect_bound < 0) throw DomainError("defect bound must be >= 0");
  require_admissible(x, BraidContext::strands(fam.base_size));
  require_admissible(y, BraidContext::strands(fam.base_size));
  const double phi = f.evaluate(power(commutator(x, y), exponent)) / exponent;
  return fill_bound(f.name(), fam.copies, exponent, defect_bound, phi);
}

SwindleBound swindle_quasimorphism_bound(const std::string& name,
                                         const std::function<double(const FreeAutomorphism&)>& f,
                                         const CommutingFamily& fam, const FreeAutomorphism& x,
                                         const FreeAutomorphism& y, int exponent,
                                         double defect_bound) {
  if (fam.kind != FamilyKind::Aut)
    throw DomainError("automorphism-valued evaluators pair with aut families");
  if (exponent < 1) throw DomainError("homogenization exponent must be >= 1");
  if (defect_bound < 0) throw DomainError("defect bound must be >= 0");
  if (x.rank() != fam.base_size || y.rank() != fam.base_size)
    throw DomainError("rank does not match the family blocks");
  FreeAutomorphism comm =
      compose(compose(x, y), compose(x.inverse(), y.inverse()));
  FreeAutomorphism pow = FreeAutomorphism::identity(comm.rank());
  for (int i = 0; i < exponent; ++i) pow = compose(pow, comm);
  const double phi = f(pow) / exponent;
  return fill_bound(name, fam.copies, exponent, defect_bound, phi);
}

}  // namespace sclkit
