#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sclkit/autfree.hpp"
#include "sclkit/braid.hpp"
#include "sclkit/word.hpp"

namespace sclkit {

/// Number of strands the handle-reduced form of u touches. A conjugation-
/// quasi-invariant, subadditive scale of "how much of the braid group u
/// needs"; an upper witness, not a provable minimum.
double braid_strand_norm(const Word& u, const BraidContext& ctx);

/// Letters genuinely involved in phi: the letters phi moves, closed under
/// taking letters of images. Size of that set.
int aut_support_size(const FreeAutomorphism& phi);
double aut_support_norm(const FreeAutomorphism& phi);

struct QuasiNormReport {
  std::string name;
  std::uint64_t samples = 0;
  std::uint64_t subadditivity_violations = 0;  // q(uv) > q(u) + q(v) cases
  double conjugacy_deviation_max = 0;          // max |q(v u v^-1) - q(u)|
  std::vector<double> unboundedness_witnesses; // q on the canonical growing family
  bool witnesses_increasing = false;           // strictly increasing => unbounded
};

/// Samples `trials` pairs of braid words (strand count `strands`, length up
/// to max_len) and audits the strand norm: subadditivity on products,
/// conjugation deviation, and the growing family s1 s3 ... s(2k-1), whose
/// norm is 2k. The family is evaluated in the infinite context (it outgrows
/// any fixed strand count); sampled words use ctx. Parallel over sample
/// indices with a serial reference producing identical output.
QuasiNormReport braid_norm_suite(const BraidContext& ctx, int strands, int max_len,
                                 std::uint64_t trials, std::uint64_t seed);
QuasiNormReport braid_norm_suite_serial(const BraidContext& ctx, int strands, int max_len,
                                        std::uint64_t trials, std::uint64_t seed);

/// Same audit for the aut support norm: random automorphisms of F_rank built
/// from up to max_factors Nielsen generators; growing family of k disjoint
/// transvections on rank 2k, whose norm is 2k.
QuasiNormReport aut_norm_suite(int rank, int max_factors, std::uint64_t trials,
                               std::uint64_t seed);
QuasiNormReport aut_norm_suite_serial(int rank, int max_factors, std::uint64_t trials,
                                      std::uint64_t seed);

/// The deterministic automorphism sampled at index k; exposed so witnesses
/// can be replayed.
FreeAutomorphism random_automorphism(std::uint64_t seed, std::uint64_t k, int rank,
                                     int max_factors);

}  // namespace sclkit
