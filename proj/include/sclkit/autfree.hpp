#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclkit/braid.hpp"
#include "sclkit/word.hpp"

namespace sclkit {

/// An automorphism of the free group F_r given by the images of the
/// generators, together with an optional explicit inverse witness (the images
/// of the generators under the inverse map). When a witness is supplied the
/// constructor replays both compositions and rejects anything that is not the
/// identity — invertibility is certified, never decided.
class FreeAutomorphism {
public:
  FreeAutomorphism(int rank, std::vector<Word> images,
                   std::optional<std::vector<Word>> inverse_witness = std::nullopt);

  static FreeAutomorphism identity(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  bool has_inverse_witness() const noexcept { return inverse_witness_.has_value(); }
  const std::vector<Word>& inverse_witness() const;

  FreeAutomorphism inverse() const;  // requires a witness

  friend bool operator==(const FreeAutomorphism& a, const FreeAutomorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

private:
  int rank_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_witness_;
};

/// Substitutes images for letters and freely reduces.
Word apply(const FreeAutomorphism& phi, const Word& w);

/// phi after psi: apply(compose(phi, psi), w) = apply(phi, apply(psi, w)).
FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi);

/// Componentwise equality of reduced images (ranks must match).
bool aut_equal(const FreeAutomorphism& phi, const FreeAutomorphism& psi);

/// Nielsen transvection x_i -> x_i x_j (i != j), identity elsewhere.
FreeAutomorphism transvection(int rank, int i, int j);
/// Swaps the letters x_i and x_j.
FreeAutomorphism letter_swap(int rank, int i, int j);
/// Inverts the letter x_i.
FreeAutomorphism letter_invert(int rank, int i);

/// Acts as phi on the letters of block `block` (size rank(phi)), identically
/// elsewhere; result has the given total rank.
FreeAutomorphism block_embed(const FreeAutomorphism& phi, int block, int total_rank);

/// Letter-permuting automorphism moving block i (size block_size) onto block
/// p(i), preserving order inside each block. Conjugating block_embed(phi, i)
/// by it gives block_embed(phi, p(i)).
FreeAutomorphism permutation_automorphism(const Permutation& p, int block_size, int total_rank);

/// Sign of the determinant of the induced map on Z^r (exact integer
/// arithmetic). Requires an inverse witness.
int abelianization_sign(const FreeAutomorphism& phi);

/// Text format: "rank=2; a -> ab; b -> b" with an optional
/// "; inverse: a -> aB; b -> b" tail. Rank at most 26 (letter names).
FreeAutomorphism parse_automorphism(std::string_view text);
std::string render_automorphism(const FreeAutomorphism& phi);

/// Generator-word grammar for automorphisms on the command line:
/// whitespace-separated tokens `T<i>.<j>` (transvection x_i -> x_i x_j),
/// `W<i>.<j>` (swap x_i, x_j), `V<i>` (invert x_i), each with an optional
/// `^<int>`; "1" denotes the identity. All generators carry inverse
/// witnesses, so the result does too.
FreeAutomorphism parse_aut_generator_word(std::string_view text, int rank);

}  // namespace sclkit
