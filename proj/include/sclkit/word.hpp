#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sclkit/errors.hpp"

namespace sclkit {

/// Symbol class a generator belongs to. Words never mix families.
enum class Alphabet : std::uint8_t {
  Free,      ///< free-group letters a, b, c, ... (uppercase = inverse)
  Braid,     ///< Artin generators s1, s2, ... with optional ^exponent
  Abstract,  ///< environment atoms e1, e2, ... used by certificates
};

std::string_view alphabet_name(Alphabet family);

/// One letter: a generator or its inverse. index >= 1 always.
struct Generator {
  Alphabet family;
  std::int32_t index;
  std::int8_t sign;  // +1 or -1

  Generator inverse() const { return {family, index, static_cast<std::int8_t>(-sign)}; }

  bool cancels(const Generator& o) const {
    return family == o.family && index == o.index && sign == -o.sign;
  }

  friend bool operator==(const Generator&, const Generator&) = default;

  // Deterministic total order used for lexicographic tie-breaking:
  // by family, then index, then positive before negative.
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.family <=> b.family; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    return (a.sign > 0 ? 0 : 1) <=> (b.sign > 0 ? 0 : 1);
  }
};

/// A freely reduced word over a single alphabet family. Immutable value type:
/// every operation returns a new word, so words are safe to share across
/// threads. The empty word is the identity and is compatible with every
/// family.
class Word {
public:
  Word() = default;

  /// Builds a word from raw letters, freely reducing them. Throws DomainError
  /// on mixed families or non-positive indices.
  static Word from_letters(std::vector<Generator> letters);

  static Word single(Alphabet family, std::int32_t index, int sign = +1);

  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Generator>& letters() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// nullopt iff the word is empty.
  std::optional<Alphabet> family() const noexcept;

  /// Largest generator index occurring, 0 for the empty word.
  std::int32_t max_index() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

  /// Shortlex order (length first, then letterwise); deterministic tie-break
  /// for searches and witness reporting.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
  std::vector<Generator> letters_;
};

/// Parses the whitespace-separated token grammar:
///   free:  tokens of letters a-z (generator) / A-Z (inverse); a->1, b->2, ...
///   braid: tokens s<k> with optional ^<int>, e.g. "s1 s3^-2"
///   abstract: tokens e<k> with optional ^<int>
/// "1" on its own denotes the empty word. Errors carry the byte offset.
Word parse_word(std::string_view text, Alphabet alphabet);

/// Renders so that parse_word(render_word(w), family) == w. Free words render
/// compactly ("abA"), braid and abstract words as spaced tokens with collapsed
/// exponent runs ("s1 s3^-2"). The empty word renders as "1".
std::string render_word(const Word& w);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);

/// h u h^-1.
Word conjugate(const Word& u, const Word& h);

/// x y x^-1 y^-1.
Word commutator(const Word& x, const Word& y);

/// u^n (n may be negative).
Word power(const Word& u, int n);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // u = conjugator . core . conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& u);

/// Occurrences (possibly overlapping) of `pattern` as a contiguous subword of
/// the reduced u. The pattern must be nonempty.
int count_occurrences(const Word& u, const Word& pattern);

}  // namespace sclkit
