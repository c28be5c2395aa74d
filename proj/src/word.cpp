#include "sclkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace sclkit {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

void push_reduced(std::vector<Generator>& out, const Generator& g) {
  if (!out.empty() && out.back().cancels(g)) {
    out.pop_back();
  } else {
    out.push_back(g);
  }
}

void check_letter(const Generator& g) {
  if (g.index < 1) throw DomainError("generator index must be >= 1");
  if (g.sign != 1 && g.sign != -1) throw DomainError("generator sign must be +1 or -1");
}

}  // namespace

std::string_view alphabet_name(Alphabet family) {
  switch (family) {
    case Alphabet::Free: return "free";
    case Alphabet::Braid: return "braid";
    case Alphabet::Abstract: return "abstract";
  }
  return "?";
}

Word Word::from_letters(std::vector<Generator> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  std::optional<Alphabet> family;
  for (const Generator& g : letters) {
    check_letter(g);
    if (!family) {
      family = g.family;
    } else if (*family != g.family) {
      throw DomainError("mixed alphabet families in one word");
    }
    push_reduced(w.letters_, g);
  }
  return w;
}

Word Word::single(Alphabet family, std::int32_t index, int sign) {
  Generator g{family, index, static_cast<std::int8_t>(sign)};
  check_letter(g);
  Word w;
  w.letters_.push_back(g);
  return w;
}

std::optional<Alphabet> Word::family() const noexcept {
  if (letters_.empty()) return std::nullopt;
  return letters_.front().family;
}

std::int32_t Word::max_index() const noexcept {
  std::int32_t m = 0;
  for (const Generator& g : letters_) m = std::max(m, g.index);
  return m;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

// Parses "<int>" out of tok[pos..]; returns value, advances pos.
std::int64_t parse_int(std::string_view tok, std::size_t& pos, std::size_t base_offset) {
  std::int64_t value = 0;
  const char* first = tok.data() + pos;
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) {
    throw ParseError("expected integer", base_offset + pos);
  }
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

// Appends letter^exponent (collapsed runs) to out.
void append_run(std::vector<Generator>& out, Alphabet family, std::int32_t index,
                std::int64_t exponent, std::size_t offset) {
  if (exponent > kMaxExponent || exponent < -kMaxExponent) {
    throw ParseError("exponent too large", offset);
  }
  std::int8_t sign = exponent >= 0 ? std::int8_t{1} : std::int8_t{-1};
  for (std::int64_t k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
    push_reduced(out, Generator{family, index, sign});
  }
}

// "s<k>(^<int>)?" or "e<k>(^<int>)?" token.
void parse_indexed_token(const Token& tok, Alphabet family, char lead,
                         std::vector<Generator>& out) {
  if (tok.text[0] != lead) {
    throw ParseError(std::string("expected '") + lead + "<index>' token, got '" +
                         std::string(tok.text) + "'",
                     tok.offset);
  }
  std::size_t pos = 1;
  std::int64_t index = parse_int(tok.text, pos, tok.offset);
  if (index < 1) throw ParseError("generator index must be >= 1", tok.offset + 1);
  if (index > kMaxExponent) throw ParseError("generator index too large", tok.offset + 1);
  std::int64_t exponent = 1;
  if (pos < tok.text.size()) {
    if (tok.text[pos] != '^') {
      throw ParseError("unexpected character in token '" + std::string(tok.text) + "'",
                       tok.offset + pos);
    }
    ++pos;
    exponent = parse_int(tok.text, pos, tok.offset);
    if (pos != tok.text.size()) {
      throw ParseError("trailing characters after exponent", tok.offset + pos);
    }
  }
  append_run(out, family, static_cast<std::int32_t>(index), exponent, tok.offset);
}

void parse_free_token(const Token& tok, std::vector<Generator>& out) {
  for (std::size_t i = 0; i < tok.text.size(); ++i) {
    char c = tok.text[i];
    if (c >= 'a' && c <= 'z') {
      push_reduced(out, Generator{Alphabet::Free, static_cast<std::int32_t>(c - 'a' + 1), 1});
    } else if (c >= 'A' && c <= 'Z') {
      push_reduced(out, Generator{Alphabet::Free, static_cast<std::int32_t>(c - 'A' + 1), -1});
    } else {
      throw ParseError(std::string("invalid free-letter character '") + c + "'",
                       tok.offset + i);
    }
  }
}

}  // namespace

Word parse_word(std::string_view text, Alphabet alphabet) {
  std::vector<Token> tokens = split_tokens(text);
  if (tokens.size() == 1 && tokens[0].text == "1") return Word{};
  std::vector<Generator> letters;
  for (const Token& tok : tokens) {
    switch (alphabet) {
      case Alphabet::Free:
        parse_free_token(tok, letters);
        break;
      case Alphabet::Braid:
        parse_indexed_token(tok, Alphabet::Braid, 's', letters);
        break;
      case Alphabet::Abstract:
        parse_indexed_token(tok, Alphabet::Abstract, 'e', letters);
        break;
    }
  }
  Word w;
  // letters are already reduced by push_reduced; adopt via from_letters for checks
  return Word::from_letters(std::move(letters));
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  switch (*w.family()) {
    case Alphabet::Free:
      for (const Generator& g : w) {
        if (g.index > 26) throw DomainError("free letter index > 26 has no textual form");
        out += static_cast<char>((g.sign > 0 ? 'a' : 'A') + g.index - 1);
      }
      break;
    case Alphabet::Braid:
    case Alphabet::Abstract: {
      char lead = *w.family() == Alphabet::Braid ? 's' : 'e';
      std::size_t i = 0;
      while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        std::int64_t run = static_cast<std::int64_t>(j - i) * w[i].sign;
        if (!out.empty()) out += ' ';
        out += lead;
        out += std::to_string(w[i].index);
        if (run != 1) {
          out += '^';
          out += std::to_string(run);
        }
        i = j;
      }
      break;
    }
  }
  return out;
}

namespace {

void check_compatible(const Word& u, const Word& v) {
  if (u.family() && v.family() && *u.family() != *v.family()) {
    throw DomainError("words from different alphabet families");
  }
}

}  // namespace

Word multiply(const Word& u, const Word& v) {
  check_compatible(u, v);
  std::vector<Generator> letters;
  letters.reserve(u.size() + v.size());
  letters.assign(u.begin(), u.end());
  for (const Generator& g : v) push_reduced(letters, g);
  return Word::from_letters(std::move(letters));
}

Word invert(const Word& u) {
  std::vector<Generator> letters;
  letters.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return Word::from_letters(std::move(letters));
}

Word conjugate(const Word& u, const Word& h) {
  return multiply(multiply(h, u), invert(h));
}

Word commutator(const Word& x, const Word& y) {
  return multiply(multiply(x, y), multiply(invert(x), invert(y)));
}

Word power(const Word& u, int n) {
  if (n < 0) return power(invert(u), -n);
  Word result;
  for (int i = 0; i < n; ++i) result = multiply(result, u);
  return result;
}

CyclicReduction cyclic_reduce(const Word& u) {
  std::size_t lo = 0, hi = u.size();
  while (hi - lo >= 2 && u[lo].cancels(u[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<Generator> conj(u.begin(), u.begin() + lo);
  std::vector<Generator> core(u.begin() + lo, u.begin() + hi);
  return {Word::from_letters(std::move(core)), Word::from_letters(std::move(conj))};
}

int count_occurrences(const Word& u, const Word& pattern) {
  if (pattern.empty()) throw DomainError("empty pattern");
  check_compatible(u, pattern);
  if (pattern.size() > u.size()) return 0;
  int count = 0;
  for (std::size_t i = 0; i + pattern.size() <= u.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      if (u[i + j] != pattern[j]) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

}  // namespace sclkit
