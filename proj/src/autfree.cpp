#include "sclkit/autfree.hpp"

#include <cctype>
#include <charconv>

#include "sclkit/errors.hpp"

namespace sclkit {

namespace {

Word substitute(const std::vector<Word>& images, const Word& w, int rank) {
  std::vector<Generator> letters;
  letters.reserve(w.size() * 2);
  const auto push = [&](Generator g) {
    if (!letters.empty() && letters.back().cancels(g)) {
      letters.pop_back();
    } else {
      letters.push_back(g);
    }
  };
  for (const Generator& g : w) {
    if (g.index > rank) throw DomainError("letter index exceeds automorphism rank");
    const Word& img = images[static_cast<std::size_t>(g.index - 1)];
    if (g.sign > 0) {
      for (const Generator& h : img) push(h);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        push(it->inverse());
      }
    }
  }
  return Word::from_letters(std::move(letters));
}

void check_images(int rank, const std::vector<Word>& images, const char* what) {
  if (static_cast<int>(images.size()) != rank) {
    throw DomainError(std::string(what) + ": expected one image word per generator");
  }
  for (const Word& w : images) {
    if (auto fam = w.family(); fam && *fam != Alphabet::Free) {
      throw DomainError(std::string(what) + ": images must be free-letter words");
    }
    if (w.max_index() > rank) {
      throw DomainError(std::string(what) + ": image uses a letter beyond the rank");
    }
  }
}

Word letter(int i, int sign = 1) { return Word::single(Alphabet::Free, i, sign); }

}  // namespace

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<Word> images,
                                   std::optional<std::vector<Word>> inverse_witness)
    : rank_(rank), images_(std::move(images)), inverse_witness_(std::move(inverse_witness)) {
  if (rank_ < 1) throw DomainError("automorphism rank must be >= 1");
  check_images(rank_, images_, "automorphism");
  if (inverse_witness_) {
    check_images(rank_, *inverse_witness_, "inverse witness");
    for (int i = 1; i <= rank_; ++i) {
      const Word xi = letter(i);
      if (substitute(images_, (*inverse_witness_)[static_cast<std::size_t>(i - 1)], rank_) != xi ||
          substitute(*inverse_witness_, images_[static_cast<std::size_t>(i - 1)], rank_) != xi) {
        throw DomainError("inverse witness does not invert the automorphism");
      }
    }
  }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(letter(i));
  std::vector<Word> witness = images;
  return FreeAutomorphism(rank, std::move(images), std::move(witness));
}

const std::vector<Word>& FreeAutomorphism::inverse_witness() const {
  if (!inverse_witness_) throw DomainError("automorphism carries no inverse witness");
  return *inverse_witness_;
}

FreeAutomorphism FreeAutomorphism::inverse() const {
  return FreeAutomorphism(rank_, inverse_witness(), images_);
}

Word apply(const FreeAutomorphism& phi, const Word& w) {
  if (auto fam = w.family(); fam && *fam != Alphabet::Free) {
    throw DomainError("automorphisms act on free-letter words");
  }
  return substitute(phi.images(), w, phi.rank());
}

FreeAutomorphism compose(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
  if (phi.rank() != psi.rank()) throw DomainError("rank mismatch in composition");
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(phi.rank()));
  for (const Word& w : psi.images()) images.push_back(apply(phi, w));
  std::optional<std::vector<Word>> witness;
  if (phi.has_inverse_witness() && psi.has_inverse_witness()) {
    const FreeAutomorphism psi_inv = psi.inverse();
    std::vector<Word> wit;
    wit.reserve(static_cast<std::size_t>(phi.rank()));
    for (const Word& w : phi.inverse_witness()) wit.push_back(apply(psi_inv, w));
    witness = std::move(wit);
  }
  return FreeAutomorphism(phi.rank(), std::move(images), std::move(witness));
}

bool aut_equal(const FreeAutomorphism& phi, const FreeAutomorphism& psi) {
  if (phi.rank() != psi.rank()) throw DomainError("rank mismatch in equality");
  return phi.images() == psi.images();
}

FreeAutomorphism transvection(int rank, int i, int j) {
  if (i < 1 || j < 1 || i > rank || j > rank) throw DomainError("transvection letter out of range");
  if (i == j) throw DomainError("transvection needs distinct letters");
  std::vector<Word> images, witness;
  for (int k = 1; k <= rank; ++k) {
    images.push_back(k == i ? multiply(letter(i), letter(j)) : letter(k));
    witness.push_back(k == i ? multiply(letter(i), letter(j, -1)) : letter(k));
  }
  return FreeAutomorphism(rank, std::move(images), std::move(witness));
}

FreeAutomorphism letter_swap(int rank, int i, int j) {
  if (i < 1 || j < 1 || i > rank || j > rank) throw DomainError("swap letter out of range");
  std::vector<Word> images;
  for (int k = 1; k <= rank; ++k) {
    images.push_back(letter(k == i ? j : (k == j ? i : k)));
  }
  std::vector<Word> witness = images;
  return FreeAutomorphism(rank, std::move(images), std::move(witness));
}

FreeAutomorphism letter_invert(int rank, int i) {
  if (i < 1 || i > rank) throw DomainError("inversion letter out of range");
  std::vector<Word> images;
  for (int k = 1; k <= rank; ++k) images.push_back(letter(k, k == i ? -1 : 1));
  std::vector<Word> witness = images;
  return FreeAutomorphism(rank, std::move(images), std::move(witness));
}

namespace {

Word translate(const Word& w, int offset) {
  std::vector<Generator> letters;
  letters.reserve(w.size());
  for (const Generator& g : w) {
    letters.push_back(Generator{g.family, g.index + offset, g.sign});
  }
  return Word::from_letters(std::move(letters));
}

}  // namespace

FreeAutomorphism block_embed(const FreeAutomorphism& phi, int block, int total_rank) {
  const int r = phi.rank();
  if (block < 1 || block * r > total_rank) throw DomainError("block out of range");
  const int offset = (block - 1) * r;
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(total_rank));
  for (int k = 1; k <= total_rank; ++k) {
    if (k > offset && k <= offset + r) {
      images.push_back(translate(phi.images()[static_cast<std::size_t>(k - offset - 1)], offset));
    } else {
      images.push_back(letter(k));
    }
  }
  std::optional<std::vector<Word>> witness;
  if (phi.has_inverse_witness()) {
    std::vector<Word> wit;
    wit.reserve(static_cast<std::size_t>(total_rank));
    for (int k = 1; k <= total_rank; ++k) {
      if (k > offset && k <= offset + r) {
        wit.push_back(translate(phi.inverse_witness()[static_cast<std::size_t>(k - offset - 1)], offset));
      } else {
        wit.push_back(letter(k));
      }
    }
    witness = std::move(wit);
  }
  return FreeAutomorphism(total_rank, std::move(images), std::move(witness));
}

FreeAutomorphism permutation_automorphism(const Permutation& p, int block_size, int total_rank) {
  const int r = block_size;
  if (r < 1) throw DomainError("block size must be >= 1");
  if (p.degree() * r > total_rank) throw DomainError("permuted blocks exceed the total rank");
  const auto build = [&](const Permutation& q) {
    std::vector<Word> images;
    images.reserve(static_cast<std::size_t>(total_rank));
    for (int k = 1; k <= total_rank; ++k) {
      if (k <= q.degree() * r) {
        const int block = (k - 1) / r + 1;
        const int pos = (k - 1) % r + 1;
        images.push_back(letter((q.apply(block) - 1) * r + pos));
      } else {
        images.push_back(letter(k));
      }
    }
    return images;
  };
  return FreeAutomorphism(total_rank, build(p), build(p.inverse()));
}

int abelianization_sign(const FreeAutomorphism& phi) {
  if (!phi.has_inverse_witness()) {
    throw DomainError("abelianization sign requires an inverse witness");
  }
  const int r = phi.rank();
  // m[row][col] = exponent sum of letter row+1 in the image of letter col+1
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(r),
                                        std::vector<long long>(static_cast<std::size_t>(r), 0));
  for (int col = 0; col < r; ++col) {
    for (const Generator& g : phi.images()[static_cast<std::size_t>(col)]) {
      m[static_cast<std::size_t>(g.index - 1)][static_cast<std::size_t>(col)] += g.sign;
    }
  }
  // Bareiss fraction-free elimination; only the sign of the determinant is needed.
  using Wide = __int128;
  std::vector<std::vector<Wide>> a(static_cast<std::size_t>(r), std::vector<Wide>(static_cast<std::size_t>(r)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  int sign = 1;
  Wide prev = 1;
  for (int k = 0; k < r - 1; ++k) {
    if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < r; ++i) {
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) throw DomainError("abelianization matrix is singular");
      std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(pivot)]);
      sign = -sign;
    }
    for (int i = k + 1; i < r; ++i) {
      for (int j = k + 1; j < r; ++j) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
             a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) /
            prev;
      }
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
    }
    prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
  }
  const Wide det = a[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(r - 1)];
  if (det == 0) throw DomainError("abelianization matrix is singular");
  return (det > 0 ? 1 : -1) * sign;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Chunk {
  std::string_view text;
  std::size_t offset;
};

std::vector<Chunk> split_on(std::string_view text, char sep) {
  std::vector<Chunk> chunks;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    std::string_view trimmed = trim(piece);
    std::size_t pad = static_cast<std::size_t>(trimmed.data() - piece.data());
    if (!trimmed.empty()) chunks.push_back({trimmed, start + pad});
    if (end == text.size()) break;
    start = end + 1;
  }
  return chunks;
}

// "a -> <word>"; returns (letter index, image word)
std::pair<int, Word> parse_assignment(const Chunk& chunk) {
  std::string_view s = chunk.text;
  if (s.empty() || s[0] < 'a' || s[0] > 'z') {
    throw ParseError("expected a generator letter", chunk.offset);
  }
  const int index = s[0] - 'a' + 1;
  std::string_view rest = trim(s.substr(1));
  if (rest.size() < 2 || rest.substr(0, 2) != "->") {
    throw ParseError("expected '->' after generator letter", chunk.offset);
  }
  Word img = parse_word(trim(rest.substr(2)), Alphabet::Free);
  return {index, img};
}

}  // namespace

FreeAutomorphism parse_automorphism(std::string_view text) {
  std::vector<Chunk> chunks = split_on(text, ';');
  if (chunks.empty()) throw ParseError("empty automorphism text", 0);
  std::string_view head = chunks[0].text;
  if (head.substr(0, 5) != "rank=") {
    throw ParseError("automorphism text must start with rank=<r>", chunks[0].offset);
  }
  int rank = 0;
  {
    std::string_view num = trim(head.substr(5));
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), rank);
    if (ec != std::errc{} || ptr != num.data() + num.size() || rank < 1) {
      throw ParseError("invalid rank", chunks[0].offset + 5);
    }
  }
  if (rank > 26) throw ParseError("text format supports rank <= 26", chunks[0].offset + 5);
  std::vector<std::optional<Word>> images(static_cast<std::size_t>(rank));
  std::vector<std::optional<Word>> witness(static_cast<std::size_t>(rank));
  bool in_witness = false;
  bool witness_seen = false;
  for (std::size_t c = 1; c < chunks.size(); ++c) {
    Chunk chunk = chunks[c];
    if (chunk.text.substr(0, 8) == "inverse:") {
      if (witness_seen) throw ParseError("duplicate inverse section", chunk.offset);
      in_witness = true;
      witness_seen = true;
      std::string_view rest = trim(chunk.text.substr(8));
      if (rest.empty()) continue;
      std::size_t pad = static_cast<std::size_t>(rest.data() - chunk.text.data());
      chunk = Chunk{rest, chunk.offset + pad};
    }
    auto [index, img] = parse_assignment(chunk);
    if (index > rank) throw ParseError("generator letter beyond rank", chunk.offset);
    auto& slot = (in_witness ? witness : images)[static_cast<std::size_t>(index - 1)];
    if (slot) throw ParseError("duplicate image for a generator", chunk.offset);
    slot = std::move(img);
  }
  std::vector<Word> image_words;
  for (int i = 0; i < rank; ++i) {
    if (!images[static_cast<std::size_t>(i)]) {
      throw ParseError("missing image for generator '" + std::string(1, static_cast<char>('a' + i)) + "'", 0);
    }
    image_words.push_back(*images[static_cast<std::size_t>(i)]);
  }
  std::optional<std::vector<Word>> witness_words;
  if (witness_seen) {
    std::vector<Word> ws;
    for (int i = 0; i < rank; ++i) {
      if (!witness[static_cast<std::size_t>(i)]) {
        throw ParseError("missing inverse image for generator '" + std::string(1, static_cast<char>('a' + i)) + "'", 0);
      }
      ws.push_back(*witness[static_cast<std::size_t>(i)]);
    }
    witness_words = std::move(ws);
  }
  try {
    return FreeAutomorphism(rank, std::move(image_words), std::move(witness_words));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::string render_automorphism(const FreeAutomorphism& phi) {
  if (phi.rank() > 26) throw DomainError("text format supports rank <= 26");
  std::string out = "rank=" + std::to_string(phi.rank());
  for (int i = 0; i < phi.rank(); ++i) {
    out += "; ";
    out += static_cast<char>('a' + i);
    out += " -> ";
    out += render_word(phi.images()[static_cast<std::size_t>(i)]);
  }
  if (phi.has_inverse_witness()) {
    out += "; inverse:";
    for (int i = 0; i < phi.rank(); ++i) {
      out += i == 0 ? " " : "; ";
      out += static_cast<char>('a' + i);
      out += " -> ";
      out += render_word(phi.inverse_witness()[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

FreeAutomorphism parse_aut_generator_word(std::string_view text, int rank) {
  if (rank < 1) throw DomainError("rank must be >= 1");
  FreeAutomorphism result = FreeAutomorphism::identity(rank);
  std::size_t i = 0;
  const auto read_int = [&](std::size_t& pos) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + pos) {
      throw ParseError("expected integer", pos);
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t tok_start = i;
    const char kind = text[i];
    if (kind == '1') {
      ++i;
      any = true;
      continue;
    }
    if (kind != 'T' && kind != 'W' && kind != 'V') {
      throw ParseError("expected generator token T<i>.<j>, W<i>.<j>, or V<i>", i);
    }
    ++i;
    const int first = read_int(i);
    int second = 0;
    if (kind == 'T' || kind == 'W') {
      if (i >= text.size() || text[i] != '.') throw ParseError("expected '.' in generator token", i);
      ++i;
      second = read_int(i);
    }
    int exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      exponent = read_int(i);
    }
    FreeAutomorphism gen = [&] {
      try {
        switch (kind) {
          case 'T': return transvection(rank, first, second);
          case 'W': return letter_swap(rank, first, second);
          default: return letter_invert(rank, first);
        }
      } catch (const DomainError& e) {
        throw ParseError(e.what(), tok_start);
      }
    }();
    if (exponent < 0) {
      gen = gen.inverse();
      exponent = -exponent;
    }
    for (int k = 0; k < exponent; ++k) result = compose(result, gen);
    any = true;
  }
  if (!any) throw ParseError("empty automorphism word (use 1 for the identity)", 0);
  return result;
}

}  // namespace sclkit
