#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sclkit/errors.hpp"
#include "sclkit/word.hpp"

using namespace sclkit;

namespace {

Word fw(const char* text) { return parse_word(text, Alphabet::Free); }
Word bw(const char* text) { return parse_word(text, Alphabet::Braid); }

Word random_free_word(std::mt19937_64& rng, int max_len, int rank = 3) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, rank);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Generator> letters;
  const int L = len(rng);
  for (int i = 0; i < L; ++i) {
    letters.push_back(Generator{Alphabet::Free, idx(rng), static_cast<int8_t>(coin(rng) ? 1 : -1)});
  }
  return Word::from_letters(std::move(letters));
}

}  // namespace

TEST_CASE("parsing free words") {
  Word w = fw("a b A");
  CHECK(w.size() == 3);
  CHECK(render_word(w) == "abA");
  CHECK(fw("a A").empty());
  CHECK(render_word(fw("a A")) == "1");
  CHECK(fw("1").empty());
  CHECK(fw("abA") == fw("a b A"));
  CHECK(fw("").empty());
}

TEST_CASE("parsing braid words") {
  Word w = bw("s1 s2^-2");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Generator{Alphabet::Braid, 1, 1});
  CHECK(w[1] == Generator{Alphabet::Braid, 2, -1});
  CHECK(w[2] == Generator{Alphabet::Braid, 2, -1});
  CHECK(render_word(w) == "s1 s2^-2");
  CHECK(bw("s3^0").empty());
  CHECK(bw("s2^3") == bw("s2 s2 s2"));
  CHECK(render_word(bw("s2 s2 s2")) == "s2^3");
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(fw("ab3"), ParseError);
  try {
    fw("ab3");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(bw("s0"), ParseError);
  CHECK_THROWS_AS(bw("x1"), ParseError);
  CHECK_THROWS_AS(bw("s1^"), ParseError);
  CHECK_THROWS_AS(bw("s1x"), ParseError);
  CHECK_THROWS_AS(parse_word("e0", Alphabet::Abstract), ParseError);
  CHECK_THROWS_AS(bw("s999999999999"), ParseError);
}

TEST_CASE("round trip through render") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    Word w = random_free_word(rng, 40);
    CHECK(parse_word(render_word(w), Alphabet::Free) == w);
  }
  for (const char* text : {"1", "s1 s2^-2 s1^3", "s7", "e2 e1^-4"}) {
    Alphabet alph = text[0] == 'e' ? Alphabet::Abstract : Alphabet::Braid;
    Word w = parse_word(text, alph);
    CHECK(parse_word(render_word(w), alph) == w);
  }
}

TEST_CASE("multiply reduces at the seam") {
  CHECK(multiply(fw("a b"), fw("B a")) == fw("a a"));
  Word w = fw("a b A b");
  CHECK(multiply(w, invert(w)).empty());
  CHECK(multiply(fw("a"), fw("b")) == fw("a b"));
  CHECK_THROWS_AS(multiply(fw("a"), bw("s1")), DomainError);
}

TEST_CASE("invert") {
  CHECK(invert(fw("a b")) == fw("B A"));
  CHECK(invert(Word{}).empty());
  CHECK(invert(bw("s1 s2^-1")) == bw("s2 s1^-1"));
}

TEST_CASE("conjugate and commutator") {
  CHECK(conjugate(fw("a"), fw("b")) == fw("b a B"));
  CHECK(conjugate(fw("a b"), Word{}) == fw("a b"));
  CHECK(conjugate(fw("b"), fw("b")) == fw("b"));
  CHECK(commutator(fw("a"), fw("b")) == fw("a b A B"));
  CHECK(commutator(fw("a"), fw("a")).empty());
  CHECK(commutator(bw("s1"), bw("s3")) == bw("s1 s3 s1^-1 s3^-1"));
}

TEST_CASE("cyclic reduce") {
  auto [core, conj] = cyclic_reduce(fw("b a B"));
  CHECK(core == fw("a"));
  CHECK(conj == fw("b"));
  auto [core2, conj2] = cyclic_reduce(fw("a b"));
  CHECK(core2 == fw("a b"));
  CHECK(conj2.empty());
  auto [core3, conj3] = cyclic_reduce(Word{});
  CHECK(core3.empty());
  CHECK(conj3.empty());
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Word w = random_free_word(rng, 30);
    auto [c, h] = cyclic_reduce(w);
    CHECK(conjugate(c, h) == w);
    if (!c.empty()) CHECK_FALSE(c[0].cancels(c[c.size() - 1]));
  }
}

TEST_CASE("count occurrences") {
  CHECK(count_occurrences(fw("a b a b"), fw("a b")) == 2);
  CHECK(count_occurrences(fw("a b a b"), fw("b a")) == 1);
  CHECK(count_occurrences(Word{}, fw("a")) == 0);
  CHECK_THROWS_AS(count_occurrences(fw("a"), Word{}), DomainError);
}

TEST_CASE("algebraic identities on random words") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Word u = random_free_word(rng, 40);
    Word v = random_free_word(rng, 40);
    Word w = random_free_word(rng, 40);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(invert(multiply(u, v)) == multiply(invert(v), invert(u)));
    CHECK(invert(invert(u)) == u);
    if (multiply(u, v) == multiply(v, u)) CHECK(commutator(u, v).empty());
  }
}

TEST_CASE("occurrence counts respect inversion") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    Word u = random_free_word(rng, 30);
    Word p = random_free_word(rng, 4);
    if (p.empty()) continue;
    CHECK(count_occurrences(u, p) == count_occurrences(invert(u), invert(p)));
  }
}

TEST_CASE("power") {
  CHECK(power(fw("a b"), 2) == fw("a b a b"));
  CHECK(power(fw("a b"), 0).empty());
  CHECK(power(fw("a b"), -1) == fw("B A"));
  CHECK(power(fw("a b A"), 3) == fw("a b b b A"));
}

TEST_CASE("word ordering is shortlex") {
  CHECK(fw("b") < fw("a b"));
  CHECK(fw("a") < fw("b"));
  CHECK(fw("a") < fw("A"));
  CHECK_FALSE(fw("a b") < fw("a b"));
}

TEST_CASE("mixed families rejected") {
  std::vector<Generator> letters = {Generator{Alphabet::Free, 1, 1},
                                    Generator{Alphabet::Braid, 1, 1}};
  CHECK_THROWS_AS(Word::from_letters(letters), DomainError);
}

TEST_CASE("rendering high free indices is refused") {
  Word w = Word::single(Alphabet::Free, 27, 1);
  CHECK_THROWS_AS(render_word(w), DomainError);
  CHECK(render_word(Word::single(Alphabet::Braid, 27, 1)) == "s27");
}
