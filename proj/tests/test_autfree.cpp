#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sclkit/autfree.hpp"
#include "sclkit/errors.hpp"

using namespace sclkit;

namespace {

Word fw(const char* text) { return parse_word(text, Alphabet::Free); }

FreeAutomorphism random_aut(std::mt19937_64& rng, int rank, int num_gens = 6) {
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> idx(1, rank);
  FreeAutomorphism phi = FreeAutomorphism::identity(rank);
  for (int g = 0; g < num_gens; ++g) {
    int i = idx(rng);
    int j = idx(rng);
    switch (kind(rng)) {
      case 0:
        if (i != j) phi = compose(phi, transvection(rank, i, j));
        break;
      case 1:
        phi = compose(phi, letter_swap(rank, i, j));
        break;
      default:
        phi = compose(phi, letter_invert(rank, i));
        break;
    }
  }
  return phi;
}

}  // namespace

TEST_CASE("apply substitutes and reduces") {
  FreeAutomorphism phi(2, {fw("ab"), fw("b")});
  CHECK(apply(phi, fw("a")) == fw("ab"));
  CHECK(apply(phi, fw("a B")) == fw("a"));
  CHECK(apply(FreeAutomorphism::identity(3), fw("a b C")) == fw("a b C"));
  CHECK(apply(phi, Word{}).empty());
  CHECK_THROWS_AS(apply(phi, fw("c")), DomainError);
}

TEST_CASE("compose acts right-first") {
  FreeAutomorphism t = transvection(2, 1, 2);       // a -> ab
  FreeAutomorphism tinv = t.inverse();              // a -> aB
  CHECK(aut_equal(compose(t, tinv), FreeAutomorphism::identity(2)));
  CHECK(aut_equal(compose(tinv, t), FreeAutomorphism::identity(2)));
  FreeAutomorphism s = letter_swap(2, 1, 2);
  CHECK(aut_equal(compose(s, s), FreeAutomorphism::identity(2)));
  CHECK(aut_equal(compose(t, FreeAutomorphism::identity(2)), t));
  // phi after psi on a test word
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    FreeAutomorphism phi = random_aut(rng, 3);
    FreeAutomorphism psi = random_aut(rng, 3);
    Word w = fw("a b C a");
    CHECK(apply(compose(phi, psi), w) == apply(phi, apply(psi, w)));
  }
  CHECK_THROWS_AS(compose(t, FreeAutomorphism::identity(3)), DomainError);
}

TEST_CASE("compose is associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    FreeAutomorphism a = random_aut(rng, 3);
    FreeAutomorphism b = random_aut(rng, 3);
    FreeAutomorphism c = random_aut(rng, 3);
    CHECK(aut_equal(compose(compose(a, b), c), compose(a, compose(b, c))));
  }
}

TEST_CASE("inverse witnesses are validated") {
  CHECK_NOTHROW(FreeAutomorphism(2, {fw("ab"), fw("b")}, {{fw("aB"), fw("b")}}));
  CHECK_THROWS_AS(FreeAutomorphism(2, {fw("ab"), fw("b")}, {{fw("ab"), fw("b")}}), DomainError);
  FreeAutomorphism no_wit(2, {fw("ab"), fw("b")});
  CHECK_FALSE(no_wit.has_inverse_witness());
  CHECK_THROWS_AS(no_wit.inverse(), DomainError);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    FreeAutomorphism phi = random_aut(rng, 3);
    REQUIRE(phi.has_inverse_witness());
    CHECK(aut_equal(compose(phi, phi.inverse()), FreeAutomorphism::identity(3)));
  }
}

TEST_CASE("block embed") {
  FreeAutomorphism phi(2, {fw("ab"), fw("b")}, {{fw("aB"), fw("b")}});
  FreeAutomorphism embedded = block_embed(phi, 2, 4);
  CHECK(embedded.images()[0] == fw("a"));
  CHECK(embedded.images()[1] == fw("b"));
  CHECK(embedded.images()[2] == fw("cd"));
  CHECK(embedded.images()[3] == fw("d"));
  CHECK(aut_equal(block_embed(FreeAutomorphism::identity(2), 2, 6), FreeAutomorphism::identity(6)));
  CHECK_THROWS_AS(block_embed(phi, 3, 4), DomainError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    FreeAutomorphism f = random_aut(rng, 2);
    FreeAutomorphism g = random_aut(rng, 2);
    FreeAutomorphism f1 = block_embed(f, 1, 4);
    FreeAutomorphism g2 = block_embed(g, 2, 4);
    CHECK(aut_equal(compose(f1, g2), compose(g2, f1)));
  }
}

TEST_CASE("permutation automorphism") {
  FreeAutomorphism swap12 = permutation_automorphism(Permutation::transposition(2, 1), 1, 2);
  CHECK(swap12.images()[0] == fw("b"));
  CHECK(swap12.images()[1] == fw("a"));
  CHECK(aut_equal(permutation_automorphism(Permutation::identity(3), 1, 3),
                  FreeAutomorphism::identity(3)));

  FreeAutomorphism phi(2, {fw("ab"), fw("b")}, {{fw("aB"), fw("b")}});
  FreeAutomorphism pi = permutation_automorphism(Permutation::transposition(2, 1), 2, 4);
  FreeAutomorphism conjugated = compose(pi, compose(block_embed(phi, 1, 4), pi.inverse()));
  CHECK(aut_equal(conjugated, block_embed(phi, 2, 4)));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    FreeAutomorphism f = random_aut(rng, 2);
    for (int from = 1; from <= 3; ++from) {
      std::vector<int> one_line = {1, 2, 3};
      std::shuffle(one_line.begin(), one_line.end(), rng);
      Permutation p = Permutation::from_one_line(one_line);
      FreeAutomorphism q = permutation_automorphism(p, 2, 6);
      FreeAutomorphism moved = compose(q, compose(block_embed(f, from, 6), q.inverse()));
      CHECK(aut_equal(moved, block_embed(f, p.apply(from), 6)));
    }
  }
}

TEST_CASE("abelianization sign") {
  CHECK(abelianization_sign(FreeAutomorphism::identity(3)) == 1);
  CHECK(abelianization_sign(letter_swap(2, 1, 2)) == -1);
  CHECK(abelianization_sign(transvection(2, 1, 2)) == 1);
  CHECK(abelianization_sign(letter_invert(2, 1)) == -1);
  CHECK_THROWS_AS(abelianization_sign(FreeAutomorphism(2, {fw("ab"), fw("b")})), DomainError);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    FreeAutomorphism f = random_aut(rng, 3);
    FreeAutomorphism g = random_aut(rng, 3);
    CHECK(abelianization_sign(compose(f, g)) ==
          abelianization_sign(f) * abelianization_sign(g));
  }
}

TEST_CASE("text format round trips") {
  FreeAutomorphism phi(2, {fw("ab"), fw("b")}, {{fw("aB"), fw("b")}});
  std::string text = render_automorphism(phi);
  CHECK(text == "rank=2; a -> ab; b -> b; inverse: a -> aB; b -> b");
  FreeAutomorphism back = parse_automorphism(text);
  CHECK(aut_equal(back, phi));
  CHECK(back.has_inverse_witness());

  FreeAutomorphism no_wit(2, {fw("ab"), fw("b")});
  CHECK(render_automorphism(no_wit) == "rank=2; a -> ab; b -> b");
  CHECK_FALSE(parse_automorphism("rank=2; a -> ab; b -> b").has_inverse_witness());

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    FreeAutomorphism f = random_aut(rng, 4);
    FreeAutomorphism g = parse_automorphism(render_automorphism(f));
    CHECK(aut_equal(f, g));
  }
}

TEST_CASE("text format rejects malformed input") {
  CHECK_THROWS_AS(parse_automorphism(""), ParseError);
  CHECK_THROWS_AS(parse_automorphism("a -> b"), ParseError);
  CHECK_THROWS_AS(parse_automorphism("rank=0; a -> a"), ParseError);
  CHECK_THROWS_AS(parse_automorphism("rank=2; a -> ab"), ParseError);          // missing b
  CHECK_THROWS_AS(parse_automorphism("rank=2; a -> ab; a -> b; b -> b"), ParseError);
  CHECK_THROWS_AS(parse_automorphism("rank=2; a -> ac; b -> b"), ParseError);  // c beyond rank
  CHECK_THROWS_AS(parse_automorphism("rank=2; a -> ab; b -> b; inverse: a -> ab; b -> b"),
                  ParseError);  // witness fails to invert
  CHECK_THROWS_AS(parse_automorphism("rank=1; a => a"), ParseError);
}

TEST_CASE("generator word grammar") {
  CHECK(aut_equal(parse_aut_generator_word("T1.2", 2), transvection(2, 1, 2)));
  CHECK(aut_equal(parse_aut_generator_word("W1.2", 2), letter_swap(2, 1, 2)));
  CHECK(aut_equal(parse_aut_generator_word("V1", 2), letter_invert(2, 1)));
  CHECK(aut_equal(parse_aut_generator_word("1", 3), FreeAutomorphism::identity(3)));
  CHECK(aut_equal(parse_aut_generator_word("T1.2^-1", 2), transvection(2, 1, 2).inverse()));
  CHECK(aut_equal(parse_aut_generator_word("T1.2 T1.2", 2),
                  parse_aut_generator_word("T1.2^2", 2)));
  CHECK(aut_equal(parse_aut_generator_word("W1.2 T1.2 W1.2", 2), transvection(2, 2, 1)));
  CHECK(parse_aut_generator_word("T1.2 V2", 3).has_inverse_witness());
  CHECK_THROWS_AS(parse_aut_generator_word("", 2), ParseError);
  CHECK_THROWS_AS(parse_aut_generator_word("X1", 2), ParseError);
  CHECK_THROWS_AS(parse_aut_generator_word("T1", 2), ParseError);
  CHECK_THROWS_AS(parse_aut_generator_word("T1.5", 2), ParseError);
  CHECK_THROWS_AS(parse_aut_generator_word("T1.1", 2), ParseError);
}
