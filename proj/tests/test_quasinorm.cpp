#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sclkit/quasinorm.hpp"

using namespace sclkit;

namespace {

Word bw(const std::string& s) { return parse_word(s, Alphabet::Braid); }

}  // namespace

TEST_CASE("strand norm counts the strands of the reduced form") {
  const BraidContext ctx = BraidContext::infinite();
  CHECK(braid_strand_norm(Word{}, ctx) == 0);
  CHECK(braid_strand_norm(bw("s1"), ctx) == 2);
  CHECK(braid_strand_norm(bw("s1 s3"), ctx) == 4);
  CHECK(braid_strand_norm(bw("s2 s3 s2^-1"), ctx) == 3);   // strands 2,3,4
  CHECK(braid_strand_norm(bw("s1 s2 s1 s2^-1 s1^-1 s2^-1"), ctx) == 0);  // a relator
}

TEST_CASE("aut support closes moved letters under image letters") {
  CHECK(aut_support_size(FreeAutomorphism::identity(5)) == 0);
  CHECK(aut_support_size(transvection(4, 1, 2)) == 2);
  CHECK(aut_support_size(letter_invert(3, 2)) == 1);
  CHECK(aut_support_size(letter_swap(6, 2, 5)) == 2);
  // x1 -> x1 x2, x2 -> x2 x3: moving {1,2} pulls in 3.
  const FreeAutomorphism chained = compose(transvection(3, 1, 2), transvection(3, 2, 3));
  CHECK(aut_support_size(chained) == 3);
}

TEST_CASE("braid suite finds no subadditivity violations and growing witnesses") {
  const BraidContext ctx = BraidContext::strands(8);
  const QuasiNormReport rep = braid_norm_suite(ctx, 8, 20, 200, 7);
  CHECK(rep.name == "braid-strand");
  CHECK(rep.samples == 200);
  CHECK(rep.subadditivity_violations == 0);
  REQUIRE(rep.unboundedness_witnesses.size() == 10);
  for (int k = 1; k <= 10; ++k)
    CHECK(rep.unboundedness_witnesses[static_cast<std::size_t>(k - 1)] == 2 * k);
  CHECK(rep.witnesses_increasing);
}

TEST_CASE("aut suite finds no subadditivity violations and growing witnesses") {
  const QuasiNormReport rep = aut_norm_suite(6, 8, 200, 11);
  CHECK(rep.name == "aut-support");
  CHECK(rep.samples == 200);
  CHECK(rep.subadditivity_violations == 0);
  REQUIRE(rep.unboundedness_witnesses.size() == 10);
  for (int k = 1; k <= 10; ++k)
    CHECK(rep.unboundedness_witnesses[static_cast<std::size_t>(k - 1)] == 2 * k);
  CHECK(rep.witnesses_increasing);
}

TEST_CASE("parallel and serial suites agree exactly") {
  const BraidContext ctx = BraidContext::strands(6);
  const QuasiNormReport a = braid_norm_suite(ctx, 6, 12, 150, 3);
  const QuasiNormReport b = braid_norm_suite_serial(ctx, 6, 12, 150, 3);
  CHECK(a.subadditivity_violations == b.subadditivity_violations);
  CHECK(a.conjugacy_deviation_max == b.conjugacy_deviation_max);
  CHECK(a.unboundedness_witnesses == b.unboundedness_witnesses);

  const QuasiNormReport c = aut_norm_suite(5, 6, 150, 5);
  const QuasiNormReport d = aut_norm_suite_serial(5, 6, 150, 5);
  CHECK(c.subadditivity_violations == d.subadditivity_violations);
  CHECK(c.conjugacy_deviation_max == d.conjugacy_deviation_max);
  CHECK(c.unboundedness_witnesses == d.unboundedness_witnesses);
}

TEST_CASE("random automorphisms are replayable and witnessed") {
  const FreeAutomorphism a = random_automorphism(42, 7, 5, 6);
  const FreeAutomorphism b = random_automorphism(42, 7, 5, 6);
  CHECK(a == b);
  CHECK(a.has_inverse_witness());
  CHECK(aut_equal(compose(a, a.inverse()), FreeAutomorphism::identity(5)));
}
