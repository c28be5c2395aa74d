#include "sclkit/quasinorm.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sclkit/errors.hpp"
#include "sclkit/sampling.hpp"

namespace sclkit {

double braid_strand_norm(const Word& u, const BraidContext& ctx) {
  return static_cast<double>(strand_support(u, ctx).size());
}

int aut_support_size(const FreeAutomorphism& phi) {
  const int r = phi.rank();
  std::vector<char> in(static_cast<std::size_t>(r) + 1, 0);
  std::vector<int> todo;
  for (int i = 1; i <= r; ++i) {
    const Word& img = phi.images()[static_cast<std::size_t>(i - 1)];
    if (img.size() == 1 && img[0].index == i && img[0].sign > 0) continue;
    in[static_cast<std::size_t>(i)] = 1;
    todo.push_back(i);
  }
  while (!todo.empty()) {
    const int i = todo.back();
    todo.pop_back();
    for (const Generator& g : phi.images()[static_cast<std::size_t>(i - 1)]) {
      if (!in[static_cast<std::size_t>(g.index)]) {
        in[static_cast<std::size_t>(g.index)] = 1;
        todo.push_back(g.index);
      }
    }
  }
  int count = 0;
  for (int i = 1; i <= r; ++i) count += in[static_cast<std::size_t>(i)];
  return count;
}

double aut_support_norm(const FreeAutomorphism& phi) {
  return static_cast<double>(aut_support_size(phi));
}

FreeAutomorphism random_automorphism(std::uint64_t seed, std::uint64_t k, int rank,
                                     int max_factors) {
  if (rank < 2) throw DomainError("random automorphisms need rank >= 2");
  if (max_factors < 1) throw DomainError("need at least one factor");
  std::mt19937_64 rng = indexed_rng(seed, k);
  std::uniform_int_distribution<int> len_dist(1, max_factors);
  std::uniform_int_distribution<int> kind_dist(0, 2);
  std::uniform_int_distribution<int> letter_dist(1, rank);
  FreeAutomorphism acc = FreeAutomorphism::identity(rank);
  const int len = len_dist(rng);
  for (int t = 0; t < len; ++t) {
    const int kind = kind_dist(rng);
    if (kind == 2) {
      acc = compose(acc, letter_invert(rank, letter_dist(rng)));
      continue;
    }
    int i = letter_dist(rng);
    int j = letter_dist(rng);
    while (j == i) j = letter_dist(rng);
    acc = compose(acc, kind == 0 ? transvection(rank, i, j) : letter_swap(rank, i, j));
  }
  return acc;
}

namespace {

/// Shared audit core. `Ops` supplies index-addressable pair sampling and the
/// group operations; the reduction (violation count, deviation max) is
/// order-independent, so the parallel run reproduces the serial run exactly.
template <typename Elem, typename Ops>
void audit_samples(const Ops& ops, std::uint64_t trials, bool parallel, QuasiNormReport& rep) {
  std::uint64_t violations = 0;
  double devmax = 0;
  const auto one = [&ops](std::uint64_t idx, std::uint64_t& bad, double& dev) {
    auto [u, v] = ops.sample(idx);
    const double qu = ops.norm(u);
    const double qv = ops.norm(v);
    if (ops.norm(ops.mul(u, v)) > qu + qv + 1e-9) ++bad;
    dev = std::max(dev, std::fabs(ops.norm(ops.conj(u, v)) - qu));
  };
  if (parallel) {
#if defined(_OPENMP)
#pragma omp parallel for reduction(+ : violations) reduction(max : devmax) schedule(static)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(trials); ++i)
      one(static_cast<std::uint64_t>(i), violations, devmax);
  } else {
    for (std::uint64_t i = 0; i < trials; ++i) one(i, violations, devmax);
  }
  rep.samples = trials;
  rep.subadditivity_violations = violations;
  rep.conjugacy_deviation_max = devmax;
}

void finish_witnesses(QuasiNormReport& rep) {
  rep.witnesses_increasing = rep.unboundedness_witnesses.size() > 1;
  for (std::size_t i = 1; i < rep.unboundedness_witnesses.size(); ++i)
    if (rep.unboundedness_witnesses[i] <= rep.unboundedness_witnesses[i - 1])
      rep.witnesses_increasing = false;
}

constexpr int kWitnessCount = 10;

struct BraidOps {
  BraidContext ctx;
  int strands;
  int max_len;
  std::uint64_t seed;

  std::pair<Word, Word> sample(std::uint64_t idx) const {
    auto rng = indexed_rng(seed, idx);
    Word u = random_braid_word(rng, strands, max_len);
    Word v = random_braid_word(rng, strands, max_len);
    return {u, v};
  }
  double norm(const Word& u) const { return braid_strand_norm(u, ctx); }
  Word mul(const Word& u, const Word& v) const { return multiply(u, v); }
  Word conj(const Word& u, const Word& g) const { return conjugate(u, g); }
};

QuasiNormReport braid_suite_impl(const BraidContext& ctx, int strands, int max_len,
                                 std::uint64_t trials, std::uint64_t seed, bool parallel) {
  QuasiNormReport rep;
  rep.name = "braid-strand";
  audit_samples<Word>(BraidOps{ctx, strands, max_len, seed}, trials, parallel, rep);
  const BraidContext wide = BraidContext::infinite(ctx.reduction_budget);
  for (int k = 1; k <= kWitnessCount; ++k) {
    std::vector<Generator> letters;
    for (int j = 1; j <= k; ++j) letters.push_back({Alphabet::Braid, 2 * j - 1, +1});
    rep.unboundedness_witnesses.push_back(
        braid_strand_norm(Word::from_letters(std::move(letters)), wide));
  }
  finish_witnesses(rep);
  return rep;
}

struct AutOps {
  int rank;
  int max_factors;
  std::uint64_t seed;

  std::pair<FreeAutomorphism, FreeAutomorphism> sample(std::uint64_t idx) const {
    return {random_automorphism(seed, 2 * idx, rank, max_factors),
            random_automorphism(seed, 2 * idx + 1, rank, max_factors)};
  }
  double norm(const FreeAutomorphism& u) const { return aut_support_norm(u); }
  FreeAutomorphism mul(const FreeAutomorphism& u, const FreeAutomorphism& v) const {
    return compose(u, v);
  }
  FreeAutomorphism conj(const FreeAutomorphism& u, const FreeAutomorphism& g) const {
    return compose(compose(g, u), g.inverse());
  }
};

QuasiNormReport aut_suite_impl(int rank, int max_factors, std::uint64_t trials,
                               std::uint64_t seed, bool parallel) {
  QuasiNormReport rep;
  rep.name = "aut-support";
  audit_samples<FreeAutomorphism>(AutOps{rank, max_factors, seed}, trials, parallel, rep);
  for (int k = 1; k <= kWitnessCount; ++k) {
    FreeAutomorphism phi = FreeAutomorphism::identity(2 * k);
    for (int j = 1; j <= k; ++j) phi = compose(phi, transvection(2 * k, 2 * j - 1, 2 * j));
    rep.unboundedness_witnesses.push_back(aut_support_norm(phi));
  }
  finish_witnesses(rep);
  return rep;
}

}  // namespace

QuasiNormReport braid_norm_suite(const BraidContext& ctx, int strands, int max_len,
                                 std::uint64_t trials, std::uint64_t seed) {
  return braid_suite_impl(ctx, strands, max_len, trials, seed, /*parallel=*/true);
}

QuasiNormReport braid_norm_suite_serial(const BraidContext& ctx, int strands, int max_len,
                                        std::uint64_t trials, std::uint64_t seed) {
  return braid_suite_impl(ctx, strands, max_len, trials, seed, /*parallel=*/false);
}

QuasiNormReport aut_norm_suite(int rank, int max_factors, std::uint64_t trials,
                               std::uint64_t seed) {
  return aut_suite_impl(rank, max_factors, trials, seed, /*parallel=*/true);
}

QuasiNormReport aut_norm_suite_serial(int rank, int max_factors, std::uint64_t trials,
                                      std::uint64_t seed) {
  return aut_suite_impl(rank, max_factors, trials, seed, /*parallel=*/false);
}

}  // namespace sclkit
