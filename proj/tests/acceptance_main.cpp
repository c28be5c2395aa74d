// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and runtime caps are pinned here on purpose — loosening
// them is a deliberate edit, not a knob.
//
// The binary doubles as the determinism probe: `--emit-reports SEED FILE`
// writes the seeded report bundle and exits, and the determinism criterion
// spawns two such runs and compares the files byte for byte.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sclkit/braid.hpp"
#include "sclkit/certify.hpp"
#include "sclkit/engine.hpp"
#include "sclkit/errors.hpp"
#include "sclkit/quasimorphism.hpp"
#include "sclkit/quasinorm.hpp"
#include "sclkit/report.hpp"
#include "sclkit/sampling.hpp"
#include "sclkit/swindle.hpp"
#include "sclkit/word.hpp"

#include "support.hpp"

namespace {

using namespace sclkit;
using Clock = std::chrono::steady_clock;

std::string g_self;  // argv[0], for the self-spawning determinism check

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Gate {
  int failures = 0;

  template <typename Fn>
  void run(int index, Fn&& criterion) {
    Outcome out;
    try {
      out = criterion();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("unexpected exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s\n", out.ok ? "PASS" : "FAIL", index, out.detail.c_str());
    std::fflush(stdout);
    if (!out.ok) ++failures;
  }
};

Word braid_letter(int i, int sign) { return Word::single(Alphabet::Braid, i, sign); }

// ---------------------------------------------------------------------------
// 1. Braid engine soundness: relation replays must come back true, invariant
//    refutations must come back false. Words length <= 40, strand counts <= 6.

Outcome criterion1() {
  const auto t0 = Clock::now();
  constexpr double kCap = 60.0;
  int replays = 0;

  // Family A: far commutation s_i s_j = s_j s_i for |i - j| >= 2.
  for (int k = 0; k < 100; ++k) {
    auto rng = indexed_rng(101, static_cast<std::uint64_t>(k));
    const int n = std::uniform_int_distribution<int>(4, 6)(rng);
    const int i = std::uniform_int_distribution<int>(1, n - 3)(rng);
    const int j = std::uniform_int_distribution<int>(i + 2, n - 1)(rng);
    const int a = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    const int b = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    const Word u = random_braid_word(rng, n, 17);
    const Word v = random_braid_word(rng, n, 17);
    const Word x = multiply(multiply(u, multiply(braid_letter(i, a), braid_letter(j, b))), v);
    const Word y = multiply(multiply(u, multiply(braid_letter(j, b), braid_letter(i, a))), v);
    if (!braid_equal(x, y, BraidContext::strands(n)))
      return {false, "far-commutation replay " + std::to_string(k) + " came back false"};
    ++replays;
  }

  // Family B: the braid relation s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}.
  for (int k = 0; k < 100; ++k) {
    auto rng = indexed_rng(102, static_cast<std::uint64_t>(k));
    const int n = std::uniform_int_distribution<int>(3, 6)(rng);
    const int i = std::uniform_int_distribution<int>(1, n - 2)(rng);
    const Word u = random_braid_word(rng, n, 17);
    const Word v = random_braid_word(rng, n, 17);
    const Word lhs = multiply(multiply(braid_letter(i, 1), braid_letter(i + 1, 1)), braid_letter(i, 1));
    const Word rhs = multiply(multiply(braid_letter(i + 1, 1), braid_letter(i, 1)), braid_letter(i + 1, 1));
    const Word x = multiply(multiply(u, lhs), v);
    const Word y = multiply(multiply(u, rhs), v);
    if (!braid_equal(x, y, BraidContext::strands(n)))
      return {false, "braid-relation replay " + std::to_string(k) + " came back false"};
    ++replays;
  }

  // Family C: splice a trivial relator into a random position.
  for (int k = 0; k < 100; ++k) {
    auto rng = indexed_rng(103, static_cast<std::uint64_t>(k));
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const Word w = random_braid_word(rng, n, 34);
    int choice = std::uniform_int_distribution<int>(0, 2)(rng);
    if (choice == 1 && n < 3) choice = 0;
    if (choice == 2 && n < 4) choice = 0;
    Word relator;
    if (choice == 0) {
      const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
      relator = multiply(braid_letter(i, 1), braid_letter(i, -1));
    } else if (choice == 1) {
      const int i = std::uniform_int_distribution<int>(1, n - 2)(rng);
      relator = multiply(
          multiply(multiply(braid_letter(i, 1), braid_letter(i + 1, 1)), braid_letter(i, 1)),
          multiply(multiply(braid_letter(i + 1, -1), braid_letter(i, -1)), braid_letter(i + 1, -1)));
    } else {
      const int i = std::uniform_int_distribution<int>(1, n - 3)(rng);
      const int j = std::uniform_int_distribution<int>(i + 2, n - 1)(rng);
      relator = commutator(braid_letter(i, 1), braid_letter(j, 1));
    }
    const auto pos = std::uniform_int_distribution<std::size_t>(0, w.size())(rng);
    const auto& ls = w.letters();
    const Word prefix = Word::from_letters({ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(pos)});
    const Word suffix = Word::from_letters({ls.begin() + static_cast<std::ptrdiff_t>(pos), ls.end()});
    const Word y = multiply(multiply(prefix, relator), suffix);
    if (!braid_equal(w, y, BraidContext::strands(n)))
      return {false, "relator-insertion replay " + std::to_string(k) + " came back false"};
    ++replays;
  }

  // Refutations: pairs guaranteed unequal by exponent sum or by the underlying
  // permutation; the engine must refuse every one.
  int refutations = 0;
  for (int k = 0; k < 100; ++k) {
    auto rng = indexed_rng(111, static_cast<std::uint64_t>(k));
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const Word x = random_braid_word(rng, n, 38);
    Word y;
    if (k % 2 == 0 || n < 3) {
      const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
      const int a = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      y = multiply(x, braid_letter(i, a));  // exponent sums differ by one
    } else {
      const int i = std::uniform_int_distribution<int>(1, n - 2)(rng);
      const int j = std::uniform_int_distribution<int>(i + 1, n - 1)(rng);
      y = multiply(x, multiply(braid_letter(i, 1), braid_letter(j, -1)));  // permutations differ
    }
    const bool invariant_differs =
        exponent_sum(x) != exponent_sum(y) ||
        !(underlying_permutation(x, n) == underlying_permutation(y, n));
    if (!invariant_differs)
      return {false, "refutation " + std::to_string(k) + " is not invariant-separated"};
    if (braid_equal(x, y, BraidContext::strands(n)))
      return {false, "refutation " + std::to_string(k) + " was wrongly accepted"};
    ++refutations;
  }

  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "braid engine soundness: " << replays << " relation replays true, " << refutations
     << " invariant refutations false in " << fmt_seconds(dt) << " (cap 60s)";
  return {dt <= kCap, os.str()};
}

// ---------------------------------------------------------------------------
// 2. Swindle certificates over a fixed corpus of 3-strand pairs, 2..6 copies:
//    every certificate must replay to accepted.

Outcome criterion2() {
  const auto t0 = Clock::now();
  constexpr double kCap = 300.0;
  std::vector<std::pair<Word, Word>> corpus;
  for (int k = 0; k < 50; ++k) {
    auto rng = indexed_rng(202, static_cast<std::uint64_t>(k));
    Word x = random_braid_word(rng, 3, 6);
    Word y = random_braid_word(rng, 3, 6);
    corpus.emplace_back(std::move(x), std::move(y));
  }
  int certs = 0;
  std::size_t steps = 0;
  for (int m = 2; m <= 6; ++m) {
    const CommutingFamily fam = build_braid_family(3, m);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const Certificate cert = swindle_certificate(fam, corpus[k].first, corpus[k].second);
      const Verdict v = verify(cert);
      if (!v.accepted()) {
        std::ostringstream os;
        os << "pair " << k << ", copies " << m << ": " << v.reason << " (step " << v.step_index
           << ")";
        return {false, os.str()};
      }
      ++certs;
      steps += cert.steps.size();
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "swindle chain on braids: " << certs << " certificates (50 pairs x copies 2..6, " << steps
     << " steps) all accepted in " << fmt_seconds(dt) << " (cap 300s)";
  return {dt <= kCap, os.str()};
}

// ---------------------------------------------------------------------------
// 3. Same construction for automorphism families: a rank-2 Nielsen/swap
//    corpus, 2..4 copies, replayed through the atom-table engine.

Outcome criterion3() {
  const auto t0 = Clock::now();
  constexpr double kCap = 60.0;
  std::vector<std::pair<FreeAutomorphism, FreeAutomorphism>> corpus;
  for (int k = 0; k < 20; ++k) {
    corpus.emplace_back(random_automorphism(303, 2 * static_cast<std::uint64_t>(k), 2, 4),
                        random_automorphism(303, 2 * static_cast<std::uint64_t>(k) + 1, 2, 4));
  }
  int certs = 0;
  for (int m = 2; m <= 4; ++m) {
    const CommutingFamily fam = build_aut_family(2, m);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const Certificate cert = swindle_certificate(fam, corpus[k].first, corpus[k].second);
      const Verdict v = verify(cert);
      if (!v.accepted()) {
        std::ostringstream os;
        os << "pair " << k << ", copies " << m << ": " << v.reason << " (step " << v.step_index
           << ")";
        return {false, os.str()};
      }
      ++certs;
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "swindle chain on automorphisms: " << certs
     << " certificates (20 pairs x copies 2..4) all accepted in " << fmt_seconds(dt)
     << " (cap 60s)";
  return {dt <= kCap, os.str()};
}

// ---------------------------------------------------------------------------
// 4. Commuting witnesses: disjoint-support braid pairs must satisfy the power
//    identity (xy)^N x^-N y^-N = 1 for N <= 8, and the homogenized
//    exponent-sum additivity deviation must be exactly zero.

Outcome criterion4() {
  const Quasimorphism f = builtin_exponent_sum();
  const BraidContext ctx = BraidContext::strands(6);
  const EngineContext ectx = EngineContext::braid_group(ctx);
  for (int k = 0; k < 20; ++k) {
    auto rng = indexed_rng(404, static_cast<std::uint64_t>(k));
    Word x = random_braid_word(rng, 3, 8);
    while (x.empty()) x = random_braid_word(rng, 3, 8);
    Word y = random_braid_word(rng, 3, 8);
    while (y.empty()) y = random_braid_word(rng, 3, 8);
    y = shift(y, 3);  // strands {4,5,6}: disjoint from x and far enough to commute
    for (int N = 1; N <= 8; ++N) {
      const CommutingAdditivityReport rep = commuting_additivity_check(f, x, y, N, 0.0, ectx);
      if (!rep.power_identity_ok)
        return {false, "pair " + std::to_string(k) + ": (xy)^N x^-N y^-N not trivial at N = " +
                           std::to_string(N)};
      if (rep.deviation != 0.0)
        return {false, "pair " + std::to_string(k) + ": exponent-sum deviation " +
                           std::to_string(rep.deviation) + " at N = " + std::to_string(N) +
                           " (must be exactly 0)"};
    }
  }
  return {true,
          "20 disjoint-support pairs: power identity trivial for N <= 8, homogenized "
          "exponent-sum deviation exactly 0"};
}

// ---------------------------------------------------------------------------
// 5. Telescope factorization: replays to free equality with at most 2n-1
//    commutator factors over a 30-pair corpus.

Outcome criterion5() {
  std::size_t checked = 0;
  std::size_t max_factors = 0;
  for (int k = 0; k < 30; ++k) {
    auto rng = indexed_rng(505, static_cast<std::uint64_t>(k));
    const Word x = random_free_word(rng, 2, 6);
    const Word y = random_free_word(rng, 2, 6);
    for (int n = 1; n <= 8; ++n) {
      const auto pairs = telescope_factorization(x, y, n);
      if (pairs.size() > static_cast<std::size_t>(2 * n - 1))
        return {false, "pair " + std::to_string(k) + ", n = " + std::to_string(n) + ": " +
                           std::to_string(pairs.size()) + " factors exceeds 2n-1"};
      const Word target = telescope_target(x, y, n);
      if (commutator_product(pairs) != target)
        return {false, "pair " + std::to_string(k) + ", n = " + std::to_string(n) +
                           ": factor product is not freely equal to (xy)^n x^-n y^-n"};
      const Verdict v = verify(factorization_certificate(target, pairs));
      if (!v.accepted())
        return {false, "pair " + std::to_string(k) + ", n = " + std::to_string(n) +
                           ": certificate replay failed: " + v.reason};
      max_factors = std::max(max_factors, pairs.size());
      ++checked;
    }
  }
  std::ostringstream os;
  os << "telescope identity: " << checked
     << " factorizations (30 pairs, n <= 8) replay freely, factor count <= 2n-1 (max seen "
     << max_factors << ")";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 6. Homogenization contract for the counting quasimorphism of the pattern ab
//    at g = ab: value exactly 1 at N in {4, 8, 16, 32}, error bound halving.

Outcome criterion6() {
  const Quasimorphism f = builtin_brooks(parse_word("ab", Alphabet::Free));
  const Word g = parse_word("ab", Alphabet::Free);
  const double defect = defect_estimate(f, free_pair_sampler(0, 2, 12), 100).value;
  std::vector<double> errors;
  for (int N : {4, 8, 16, 32}) {
    const HomogenizationEstimate h = homogenize_estimate(f, g, N, defect);
    if (h.value != 1.0)
      return {false, "estimate at N = " + std::to_string(N) + " is " + std::to_string(h.value) +
                         ", expected exactly 1"};
    if (h.error_bound != defect / N)
      return {false, "error bound at N = " + std::to_string(N) + " is not defect/N"};
    errors.push_back(h.error_bound);
  }
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i] != errors[i - 1] / 2.0)
      return {false, "error bound did not halve from N step " + std::to_string(i)};
  }
  std::ostringstream os;
  os << "homogenization of the ab-counting quasimorphism at ab: value exactly 1 at N = 4, 8, 16, "
        "32; error bound halves ("
     << errors.front() << " down to " << errors.back() << ")";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 7. Defect estimator: the ab-counting quasimorphism shows defect >= 1 within
//    100 samples at seed 0; exponent sum shows defect 0 over 10^4 samples.

Outcome criterion7() {
  const Quasimorphism brooks = builtin_brooks(parse_word("ab", Alphabet::Free));
  const DefectEstimate d1 = defect_estimate(brooks, free_pair_sampler(0, 2, 12), 100);
  if (d1.value < 1.0)
    return {false, "ab-counting defect lower bound " + std::to_string(d1.value) +
                       " after 100 samples (need >= 1)"};
  const Quasimorphism exps = builtin_exponent_sum();
  const DefectEstimate d2 = defect_estimate(exps, braid_pair_sampler(0, 6, 12), 10000);
  if (d2.value != 0.0)
    return {false, "exponent-sum defect estimate " + std::to_string(d2.value) +
                       " over 10^4 samples (must be exactly 0)"};
  std::ostringstream os;
  os << "defect estimator: ab-counting lower bound " << d1.value
     << " within 100 samples (seed 0); exponent-sum estimate exactly 0 over 10^4 samples";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 8. Commutator-length search: cl([a,b]) = 1, cl(1) = 0, the classical
//    two-commutator identity for [a,b]^3 replays, and the k <= 2 search either
//    finds 2 or honestly reports budget exhaustion.

Outcome criterion8() {
  const auto t0 = Clock::now();
  constexpr double kCap = 600.0;
  const Word a = parse_word("a", Alphabet::Free);
  const Word b = parse_word("b", Alphabet::Free);
  const Word ab_comm = commutator(a, b);

  const ClSearchResult r1 = cl_upper_search(ab_comm, 2, 4);
  if (r1.status != SearchStatus::Found || r1.commutator_count != 1)
    return {false, "cl([a,b]) did not come back 1"};
  const ClSearchResult r0 = cl_upper_search(Word{}, 2, 4);
  if (r0.status != SearchStatus::Found || r0.commutator_count != 0)
    return {false, "cl(identity) did not come back 0"};

  const Word target = power(ab_comm, 3);
  const auto classic = culler_factorization();
  if (classic.size() != 2 || commutator_product(classic) != target)
    return {false, "the shipped two-commutator identity for [a,b]^3 does not multiply out"};
  const Verdict v = verify(factorization_certificate(target, classic));
  if (!v.accepted()) return {false, "identity certificate replay failed: " + v.reason};

  const ClSearchResult r2 = cl_upper_search(target, 2, 8);
  std::string search_note;
  if (r2.status == SearchStatus::Found && r2.commutator_count == 2) {
    search_note = "search found 2 (" + std::to_string(r2.candidates_tried) + " candidates)";
  } else if (r2.status == SearchStatus::BudgetExhausted) {
    search_note = "search reported budget exhaustion (acceptable)";
  } else {
    return {false, "search for [a,b]^3 returned neither 2 nor budget exhaustion"};
  }
  const double dt = seconds_since(t0);
  std::ostringstream os;
  os << "commutator length: cl([a,b]) = 1, cl(1) = 0, [a,b]^3 identity replays; " << search_note
     << " in " << fmt_seconds(dt) << " (cap 600s)";
  return {dt <= kCap, os.str()};
}

// ---------------------------------------------------------------------------
// 9. Quasi-norm audits: no subadditivity violations over 10^3 pairs per norm,
//    and the canonical witness family evaluates to exactly 2k.

Outcome criterion9() {
  const QuasiNormReport br = braid_norm_suite(BraidContext::strands(8), 8, 20, 1000, 909);
  if (br.subadditivity_violations != 0)
    return {false, std::to_string(br.subadditivity_violations) +
                       " braid subadditivity violations over 10^3 pairs"};
  const QuasiNormReport au = aut_norm_suite(6, 8, 1000, 910);
  if (au.subadditivity_violations != 0)
    return {false, std::to_string(au.subadditivity_violations) +
                       " automorphism subadditivity violations over 10^3 pairs"};
  for (const QuasiNormReport* rep : {&br, &au}) {
    if (rep->unboundedness_witnesses.size() != 10)
      return {false, rep->name + ": expected 10 unboundedness witnesses"};
    for (int k = 1; k <= 10; ++k) {
      if (rep->unboundedness_witnesses[static_cast<std::size_t>(k - 1)] != 2.0 * k)
        return {false, rep->name + ": witness " + std::to_string(k) + " is not exactly 2k"};
    }
    if (!rep->witnesses_increasing) return {false, rep->name + ": witnesses not increasing"};
  }
  std::ostringstream os;
  os << "quasi-norms: 0 subadditivity violations over 10^3 braid pairs (8 strands, length <= 20) "
        "and 10^3 automorphism pairs; witness family exactly 2k for k = 1..10 (conjugacy "
        "deviation max "
     << br.conjugacy_deviation_max << " braid, " << au.conjugacy_deviation_max << " aut)";
  return {true, os.str()};
}

// ---------------------------------------------------------------------------
// 10. Certificate robustness: single-byte mutations of an accepted certificate
//     must never verify as accepted.

Outcome criterion10() {
  const CommutingFamily fam = build_braid_family(3, 3);
  const Word x = parse_word("s1 s2", Alphabet::Braid);
  const Word y = parse_word("s2^-1 s1", Alphabet::Braid);
  const Certificate cert = swindle_certificate(fam, x, y);
  if (!verify(cert).accepted()) return {false, "baseline certificate did not verify"};
  const std::string text = serialize(cert);

  std::mt19937_64 rng(1010);
  int parse_errors = 0, rejected = 0, inconclusive = 0, accepted = 0;
  for (int k = 0; k < 1000; ++k) {
    const std::string mutated = testsupport::mutate_byte(text, rng);
    try {
      const Certificate parsed = deserialize(mutated);
      const Verdict v = verify(parsed);
      if (v.status == VerdictStatus::Accepted)
        ++accepted;
      else if (v.status == VerdictStatus::Rejected)
        ++rejected;
      else
        ++inconclusive;
    } catch (const ParseError&) {
      ++parse_errors;
    }
  }
  std::ostringstream os;
  os << "certificate robustness: 1000 single-byte mutations -> " << parse_errors
     << " deserialize errors, " << rejected << " rejected, " << inconclusive << " inconclusive, "
     << accepted << " accepted";
  return {accepted == 0, os.str()};
}

// ---------------------------------------------------------------------------
// 11. Determinism: two spawned runs of the seeded report bundle produce
//     byte-identical files.

int emit_reports(std::uint64_t seed, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return 1;

  const QuasiNormReport br = braid_norm_suite(BraidContext::strands(8), 8, 20, 500, seed);
  out << Report("quasinorm-suite")
             .set("norm", br.name)
             .set("samples", br.samples)
             .set("subadditivity_violations", br.subadditivity_violations)
             .set("conjugacy_deviation_max", br.conjugacy_deviation_max)
             .set("unboundedness_witnesses", br.unboundedness_witnesses)
             .to_json_line();
  const QuasiNormReport au = aut_norm_suite(6, 8, 500, seed + 1);
  out << Report("quasinorm-suite")
             .set("norm", au.name)
             .set("samples", au.samples)
             .set("subadditivity_violations", au.subadditivity_violations)
             .set("conjugacy_deviation_max", au.conjugacy_deviation_max)
             .set("unboundedness_witnesses", au.unboundedness_witnesses)
             .to_json_line();

  const Quasimorphism brooks = builtin_brooks(parse_word("ab", Alphabet::Free));
  const DefectEstimate d = defect_estimate(brooks, free_pair_sampler(seed, 2, 12), 2000);
  Report dr("qm-defect");
  dr.set("qm", brooks.name()).set("trials", d.trials).set("defect_lower_bound", d.value);
  if (d.witness) {
    dr.set("witness_x", render_word(d.witness->first));
    dr.set("witness_y", render_word(d.witness->second));
  }
  out << dr.to_json_line();

  const HomogenizationEstimate h =
      homogenize_estimate(brooks, parse_word("ab", Alphabet::Free), 16, d.value);
  out << Report("qm-homogenize")
             .set("value", h.value)
             .set("error_bound", h.error_bound)
             .set("exponent_used", h.exponent_used)
             .to_json_line();

  auto rng = indexed_rng(seed, 9001);
  const Word bx = random_braid_word(rng, 3, 6);
  const Word by = random_braid_word(rng, 3, 6);
  const Certificate bc = swindle_certificate(build_braid_family(3, 4), bx, by);
  out << Report("swindle-certify")
             .set("group", "braid")
             .set("verdict", verify(bc).accepted() ? "accepted" : "not-accepted")
             .set("certificate", serialize(bc))
             .to_json_line();

  const Certificate ac = swindle_certificate(build_aut_family(2, 3),
                                             random_automorphism(seed, 7, 2, 4),
                                             random_automorphism(seed, 8, 2, 4));
  out << Report("swindle-certify")
             .set("group", "aut")
             .set("verdict", verify(ac).accepted() ? "accepted" : "not-accepted")
             .set("certificate", serialize(ac))
             .to_json_line();

  const Word target = power(commutator(parse_word("a", Alphabet::Free),
                                       parse_word("b", Alphabet::Free)),
                            3);
  const ClSearchResult cl = cl_upper_search(target, 2, 8);
  Report cr("cl-search");
  cr.set("status", cl.status == SearchStatus::Found
                       ? "found"
                       : (cl.status == SearchStatus::NoneFound ? "none-found" : "budget-exhausted"));
  if (cl.commutator_count) cr.set("cl_upper_bound", *cl.commutator_count);
  cr.set("candidates_tried", cl.candidates_tried);
  out << cr.to_json_line();

  out.flush();
  return out ? 0 : 1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion11() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();
  const fs::path p1 = dir / "sclkit-acceptance-run1.jsonl";
  const fs::path p2 = dir / "sclkit-acceptance-run2.jsonl";
  const std::string base = "\"" + g_self + "\" --emit-reports 424242 ";
  const int rc1 = std::system((base + "\"" + p1.string() + "\"").c_str());
  const int rc2 = std::system((base + "\"" + p2.string() + "\"").c_str());
  if (rc1 != 0 || rc2 != 0) return {false, "report-bundle subprocess failed"};
  const std::string b1 = slurp(p1);
  const std::string b2 = slurp(p2);
  fs::remove(p1);
  fs::remove(p2);
  if (b1.empty()) return {false, "report bundle came back empty"};
  if (b1 != b2) return {false, "same-seed report files differ"};
  std::ostringstream os;
  os << "determinism: two same-seed runs produced byte-identical report files (" << b1.size()
     << " bytes)";
  return {true, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc == 4 && std::string(argv[1]) == "--emit-reports") {
    try {
      return emit_reports(std::stoull(argv[2]), argv[3]);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "emit-reports failed: %s\n", e.what());
      return 1;
    }
  }
  g_self = argv[0];

  Gate gate;
  gate.run(1, criterion1);
  gate.run(2, criterion2);
  gate.run(3, criterion3);
  gate.run(4, criterion4);
  gate.run(5, criterion5);
  gate.run(6, criterion6);
  gate.run(7, criterion7);
  gate.run(8, criterion8);
  gate.run(9, criterion9);
  gate.run(10, criterion10);
  gate.run(11, criterion11);

  if (gate.failures == 0) {
    std::printf("all 11 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", gate.failures);
  return 1;
}
