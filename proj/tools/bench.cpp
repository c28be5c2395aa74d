// Serial-versus-parallel timing for the sampling and verification kernels.
// Each row also cross-checks that both implementations produce identical
// results, which is the contract the parallel kernels are held to.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sclkit/certify.hpp"
#include "sclkit/quasimorphism.hpp"
#include "sclkit/quasinorm.hpp"
#include "sclkit/swindle.hpp"

using namespace sclkit;

namespace {

double time_ms(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
  std::string name;
  double serial_ms = 0;
  double parallel_ms = 0;
  bool match = false;
};

void print_rows(const std::vector<Row>& rows) {
  std::printf("%-28s %12s %12s %9s %7s\n", "kernel", "serial ms", "parallel ms", "speedup",
              "match");
  for (const Row& r : rows) {
    std::printf("%-28s %12.1f %12.1f %8.2fx %7s\n", r.name.c_str(), r.serial_ms, r.parallel_ms,
                r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
                r.match ? "yes" : "NO");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel kernel timings"};
  std::uint64_t defect_trials = 20000;
  std::uint64_t norm_trials = 2000;
  int verify_reps = 10;
  app.add_option("--defect-trials", defect_trials);
  app.add_option("--norm-trials", norm_trials);
  app.add_option("--verify-reps", verify_reps);
  CLI11_PARSE(app, argc, argv);

  std::vector<Row> rows;

  {
    const Quasimorphism f = builtin_brooks(parse_word("ab", Alphabet::Free));
    const PairSampler sampler = free_pair_sampler(1, 2, 16);
    DefectEstimate serial_est, parallel_est;
    Row row;
    row.name = "defect estimate (brooks ab)";
    row.serial_ms = time_ms([&] { serial_est = defect_estimate_serial(f, sampler, defect_trials); });
    row.parallel_ms = time_ms([&] { parallel_est = defect_estimate(f, sampler, defect_trials); });
    row.match = serial_est.value == parallel_est.value &&
                serial_est.witness == parallel_est.witness;
    rows.push_back(row);
  }

  {
    const BraidContext ctx = BraidContext::strands(8);
    QuasiNormReport a, b;
    Row row;
    row.name = "braid quasi-norm suite";
    row.serial_ms = time_ms([&] { a = braid_norm_suite_serial(ctx, 8, 20, norm_trials, 0); });
    row.parallel_ms = time_ms([&] { b = braid_norm_suite(ctx, 8, 20, norm_trials, 0); });
    row.match = a.subadditivity_violations == b.subadditivity_violations &&
                a.conjugacy_deviation_max == b.conjugacy_deviation_max &&
                a.unboundedness_witnesses == b.unboundedness_witnesses;
    rows.push_back(row);
  }

  {
    QuasiNormReport a, b;
    Row row;
    row.name = "aut quasi-norm suite";
    row.serial_ms = time_ms([&] { a = aut_norm_suite_serial(6, 8, norm_trials, 0); });
    row.parallel_ms = time_ms([&] { b = aut_norm_suite(6, 8, norm_trials, 0); });
    row.match = a.subadditivity_violations == b.subadditivity_violations &&
                a.conjugacy_deviation_max == b.conjugacy_deviation_max &&
                a.unboundedness_witnesses == b.unboundedness_witnesses;
    rows.push_back(row);
  }

  {
    const CommutingFamily fam = build_braid_family(3, 6);
    const Word x = parse_word("s1 s2 s1", Alphabet::Braid);
    const Word y = parse_word("s2^-1 s1 s2", Alphabet::Braid);
    const Certificate cert = swindle_certificate(fam, x, y);
    Verdict vs, vp;
    Row row;
    row.name = "swindle cert verify (m=6)";
    row.serial_ms = time_ms([&] {
      for (int i = 0; i < verify_reps; ++i) vs = verify_serial(cert);
    });
    row.parallel_ms = time_ms([&] {
      for (int i = 0; i < verify_reps; ++i) vp = verify(cert);
    });
    row.match = vs.status == vp.status && vs.step_index == vp.step_index && vs.accepted();
    rows.push_back(row);
  }

  {
    const Word target = power(commutator(parse_word("a", Alphabet::Free),
                                         parse_word("b", Alphabet::Free)),
                              3);
    ClSearchResult a, b;
    Row row;
    row.name = "cl search ([a,b]^3, k<=2)";
    row.serial_ms = time_ms([&] { a = cl_upper_search_serial(target, 2, 8); });
    row.parallel_ms = time_ms([&] { b = cl_upper_search(target, 2, 8); });
    row.match = a.status == b.status && a.factorization == b.factorization &&
                a.candidates_tried == b.candidates_tried;
    rows.push_back(row);
  }

  print_rows(rows);
  for (const Row& r : rows)
    if (!r.match) return 1;
  return 0;
}
