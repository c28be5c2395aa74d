#include "sclkit/quasimorphism.hpp"

#include <atomic>
#include <cmath>
#include <mutex>

#include "sclkit/errors.hpp"
#include "sclkit/sampling.hpp"

namespace sclkit {

struct Quasimorphism::DefectState {
  mutable std::mutex mu;
  double best = 0;
  std::optional<std::pair<Word, Word>> witness;
};

Quasimorphism::Quasimorphism(std::string name, GroupTag tag,
                             std::function<double(const Word&)> evaluator)
    : name_(std::move(name)), tag_(tag), eval_(std::move(evaluator)),
      state_(std::make_shared<DefectState>()) {
  if (!eval_) throw DomainError("quasimorphism needs an evaluator");
}

double Quasimorphism::defect_lower_bound() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->best;
}

std::optional<std::pair<Word, Word>> Quasimorphism::defect_witness() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->witness;
}

void Quasimorphism::observe_defect(double value, const Word& x, const Word& y) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  if (value > state_->best || !state_->witness) {
    state_->best = std::max(value, state_->best);
    if (value >= state_->best) state_->witness = std::make_pair(x, y);
  }
}

Quasimorphism builtin_exponent_sum() {
  return Quasimorphism("exp-sum", GroupTag::Braid, [](const Word& w) {
    double total = 0;
    for (const Generator& g : w) total += g.sign;
    return total;
  });
}

Quasimorphism builtin_brooks(const Word& pattern) {
  if (pattern.empty()) throw DomainError("brooks pattern must be nonempty");
  if (pattern.family() != Alphabet::Free) {
    throw DomainError("brooks pattern must use free letters");
  }
  if (pattern.size() > 1 && pattern[0].cancels(pattern[pattern.size() - 1])) {
    throw DomainError("brooks pattern must be cyclically reduced");
  }
  const Word inverse_pattern = invert(pattern);
  return Quasimorphism(
      "brooks:" + render_word(pattern), GroupTag::Free,
      [pattern, inverse_pattern](const Word& w) {
        return static_cast<double>(count_occurrences(w, pattern)) -
               static_cast<double>(count_occurrences(w, inverse_pattern));
      });
}

PairSampler free_pair_sampler(std::uint64_t seed, int rank, int max_len) {
  return PairSampler{[seed, rank, max_len](std::uint64_t k) {
    std::mt19937_64 rng = indexed_rng(seed, k);
    Word x = random_free_word(rng, rank, max_len);
    Word y = random_free_word(rng, rank, max_len);
    return std::make_pair(std::move(x), std::move(y));
  }};
}

PairSampler braid_pair_sampler(std::uint64_t seed, int strands, int max_len) {
  return PairSampler{[seed, strands, max_len](std::uint64_t k) {
    std::mt19937_64 rng = indexed_rng(seed, k);
    Word x = random_braid_word(rng, strands, max_len);
    Word y = random_braid_word(rng, strands, max_len);
    return std::make_pair(std::move(x), std::move(y));
  }};
}

namespace {

struct BestSample {
  double value = -1;
  std::uint64_t index = 0;
  std::pair<Word, Word> pair;

  void offer(double v, std::uint64_t k, const std::pair<Word, Word>& p) {
    if (v > value || (v == value && k < index)) {
      value = v;
      index = k;
      pair = p;
    }
  }
  void merge(const BestSample& other) {
    if (other.value < 0) return;
    offer(other.value, other.index, other.pair);
  }
};

DefectEstimate finish_estimate(const Quasimorphism& f, const BestSample& best,
                               std::uint64_t trials) {
  DefectEstimate out;
  out.trials = trials;
  if (best.value >= 0) {
    out.value = best.value;
    out.witness = best.pair;
    f.observe_defect(best.value, best.pair.first, best.pair.second);
  }
  return out;
}

}  // namespace

DefectEstimate defect_estimate_serial(const Quasimorphism& f, const PairSampler& sampler,
                                      std::uint64_t trials) {
  if (trials < 1) throw DomainError("defect estimation needs at least one trial");
  BestSample best;
  for (std::uint64_t k = 0; k < trials; ++k) {
    auto p = sampler.at(k);
    const double d =
        std::fabs(f(multiply(p.first, p.second)) - f(p.first) - f(p.second));
    best.offer(d, k, p);
  }
  return finish_estimate(f, best, trials);
}

DefectEstimate defect_estimate(const Quasimorphism& f, const PairSampler& sampler,
                               std::uint64_t trials) {
  if (trials < 1) throw DomainError("defect estimation needs at least one trial");
#ifdef SCLKIT_HAVE_OPENMP
  BestSample best;
#pragma omp parallel
  {
    BestSample local;
#pragma omp for schedule(static) nowait
    for (long long k = 0; k < static_cast<long long>(trials); ++k) {
      auto p = sampler.at(static_cast<std::uint64_t>(k));
      const double d =
          std::fabs(f(multiply(p.first, p.second)) - f(p.first) - f(p.second));
      local.offer(d, static_cast<std::uint64_t>(k), p);
    }
#pragma omp critical
    best.merge(local);
  }
  return finish_estimate(f, best, trials);
#else
  return defect_estimate_serial(f, sampler, trials);
#endif
}

HomogenizationEstimate homogenize_estimate(const Quasimorphism& f, const Word& g, int N,
                                           double defect_bound) {
  if (N < 1) throw DomainError("homogenization exponent must be >= 1");
  if (defect_bound < 0) throw DomainError("defect bound must be >= 0");
  HomogenizationEstimate out;
  out.exponent_used = N;
  out.defect_bound_used = defect_bound;
  out.value = f(power(g, N)) / N;
  out.error_bound = defect_bound / N;
  return out;
}

CommutingAdditivityReport commuting_additivity_check(const Quasimorphism& f, const Word& x,
                                                     const Word& y, int N, double defect_bound,
                                                     const EngineContext& ctx) {
  if (ctx.tag != f.tag()) {
    throw DomainError("engine tag does not match the quasimorphism's group");
  }
  if (N < 1) throw DomainError("exponent must be >= 1");
  if (defect_bound < 0) throw DomainError("defect bound must be >= 0");
  if (!engine_equal(multiply(x, y), multiply(y, x), ctx)) {
    throw DomainError("inputs do not commute; commutator witness: " +
                      render_word(commutator(x, y)));
  }
  CommutingAdditivityReport report;
  report.exponent_used = N;
  const double pxy = homogenize_estimate(f, multiply(x, y), N, defect_bound).value;
  const double px = homogenize_estimate(f, x, N, defect_bound).value;
  const double py = homogenize_estimate(f, y, N, defect_bound).value;
  report.deviation = std::fabs(pxy - px - py);
  report.bound = 3 * defect_bound / N;
  report.within_bound = report.deviation <= report.bound + 1e-9;
  report.power_identity_ok = engine_equal(telescope_target(x, y, N), Word{}, ctx);
  return report;
}

Word telescope_target(const Word& x, const Word& y, int n) {
  return multiply(power(multiply(x, y), n), multiply(power(x, -n), power(y, -n)));
}

std::vector<std::pair<Word, Word>> telescope_factorization(const Word& x, const Word& y, int n) {
  if (n < 1) throw DomainError("telescope exponent must be >= 1");
  std::vector<std::pair<Word, Word>> pairs;
  pairs.reserve(static_cast<std::size_t>(2 * n - 1));
  pairs.emplace_back(x, y);
  for (int m = 2; m <= n; ++m) {
    // (xy)^m x^-m y^-m = (xy)^{m-1} x^-(m-1) y^-(m-1) * [y^{m-1}, x^m y x^-m] * [x^m, y]
    pairs.emplace_back(power(y, m - 1), conjugate(y, power(x, m)));
    pairs.emplace_back(power(x, m), y);
  }
  return pairs;
}

Word commutator_product(const std::vector<std::pair<Word, Word>>& pairs) {
  Word out;
  for (const auto& [a, b] : pairs) out = multiply(out, commutator(a, b));
  return out;
}

double decomposition_bound(double defect, int k, const std::vector<double>& subgroup_values) {
  if (k < 1) throw DomainError("decomposition needs k >= 1");
  if (defect < 0) throw DomainError("defect must be >= 0");
  if (static_cast<int>(subgroup_values.size()) != k) {
    throw DomainError("expected one restriction value per factor");
  }
  double total = (k - 1) * defect;
  for (double v : subgroup_values) total += std::fabs(v);
  return total;
}

namespace {

// Reduced-word enumeration in lexicographic order. Letters are encoded as
// ids 0..2r-1 with id = 2*(index-1) + (sign < 0), matching the Generator
// ordering (index ascending, positive before negative).
bool ids_cancel(int a, int b) { return (a >> 1) == (b >> 1) && ((a ^ b) & 1) != 0; }

Generator id_letter(int id) {
  return Generator{Alphabet::Free, id / 2 + 1, static_cast<int8_t>((id & 1) ? -1 : 1)};
}

// Smallest valid id at a position given the previous id (-1 when none).
int first_valid_id(int prev) { return (prev >= 0 && ids_cancel(prev, 0)) ? 1 : 0; }

void first_word_ids(std::vector<int>& ids, int length) {
  ids.assign(static_cast<std::size_t>(length), 0);
  int prev = -1;
  for (int& id : ids) {
    id = first_valid_id(prev);
    prev = id;
  }
}

// Advances to the next reduced word of the same length; false after the last.
bool next_word_ids(std::vector<int>& ids, int rank) {
  const int top = 2 * rank;
  int pos = static_cast<int>(ids.size()) - 1;
  while (pos >= 0) {
    int prev = pos > 0 ? ids[static_cast<std::size_t>(pos - 1)] : -1;
    int id = ids[static_cast<std::size_t>(pos)] + 1;
    while (id < top && prev >= 0 && ids_cancel(prev, id)) ++id;
    if (id < top) {
      ids[static_cast<std::size_t>(pos)] = id;
      int p = ids[static_cast<std::size_t>(pos)];
      for (std::size_t q = static_cast<std::size_t>(pos) + 1; q < ids.size(); ++q) {
        ids[q] = first_valid_id(p);
        p = ids[q];
      }
      return true;
    }
    --pos;
  }
  return false;
}

Word word_from_ids(const std::vector<int>& ids) {
  std::vector<Generator> letters;
  letters.reserve(ids.size());
  for (int id : ids) letters.push_back(id_letter(id));
  return Word::from_letters(std::move(letters));
}

// Breadth-first enumeration of entry pairs (a, b): total length ascending,
// then |a| ascending, then a and b lexicographic.
class PairEnumerator {
public:
  PairEnumerator(int rank, int cap) : rank_(rank), cap_(cap) { advance_shape(true); }

  bool next(Word& a, Word& b) {
    while (!done_) {
      a = word_from_ids(aids_);
      b = word_from_ids(bids_);
      step();
      return true;
    }
    return false;
  }

private:
  void advance_shape(bool init) {
    if (init) {
      t_ = 2;
      la_ = 1;
    }
    for (; t_ <= 2 * cap_; ++t_, la_ = 1) {
      for (; la_ < t_; ++la_) {
        const int lb = t_ - la_;
        if (la_ > cap_ || lb > cap_ || lb < 1) continue;
        first_word_ids(aids_, la_);
        first_word_ids(bids_, lb);
        return;
      }
    }
    done_ = true;
  }

  void step() {
    if (next_word_ids(bids_, rank_)) return;
    first_word_ids(bids_, t_ - la_);
    if (next_word_ids(aids_, rank_)) return;
    ++la_;
    advance_shape(false);
  }

  int rank_;
  int cap_;
  int t_ = 2;
  int la_ = 1;
  std::vector<int> aids_, bids_;
  bool done_ = false;
};

// Complete single-commutator decision (within the entry cap) via commutator
// normal forms: a cyclically reduced word is a commutator iff some rotation
// is literally A B C A^-1 B^-1 C^-1 with no cancellation between the pieces.
std::optional<std::pair<Word, Word>> commutator_entries(const Word& w, int cap) {
  auto [core, outer] = cyclic_reduce(w);
  const int n = static_cast<int>(core.size());
  if (n == 0) return std::nullopt;  // the identity is an empty product, not one commutator
  if (n % 2 != 0) return std::nullopt;
  const int half = n / 2;
  std::vector<Generator> rot(core.begin(), core.end());
  for (int r = 0; r < n; ++r) {
    if (r > 0) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    const auto at = [&](int i) { return rot[static_cast<std::size_t>(i)]; };
    for (int p = 0; p <= half; ++p) {
      bool a_ok = true;
      for (int i = 0; i < p; ++i) {
        if (!(at(half + i) == at(p - 1 - i).inverse())) {
          a_ok = false;
          break;
        }
      }
      if (!a_ok) continue;
      for (int q = 0; p + q <= half; ++q) {
        const int s = half - p - q;
        bool ok = true;
        for (int i = 0; ok && i < q; ++i) {
          ok = at(half + p + i) == at(p + q - 1 - i).inverse();
        }
        for (int i = 0; ok && i < s; ++i) {
          ok = at(half + p + q + i) == at(p + q + s - 1 - i).inverse();
        }
        if (!ok) continue;
        std::vector<Generator> A(rot.begin(), rot.begin() + p);
        std::vector<Generator> B(rot.begin() + p, rot.begin() + p + q);
        std::vector<Generator> C(rot.begin() + p + q, rot.begin() + half);
        Word wa = Word::from_letters(A);
        Word wb = Word::from_letters(B);
        Word wc = Word::from_letters(C);
        Word x = multiply(wa, wb);
        Word y = multiply(wc, invert(wa));
        // undo the rotation and the cyclic conjugator
        std::vector<Generator> u(core.begin(), core.begin() + r);
        Word g = multiply(outer, Word::from_letters(u));
        Word ex = conjugate(x, g);
        Word ey = conjugate(y, g);
        if (static_cast<int>(ex.size()) <= cap && static_cast<int>(ey.size()) <= cap &&
            !ex.empty() && !ey.empty()) {
          return std::make_pair(ex, ey);
        }
      }
    }
  }
  return std::nullopt;
}

struct SearchState {
  int cap;
  int rank;
  std::uint64_t budget;
  std::uint64_t spent = 0;
  bool exhausted = false;
};

// Serial recursive search for w = product of k commutators; entries bounded
// by the cap. Used below the parallel first level.
std::optional<std::vector<std::pair<Word, Word>>> search_serial(const Word& w, int k,
                                                                SearchState& st) {
  if (k == 0) {
    if (w.empty()) return std::vector<std::pair<Word, Word>>{};
    return std::nullopt;
  }
  if (k == 1) {
    ++st.spent;
    if (st.spent > st.budget) {
      st.exhausted = true;
      return std::nullopt;
    }
    if (auto entries = commutator_entries(w, st.cap)) {
      return std::vector<std::pair<Word, Word>>{*entries};
    }
    return std::nullopt;
  }
  PairEnumerator pairs(st.rank, st.cap);
  Word a, b;
  while (pairs.next(a, b)) {
    ++st.spent;
    if (st.spent > st.budget) {
      st.exhausted = true;
      return std::nullopt;
    }
    const Word comm = commutator(a, b);
    if (comm.empty()) continue;
    const Word residual = multiply(invert(comm), w);
    if (auto rest = search_serial(residual, k - 1, st)) {
      rest->insert(rest->begin(), {a, b});
      return rest;
    }
    if (st.exhausted) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<Word, Word>> culler_factorization() {
  const Word a1 = parse_word("abA", Alphabet::Free);
  const Word b1 = parse_word("BabAA", Alphabet::Free);
  const Word a2 = parse_word("Bab", Alphabet::Free);
  const Word b2 = parse_word("bb", Alphabet::Free);
  return {{a1, b1}, {a2, b2}};
}

namespace {

ClSearchResult cl_search_impl(const Word& w, int k_max, int entry_length_cap,
                              std::uint64_t budget, bool parallel) {
  if (auto fam = w.family(); fam && *fam != Alphabet::Free) {
    throw DomainError("commutator-length search runs on free words");
  }
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  if (entry_length_cap < 1) throw DomainError("entry length cap must be >= 1");
  // w must lie in the commutator subgroup: every letter's exponent sum vanishes
  {
    std::vector<long long> sums(static_cast<std::size_t>(w.max_index()) + 1, 0);
    for (const Generator& g : w) sums[static_cast<std::size_t>(g.index)] += g.sign;
    for (long long s : sums) {
      if (s != 0) {
        throw DomainError("word has nonzero abelianization; not a product of commutators");
      }
    }
  }
  ClSearchResult result;
  if (w.empty()) {
    result.status = SearchStatus::Found;
    result.commutator_count = 0;
    return result;
  }
  // Entries may be restricted to the letters of w: killing the other letters
  // is a retraction fixing w and never lengthens entries.
  const int rank = std::max<std::int32_t>(w.max_index(), 1);
  std::uint64_t spent = 0;

  for (int k = 1; k <= k_max; ++k) {
    if (k == 1) {
      ++spent;
      if (auto entries = commutator_entries(w, entry_length_cap)) {
        result.status = SearchStatus::Found;
        result.commutator_count = 1;
        result.factorization = {*entries};
        result.candidates_tried = spent;
        return result;
      }
      continue;
    }
    // Parallel over the first entry pair, in deterministic batches; the
    // nested search below the first level is serial.
    PairEnumerator pairs(rank, entry_length_cap);
    constexpr std::size_t kBatch = 512;
    bool enumeration_done = false;
    while (!enumeration_done) {
      std::vector<std::pair<Word, Word>> batch;
      batch.reserve(kBatch);
      Word a, b;
      while (batch.size() < kBatch && pairs.next(a, b)) batch.emplace_back(a, b);
      if (batch.empty()) break;
      if (batch.size() < kBatch) enumeration_done = true;

      const std::uint64_t slice_budget = budget > spent ? budget - spent : 0;
      std::vector<std::uint64_t> costs(batch.size(), 0);
      std::vector<char> success(batch.size(), 0);
      std::vector<std::vector<std::pair<Word, Word>>> found(batch.size());
      std::vector<char> slice_exhausted(batch.size(), 0);
#ifdef SCLKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
      for (long long i = 0; i < static_cast<long long>(batch.size()); ++i) {
        const auto& [fa, fb] = batch[static_cast<std::size_t>(i)];
        SearchState st{entry_length_cap, rank, slice_budget, 0, false};
        ++st.spent;
        const Word comm = commutator(fa, fb);
        std::optional<std::vector<std::pair<Word, Word>>> rest;
        if (!comm.empty() && st.spent <= st.budget) {
          const Word residual = multiply(invert(comm), w);
          rest = search_serial(residual, k - 1, st);
        } else if (st.spent > st.budget) {
          st.exhausted = true;
        }
        costs[static_cast<std::size_t>(i)] = st.spent;
        slice_exhausted[static_cast<std::size_t>(i)] = st.exhausted ? 1 : 0;
        if (rest) {
          rest->insert(rest->begin(), {fa, fb});
          found[static_cast<std::size_t>(i)] = std::move(*rest);
          success[static_cast<std::size_t>(i)] = 1;
        }
      }
      for (std::size_t i = 0; i < batch.size(); ++i) spent += costs[i];
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (success[i]) {
          result.status = SearchStatus::Found;
          result.commutator_count = k;
          result.factorization = std::move(found[i]);
          result.candidates_tried = spent;
          return result;
        }
      }
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (slice_exhausted[i]) {
          result.status = SearchStatus::BudgetExhausted;
          result.candidates_tried = spent;
          return result;
        }
      }
      if (spent >= budget) {
        result.status = SearchStatus::BudgetExhausted;
        result.candidates_tried = spent;
        return result;
      }
    }
  }
  result.status = SearchStatus::NoneFound;
  result.candidates_tried = spent;
  return result;
}

}  // namespace

ClSearchResult cl_upper_search(const Word& w, int k_max, int entry_length_cap,
                               std::uint64_t budget) {
  return cl_search_impl(w, k_max, entry_length_cap, budget, /*parallel=*/true);
}

ClSearchResult cl_upper_search_serial(const Word& w, int k_max, int entry_length_cap,
                                      std::uint64_t budget) {
  return cl_search_impl(w, k_max, entry_length_cap, budget, /*parallel=*/false);
}

}  // namespace sclkit
