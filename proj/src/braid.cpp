#include "sclkit/braid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sclkit/errors.hpp"

namespace sclkit {

namespace {

void push_reduced(std::vector<Generator>& out, Generator g) {
  if (!out.empty() && out.back().cancels(g)) {
    out.pop_back();
  } else {
    out.push_back(g);
  }
}

void require_braid_family(const Word& u) {
  if (auto fam = u.family(); fam && *fam != Alphabet::Braid) {
    throw DomainError("expected a braid word");
  }
}

}  // namespace

bool is_admissible(const Word& u, const BraidContext& ctx) {
  if (auto fam = u.family(); fam && *fam != Alphabet::Braid) return false;
  if (ctx.is_infinite()) return true;
  return u.max_index() <= ctx.strand_count - 1;
}

void require_admissible(const Word& u, const BraidContext& ctx) {
  require_braid_family(u);
  if (!ctx.is_infinite() && u.max_index() > ctx.strand_count - 1) {
    throw DomainError("generator s" + std::to_string(u.max_index()) +
                      " is not admissible with " + std::to_string(ctx.strand_count) + " strands");
  }
}

namespace {

// Leftmost-closing handle scan. A handle is letters[a..b] with
// letters[a] = s_i^e, letters[b] = s_i^-e and all interior indices > i.
// Openers are tracked per index; a letter with index j invalidates every
// pending opener with index > j (it would sit inside their handle with an
// index that is not large enough). Returns true and sets (a, b) if found.
bool find_handle(const std::vector<Generator>& letters, std::size_t& a, std::size_t& b) {
  int max_idx = 0;
  for (const Generator& g : letters) max_idx = std::max(max_idx, g.index);
  std::vector<std::ptrdiff_t> opener(static_cast<std::size_t>(max_idx) + 1, -1);
  for (std::size_t p = 0; p < letters.size(); ++p) {
    const int j = letters[p].index;
    for (int i = j + 1; i <= max_idx; ++i) opener[static_cast<std::size_t>(i)] = -1;
    std::ptrdiff_t& slot = opener[static_cast<std::size_t>(j)];
    if (slot >= 0 && letters[static_cast<std::size_t>(slot)].sign != letters[p].sign) {
      a = static_cast<std::size_t>(slot);
      b = p;
      return true;
    }
    slot = static_cast<std::ptrdiff_t>(p);
  }
  return false;
}

}  // namespace

Word handle_reduce(const Word& u, const BraidContext& ctx) {
  require_admissible(u, ctx);
  std::vector<Generator> letters(u.begin(), u.end());
  std::uint64_t spent = 0;
  const auto charge = [&](std::uint64_t amount) {
    spent += amount;
    if (spent > ctx.reduction_budget) throw BudgetExceededError(ctx.reduction_budget);
  };

  std::size_t a = 0, b = 0;
  while (find_handle(letters, a, b)) {
    charge(1);
    const int i = letters[a].index;
    const int8_t e = letters[a].sign;
    std::vector<Generator> next;
    next.reserve(letters.size() + 2 * (b - a));
    for (std::size_t p = 0; p < a; ++p) next.push_back(letters[p]);
    std::uint64_t written = 0;
    for (std::size_t p = a + 1; p < b; ++p) {
      const Generator g = letters[p];
      if (g.index == i + 1) {
        push_reduced(next, Generator{Alphabet::Braid, i + 1, static_cast<int8_t>(-e)});
        push_reduced(next, Generator{Alphabet::Braid, i, g.sign});
        push_reduced(next, Generator{Alphabet::Braid, i + 1, e});
        written += 3;
      } else {
        push_reduced(next, g);
        written += 1;
      }
    }
    for (std::size_t p = b + 1; p < letters.size(); ++p) push_reduced(next, letters[p]);
    charge(written);
    letters = std::move(next);
  }
  return Word::from_letters(std::move(letters));
}

long long exponent_sum(const Word& u) {
  long long total = 0;
  for (const Generator& g : u) total += g.sign;
  return total;
}

Permutation::Permutation(int n) : image_(static_cast<std::size_t>(n)) {
  if (n < 1) throw DomainError("permutation degree must be >= 1");
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw DomainError("transposition index out of range");
  Permutation p(n);
  std::swap(p.image_[static_cast<std::size_t>(i - 1)], p.image_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::from_one_line(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  Permutation p(n);
  std::vector<bool> seen(images.size(), false);
  for (std::size_t x = 0; x < images.size(); ++x) {
    const int y = images[x];
    if (y < 1 || y > n || seen[static_cast<std::size_t>(y - 1)]) {
      throw DomainError("one-line notation is not a permutation");
    }
    seen[static_cast<std::size_t>(y - 1)] = true;
    p.image_[x] = y - 1;
  }
  return p;
}

int Permutation::apply(int i) const {
  if (i < 1 || i > degree()) throw DomainError("permutation argument out of range");
  return image_[static_cast<std::size_t>(i - 1)] + 1;
}

Permutation Permutation::compose(const Permutation& inner) const {
  if (degree() != inner.degree()) throw DomainError("permutation degree mismatch");
  Permutation out(degree());
  for (std::size_t x = 0; x < image_.size(); ++x) {
    out.image_[x] = image_[static_cast<std::size_t>(inner.image_[x])];
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t x = 0; x < image_.size(); ++x) {
    out.image_[static_cast<std::size_t>(image_[x])] = static_cast<int>(x);
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Permutation underlying_permutation(const Word& u, int n) {
  require_braid_family(u);
  if (u.max_index() > n - 1) throw DomainError("word is not admissible on the given strand count");
  Permutation acc(n);
  for (const Generator& g : u) {
    acc = acc.compose(Permutation::transposition(n, g.index));
  }
  return acc;
}

bool braid_equal(const Word& u, const Word& v, const BraidContext& ctx) {
  require_admissible(u, ctx);
  require_admissible(v, ctx);
  const Word w = multiply(u, invert(v));
  if (w.empty()) return true;
  if (exponent_sum(w) != 0) return false;
  const int n = ctx.is_infinite() ? w.max_index() + 1 : ctx.strand_count;
  if (!underlying_permutation(w, n).is_identity()) return false;
  return handle_reduce(w, ctx).empty();
}

std::set<int> strand_support(const Word& u, const BraidContext& ctx) {
  std::set<int> strands;
  for (const Generator& g : handle_reduce(u, ctx)) {
    strands.insert(g.index);
    strands.insert(g.index + 1);
  }
  return strands;
}

Word shift(const Word& u, int k) {
  require_braid_family(u);
  std::vector<Generator> letters;
  letters.reserve(u.size());
  for (const Generator& g : u) {
    if (g.index + k < 1) throw DomainError("shift would move a generator below index 1");
    letters.push_back(Generator{Alphabet::Braid, g.index + k, g.sign});
  }
  return Word::from_letters(std::move(letters));
}

Word positive_permutation_braid(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> one_line(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) one_line[static_cast<std::size_t>(x - 1)] = p.apply(x);
  // Bubble-sort to the identity; each swap at position x is a precomposition
  // with s_x, so one_line = s_{j_k} ... s_{j_1} in the recorded swap order.
  std::vector<int> swaps;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x + 1 < n; ++x) {
      if (one_line[static_cast<std::size_t>(x)] > one_line[static_cast<std::size_t>(x + 1)]) {
        std::swap(one_line[static_cast<std::size_t>(x)], one_line[static_cast<std::size_t>(x + 1)]);
        swaps.push_back(x + 1);
        changed = true;
      }
    }
  }
  std::vector<Generator> letters;
  letters.reserve(swaps.size());
  for (auto it = swaps.rbegin(); it != swaps.rend(); ++it) {
    letters.push_back(Generator{Alphabet::Braid, *it, +1});
  }
  return Word::from_letters(std::move(letters));
}

Word block_transposition_braid(int block_size, int first_block_start, int second_block_start) {
  const int n = block_size;
  const int a = first_block_start;
  const int b = second_block_start;
  if (n < 1 || a < 1) throw DomainError("block size and start must be >= 1");
  if (a >= b) throw DomainError("first block must start before the second");
  if (a + n > b) throw DomainError("strand blocks overlap");
  const int degree = b + n - 1;
  std::vector<int> image(static_cast<std::size_t>(degree));
  for (int x = 1; x <= degree; ++x) {
    int y = x;
    if (x >= a && x < a + n) y = x + (b - a);
    else if (x >= b && x < b + n) y = x - (b - a);
    image[static_cast<std::size_t>(x - 1)] = y;
  }
  return positive_permutation_braid(Permutation::from_one_line(image));
}

}  // namespace sclkit
