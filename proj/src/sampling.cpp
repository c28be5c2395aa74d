#include "sclkit/sampling.hpp"

#include "sclkit/errors.hpp"

namespace sclkit {

namespace {

Word random_word(std::mt19937_64& rng, Alphabet family, int max_index, int max_len) {
  if (max_index < 1) throw DomainError("sampler needs at least one generator");
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> idx(1, max_index);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Generator> letters;
  const int L = len(rng);
  letters.reserve(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) {
    letters.push_back(Generator{family, idx(rng), static_cast<int8_t>(coin(rng) ? 1 : -1)});
  }
  return Word::from_letters(std::move(letters));
}

}  // namespace

Word random_free_word(std::mt19937_64& rng, int rank, int max_len) {
  return random_word(rng, Alphabet::Free, rank, max_len);
}

Word random_braid_word(std::mt19937_64& rng, int strands, int max_len) {
  return random_word(rng, Alphabet::Braid, strands - 1, max_len);
}

}  // namespace sclkit
