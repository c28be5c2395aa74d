#pragma once

#include <cstdint>
#include <random>

#include "sclkit/word.hpp"

namespace sclkit {

/// Deterministic, index-addressable randomness: the k-th draw of a seeded
/// stream is a pure function of (seed, k). Parallel samplers evaluate indices
/// out of order yet reproduce serial results bit for bit.
inline std::mt19937_64 indexed_rng(std::uint64_t seed, std::uint64_t k) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return std::mt19937_64(z);
}

Word random_free_word(std::mt19937_64& rng, int rank, int max_len);
Word random_braid_word(std::mt19937_64& rng, int strands, int max_len);

}  // namespace sclkit
