#pragma once

#include <random>
#include <string>

// Helpers shared by the test binaries.

namespace testsupport {

/// Substitutes one byte at a deterministic position with a different printable
/// byte (newline included so structure mutations happen too).
inline std::string mutate_byte(const std::string& text, std::mt19937_64& rng) {
  static const std::string pool =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 ^-|.>;=\n";
  std::uniform_int_distribution<std::size_t> pos_dist(0, text.size() - 1);
  std::uniform_int_distribution<std::size_t> chr_dist(0, pool.size() - 1);
  std::string out = text;
  const std::size_t pos = pos_dist(rng);
  char replacement = pool[chr_dist(rng)];
  while (replacement == out[pos]) replacement = pool[chr_dist(rng)];
  out[pos] = replacement;
  return out;
}

}  // namespace testsupport
