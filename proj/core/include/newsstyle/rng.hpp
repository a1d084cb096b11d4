#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace newsstyle {

// Uniform index in [0, bound) drawn from a 64-bit Mersenne Twister.
// Uses rejection sampling on raw engine output, so results are identical
// across standard libraries (unlike std::uniform_int_distribution).
inline std::uint64_t uniform_index(std::mt19937_64& eng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t r;
  do {
    r = eng();
  } while (r >= limit);
  return r % bound;
}

// Portable Fisher-Yates shuffle.
template <class T>
void seeded_shuffle(std::span<T> items, std::mt19937_64& eng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_index(eng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

template <class T>
void seeded_shuffle(std::span<T> items, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  seeded_shuffle(items, eng);
}

}  // namespace newsstyle
