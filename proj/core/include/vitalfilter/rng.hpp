#ifndef VITALFILTER_RNG_HPP
#define VITALFILTER_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace vitalfilter {

// std::shuffle and std::uniform_int_distribution are implementation-defined,
// so seeded runs would not reproduce across standard libraries. These helpers
// pin the exact sampling algorithm on top of mt19937_64.

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling over the top of the generator's range.
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  // Fisher-Yates.
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace vitalfilter

#endif  // VITALFILTER_RNG_HPP
