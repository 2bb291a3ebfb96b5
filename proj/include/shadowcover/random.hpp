#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace shadowcover {

// Uniform integer in [lo, hi] by rejection sampling on raw mt19937_64
// output. Unlike std::uniform_int_distribution the result sequence is the
// same on every standard library.
inline long long uniform_int(std::mt19937_64& gen, long long lo, long long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = range * (std::numeric_limits<std::uint64_t>::max() / range);
  std::uint64_t x;
  do x = gen();
  while (x >= limit);
  return lo + static_cast<long long>(x % range);
}

}  // namespace shadowcover
