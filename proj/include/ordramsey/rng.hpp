#pragma once

// splitmix64. Bit-exact definition:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// uniform(m) is the high word of the 128-bit product next() * m, so it lies
// in [0, m). A random bit is next() >> 63.

#include <cstdint>

namespace ordramsey {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, m); m == 0 gives 0.
  std::uint64_t uniform(std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * m) >> 64);
  }

  bool bit() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace ordramsey
