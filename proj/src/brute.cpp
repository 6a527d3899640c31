#include "ordramsey/brute.hpp"

#include <bit>
#include <cstdint>
#include <functional>

namespace ordramsey {

namespace {

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet out;
  for (int x = 0; mask != 0; ++x, mask >>= 1)
    if (mask & 1U) out.push_back(x);
  return out;
}

// Largest-first, increasing-mask-within-size scan.
template <class Pred>
BruteResult scan(int n, Pred ok) {
  if (n > 32) throw std::invalid_argument("brute force is limited to n <= 32");
  if (n == 0) return {};
  for (int k = n; k >= 1; --k) {
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (ok(static_cast<std::uint32_t>(s))) return {k, mask_to_set(static_cast<std::uint32_t>(s))};
      // Gosper's hack: next mask with the same popcount.
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return {};
}

}  // namespace

BruteResult brute_max_homogeneous(const PairColoring& f) {
  const int n = f.n();
  std::vector<std::uint32_t> adj[2] = {std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0),
                                       std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) adj[f.color(x, y)][static_cast<std::size_t>(x)] |= 1U << y;
  return scan(n, [&](std::uint32_t s) {
    for (int c = 0; c < 2; ++c) {
      bool all = true;
      for (std::uint32_t rest = s; rest != 0 && all; rest &= rest - 1) {
        const int x = std::countr_zero(rest);
        all = ((s & ~(1U << x)) & ~adj[c][static_cast<std::size_t>(x)]) == 0;
      }
      if (all) return true;
    }
    return false;
  });
}

BruteResult brute_max_transitive(const Tournament& r) {
  const int n = r.n();
  std::vector<std::uint32_t> out(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && r.beats(x, y)) out[static_cast<std::size_t>(x)] |= 1U << y;
  // A tournament on S is transitive iff its out-degrees within S are distinct.
  return scan(n, [&](std::uint32_t s) {
    std::uint32_t seen = 0;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      const std::uint32_t d = 1U << std::popcount(out[static_cast<std::size_t>(x)] & s);
      if (seen & d) return false;
      seen |= d;
    }
    return true;
  });
}

}  // namespace ordramsey
