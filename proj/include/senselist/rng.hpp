#ifndef SENSELIST_RNG_HPP
#define SENSELIST_RNG_HPP

// Pinned pseudo-randomness for folds, sampling and corpus synthesis.
// <random> engines and distributions are not portable across standard
// library implementations, so everything random in this toolkit runs on
// splitmix64 plus an explicit Fisher-Yates shuffle.

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace senselist {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n); n must be > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform draw in [0, 1) with 53 bits of precision.
  double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

 private:
  std::uint64_t state_;
};

/// In-place Fisher-Yates: walk from the back, swap with a draw below the cursor.
template <typename T>
void fisher_yates_shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

/// Stable sub-stream for a labeled consumer (a target word, a corpus side),
/// so per-word draws do not depend on iteration order. FNV-1a over the label,
/// xor-folded into the seed, then whitened through one splitmix64 step.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  SplitMix64 mix(seed ^ h);
  return mix.next();
}

/// Uniform m-subset of {0, ..., n-1}, returned in ascending order.
inline std::vector<std::size_t> sample_indices(std::size_t n, std::size_t m, SplitMix64& rng) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  fisher_yates_shuffle(order, rng);
  order.resize(m < n ? m : n);
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace senselist

#endif  // SENSELIST_RNG_HPP
