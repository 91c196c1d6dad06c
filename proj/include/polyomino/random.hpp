#pragma once

// Reproducible random source: std::mt19937_64 (sequence fixed by the C++
// standard) seeded from (seed, stream) through SplitMix64. Bounded draws use
// rejection on raw 64-bit words so results do not depend on the standard
// library's distribution implementations.

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "bigint.hpp"

namespace polyomino {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64/splitmix64";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {
    std::uint64_t state = seed ^ (stream * 0xd1b54a32d192ed03ULL);
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(splitmix64(state)), static_cast<std::uint32_t>(splitmix64(state)),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }
  std::uint64_t draws() const { return draws_; }

  std::uint64_t next() {
    ++draws_;
    return engine_();
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("Rng::below: empty range");
    }
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= limit) {
        return r % bound;
      }
    }
  }

  // Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool bit() { return (next() >> 63) != 0; }

  BigCount below(const BigCount& bound) {
    if (bound <= 0) {
      throw std::invalid_argument("Rng::below: empty range");
    }
    const std::size_t bits = boost::multiprecision::msb(bound) + 1;
    const std::size_t words = (bits + 63) / 64;
    const std::size_t top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask = top_bits == 64 ? ~0ULL : ((1ULL << top_bits) - 1);
    for (;;) {
      BigCount r = 0;
      for (std::size_t k = 0; k < words; ++k) {
        std::uint64_t word = next();
        if (k == 0) {
          word &= top_mask;
        }
        r <<= 64;
        r += word;
      }
      if (r < bound) {
        return r;
      }
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t draws_ = 0;
  std::mt19937_64 engine_;
};

// Uniform k-subset of {0, ..., n-1} as a 0/1 mask (partial Fisher-Yates).
inline std::vector<bool> random_subset_mask(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) {
    throw std::invalid_argument("random_subset_mask: k > n");
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<bool> mask(n, false);
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
    mask[pool[i]] = true;
  }
  return mask;
}

}  // namespace polyomino
