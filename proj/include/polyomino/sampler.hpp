#pragma once

// Uniform random generation of convex polyominoes: rejection of
// self-intersecting S-walks for fixed (w, h) or fixed perimeter, and
// rejection-free generation of directed convex polyominoes through the
// path-pair bijection.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "bijection.hpp"
#include "counting.hpp"
#include "random.hpp"
#include "swalk.hpp"

namespace polyomino {

struct SampleReport {
  ConvexPolyomino polyomino;
  std::uint64_t attempts = 1;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

struct EfficiencyStats {
  BigRational exact;
  double empirical = 0.0;  // accepted / trials, 0 when trials == 0
  std::uint64_t trials = 0;
  std::uint64_t accepted = 0;
};

namespace detail {

inline std::string arrange(std::size_t length, std::size_t horizontal, Rng& rng) {
  const auto mask = random_subset_mask(length, horizontal, rng);
  std::string out(length, 'V');
  for (std::size_t i = 0; i < length; ++i) {
    if (mask[i]) {
      out[i] = 'H';
    }
  }
  return out;
}

inline void require_dimensions(int w, int h) {
  if (w < 1 || h < 1) {
    throw DomainError("width and height must be >= 1");
  }
}

}  // namespace detail

// Uniform over all count(SWalk, w, h) codes.
inline SWalkCode sample_swalk(int w, int h, Rng& rng) {
  detail::require_dimensions(w, h);
  const std::int64_t s = w + h;
  const BigCount start_at_corner = binomial(2 * s - 4, 2 * w - 2);
  const BigCount per_offset = binomial(2 * s - 5, 2 * w - 2);
  const BigCount r = rng.below(start_at_corner + (w - 1) * per_offset);
  const auto horizontal = static_cast<std::size_t>(2 * w - 2);
  if (r < start_at_corner) {
    return {w, h, 0, detail::arrange(static_cast<std::size_t>(2 * s - 4), horizontal, rng)};
  }
  const int offset = 1 + static_cast<int>((r - start_at_corner) / per_offset);
  return {w, h, offset, detail::arrange(static_cast<std::size_t>(2 * s - 5), horizontal, rng)};
}

inline SampleReport sample_convex(int w, int h, Rng& rng) {
  detail::require_dimensions(w, h);
  for (std::uint64_t attempts = 1;; ++attempts) {
    const ClosedWalk walk = decode(sample_swalk(w, h, rng));
    if (!self_intersects(walk)) {
      return {to_polyomino(walk), attempts, rng.seed(), rng.stream()};
    }
  }
}

inline MonotonePath sample_monotone_path(Point from, Point to, Rng& rng) {
  const int east = to.x - from.x;
  const int north = to.y - from.y;
  if (east < 0 || north < 0) {
    throw DomainError("sample_monotone_path: negative displacement");
  }
  const auto mask = random_subset_mask(static_cast<std::size_t>(east + north), static_cast<std::size_t>(east), rng);
  std::vector<Step> steps;
  steps.reserve(mask.size());
  for (bool e : mask) {
    steps.push_back(e ? Step::E : Step::N);
  }
  return MonotonePath(from, std::move(steps));
}

// The sampled path pair is reported through `pair` when non-null.
inline SampleReport sample_directed(int w, int h, Rng& rng, PathPair* pair = nullptr,
                                    std::vector<int>* trace = nullptr) {
  detail::require_dimensions(w, h);
  const Point target{w - 1, h - 1};
  MonotonePath u = sample_monotone_path({0, 0}, target, rng);
  MonotonePath v = sample_monotone_path({0, 0}, target, rng);
  ConvexPolyomino p = pair_to_directed(u, v, w, h, trace);
  if (pair != nullptr) {
    *pair = {std::move(u), std::move(v)};
  }
  return {std::move(p), 1, rng.seed(), rng.stream()};
}

// One raw proposal of the fixed-perimeter sampler: x over {V,H} of length
// 2s-7 and Q in [1, 2s+3]. Every code of semi-perimeter s arises from
// exactly two of the 2^(2s-7) (2s+3) outcomes.
inline SWalkCode propose_perimeter_code(const std::string& x, int q_draw) {
  const int n = static_cast<int>(x.size());
  const int s = (n + 7) / 2;
  if (n % 2 == 0 || s < 4 || q_draw < 1 || q_draw > 2 * s + 3) {
    throw DomainError("propose_perimeter_code: need |x| = 2s-7 with s >= 4 and 1 <= Q <= 2s+3");
  }
  std::string code = x;
  auto horizontal = [&] { return static_cast<int>(std::count(code.begin(), code.end(), 'H')); };
  if (q_draw > 2 * s - 5) {
    const int bits = q_draw - (2 * s - 4);
    code.push_back((bits & 1) != 0 ? 'H' : 'V');
    code.push_back((bits & 2) != 0 ? 'H' : 'V');
    code.push_back(horizontal() % 2 == 0 ? 'V' : 'H');
    const int hs = horizontal();
    const int vs = static_cast<int>(code.size()) - hs;
    return {hs / 2 + 1, vs / 2 + 1, 0, code};
  }
  code.push_back(horizontal() % 2 == 1 ? 'V' : 'H');
  code.insert(code.begin() + (q_draw - 1), 'H');
  const int inserted_rank = static_cast<int>(std::count(code.begin(), code.begin() + q_draw, 'H'));
  const int hs = horizontal();
  const int vs = static_cast<int>(code.size()) - hs;
  const int w = hs / 2 + 1;
  return {w, (vs + 3) / 2, (inserted_rank - 1) % (w - 1) + 1, code};
}

inline SWalkCode sample_perimeter_code(int s, Rng& rng) {
  if (s < 4) {
    throw DomainError("sample_perimeter: semi-perimeter must be >= 4");
  }
  std::string x;
  x.reserve(static_cast<std::size_t>(2 * s - 7));
  for (int i = 0; i < 2 * s - 7; ++i) {
    x.push_back(rng.bit() ? 'H' : 'V');
  }
  return propose_perimeter_code(x, static_cast<int>(rng.between(1, 2 * s + 3)));
}

inline SampleReport sample_perimeter(int s, Rng& rng) {
  for (std::uint64_t attempts = 1;; ++attempts) {
    const ClosedWalk walk = decode(sample_perimeter_code(s, rng));
    if (!self_intersects(walk)) {
      return {to_polyomino(walk), attempts, rng.seed(), rng.stream()};
    }
  }
}

namespace detail {

template <typename Propose>
EfficiencyStats measure(BigRational exact, std::uint64_t trials, Propose propose) {
  EfficiencyStats stats{std::move(exact), 0.0, trials, 0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    stats.accepted += !self_intersects(decode(propose()));
  }
  if (trials > 0) {
    stats.empirical = static_cast<double>(stats.accepted) / static_cast<double>(trials);
  }
  return stats;
}

}  // namespace detail

// Probability that one proposal is accepted, P_wh / P~_wh.
inline EfficiencyStats efficiency(int w, int h, std::uint64_t trials, Rng& rng) {
  detail::require_dimensions(w, h);
  BigRational exact(count(CountClass::Convex, w, h), count(CountClass::SWalk, w, h));
  return detail::measure(std::move(exact), trials, [&] { return sample_swalk(w, h, rng); });
}

inline BigRational exact_perimeter_efficiency(int s) {
  return {count_perimeter(CountClass::Convex, s), count_perimeter(CountClass::SWalk, s)};
}

inline EfficiencyStats perimeter_efficiency(int s, std::uint64_t trials, Rng& rng) {
  if (s < 4) {
    throw DomainError("perimeter efficiency: semi-perimeter must be >= 4");
  }
  return detail::measure(exact_perimeter_efficiency(s), trials, [&] { return sample_perimeter_code(s, rng); });
}

}  // namespace polyomino
