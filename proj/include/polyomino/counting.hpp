#pragma once

// Exact closed-form counts for convex polyominoes, S-walks and the
// intersection moments of monotone path pairs. All arithmetic is BigCount.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bigint.hpp"

namespace polyomino {

enum class CountClass {
  Convex,
  Directed,
  Parallelogram,
  SWalk,
  SelfIntersectingSWalk,
  WeakDirectedSWalk,
};

inline constexpr std::array<CountClass, 6> kAllCountClasses = {
    CountClass::Convex, CountClass::Directed,          CountClass::Parallelogram,
    CountClass::SWalk,  CountClass::SelfIntersectingSWalk, CountClass::WeakDirectedSWalk,
};

inline std::string_view name(CountClass c) {
  switch (c) {
    case CountClass::Convex: return "convex";
    case CountClass::Directed: return "directed";
    case CountClass::Parallelogram: return "parallelogram";
    case CountClass::SWalk: return "swalk";
    case CountClass::SelfIntersectingSWalk: return "self-intersecting-swalk";
    case CountClass::WeakDirectedSWalk: return "weak-directed-swalk";
  }
  return "?";
}

inline std::optional<CountClass> parse_count_class(std::string_view text) {
  for (CountClass c : kAllCountClasses) {
    if (text == name(c)) {
      return c;
    }
  }
  return std::nullopt;
}

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Smallest width/height the class admits (0 only for weak directed walks).
inline int min_side(CountClass c) { return c == CountClass::WeakDirectedSWalk ? 0 : 1; }

namespace detail {

inline BigCount convex(std::int64_t w, std::int64_t h) {
  const std::int64_t s = w + h;
  // (w-1)*C(2s-5,2w-2) is the integral form of (2s-5)/2 * C(2s-6,2w-3).
  return binomial(2 * s - 4, 2 * w - 2) + (w - 1) * binomial(2 * s - 5, 2 * w - 2) -
         2 * (s - 3) * binomial(s - 2, w - 1) * binomial(s - 4, w - 2);
}

inline BigCount swalk(std::int64_t w, std::int64_t h) {
  const std::int64_t s = w + h;
  return binomial(2 * s - 4, 2 * w - 2) + (w - 1) * binomial(2 * s - 5, 2 * w - 2);
}

inline BigCount self_intersecting_swalk(std::int64_t w, std::int64_t h) {
  const std::int64_t s = w + h;
  return (s - 3) * binomial(s - 2, w - 1) * binomial(s - 4, w - 2);
}

inline BigCount weak_directed(std::int64_t w, std::int64_t h) {
  const std::int64_t s = w + h;
  return exact_half(binomial(2 * s + 2, 2 * w + 1));
}

}  // namespace detail

inline BigCount count(CountClass c, std::int64_t w, std::int64_t h) {
  const int lo = min_side(c);
  if (w < lo || h < lo) {
    throw DomainError(std::string(name(c)) + ": width and height must be >= " + std::to_string(lo));
  }
  const std::int64_t s = w + h;
  switch (c) {
    case CountClass::Convex: return detail::convex(w, h);
    case CountClass::Directed: {
      BigCount b = binomial(s - 2, w - 1);
      return b * b;
    }
    case CountClass::Parallelogram:
      // Narayana number N(s-1, w) = C(s-1,w) C(s-1,w-1) / (s-1).
      return exact_div(binomial(s - 1, w) * binomial(s - 1, w - 1), s - 1);
    case CountClass::SWalk: return detail::swalk(w, h);
    case CountClass::SelfIntersectingSWalk: return detail::self_intersecting_swalk(w, h);
    case CountClass::WeakDirectedSWalk: return detail::weak_directed(w, h);
  }
  throw DomainError("unknown count class");
}

// Count over all w + h = s.
inline BigCount count_perimeter(CountClass c, std::int64_t s) {
  if (s < 2) {
    throw DomainError("semi-perimeter must be >= 2");
  }
  auto direct_sum = [&] {
    BigCount total = 0;
    for (std::int64_t w = min_side(c); w <= s - min_side(c); ++w) {
      total += count(c, w, s - w);
    }
    return total;
  };
  switch (c) {
    case CountClass::Convex:
      if (s < 4) {
        return direct_sum();
      }
      return power(4, s - 4) * (2 * s + 3) - (2 * s - 6) * binomial(2 * s - 6, s - 3);
    case CountClass::Directed: return binomial(2 * s - 4, s - 2);
    case CountClass::Parallelogram: return exact_div(binomial(2 * s - 2, s - 1), s);
    case CountClass::SWalk:
      if (s < 4) {
        return direct_sum();
      }
      return power(4, s - 4) * (2 * s + 3);
    case CountClass::SelfIntersectingSWalk:
      if (s < 4) {
        return 0;
      }
      return (s - 3) * binomial(2 * s - 6, s - 3);
    case CountClass::WeakDirectedSWalk:
      // Odd-index binomials of 2s+2 sum to 2^(2s+1).
      return power(4, s);
  }
  throw DomainError("unknown count class");
}

// Unnormalized moments of |U ∩ V| over ordered pairs of paths (0,0)->(w,h).
inline BigCount moment(int order, std::int64_t w, std::int64_t h) {
  if (w < 0 || h < 0) {
    throw DomainError("moment: width and height must be >= 0");
  }
  const std::int64_t s = w + h;
  const BigCount first = exact_half(binomial(2 * s + 2, 2 * w + 1));
  switch (order) {
    case 1: return first;
    case 2: return (s + 1) * binomial(s + 2, w + 1) * binomial(s, w) - first;
    default: throw DomainError("moment order must be 1 or 2");
  }
}

// Sum over ordered pairs of C(|U ∩ V| + 1, 2).
inline BigCount binomial_pair_sum(std::int64_t w, std::int64_t h) {
  if (w < 0 || h < 0) {
    throw DomainError("binomial_pair_sum: width and height must be >= 0");
  }
  const std::int64_t s = w + h;
  return exact_half((s + 1) * binomial(s + 2, w + 1) * binomial(s, w));
}

}  // namespace polyomino
