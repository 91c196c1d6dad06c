#pragma once

// Brute-force ground truth. Nothing here consults the closed-form counts;
// callers compare the results against them.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "bigint.hpp"
#include "counting.hpp"
#include "lattice.hpp"
#include "polyomino.hpp"
#include "swalk.hpp"

namespace polyomino {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownObject : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  int max_polyomino_semiperimeter = 9;
  int max_swalk_semiperimeter = 8;
  int max_path_side = 5;
};

struct EnumerationReport {
  CountClass kind = CountClass::Convex;
  int width = 0;
  int height = 0;
  BigCount total = 0;
  std::vector<ConvexPolyomino> objects;  // empty unless requested
};

// Every column-interval assignment in the w x h box that validate() accepts.
// Adjacent columns must overlap, which prunes the search without assuming
// anything about convexity.
inline std::vector<ConvexPolyomino> enumerate_convex_list(int w, int h, const Budget& budget = {}) {
  if (w < 1 || h < 1) {
    throw DomainError("enumerate_convex: width and height must be >= 1");
  }
  if (w + h > budget.max_polyomino_semiperimeter) {
    throw BudgetExceeded("enumerate_convex: semi-perimeter " + std::to_string(w + h) + " exceeds budget " +
                         std::to_string(budget.max_polyomino_semiperimeter));
  }
  std::vector<ConvexPolyomino> out;
  std::vector<Interval> columns;
  std::function<void()> rec = [&] {
    if (static_cast<int>(columns.size()) == w) {
      try {
        out.push_back(ConvexPolyomino::validate(columns, w, h));
      } catch (const ValidationError&) {
      }
      return;
    }
    for (int lo = 0; lo < h; ++lo) {
      for (int hi = lo + 1; hi <= h; ++hi) {
        if (!columns.empty() && std::max(lo, columns.back().lo) >= std::min(hi, columns.back().hi)) {
          continue;
        }
        columns.push_back({lo, hi});
        rec();
        columns.pop_back();
      }
    }
  };
  rec();
  return out;
}

inline EnumerationReport enumerate_convex(int w, int h, const Budget& budget = {}, bool keep = false) {
  auto list = enumerate_convex_list(w, h, budget);
  EnumerationReport report{CountClass::Convex, w, h, list.size(), {}};
  if (keep) {
    report.objects = std::move(list);
  }
  return report;
}

// Directed or parallelogram subsets, filtered by flags.
inline EnumerationReport enumerate_class(CountClass kind, int w, int h, const Budget& budget = {},
                                         bool keep = false) {
  if (kind != CountClass::Convex && kind != CountClass::Directed && kind != CountClass::Parallelogram) {
    throw DomainError("enumerate_class: only polyomino classes are enumerated here");
  }
  EnumerationReport report{kind, w, h, 0, {}};
  for (auto& p : enumerate_convex_list(w, h, budget)) {
    const auto f = p.flags();
    const bool in = kind == CountClass::Convex || (kind == CountClass::Directed && f.directed) ||
                    (kind == CountClass::Parallelogram && f.parallelogram);
    if (in) {
      ++report.total;
      if (keep) {
        report.objects.push_back(std::move(p));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// S-walk code space.

// Calls visit(code) for every code satisfying the SWalkCode invariants.
template <typename Visitor>
void for_each_swalk_code(int w, int h, Visitor&& visit) {
  const int horizontal = 2 * w - 2;
  for (int a = 0; a < w; ++a) {
    const int vertical = a == 0 ? 2 * h - 2 : 2 * h - 3;
    if (vertical < 0) {
      continue;
    }
    std::string symbols;
    std::function<void(int, int)> rec = [&](int hs, int vs) {
      if (hs == 0 && vs == 0) {
        visit(SWalkCode{w, h, a, symbols});
        return;
      }
      if (hs > 0) {
        symbols.push_back('H');
        rec(hs - 1, vs);
        symbols.pop_back();
      }
      if (vs > 0) {
        symbols.push_back('V');
        rec(hs, vs - 1);
        symbols.pop_back();
      }
    };
    rec(horizontal, vertical);
  }
}

namespace detail {

// Splits an S-walk at its side contacts into four pieces running between
// consecutive sides; pieces 0 and 2 are the falling paths, 1 and 3 the
// rising ones. Returns whether the falling and the rising pairs meet.
inline std::pair<bool, bool> falling_rising_meet(const ClosedWalk& walk) {
  const auto& v = walk.vertices;
  const std::size_t n = v.size() - 1;
  auto on = [&](std::size_t t, int side) {
    switch (side) {
      case kSouth: return v[t].y == 0;
      case kWest: return v[t].x == 0;
      case kNorth: return v[t].y == walk.height;
      default: return v[t].x == walk.width;
    }
  };
  std::array<std::size_t, 4> first{n, n, n, n};
  for (std::size_t t = 0; t < n; ++t) {
    for (int side = 0; side < 4; ++side) {
      if (first[static_cast<std::size_t>(side)] == n && on(t, side) && !(side == kSouth && t == 0)) {
        first[static_cast<std::size_t>(side)] = t;
      }
    }
  }
  std::array<int, 3> order{kWest, kNorth, kEast};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return first[static_cast<std::size_t>(a)] < first[static_cast<std::size_t>(b)]; });
  std::array<std::size_t, 4> last{};
  for (int side : order) {
    std::size_t t = first[static_cast<std::size_t>(side)];
    while (t + 1 <= n && on(t + 1, side)) {
      ++t;
    }
    last[static_cast<std::size_t>(side)] = t;
  }
  std::array<std::set<Point>, 4> pieces;
  int previous = kSouth;
  const std::array<int, 4> sequence{order[0], order[1], order[2], kSouth};
  for (std::size_t k = 0; k < 4; ++k) {
    const int side = sequence[k];
    for (std::size_t t = last[static_cast<std::size_t>(previous)]; t <= first[static_cast<std::size_t>(side)]; ++t) {
      pieces[k].insert(v[t]);
    }
    previous = side;
  }
  auto meet = [](const std::set<Point>& a, const std::set<Point>& b) {
    return std::any_of(a.begin(), a.end(), [&](const Point& p) { return b.count(p) > 0; });
  };
  return {meet(pieces[0], pieces[2]), meet(pieces[1], pieces[3])};
}

}  // namespace detail

struct SWalkTally {
  int width = 0;
  int height = 0;
  BigCount total = 0;
  BigCount simple = 0;
  BigCount self_intersecting = 0;
  BigCount rising_intersecting = 0;
  BigCount falling_intersecting = 0;
  BigCount both_intersecting = 0;  // expected to stay 0
  std::array<BigCount, 3> by_order{};  // indexed by SideOrder
  BigCount simple_not_swne = 0;        // expected to stay 0
  BigCount distinct_walks = 0;
};

inline SWalkTally enumerate_swalks(int w, int h, const Budget& budget = {}) {
  if (w < 1 || h < 1) {
    throw DomainError("enumerate_swalks: width and height must be >= 1");
  }
  if (w + h > budget.max_swalk_semiperimeter) {
    throw BudgetExceeded("enumerate_swalks: semi-perimeter " + std::to_string(w + h) + " exceeds budget " +
                         std::to_string(budget.max_swalk_semiperimeter));
  }
  SWalkTally tally{w, h};
  std::set<std::vector<Point>> seen;
  for_each_swalk_code(w, h, [&](const SWalkCode& code) {
    const ClosedWalk walk = decode(code);
    ++tally.total;
    seen.insert(walk.vertices);
    const bool crossing = self_intersects(walk);
    const SideOrder order = classify(walk);
    ++tally.by_order[static_cast<std::size_t>(order)];
    if (!crossing) {
      ++tally.simple;
      tally.simple_not_swne += order != SideOrder::SWNE;
    } else {
      ++tally.self_intersecting;
    }
    const auto [falling, rising] = detail::falling_rising_meet(walk);
    tally.falling_intersecting += falling;
    tally.rising_intersecting += rising;
    tally.both_intersecting += falling && rising;
  });
  tally.distinct_walks = seen.size();
  return tally;
}

// S-walks straight from the definition: closed walks of length 2(w+h) inside
// [0,w] x [0,h] with at least one edge on every side, starting with an
// up-step at the leftmost visited point (a, 0) of the S-side and running
// westward along it.
inline std::set<std::vector<Point>> enumerate_swalks_by_definition(int w, int h) {
  const std::size_t length = 2 * static_cast<std::size_t>(w + h);
  std::set<std::vector<Point>> out;
  for (int a = 0; a < w; ++a) {
    const Point start{a, 0};
    std::vector<Point> path{start, {a, 1}};
    std::function<void()> rec = [&] {
      if (path.size() == length + 1) {
        if (path.back() != start) {
          return;
        }
        std::array<int, 4> edges{};
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
          const Point p = path[t];
          const Point q = path[t + 1];
          if (p.y == 0 && q.y == 0) {
            if (q.x != p.x - 1) {
              return;
            }
            ++edges[0];
          }
          edges[1] += p.x == 0 && q.x == 0;
          edges[2] += p.y == h && q.y == h;
          edges[3] += p.x == w && q.x == w;
        }
        if (*std::min_element(edges.begin(), edges.end()) == 0) {
          return;
        }
        for (const Point& p : path) {
          if (p.y == 0 && p.x < a) {
            return;
          }
        }
        out.insert(path);
        return;
      }
      const Point at = path.back();
      const int remaining = static_cast<int>(length + 1 - path.size());
      for (const Point d : {Point{1, 0}, Point{-1, 0}, Point{0, 1}, Point{0, -1}}) {
        const Point next = at + d;
        if (next.x < 0 || next.x > w || next.y < 0 || next.y > h) {
          continue;
        }
        if (std::abs(next.x - a) + next.y > remaining - 1) {
          continue;
        }
        path.push_back(next);
        rec();
        path.pop_back();
      }
    };
    rec();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Path-pair sums.

template <typename Term>
BigCount sum_over_path_pairs(int w, int h, const Budget& budget, Term term) {
  if (w < 0 || h < 0) {
    throw DomainError("path pairs: width and height must be >= 0");
  }
  if (w > budget.max_path_side || h > budget.max_path_side) {
    throw BudgetExceeded("path pairs: side exceeds budget " + std::to_string(budget.max_path_side));
  }
  const auto paths = enumerate_paths({0, 0}, {w, h});
  BigCount total = 0;
  for (const auto& u : paths) {
    for (const auto& v : paths) {
      total += term(static_cast<std::int64_t>(intersection_count(u, v)));
    }
  }
  return total;
}

// Sum over ordered pairs of paths (0,0)->(w,h) of |U ∩ V|^order.
inline BigCount brute_moments(int w, int h, int order, const Budget& budget = {}) {
  if (order < 0) {
    throw DomainError("brute_moments: negative order");
  }
  return sum_over_path_pairs(w, h, budget, [&](std::int64_t k) { return power(k, order); });
}

// Sum over ordered pairs of C(|U ∩ V| + 1, 2).
inline BigCount brute_pair_binomial_sum(int w, int h, const Budget& budget = {}) {
  return sum_over_path_pairs(w, h, budget, [](std::int64_t k) { return BigCount((k + 1) * k / 2); });
}

// ---------------------------------------------------------------------------
// Chi-square test against the uniform distribution on a finite support.

struct UniformityResult {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t degrees_of_freedom = 0;
  std::uint64_t draws = 0;
  std::vector<std::uint64_t> counts;  // in support order
};

inline double chi_square_p_value(double statistic, std::size_t degrees_of_freedom) {
  if (degrees_of_freedom == 0) {
    return 1.0;
  }
  return boost::math::gamma_q(static_cast<double>(degrees_of_freedom) / 2.0, statistic / 2.0);
}

// Pearson statistic for observed counts against expected proportions.
inline UniformityResult chi_square(const std::vector<std::uint64_t>& counts, const std::vector<double>& weights) {
  if (counts.size() != weights.size() || counts.empty()) {
    throw std::invalid_argument("chi_square: counts and weights must be non-empty and of equal size");
  }
  UniformityResult r;
  r.counts = counts;
  double weight_total = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    r.draws += counts[i];
    weight_total += weights[i];
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double expected = static_cast<double>(r.draws) * weights[i] / weight_total;
    const double diff = static_cast<double>(counts[i]) - expected;
    r.statistic += diff * diff / expected;
  }
  r.degrees_of_freedom = counts.size() - 1;
  r.p_value = chi_square_p_value(r.statistic, r.degrees_of_freedom);
  return r;
}

// draw() is called n times; each result must belong to the support.
template <typename T, typename Draw>
UniformityResult uniformity_test(const std::vector<T>& support, Draw&& draw, std::uint64_t n) {
  std::map<T, std::size_t> index;
  for (const T& x : support) {
    if (!index.emplace(x, index.size()).second) {
      throw std::invalid_argument("uniformity_test: support contains duplicates");
    }
  }
  std::vector<std::uint64_t> counts(support.size(), 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    const T x = draw();
    auto it = index.find(x);
    if (it == index.end()) {
      throw UnknownObject("uniformity_test: draw outside the support");
    }
    ++counts[it->second];
  }
  return chi_square(counts, std::vector<double>(support.size(), 1.0));
}

}  // namespace polyomino
