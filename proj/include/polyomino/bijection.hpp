#pragma once

// Bijection between ordered pairs of monotone paths (0,0)->(w-1,h-1) and
// directed convex polyominoes of width w and height h.
//
// Paths are viewed in the 45-degree rotated frame (x, y) -> (x+y, y-x) as
// step functions on z = 1..s-1. The untangling turns an arbitrary pair
// (f, g) with f(1) = 1, g(1) = -1 into a non-crossing pair (F, G) whose end
// gap is 2 + 4i; (F, G) are the two boundary halves of the polyomino after
// cutting at the NE diagonal, reflecting outwards and dropping the four
// implicit side edges.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "polyomino.hpp"

namespace polyomino {

class InvalidEndpoints : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotDirected : public std::invalid_argument {
 public:
  NotDirected() : std::invalid_argument("polyomino does not contain its SW corner") {}
};

// upper[z-1] = f(z), lower[z-1] = g(z) for z = 1..s-1.
struct StepFunctionPair {
  std::vector<int> upper;
  std::vector<int> lower;

  int semiperimeter() const { return static_cast<int>(upper.size()) + 1; }
  int at_upper(int z) const { return upper[static_cast<std::size_t>(z - 1)]; }
  int at_lower(int z) const { return lower[static_cast<std::size_t>(z - 1)]; }
  int difference(int z) const { return at_upper(z) - at_lower(z); }

  friend bool operator==(const StepFunctionPair&, const StepFunctionPair&) = default;
  friend auto operator<=>(const StepFunctionPair&, const StepFunctionPair&) = default;
};

struct NoncrossingPair {
  StepFunctionPair functions;
  int shift = 0;  // i: the end gap is 2 + 4i

  friend bool operator==(const NoncrossingPair&, const NoncrossingPair&) = default;
  friend auto operator<=>(const NoncrossingPair&, const NoncrossingPair&) = default;
};

inline bool has_unit_steps(const std::vector<int>& values) {
  for (std::size_t z = 0; z + 1 < values.size(); ++z) {
    if (std::abs(values[z + 1] - values[z]) != 1) {
      return false;
    }
  }
  return true;
}

inline bool is_valid(const StepFunctionPair& p) {
  return !p.upper.empty() && p.upper.size() == p.lower.size() && p.upper.front() == 1 &&
         p.lower.front() == -1 && has_unit_steps(p.upper) && has_unit_steps(p.lower);
}

inline bool is_valid(const NoncrossingPair& q) {
  const auto& fg = q.functions;
  if (!is_valid(fg) || q.shift < 0) {
    return false;
  }
  for (int z = 1; z < fg.semiperimeter(); ++z) {
    if (fg.difference(z) < 2) {
      return false;
    }
  }
  return fg.difference(fg.semiperimeter() - 1) == 2 + 4 * q.shift;
}

// Rotated step function of a monotone path: N is +1, E is -1.
inline std::vector<int> rotate_path(const MonotonePath& path, int start_height) {
  std::vector<int> values{start_height};
  values.reserve(path.length() + 1);
  for (Step s : path.steps()) {
    values.push_back(values.back() + (s == Step::N ? 1 : -1));
  }
  return values;
}

inline MonotonePath unrotate(const std::vector<int>& values, Point start) {
  std::vector<Step> steps;
  steps.reserve(values.size());
  for (std::size_t z = 0; z + 1 < values.size(); ++z) {
    steps.push_back(values[z + 1] > values[z] ? Step::N : Step::E);
  }
  return MonotonePath(start, std::move(steps));
}

// ---------------------------------------------------------------------------
// Right-to-left untangling.

namespace detail {

// Positions z (1-based, in scan order right to left) where the rightmost
// remaining crossing sits; the targets alternate 0, 4, 0, ... on f - g.
inline std::vector<bool> untangle_marks(const StepFunctionPair& p) {
  const int last = p.semiperimeter() - 1;
  std::vector<bool> marked(static_cast<std::size_t>(last) + 1, false);
  int target = 0;
  for (int z = last; z >= 1; --z) {
    if (p.difference(z) == target) {
      marked[static_cast<std::size_t>(z)] = true;
      target = 4 - target;
    }
  }
  return marked;
}

// Applies k crossover-and-shift operations at the marked positions in one
// left-to-right sweep. A position left of every one of the first c marks has
// been swapped c times; with p = marks already passed the result is
//   F = f + 2p,      G = g - 2p        (even number of swaps)
//   F = g + 2 + 2p,  G = f - 2 - 2p    (odd number of swaps)
inline StepFunctionPair sweep_forward(const StepFunctionPair& p, const std::vector<bool>& marked) {
  const int last = p.semiperimeter() - 1;
  bool swapped = std::count(marked.begin(), marked.end(), true) % 2 == 1;
  int lift = 0;
  StepFunctionPair out{std::vector<int>(p.upper.size()), std::vector<int>(p.lower.size())};
  for (int z = 1; z <= last; ++z) {
    const auto i = static_cast<std::size_t>(z - 1);
    if (swapped) {
      out.upper[i] = p.at_lower(z) + 2 + lift;
      out.lower[i] = p.at_upper(z) - 2 - lift;
    } else {
      out.upper[i] = p.at_upper(z) + lift;
      out.lower[i] = p.at_lower(z) - lift;
    }
    if (marked[static_cast<std::size_t>(z)]) {
      swapped = !swapped;
      lift += 2;
    }
  }
  return out;
}

inline StepFunctionPair sweep_backward(const StepFunctionPair& q, const std::vector<bool>& marked) {
  const int last = q.semiperimeter() - 1;
  bool swapped = std::count(marked.begin(), marked.end(), true) % 2 == 1;
  int lift = 0;
  StepFunctionPair out{std::vector<int>(q.upper.size()), std::vector<int>(q.lower.size())};
  for (int z = 1; z <= last; ++z) {
    const auto i = static_cast<std::size_t>(z - 1);
    if (swapped) {
      out.lower[i] = q.at_upper(z) - 2 - lift;
      out.upper[i] = q.at_lower(z) + 2 + lift;
    } else {
      out.upper[i] = q.at_upper(z) - lift;
      out.lower[i] = q.at_lower(z) + lift;
    }
    if (marked[static_cast<std::size_t>(z)]) {
      swapped = !swapped;
      lift += 2;
    }
  }
  return out;
}

}  // namespace detail

// Marked crossing positions, rightmost first, when trace is non-null.
inline NoncrossingPair untangle(const StepFunctionPair& p, std::vector<int>* trace = nullptr) {
  if (!is_valid(p)) {
    throw std::invalid_argument("untangle: not a step-function pair starting at heights +1/-1");
  }
  const auto marked = detail::untangle_marks(p);
  if (trace != nullptr) {
    trace->clear();
    for (int z = p.semiperimeter() - 1; z >= 1; --z) {
      if (marked[static_cast<std::size_t>(z)]) {
        trace->push_back(z);
      }
    }
  }
  const int marks = static_cast<int>(std::count(marked.begin(), marked.end(), true));
  return {detail::sweep_forward(p, marked), marks};
}

inline StepFunctionPair retangle(const NoncrossingPair& q) {
  const auto& fg = q.functions;
  if (fg.upper.empty() || fg.upper.size() != fg.lower.size()) {
    throw InvalidEndpoints("retangle: empty or ragged function pair");
  }
  const int last = fg.semiperimeter() - 1;
  const int gap = fg.difference(last);
  if (gap < 2 || (gap - 2) % 4 != 0 || (gap - 2) / 4 != q.shift) {
    throw InvalidEndpoints("retangle: end gap " + std::to_string(gap) + " is not 2+4i for i=" +
                           std::to_string(q.shift));
  }
  // The j-th mark from the right is where F - G = 4(k - j + 1).
  std::vector<bool> marked(static_cast<std::size_t>(last) + 1, false);
  int target = 4 * q.shift;
  for (int z = last; z >= 1 && target > 0; --z) {
    if (fg.difference(z) == target) {
      marked[static_cast<std::size_t>(z)] = true;
      target -= 4;
    }
  }
  if (target != 0) {
    throw InvalidEndpoints("retangle: pair is not in the image of untangle");
  }
  return detail::sweep_backward(fg, marked);
}

// ---------------------------------------------------------------------------
// Left-to-right untangling on the difference path: at the first passage of
// f - g through 0, -2, -4, ... flip f's down-step and g's up-step there.

inline NoncrossingPair motzkin_untangle(const StepFunctionPair& p) {
  if (!is_valid(p)) {
    throw std::invalid_argument("motzkin_untangle: not a step-function pair starting at heights +1/-1");
  }
  StepFunctionPair out = p;
  int level = 0;
  int lifted = 0;
  for (int z = 1; z < p.semiperimeter(); ++z) {
    if (p.difference(z) == level) {
      ++lifted;
      level -= 2;
    }
    const auto i = static_cast<std::size_t>(z - 1);
    out.upper[i] = p.upper[i] + 2 * lifted;
    out.lower[i] = p.lower[i] - 2 * lifted;
  }
  return {std::move(out), lifted};
}

// Right-to-left: the point just before the j-th flip (from the right) is the
// rightmost remaining z with F - G = 2i, 2i-2, ..., 2.
inline StepFunctionPair motzkin_retangle(const NoncrossingPair& q) {
  const auto& fg = q.functions;
  if (fg.upper.empty() || fg.upper.size() != fg.lower.size()) {
    throw InvalidEndpoints("motzkin_retangle: empty or ragged function pair");
  }
  const int last = fg.semiperimeter() - 1;
  const int gap = fg.difference(last);
  if (gap < 2 || (gap - 2) % 4 != 0 || (gap - 2) / 4 != q.shift) {
    throw InvalidEndpoints("motzkin_retangle: end gap " + std::to_string(gap) + " is not 2+4i for i=" +
                           std::to_string(q.shift));
  }
  std::vector<bool> flipped(static_cast<std::size_t>(last) + 1, false);
  int target = 2 * q.shift;
  for (int z = last; z >= 2 && target > 0; --z) {
    if (fg.difference(z - 1) == target) {
      flipped[static_cast<std::size_t>(z)] = true;
      target -= 2;
    }
  }
  if (target != 0) {
    throw InvalidEndpoints("motzkin_retangle: pair is not in the image of motzkin_untangle");
  }
  StepFunctionPair out = fg;
  int lifted = 0;
  for (int z = 1; z <= last; ++z) {
    lifted += flipped[static_cast<std::size_t>(z)];
    const auto i = static_cast<std::size_t>(z - 1);
    out.upper[i] = fg.upper[i] - 2 * lifted;
    out.lower[i] = fg.lower[i] + 2 * lifted;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Two-coloured Grand-Motzkin encoding of (f, g) through (f - g) / 2.

enum class MotzkinStep : char { Up = 'U', Down = 'D', FlatUp = 'u', FlatDown = 'd' };

struct GrandMotzkinPath {
  std::vector<MotzkinStep> steps;

  int count(MotzkinStep kind) const { return static_cast<int>(std::count(steps.begin(), steps.end(), kind)); }
  std::string to_string() const {
    std::string out;
    for (MotzkinStep s : steps) {
      out.push_back(static_cast<char>(s));
    }
    return out;
  }
  friend bool operator==(const GrandMotzkinPath&, const GrandMotzkinPath&) = default;
};

inline GrandMotzkinPath to_grand_motzkin(const StepFunctionPair& p) {
  if (p.upper.size() != p.lower.size()) {
    throw ParityError("functions have different domains");
  }
  GrandMotzkinPath m;
  for (std::size_t z = 0; z + 1 < p.upper.size(); ++z) {
    const int df = p.upper[z + 1] - p.upper[z];
    const int dg = p.lower[z + 1] - p.lower[z];
    if (std::abs(df) != 1 || std::abs(dg) != 1) {
      throw ParityError("step at z=" + std::to_string(z + 1) + " is not +-1");
    }
    if (df != dg) {
      m.steps.push_back(df > 0 ? MotzkinStep::Up : MotzkinStep::Down);
    } else {
      m.steps.push_back(df > 0 ? MotzkinStep::FlatUp : MotzkinStep::FlatDown);
    }
  }
  return m;
}

inline StepFunctionPair from_grand_motzkin(const GrandMotzkinPath& m, int upper_start, int lower_start) {
  StepFunctionPair p{{upper_start}, {lower_start}};
  for (MotzkinStep s : m.steps) {
    const int df = (s == MotzkinStep::Up || s == MotzkinStep::FlatUp) ? 1 : -1;
    const int dg = (s == MotzkinStep::Down || s == MotzkinStep::FlatUp) ? 1 : -1;
    p.upper.push_back(p.upper.back() + df);
    p.lower.push_back(p.lower.back() + dg);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Path pairs <-> directed polyominoes.

inline StepFunctionPair to_step_functions(const MonotonePath& u, const MonotonePath& v) {
  return {rotate_path(u, 1), rotate_path(v, -1)};
}

inline PathPair from_step_functions(const StepFunctionPair& p) {
  return {unrotate(p.upper, {0, 0}), unrotate(p.lower, {0, 0})};
}

// The two reduced boundary halves: W1 from (0,1) to (w-i-1, h+i) and
// W2 from (1,0) to (w+i, h-i-1).
inline PathPair boundary_halves(const NoncrossingPair& q) {
  return {unrotate(q.functions.upper, {0, 1}), unrotate(q.functions.lower, {1, 0})};
}

namespace detail {

// Inserts a unit step `delta` after the first vertex satisfying `at_side`,
// translating the remainder.
template <typename Pred>
std::vector<Point> insert_side_edge(const std::vector<Point>& pts, Pred at_side, Point delta) {
  std::vector<Point> out;
  out.reserve(pts.size() + 1);
  bool done = false;
  for (const Point& p : pts) {
    out.push_back(done ? p + delta : p);
    if (!done && at_side(p)) {
      done = true;
      out.push_back(p + delta);
    }
  }
  if (!done) {
    throw std::invalid_argument("boundary half never reaches its side");
  }
  return out;
}

template <typename Pred>
std::vector<Point> remove_side_edge(const std::vector<Point>& pts, Pred at_side, Point delta) {
  for (std::size_t j = 0; j + 1 < pts.size(); ++j) {
    if (at_side(pts[j]) && pts[j + 1] - pts[j] == delta) {
      std::vector<Point> out(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      for (std::size_t k = j + 2; k < pts.size(); ++k) {
        out.push_back(pts[k] - delta);
      }
      return out;
    }
  }
  throw std::invalid_argument("boundary half has no edge along its side");
}

}  // namespace detail

// Closed walk from (0,0) obtained by re-inserting the implicit edges into the
// two halves, reflecting them back into the w x h box and joining them at the
// diagonal point (w-i, h-i). Simple exactly when the halves do not meet.
inline std::vector<Point> assemble_boundary(const MonotonePath& upper_half, const MonotonePath& lower_half,
                                            int width, int height) {
  auto first = detail::insert_side_edge(
      upper_half.vertices(), [&](Point p) { return p.y == height; }, Point{1, 0});
  auto second = detail::insert_side_edge(
      lower_half.vertices(), [&](Point p) { return p.x == width; }, Point{0, 1});
  first.insert(first.begin(), Point{0, 0});
  second.insert(second.begin(), Point{0, 0});
  for (Point& p : first) {
    if (p.y > height) {
      p.y = 2 * height - p.y;
    }
  }
  for (Point& p : second) {
    if (p.x > width) {
      p.x = 2 * width - p.x;
    }
  }
  if (first.back() != second.back()) {
    throw std::invalid_argument("boundary halves do not meet on the NE diagonal");
  }
  std::vector<Point> walk = std::move(first);
  walk.insert(walk.end(), second.rbegin() + 1, second.rend());
  return walk;
}

inline ConvexPolyomino noncrossing_to_directed(const NoncrossingPair& q, int width, int height) {
  if (!is_valid(q)) {
    throw std::invalid_argument("noncrossing_to_directed: invalid non-crossing pair");
  }
  const auto halves = boundary_halves(q);
  return ConvexPolyomino::from_boundary(assemble_boundary(halves.first, halves.second, width, height));
}

inline ConvexPolyomino pair_to_directed(const MonotonePath& u, const MonotonePath& v, int width, int height,
                                        std::vector<int>* trace = nullptr) {
  const Point target{width - 1, height - 1};
  if (width < 1 || height < 1 || u.start() != Point{0, 0} || v.start() != Point{0, 0} || u.end() != target ||
      v.end() != target) {
    throw std::invalid_argument("pair_to_directed: paths must run from (0,0) to (w-1,h-1)");
  }
  return noncrossing_to_directed(untangle(to_step_functions(u, v), trace), width, height);
}

inline NoncrossingPair directed_to_noncrossing(const ConvexPolyomino& p) {
  if (!p.flags().directed) {
    throw NotDirected();
  }
  const int w = p.width();
  const int h = p.height();
  const auto walk = p.boundary_walk();
  const std::size_t n = walk.size() - 1;
  std::size_t last_north = 0;
  std::size_t first_east = n;
  for (std::size_t t = 0; t <= n; ++t) {
    if (walk[t].y == h) {
      last_north = t;
    }
    if (walk[t].x == w && first_east == n) {
      first_east = t;
    }
  }
  std::size_t cut = n;
  for (std::size_t t = last_north; t <= first_east; ++t) {
    if (walk[t].y - walk[t].x == h - w) {
      cut = t;
      break;
    }
  }
  if (cut == n) {
    throw std::logic_error("boundary misses the NE diagonal");
  }
  std::vector<Point> first(walk.begin(), walk.begin() + static_cast<std::ptrdiff_t>(cut) + 1);
  for (std::size_t t = last_north + 1; t < first.size(); ++t) {
    first[t].y = 2 * h - first[t].y;
  }
  std::vector<Point> second;
  for (std::size_t t = n + 1; t-- > cut;) {
    Point q = walk[t];
    if (t < first_east) {
      q.x = 2 * w - q.x;
    }
    second.push_back(q);
  }
  first.erase(first.begin());
  second.erase(second.begin());
  first = detail::remove_side_edge(first, [&](Point q) { return q.y == h; }, Point{1, 0});
  second = detail::remove_side_edge(second, [&](Point q) { return q.x == w; }, Point{0, 1});
  StepFunctionPair fg;
  for (const Point& q : first) {
    fg.upper.push_back(q.y - q.x);
  }
  for (const Point& q : second) {
    fg.lower.push_back(q.y - q.x);
  }
  const int i = w - walk[cut].x;
  return {std::move(fg), i};
}

inline PathPair directed_to_pair(const ConvexPolyomino& p) {
  return from_step_functions(retangle(directed_to_noncrossing(p)));
}

}  // namespace polyomino
