#pragma once

// Monotone E/N lattice paths and the two-path uncrossing machinery.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace polyomino {

struct Point {
  int x = 0;
  int y = 0;

  friend constexpr auto operator<=>(const Point&, const Point&) = default;
  friend constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
};

inline std::string to_string(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline std::ostream& operator<<(std::ostream& os, Point p) { return os << to_string(p); }

enum class Step : char { E = 'E', N = 'N' };

class NoIntersection : public std::invalid_argument {
 public:
  NoIntersection() : std::invalid_argument("paths have no common vertex") {}
};

class MonotonePath {
 public:
  MonotonePath() = default;
  MonotonePath(Point start, std::vector<Step> steps) : start_(start), steps_(std::move(steps)) {}

  // Accepts "EN..." or the serialized form "EN...@(x,y)".
  static MonotonePath parse(std::string_view text) {
    Point start{};
    auto at = text.find('@');
    std::string_view body = text.substr(0, at);
    if (at != std::string_view::npos) {
      std::string tail(text.substr(at + 1));
      int x = 0;
      int y = 0;
      char tail_check = 0;
      if (std::sscanf(tail.c_str(), "(%d,%d%c", &x, &y, &tail_check) != 3 || tail_check != ')') {
        throw std::invalid_argument("bad path start: " + tail);
      }
      start = {x, y};
    }
    std::vector<Step> steps;
    steps.reserve(body.size());
    for (char c : body) {
      if (c == 'E' || c == 'H') {
        steps.push_back(Step::E);
      } else if (c == 'N' || c == 'V') {
        steps.push_back(Step::N);
      } else {
        throw std::invalid_argument(std::string("bad path step '") + c + "'");
      }
    }
    return MonotonePath(start, std::move(steps));
  }

  Point start() const { return start_; }
  const std::vector<Step>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }

  Point end() const {
    Point p = start_;
    for (Step s : steps_) {
      (s == Step::E ? p.x : p.y) += 1;
    }
    return p;
  }

  std::vector<Point> vertices() const {
    std::vector<Point> out;
    out.reserve(steps_.size() + 1);
    Point p = start_;
    out.push_back(p);
    for (Step s : steps_) {
      (s == Step::E ? p.x : p.y) += 1;
      out.push_back(p);
    }
    return out;
  }

  std::string step_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) {
      out.push_back(static_cast<char>(s));
    }
    return out;
  }

  std::string to_string() const { return step_string() + "@" + polyomino::to_string(start_); }

  friend bool operator==(const MonotonePath&, const MonotonePath&) = default;
  friend auto operator<=>(const MonotonePath& a, const MonotonePath& b) {
    if (auto c = a.start_ <=> b.start_; c != 0) {
      return c;
    }
    return a.steps_ <=> b.steps_;
  }

 private:
  Point start_{};
  std::vector<Step> steps_;
};

inline std::ostream& operator<<(std::ostream& os, const MonotonePath& p) { return os << p.to_string(); }

struct PathPair {
  MonotonePath first;
  MonotonePath second;
  friend bool operator==(const PathPair&, const PathPair&) = default;
};

// Number of E/N paths from p to u.
inline BigCount path_count(Point p, Point u) {
  const int dx = u.x - p.x;
  const int dy = u.y - p.y;
  if (dx < 0 || dy < 0) {
    return 0;
  }
  return binomial(dx + dy, dx);
}

// Common vertices of two monotone paths. Vertices of a monotone path are
// strictly ordered by x+y, so a merge on that key suffices.
inline std::size_t intersection_count(const MonotonePath& a, const MonotonePath& b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t common = 0;
  while (i < va.size() && j < vb.size()) {
    const int da = va[i].x + va[i].y;
    const int db = vb[j].x + vb[j].y;
    if (da < db) {
      ++i;
    } else if (db < da) {
      ++j;
    } else {
      common += va[i] == vb[j];
      ++i;
      ++j;
    }
  }
  return common;
}

// Index pair (into a.vertices(), b.vertices()) of the common vertex with the
// smallest x+y.
inline std::optional<std::pair<std::size_t, std::size_t>> first_intersection(const MonotonePath& a,
                                                                             const MonotonePath& b) {
  const auto va = a.vertices();
  const auto vb = b.vertices();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < va.size() && j < vb.size()) {
    const int da = va[i].x + va[i].y;
    const int db = vb[j].x + vb[j].y;
    if (da < db) {
      ++i;
    } else if (db < da) {
      ++j;
    } else if (va[i] == vb[j]) {
      return std::pair{i, j};
    } else {
      ++i;
      ++j;
    }
  }
  return std::nullopt;
}

// Swaps the suffixes of the two paths after their first common vertex.
inline PathPair crossover_at_first_intersection(const PathPair& pair) {
  auto hit = first_intersection(pair.first, pair.second);
  if (!hit) {
    throw NoIntersection();
  }
  const auto [i, j] = *hit;
  const auto& sa = pair.first.steps();
  const auto& sb = pair.second.steps();
  std::vector<Step> first(sa.begin(), sa.begin() + static_cast<std::ptrdiff_t>(i));
  first.insert(first.end(), sb.begin() + static_cast<std::ptrdiff_t>(j), sb.end());
  std::vector<Step> second(sb.begin(), sb.begin() + static_cast<std::ptrdiff_t>(j));
  second.insert(second.end(), sa.begin() + static_cast<std::ptrdiff_t>(i), sa.end());
  return {MonotonePath(pair.first.start(), std::move(first)),
          MonotonePath(pair.second.start(), std::move(second))};
}

// Intersecting pairs p->u, q->v, assuming no non-intersecting pair p->v, q->u exists.
inline BigCount intersecting_pair_count(Point p, Point q, Point u, Point v) {
  return path_count(p, v) * path_count(q, u);
}

inline BigCount nonintersecting_pair_count(Point p, Point q, Point u, Point v) {
  return path_count(p, u) * path_count(q, v) - intersecting_pair_count(p, q, u, v);
}

// Calls visit(path) for every E/N path from p to u in lexicographic order
// (E before N). Nothing is visited for a negative displacement.
template <typename Visitor>
void for_each_path(Point p, Point u, Visitor&& visit) {
  const int dx = u.x - p.x;
  const int dy = u.y - p.y;
  if (dx < 0 || dy < 0) {
    return;
  }
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(dx + dy));
  std::function<void(int, int)> rec = [&](int east_left, int north_left) {
    if (east_left == 0 && north_left == 0) {
      visit(MonotonePath(p, steps));
      return;
    }
    if (east_left > 0) {
      steps.push_back(Step::E);
      rec(east_left - 1, north_left);
      steps.pop_back();
    }
    if (north_left > 0) {
      steps.push_back(Step::N);
      rec(east_left, north_left - 1);
      steps.pop_back();
    }
  };
  rec(dx, dy);
}

inline std::vector<MonotonePath> enumerate_paths(Point p, Point u) {
  std::vector<MonotonePath> out;
  for_each_path(p, u, [&](MonotonePath path) { out.push_back(std::move(path)); });
  return out;
}

}  // namespace polyomino
