#pragma once

// S-walks: shortest closed grid walks spanning a w x h rectangle, coded as a
// {V,H} word plus the start offset a. Step signs are not recorded; the walk
// reverses horizontally at x = 0 / x = w and vertically at y = h / y = 0, and
// on first arrival at each side one uncoded step is taken along that side.

#include <array>
#include <cstdio>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polyomino.hpp"

namespace polyomino {

class MalformedCode : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnSWalk : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SelfIntersecting : public std::invalid_argument {
 public:
  SelfIntersecting() : std::invalid_argument("walk intersects itself") {}
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SWalkCode {
  int width = 1;
  int height = 1;
  int offset = 0;       // a: x of the start point (a, 0)
  std::string symbols;  // over {'V', 'H'}

  int semiperimeter() const { return width + height; }

  // Empty when the invariants hold, otherwise the reason.
  std::string invariant_violation() const {
    if (width < 1 || height < 1) {
      return "width and height must be >= 1";
    }
    if (offset < 0 || offset > width - 1) {
      return "offset must lie in [0, width-1]";
    }
    std::size_t horizontal = 0;
    for (char c : symbols) {
      if (c != 'V' && c != 'H') {
        return std::string("symbol '") + c + "' is not V or H";
      }
      horizontal += c == 'H';
    }
    const std::size_t vertical = symbols.size() - horizontal;
    const long want_h = 2L * width - 2;
    const long want_v = offset == 0 ? 2L * height - 2 : 2L * height - 3;
    if (static_cast<long>(horizontal) != want_h || static_cast<long>(vertical) != want_v) {
      return "expected " + std::to_string(want_h) + " H and " + std::to_string(want_v) + " V, got " +
             std::to_string(horizontal) + " H and " + std::to_string(vertical) + " V";
    }
    return {};
  }

  bool valid() const { return invariant_violation().empty(); }

  // "w=4 h=4 a=2 VHHVHVVHHVH"
  std::string to_string() const {
    std::string out = "w=" + std::to_string(width) + " h=" + std::to_string(height) +
                      " a=" + std::to_string(offset);
    if (!symbols.empty()) {
      out += " " + symbols;
    }
    return out;
  }

  static SWalkCode parse(std::string_view text) {
    SWalkCode code;
    char buffer[4096] = {0};
    std::string owned(text);
    const int n = std::sscanf(owned.c_str(), " w=%d h=%d a=%d %4095s", &code.width, &code.height,
                              &code.offset, buffer);
    if (n < 3) {
      throw MalformedCode("expected 'w=<int> h=<int> a=<int> [symbols]': " + owned);
    }
    code.symbols = n == 4 ? buffer : "";
    if (auto why = code.invariant_violation(); !why.empty()) {
      throw MalformedCode(why);
    }
    return code;
  }

  friend bool operator==(const SWalkCode&, const SWalkCode&) = default;
  friend auto operator<=>(const SWalkCode&, const SWalkCode&) = default;
};

struct ClosedWalk {
  int width = 1;
  int height = 1;
  std::vector<Point> vertices;  // first == last

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
  friend auto operator<=>(const ClosedWalk& a, const ClosedWalk& b) {
    if (auto c = a.width <=> b.width; c != 0) {
      return c;
    }
    if (auto c = a.height <=> b.height; c != 0) {
      return c;
    }
    return a.vertices <=> b.vertices;
  }
};

enum class SideOrder { SWNE, SNWE, SWEN };

inline std::string_view name(SideOrder order) {
  switch (order) {
    case SideOrder::SWNE: return "SWNE";
    case SideOrder::SNWE: return "SNWE";
    case SideOrder::SWEN: return "SWEN";
  }
  return "?";
}

namespace detail {

enum Side { kSouth = 0, kWest = 1, kNorth = 2, kEast = 3 };

// Shared sign/contact bookkeeping of decode and encode.
class WalkTracer {
 public:
  WalkTracer(int width, int height, int offset)
      : width_(width), height_(height), at_{offset, 0}, dx_(offset == 0 ? 1 : -1) {
    // With a = 0 the initial up-step is the W-side edge.
    touched_[kWest] = offset == 0;
  }

  Point position() const { return at_; }
  Point horizontal() const { return {dx_, 0}; }
  Point vertical() const { return {0, dy_}; }
  bool all_sides_touched() const { return touched_[0] && touched_[1] && touched_[2] && touched_[3]; }

  bool move(Point delta) {
    at_ = at_ + delta;
    return 0 <= at_.x && at_.x <= width_ && 0 <= at_.y && at_.y <= height_;
  }

  // If the current position is a first contact with some side, flips the
  // corresponding sign and returns the implicit step to take along that side.
  std::optional<Point> implicit_step() {
    if (at_.x == 0 && !touched_[kWest]) {
      touched_[kWest] = true;
      dx_ = 1;
      return vertical();
    }
    if (at_.y == height_ && !touched_[kNorth]) {
      touched_[kNorth] = true;
      dy_ = -1;
      return horizontal();
    }
    if (at_.x == width_ && !touched_[kEast]) {
      touched_[kEast] = true;
      dx_ = -1;
      return vertical();
    }
    if (at_.y == 0 && !touched_[kSouth]) {
      touched_[kSouth] = true;
      dy_ = 1;
      return horizontal();
    }
    return std::nullopt;
  }

 private:
  int width_;
  int height_;
  Point at_;
  int dx_;
  int dy_ = 1;
  std::array<bool, 4> touched_{};
};

}  // namespace detail

inline ClosedWalk decode(const SWalkCode& code) {
  if (auto why = code.invariant_violation(); !why.empty()) {
    throw MalformedCode(why);
  }
  detail::WalkTracer tracer(code.width, code.height, code.offset);
  ClosedWalk walk{code.width, code.height, {tracer.position()}};
  walk.vertices.reserve(2 * static_cast<std::size_t>(code.semiperimeter()) + 1);
  auto take = [&](Point delta) {
    if (!tracer.move(delta)) {
      throw InternalError("decode left the rectangle for " + code.to_string());
    }
    walk.vertices.push_back(tracer.position());
    while (auto extra = tracer.implicit_step()) {
      if (!tracer.move(*extra)) {
        throw InternalError("implicit step left the rectangle for " + code.to_string());
      }
      walk.vertices.push_back(tracer.position());
    }
  };
  take({0, 1});
  for (char c : code.symbols) {
    take(c == 'H' ? tracer.horizontal() : tracer.vertical());
  }
  if (walk.vertices.back() != walk.vertices.front() || !tracer.all_sides_touched() ||
      walk.length() != 2 * static_cast<std::size_t>(code.semiperimeter())) {
    throw InternalError("decoded walk does not close for " + code.to_string());
  }
  return walk;
}

inline SWalkCode encode(const ClosedWalk& walk) {
  const auto& v = walk.vertices;
  if (walk.width < 1 || walk.height < 1 || v.size() < 5 || v.front() != v.back()) {
    throw NotAnSWalk("walk must be closed inside a rectangle of positive size");
  }
  if (v.size() != 2 * static_cast<std::size_t>(walk.width + walk.height) + 1) {
    throw NotAnSWalk("walk length differs from the rectangle perimeter");
  }
  const Point start = v.front();
  if (start.y != 0 || start.x < 0 || start.x >= walk.width || v[1] != Point{start.x, 1}) {
    throw NotAnSWalk("walk must start on the S-side with an up-step");
  }
  detail::WalkTracer tracer(walk.width, walk.height, start.x);
  SWalkCode code{walk.width, walk.height, start.x, {}};
  std::size_t t = 0;
  auto expect = [&](Point delta) {
    if (v[t + 1] - v[t] != delta || !tracer.move(delta)) {
      throw NotAnSWalk("step " + std::to_string(t) + " is inconsistent with an S-walk");
    }
    ++t;
  };
  auto settle = [&] {
    while (auto extra = tracer.implicit_step()) {
      if (t + 1 >= v.size()) {
        throw NotAnSWalk("walk ends before its implicit side step");
      }
      expect(*extra);
    }
  };
  expect({0, 1});
  settle();
  while (t + 1 < v.size()) {
    const Point delta = v[t + 1] - v[t];
    const bool horizontal = delta.y == 0;
    code.symbols.push_back(horizontal ? 'H' : 'V');
    expect(horizontal ? tracer.horizontal() : tracer.vertical());
    settle();
  }
  if (!tracer.all_sides_touched()) {
    throw NotAnSWalk("walk does not span its rectangle");
  }
  if (auto why = code.invariant_violation(); !why.empty()) {
    throw NotAnSWalk(why);
  }
  return code;
}

// Order in which W, N and E are first reached after leaving the S-side.
inline SideOrder classify(const ClosedWalk& walk) {
  std::size_t first_w = walk.vertices.size();
  std::size_t first_n = first_w;
  std::size_t first_e = first_w;
  for (std::size_t t = walk.vertices.size(); t-- > 0;) {
    const Point p = walk.vertices[t];
    if (t + 1 == walk.vertices.size()) {
      continue;
    }
    if (p.x == 0) {
      first_w = t;
    }
    if (p.y == walk.height) {
      first_n = t;
    }
    if (p.x == walk.width) {
      first_e = t;
    }
  }
  if (first_n < first_w) {
    return SideOrder::SNWE;
  }
  if (first_e < first_n) {
    return SideOrder::SWEN;
  }
  return SideOrder::SWNE;
}

inline bool self_intersects(const ClosedWalk& walk) {
  std::set<Point> seen;
  for (std::size_t t = 0; t + 1 < walk.vertices.size(); ++t) {
    if (!seen.insert(walk.vertices[t]).second) {
      return true;
    }
  }
  return false;
}

inline ConvexPolyomino to_polyomino(const ClosedWalk& walk) {
  if (self_intersects(walk)) {
    throw SelfIntersecting();
  }
  return ConvexPolyomino::from_boundary(walk.vertices);
}

inline ClosedWalk boundary_as_walk(const ConvexPolyomino& p) {
  return {p.width(), p.height(), p.boundary_walk()};
}

}  // namespace polyomino
