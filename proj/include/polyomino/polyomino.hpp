#pragma once

// Convex polyominoes stored as one half-open row interval per column.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace polyomino {

// Rows lo .. hi-1 of one column.
struct Interval {
  int lo = 0;
  int hi = 0;
  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

class ValidationError : public std::invalid_argument {
 public:
  enum class Kind { BadInterval, BoxNotTight, NotConnected, NotConvex };

  ValidationError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct PolyominoFlags {
  bool directed = false;
  bool antidirected = false;
  bool parallelogram = false;
  friend bool operator==(const PolyominoFlags&, const PolyominoFlags&) = default;
};

enum class RenderFormat { Ascii, Svg };

class ConvexPolyomino {
 public:
  static ConvexPolyomino validate(std::vector<Interval> columns, int width, int height) {
    using Kind = ValidationError::Kind;
    if (width < 1 || height < 1 || static_cast<int>(columns.size()) != width) {
      throw ValidationError(Kind::BadInterval, "column count must equal width >= 1, height >= 1");
    }
    int min_lo = height;
    int max_hi = 0;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto [lo, hi] = columns[i];
      if (lo < 0 || hi > height || lo >= hi) {
        throw ValidationError(Kind::BadInterval, "column " + std::to_string(i) + " interval [" +
                                                     std::to_string(lo) + "," + std::to_string(hi) +
                                                     ") is empty or outside the box");
      }
      min_lo = std::min(min_lo, lo);
      max_hi = std::max(max_hi, hi);
    }
    if (min_lo != 0 || max_hi != height) {
      throw ValidationError(Kind::BoxNotTight, "cells do not reach both the bottom and top rows");
    }
    for (std::size_t i = 0; i + 1 < columns.size(); ++i) {
      if (std::max(columns[i].lo, columns[i + 1].lo) >= std::min(columns[i].hi, columns[i + 1].hi)) {
        throw ValidationError(Kind::NotConnected,
                              "columns " + std::to_string(i) + " and " + std::to_string(i + 1) +
                                  " share no edge");
      }
    }
    for (int row = 0; row < height; ++row) {
      int first = -1;
      int last = -1;
      int hits = 0;
      for (int i = 0; i < width; ++i) {
        if (columns[i].lo <= row && row < columns[i].hi) {
          if (first < 0) {
            first = i;
          }
          last = i;
          ++hits;
        }
      }
      if (hits != last - first + 1) {
        throw ValidationError(Kind::NotConvex, "row " + std::to_string(row) + " is not contiguous");
      }
    }
    return ConvexPolyomino(std::move(columns), width, height);
  }

  // Rebuilds the polyomino from a clockwise boundary walk (first vertex
  // repeated at the end). The walk must be exactly boundary_walk() of the result.
  static ConvexPolyomino from_boundary(const std::vector<Point>& walk) {
    if (walk.size() < 5 || walk.front() != walk.back()) {
      throw std::invalid_argument("boundary walk must be closed");
    }
    int width = 0;
    int height = 0;
    for (const Point& p : walk) {
      if (p.x < 0 || p.y < 0) {
        throw std::invalid_argument("boundary walk leaves the first quadrant");
      }
      width = std::max(width, p.x);
      height = std::max(height, p.y);
    }
    std::vector<Interval> columns(static_cast<std::size_t>(std::max(width, 1)), Interval{-1, -1});
    for (std::size_t t = 0; t + 1 < walk.size(); ++t) {
      const Point a = walk[t];
      const Point b = walk[t + 1];
      if (std::abs(a.x - b.x) + std::abs(a.y - b.y) != 1) {
        throw std::invalid_argument("boundary walk has a non-unit step");
      }
      if (a.y != b.y) {
        continue;
      }
      auto& col = columns[static_cast<std::size_t>(std::min(a.x, b.x))];
      (b.x > a.x ? col.hi : col.lo) = a.y;
    }
    auto p = validate(std::move(columns), width, height);
    if (p.boundary_walk() != walk) {
      throw std::invalid_argument("walk is not the canonical clockwise boundary of a convex polyomino");
    }
    return p;
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int semiperimeter() const { return width_ + height_; }
  const std::vector<Interval>& columns() const { return columns_; }

  bool contains(int column, int row) const {
    if (column < 0 || column >= width_) {
      return false;
    }
    const auto& c = columns_[static_cast<std::size_t>(column)];
    return c.lo <= row && row < c.hi;
  }

  // x of the leftmost bottom cell.
  int offset() const {
    for (int i = 0; i < width_; ++i) {
      if (columns_[static_cast<std::size_t>(i)].lo == 0) {
        return i;
      }
    }
    return 0;  // unreachable for a validated value
  }

  // Clockwise boundary from (offset(), 0), first step up; 2(w+h)+1 vertices.
  std::vector<Point> boundary_walk() const {
    // One outgoing directed edge per boundary vertex, interior on the right.
    std::map<Point, Point> next;
    for (int i = 0; i < width_; ++i) {
      for (int r = columns_[static_cast<std::size_t>(i)].lo; r < columns_[static_cast<std::size_t>(i)].hi;
           ++r) {
        if (!contains(i - 1, r)) {
          next[{i, r}] = {i, r + 1};
        }
        if (!contains(i, r + 1)) {
          next[{i, r + 1}] = {i + 1, r + 1};
        }
        if (!contains(i + 1, r)) {
          next[{i + 1, r + 1}] = {i + 1, r};
        }
        if (!contains(i, r - 1)) {
          next[{i + 1, r}] = {i, r};
        }
      }
    }
    const Point start{offset(), 0};
    std::vector<Point> walk{start};
    Point p = start;
    do {
      p = next.at(p);
      walk.push_back(p);
    } while (p != start);
    return walk;
  }

  PolyominoFlags flags() const {
    PolyominoFlags f;
    f.directed = columns_.front().lo == 0;
    f.antidirected = columns_.back().hi == height_;
    bool monotone = true;
    for (std::size_t i = 0; i + 1 < columns_.size(); ++i) {
      monotone = monotone && columns_[i].lo <= columns_[i + 1].lo && columns_[i].hi <= columns_[i + 1].hi;
    }
    f.parallelogram = f.directed && f.antidirected && monotone;
    return f;
  }

  std::string render(RenderFormat format) const {
    return format == RenderFormat::Ascii ? render_ascii() : render_svg();
  }

  friend bool operator==(const ConvexPolyomino&, const ConvexPolyomino&) = default;
  friend auto operator<=>(const ConvexPolyomino& a, const ConvexPolyomino& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) {
      return c;
    }
    if (auto c = a.height_ <=> b.height_; c != 0) {
      return c;
    }
    return a.columns_ <=> b.columns_;
  }

 private:
  ConvexPolyomino(std::vector<Interval> columns, int width, int height)
      : columns_(std::move(columns)), width_(width), height_(height) {}

  std::string render_ascii() const {
    std::string out;
    for (int r = height_ - 1; r >= 0; --r) {
      for (int i = 0; i < width_; ++i) {
        out.push_back(contains(i, r) ? '#' : '.');
      }
      if (r > 0) {
        out.push_back('\n');
      }
    }
    return out;
  }

  std::string render_svg() const {
    constexpr int kCell = 16;
    constexpr int kMargin = 2;
    const int w = width_ * kCell + 2 * kMargin;
    const int h = height_ * kCell + 2 * kMargin;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << width_ * kCell
       << "\" height=\"" << height_ * kCell << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"2,2\"/>\n";
    for (int i = 0; i < width_; ++i) {
      for (int r = columns_[static_cast<std::size_t>(i)].lo; r < columns_[static_cast<std::size_t>(i)].hi;
           ++r) {
        os << "  <rect x=\"" << kMargin + i * kCell << "\" y=\"" << kMargin + (height_ - 1 - r) * kCell
           << "\" width=\"" << kCell << "\" height=\"" << kCell
           << "\" fill=\"#4a7ebb\" stroke=\"#1f3d66\"/>\n";
      }
    }
    os << "</svg>\n";
    return os.str();
  }

  std::vector<Interval> columns_;
  int width_ = 1;
  int height_ = 1;
};

}  // namespace polyomino
