#include <gtest/gtest.h>

#include <map>
#include <set>

#include "polyomino/bijection.hpp"
#include "polyomino/counting.hpp"
#include "polyomino/oracle.hpp"

using namespace polyomino;

namespace {

std::vector<std::pair<MonotonePath, MonotonePath>> all_pairs(int w, int h) {
  const auto paths = enumerate_paths({0, 0}, {w - 1, h - 1});
  std::vector<std::pair<MonotonePath, MonotonePath>> out;
  for (const auto& u : paths) {
    for (const auto& v : paths) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

// All +-1 sequences of the given length starting at `start`.
std::vector<std::vector<int>> all_walks(int start, int steps) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << steps); ++mask) {
    std::vector<int> values{start};
    for (int k = 0; k < steps; ++k) {
      values.push_back(values.back() + (((mask >> k) & 1u) != 0 ? 1 : -1));
    }
    out.push_back(std::move(values));
  }
  return out;
}

// Non-crossing pairs for a (w, h) box built directly from the invariants.
std::set<NoncrossingPair> all_noncrossing(int w, int h) {
  const int s = w + h;
  std::set<NoncrossingPair> out;
  const auto uppers = all_walks(1, s - 2);
  const auto lowers = all_walks(-1, s - 2);
  for (const auto& f : uppers) {
    for (const auto& g : lowers) {
      const int gap = f.back() - g.back();
      if ((gap - 2) % 4 != 0) {
        continue;
      }
      const int i = (gap - 2) / 4;
      if (f.back() != h - w + 1 + 2 * i || g.back() != h - w - 1 - 2 * i) {
        continue;
      }
      NoncrossingPair q{{f, g}, i};
      if (is_valid(q)) {
        out.insert(q);
      }
    }
  }
  return out;
}

}  // namespace

TEST(Untangle, NoncrossingInputIsFixed) {
  const StepFunctionPair p{{1, 2, 3, 2}, {-1, 0, 1, 0}};
  std::vector<int> marks;
  const auto q = untangle(p, &marks);
  EXPECT_TRUE(marks.empty());
  EXPECT_EQ(q.functions, p);
  EXPECT_EQ(q.shift, 0);
  EXPECT_EQ(retangle(q), p);
}

TEST(Untangle, SmallBoxIsBijective) {
  std::set<NoncrossingPair> images;
  for (const auto& [u, v] : all_pairs(2, 2)) {
    images.insert(untangle(to_step_functions(u, v)));
  }
  EXPECT_EQ(images.size(), 4u);
  EXPECT_EQ(images, all_noncrossing(2, 2));
}

TEST(Untangle, ExhaustiveBijectionOntoNoncrossingPairs) {
  for (int s = 2; s <= 9; ++s) {
    for (int w = 1; w < s; ++w) {
      const int h = s - w;
      std::set<NoncrossingPair> images;
      for (const auto& [u, v] : all_pairs(w, h)) {
        const auto p = to_step_functions(u, v);
        std::vector<int> marks;
        const auto q = untangle(p, &marks);
        ASSERT_TRUE(is_valid(q));
        EXPECT_EQ(static_cast<int>(marks.size()), q.shift);
        EXPECT_EQ(q.functions.upper.back(), h - w + 1 + 2 * q.shift);
        EXPECT_EQ(q.functions.lower.back(), h - w - 1 - 2 * q.shift);
        EXPECT_EQ(retangle(q), p);
        images.insert(q);
      }
      EXPECT_EQ(BigCount(images.size()), count(CountClass::Directed, w, h));
      const auto expected = all_noncrossing(w, h);
      EXPECT_EQ(images, expected) << w << "x" << h;
      for (const auto& q : expected) {
        EXPECT_EQ(untangle(retangle(q)), q);
      }
    }
  }
}

TEST(Retangle, RejectsBadEndpoints) {
  const StepFunctionPair p{{1, 2, 3}, {-1, 0, 1}};
  EXPECT_THROW(retangle({p, 1}), InvalidEndpoints);
  const StepFunctionPair gap_four{{1, 2, 3}, {-1, -2, -1}};
  EXPECT_THROW(retangle({gap_four, 0}), InvalidEndpoints);
  EXPECT_THROW(retangle({{{}, {}}, 0}), InvalidEndpoints);
}

TEST(Untangle, RejectsInvalidInput) {
  EXPECT_THROW(untangle({{1, 3}, {-1, 0}}), std::invalid_argument);
  EXPECT_THROW(untangle({{0, 1}, {-1, 0}}), std::invalid_argument);
}

TEST(MotzkinUntangle, BijectionWithSameClassSizes) {
  for (int s = 2; s <= 9; ++s) {
    for (int w = 1; w < s; ++w) {
      const int h = s - w;
      std::set<NoncrossingPair> images;
      std::map<int, int> by_shift;
      std::map<int, int> by_shift_right_to_left;
      for (const auto& [u, v] : all_pairs(w, h)) {
        const auto p = to_step_functions(u, v);
        const auto q = motzkin_untangle(p);
        ASSERT_TRUE(is_valid(q));
        EXPECT_EQ(motzkin_retangle(q), p);
        images.insert(q);
        ++by_shift[q.shift];
        ++by_shift_right_to_left[untangle(p).shift];
      }
      EXPECT_EQ(images, all_noncrossing(w, h));
      EXPECT_EQ(by_shift, by_shift_right_to_left);
    }
  }
}

TEST(MotzkinUntangle, NoncrossingInputIsFixed) {
  const StepFunctionPair p{{1, 2, 3}, {-1, 0, 1}};
  const auto q = motzkin_untangle(p);
  EXPECT_EQ(q.functions, p);
  EXPECT_EQ(q.shift, 0);
}

TEST(GrandMotzkin, Coding) {
  const StepFunctionPair up{{1, 2, 3, 4}, {-1, 0, 1, 2}};
  EXPECT_EQ(to_grand_motzkin(up).to_string(), "uuu");
  for (int s = 2; s <= 8; ++s) {
    for (int w = 1; w < s; ++w) {
      for (const auto& [u, v] : all_pairs(w, s - w)) {
        const auto p = to_step_functions(u, v);
        const auto m = to_grand_motzkin(p);
        EXPECT_EQ(from_grand_motzkin(m, 1, -1), p);
        EXPECT_EQ(m.count(MotzkinStep::Up), m.count(MotzkinStep::Down));
      }
    }
  }
  EXPECT_THROW(to_grand_motzkin({{1, 2}, {-1, -1}}), ParityError);
  EXPECT_THROW(to_grand_motzkin({{1, 2}, {-1}}), ParityError);
}

TEST(PairToDirected, UnitSquare) {
  const MonotonePath empty;
  const auto p = pair_to_directed(empty, empty, 1, 1);
  EXPECT_EQ(p.width(), 1);
  EXPECT_EQ(p.height(), 1);
  const auto back = directed_to_pair(p);
  EXPECT_EQ(back.first, empty);
  EXPECT_EQ(back.second, empty);
}

TEST(PairToDirected, SmallBoxes) {
  std::set<ConvexPolyomino> image;
  for (const auto& [u, v] : all_pairs(2, 2)) {
    image.insert(pair_to_directed(u, v, 2, 2));
  }
  const auto directed = enumerate_class(CountClass::Directed, 2, 2, {}, true).objects;
  EXPECT_EQ(image, std::set<ConvexPolyomino>(directed.begin(), directed.end()));

  image.clear();
  for (const auto& [u, v] : all_pairs(3, 2)) {
    image.insert(pair_to_directed(u, v, 3, 2));
  }
  EXPECT_EQ(image.size(), 9u);
}

TEST(PairToDirected, ExhaustiveBijection) {
  for (int s = 2; s <= 9; ++s) {
    for (int w = 1; w < s; ++w) {
      const int h = s - w;
      std::set<ConvexPolyomino> image;
      for (const auto& [u, v] : all_pairs(w, h)) {
        const auto p = pair_to_directed(u, v, w, h);
        ASSERT_TRUE(p.flags().directed);
        ASSERT_EQ(p.width(), w);
        ASSERT_EQ(p.height(), h);
        const auto back = directed_to_pair(p);
        EXPECT_EQ(back.first, u);
        EXPECT_EQ(back.second, v);
        image.insert(p);
      }
      const auto directed = enumerate_class(CountClass::Directed, w, h, {}, true).objects;
      EXPECT_EQ(image, std::set<ConvexPolyomino>(directed.begin(), directed.end())) << w << "x" << h;
      for (const auto& p : directed) {
        const auto pair = directed_to_pair(p);
        EXPECT_EQ(pair_to_directed(pair.first, pair.second, w, h), p);
      }
    }
  }
}

TEST(PairToDirected, RectangleComesFromAnExtremalPair) {
  const int w = 4, h = 3;
  const auto rect = ConvexPolyomino::validate(std::vector<Interval>(4, Interval{0, 3}), w, h);
  const auto pair = directed_to_pair(rect);
  // The boundary halves of a rectangle hug the W/N and S/E sides.
  EXPECT_EQ(pair.first.step_string(), "NNEEE");
  EXPECT_EQ(pair.second.step_string(), "EEENN");
  EXPECT_EQ(pair_to_directed(pair.first, pair.second, w, h), rect);
}

TEST(PairToDirected, RejectsBadInput) {
  EXPECT_THROW(pair_to_directed(MonotonePath::parse("E"), MonotonePath::parse("N"), 2, 2), std::invalid_argument);
  const auto not_directed = ConvexPolyomino::validate({{1, 2}, {0, 2}}, 2, 2);
  EXPECT_THROW(directed_to_pair(not_directed), NotDirected);
}

TEST(PairToDirected, TraceListsMarksRightToLeft) {
  for (const auto& [u, v] : all_pairs(3, 4)) {
    std::vector<int> marks;
    pair_to_directed(u, v, 3, 4, &marks);
    EXPECT_TRUE(std::is_sorted(marks.rbegin(), marks.rend()));
    EXPECT_EQ(static_cast<int>(marks.size()), untangle(to_step_functions(u, v)).shift);
  }
}

// Reflection and side-edge insertion neither create nor remove contacts:
// the assembled boundary is simple exactly when the two halves are disjoint.
TEST(AssembleBoundary, SimpleIffHalvesDisjoint) {
  for (int s = 2; s <= 8; ++s) {
    for (int w = 1; w < s; ++w) {
      const int h = s - w;
      for (int i = 0; i < std::min(w, h); ++i) {
        const auto uppers = enumerate_paths({0, 1}, {w - i - 1, h + i});
        const auto lowers = enumerate_paths({1, 0}, {w + i, h - i - 1});
        for (const auto& a : uppers) {
          for (const auto& b : lowers) {
            const auto walk = assemble_boundary(a, b, w, h);
            std::set<Point> seen(walk.begin(), walk.end() - 1);
            const bool simple = seen.size() == walk.size() - 1;
            EXPECT_EQ(simple, intersection_count(a, b) == 0) << a << " " << b;
          }
        }
      }
    }
  }
}
