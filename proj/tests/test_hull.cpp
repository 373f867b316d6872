#include <gtest/gtest.h>

#include <random>

#include "nearconv/generators.hpp"
#include "nearconv/hull.hpp"

using namespace nearconv;

TEST(LowerHull, TwoSegmentExample) {
  const HullApprox h = lower_hull(IntSeq({0, 5, 1}));
  ASSERT_EQ(h.breakpoints.size(), 2U);
  EXPECT_EQ(h.breakpoints[0], (HullPoint{0, 0}));
  EXPECT_EQ(h.breakpoints[1], (HullPoint{2, 1}));
  EXPECT_EQ(eval_hull(h, 1), Rational(1, 2));
  EXPECT_EQ(h.raw_gap, Rational(9, 2));
  EXPECT_EQ(h.delta, Rational(9, 2));
}

TEST(LowerHull, ConvexInputIsItsOwnHull) {
  const IntSeq f({3, 1, 0, 2, 7});
  const HullApprox h = lower_hull(f);
  EXPECT_EQ(h.breakpoints.size(), 5U);
  EXPECT_EQ(h.raw_gap, Rational(0));
  EXPECT_EQ(h.delta, Rational(1));
  for (index_t i = 0; i < 5; ++i) EXPECT_EQ(eval_hull(h, i), Rational(f[static_cast<std::size_t>(i)]));
}

TEST(LowerHull, CollinearPointsDropped) {
  const HullApprox h = lower_hull(IntSeq({0, 1, 2, 3}, 4));
  EXPECT_EQ(h.breakpoints.size(), 2U);
  EXPECT_EQ(eval_hull(h, 6), Rational(2));
  EXPECT_THROW((void)eval_hull(h, 3), std::out_of_range);
}

TEST(LowerHull, RandomSandwichAndConvexity) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 500; ++t) {
    const IntSeq f = gen::uniform_seq(1 + rng() % 128, -1000, 1000, rng());
    const HullApprox h = lower_hull(f);
    const auto& bp = h.breakpoints;
    for (std::size_t s = 0; s + 2 < bp.size(); ++s) {
      // Slopes strictly increase.
      const int128 l = int128(bp[s + 1].value - bp[s].value) * (bp[s + 2].index - bp[s + 1].index);
      const int128 r = int128(bp[s + 2].value - bp[s + 1].value) * (bp[s + 1].index - bp[s].index);
      EXPECT_LT(l, r);
    }
    Rational gap{0};
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Rational v = eval_hull(h, static_cast<index_t>(i));
      EXPECT_LE(v, Rational(f[i]));
      gap = max(gap, Rational(f[i]) - v);
    }
    EXPECT_EQ(gap, h.raw_gap);
    // No input point lies strictly below any hull segment.
    for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
      for (std::size_t i = 0; i < f.size(); ++i) {
        const int128 c = int128(bp[s + 1].index - bp[s].index) * (f[i] - bp[s].value) -
                         int128(bp[s + 1].value - bp[s].value) * (static_cast<index_t>(i) - bp[s].index);
        EXPECT_GE(c, 0);
      }
    }
  }
}

TEST(LowerHull, BreakpointsAreMaximal) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 100; ++t) {
    const IntSeq f = gen::uniform_seq(3 + rng() % 20, -50, 50, rng());
    const HullApprox h = lower_hull(f);
    for (std::size_t drop = 1; drop + 1 < h.breakpoints.size(); ++drop) {
      const HullPoint a = h.breakpoints[drop - 1], b = h.breakpoints[drop + 1], p = h.breakpoints[drop];
      // Without p the chord a-b passes strictly above p.
      const int128 chord = int128(a.value) * (b.index - p.index) + int128(b.value) * (p.index - a.index);
      EXPECT_GT(chord, int128(p.value) * (b.index - a.index));
    }
  }
}

TEST(HullValues, MatchEval) {
  const IntSeq f({5, 2, 8, 1, 1, 9}, 2);
  const HullApprox h = lower_hull(f);
  const auto v = hull_values(h);
  ASSERT_EQ(v.size(), f.size());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], eval_hull(h, 2 + static_cast<index_t>(i)));
}

TEST(UpperHullGap, Examples) {
  EXPECT_EQ(upper_hull_gap(IntSeq({0, 4, 6, 7})), Rational(0));
  EXPECT_EQ(upper_hull_gap(IntSeq({0, -5, -1})), Rational(9, 2));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const IntSeq f = gen::uniform_seq(1 + rng() % 60, -100, 100, rng());
    EXPECT_EQ(upper_hull_gap(f), lower_hull(negate(f)).raw_gap);
  }
}
