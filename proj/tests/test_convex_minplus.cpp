#include <gtest/gtest.h>

#include <random>

#include "nearconv/convex_minplus.hpp"
#include "nearconv/generators.hpp"

using namespace nearconv;

TEST(ConvexMinplus, LinearInputsTieToSmallestIndex) {
  const ConvexConv c = convex_minplus(lower_hull(IntSeq({0, 1, 2})), lower_hull(IntSeq({0, 1, 2})));
  const std::vector<index_t> expect{0, 0, 0, 1, 2};
  EXPECT_EQ(c.path.witnesses, expect);
  for (index_t k = 0; k <= 4; ++k) EXPECT_EQ(c.values[static_cast<std::size_t>(k)], Rational(k));
}

TEST(ConvexMinplus, SingletonShifts) {
  const IntSeq f({4, 1, 0, 2});
  const ConvexConv c = convex_minplus(lower_hull(f), lower_hull(IntSeq({7})));
  for (std::size_t k = 0; k < f.size(); ++k) {
    EXPECT_EQ(c.values[k], Rational(f[k] + 7));
    EXPECT_EQ(c.path[static_cast<index_t>(k)], static_cast<index_t>(k));
  }
}

TEST(ConvexMinplus, RandomConvexPairsAgreeWithMinimalWitnesses) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const IntSeq f = gen::near_convex({1 + rng() % 256, 0, static_cast<value_t>(rng() % 500), 0}, rng());
    const IntSeq g = gen::near_convex({1 + rng() % 256, 0, static_cast<value_t>(rng() % 500), 0}, rng());
    const ConvexConv c = convex_minplus(lower_hull(f), lower_hull(g));
    const IntSeq h = naive_minplus(f, g);
    ASSERT_EQ(c.values.size(), h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
      ASSERT_EQ(c.values[k], Rational(h[k]));
      std::size_t first = 0;
      while (first >= f.size() || k < first || k - first >= g.size() || f[first] + g[k - first] != h[k]) ++first;
      ASSERT_EQ(c.path[static_cast<index_t>(k)], static_cast<index_t>(first));
    }
    for (index_t k = 1; k <= c.path.last_diagonal(); ++k) {
      const index_t step = c.path[k] - c.path[k - 1];
      EXPECT_TRUE(step == 0 || step == 1);
    }
    for (std::size_t k = 1; k + 1 < c.values.size(); ++k) {
      EXPECT_GE(c.values[k - 1] + c.values[k + 1], c.values[k] * 2);
    }
  }
}

TEST(PathPosition, Definitions) {
  const ConvexConv c = convex_minplus(lower_hull(IntSeq({0, 1, 2})), lower_hull(IntSeq({0, 1, 2})));
  EXPECT_EQ(path_position(c.path, 1, 2), PathSide::On);
  EXPECT_EQ(path_position(c.path, 2, 1), PathSide::Above);
  EXPECT_EQ(path_position(c.path, 0, 4), PathSide::Below);
  EXPECT_THROW((void)path_position(c.path, 3, 2), std::out_of_range);
}
