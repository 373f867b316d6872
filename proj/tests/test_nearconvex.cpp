#include <gtest/gtest.h>

#include <random>

#include "nearconv/generators.hpp"
#include "nearconv/nearconvex_minplus.hpp"
#include "nearconv/oracles.hpp"

using namespace nearconv;

namespace {

// Hull convolution by brute force over exact hull values.
std::vector<Rational> brute_hull_conv(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> h(a.size() + b.size() - 1);
  std::vector<bool> set(h.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Rational v = (a[i] + b[j]).reduced();
      if (!set[i + j] || v < h[i + j]) h[i + j] = v;
      set[i + j] = true;
    }
  return h;
}

}  // namespace

TEST(Relevant, WitnessPathIsRelevant) {
  const RelevanceContext ctx = RelevanceContext::build(IntSeq({3, 0, 4, 1}), IntSeq({2, 9, 0, 5}));
  for (index_t k = 0; k <= ctx.bh.path.last_diagonal(); ++k) {
    EXPECT_TRUE(relevant(ctx, ctx.bh.path[k], k - ctx.bh.path[k]));
  }
}

TEST(Relevant, FarCornerIsNotRelevant) {
  // Hulls of [0,0,100]: 0, 0, 100. bh(2) = 0 through (1,1); (2,0) sums to 100.
  const RelevanceContext ctx = RelevanceContext::build(IntSeq({0, 0, 100}), IntSeq({0, 0, 100}));
  EXPECT_EQ(ctx.delta, Rational(1));
  EXPECT_FALSE(relevant(ctx, 2, 0));
  EXPECT_FALSE(relevant(ctx, 0, 2));
  EXPECT_TRUE(relevant(ctx, 1, 1));
  EXPECT_TRUE(relevant(ctx, 2, 2));
}

TEST(Relevant, MatchesBruteForceTable) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 50; ++t) {
    const IntSeq f = gen::uniform_seq(1 + rng() % 24, -30, 30, rng());
    const IntSeq g = gen::uniform_seq(1 + rng() % 24, -30, 30, rng());
    const RelevanceContext ctx = RelevanceContext::build(f, g);
    const auto bh = brute_hull_conv(ctx.bf_values, ctx.bg_values);
    for (index_t i = 0; i <= ctx.n(); ++i)
      for (index_t j = 0; j <= ctx.m(); ++j) {
        const bool expect = ctx.bf_values[static_cast<std::size_t>(i)] + ctx.bg_values[static_cast<std::size_t>(j)] <=
                            bh[static_cast<std::size_t>(i + j)] + ctx.delta * 2;
        EXPECT_EQ(relevant(ctx, i, j), expect);
      }
  }
}

TEST(RecMinconv, BoxOutsideTheRelevantBandIsTop) {
  std::vector<value_t> a, b;
  for (value_t i = 0; i < 16; ++i) {
    a.push_back(i * i);
    b.push_back(10 * i * i);
  }
  auto [fp, gp, pad] = pad_to_common_pow2(IntSeq(a), IntSeq(b));
  const RelevanceContext ctx = RelevanceContext::build(fp, gp);
  NearConvexStats stats;
  NearConvexOptions opt;
  opt.stats = &stats;
  // bh(15) = 206 while f(7) + g(8) = 689.
  const PartialSeq h = rec_minconv(ctx, fp, gp, Box{{0, 7}, {8, 15}}, opt);
  EXPECT_TRUE(h.all_top());
  EXPECT_EQ(stats.cases[2], 1U);
  EXPECT_THROW((void)rec_minconv(ctx, fp, gp, Box{{1, 4}, {0, 3}}), std::invalid_argument);
}

TEST(MinplusNearconvex, Examples) {
  EXPECT_EQ(minplus_nearconvex(IntSeq({0, 1}), IntSeq({0, 2})), IntSeq({0, 1, 3}));
  EXPECT_EQ(maxplus_nearconcave(IntSeq({0, 1}), IntSeq({0, 2})), IntSeq({0, 2, 3}));
  EXPECT_EQ(minplus_nearconvex(IntSeq({4, 1}, 3), IntSeq({2}, 2)), IntSeq({6, 3}, 5));
}

TEST(MinplusNearconvex, ConvexPairsMatchHullConvolution) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 100; ++t) {
    const IntSeq f = gen::near_convex({1 + rng() % 200, 0, static_cast<value_t>(rng() % 300), 0}, rng());
    const IntSeq g = gen::near_convex({1 + rng() % 200, 0, static_cast<value_t>(rng() % 300), 0}, rng());
    const IntSeq h = minplus_nearconvex(f, g);
    const ConvexConv c = convex_minplus(lower_hull(f), lower_hull(g));
    for (std::size_t k = 0; k < h.size(); ++k) ASSERT_EQ(Rational(h[k]), c.values[k]);
  }
}

TEST(MinplusNearconvex, ArbitraryIntegersAreExact) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 500; ++t) {
    const IntSeq f = gen::uniform_seq(1 + rng() % 512, -1000000, 1000000, rng());
    const IntSeq g = gen::uniform_seq(1 + rng() % 512, -1000000, 1000000, rng());
    ASSERT_EQ(minplus_nearconvex(f, g), naive_minplus(f, g));
  }
}

TEST(MinplusNearconvex, NearConvexPairsAcrossKernels) {
  std::mt19937_64 rng(54);
  for (value_t delta : {1, 4, 16, 64}) {
    for (int t = 0; t < 6; ++t) {
      const std::size_t n = 1 + rng() % 4096;
      const IntSeq f = gen::near_convex({n, delta, static_cast<value_t>(rng() % 64), 0}, rng());
      const IntSeq g = gen::near_convex({n, delta, static_cast<value_t>(rng() % 64), 0}, rng());
      const IntSeq expect = naive_minplus(f, g);
      for (auto kernel : {SumsetKernel::Adaptive, SumsetKernel::Transform, SumsetKernel::Direct}) {
        NearConvexOptions opt;
        opt.kernel = kernel;
        ASSERT_EQ(minplus_nearconvex(f, g, opt), expect) << "delta=" << delta;
      }
    }
  }
}

TEST(MinplusNearconvex, LargeInputOnSampledDiagonals) {
  const std::size_t n = std::size_t{1} << 15;
  const IntSeq f = gen::near_convex({n, 16, 1024, 0}, 7);
  const IntSeq g = gen::near_convex({n, 16, 1024, 0}, 8);
  const IntSeq h = minplus_nearconvex(f, g);
  std::mt19937_64 rng(55);
  for (int s = 0; s < 200; ++s) {
    const std::size_t k = rng() % h.size();
    value_t best = std::numeric_limits<value_t>::max();
    for (std::size_t i = k >= n ? k - n + 1 : 0; i <= std::min(k, n - 1); ++i) best = std::min(best, f[i] + g[k - i]);
    ASSERT_EQ(h[k], best) << "k=" << k;
  }
}

TEST(MinplusNearconvex, NearConcaveMaxplus) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 100; ++t) {
    const IntSeq f = gen::near_concave({1 + rng() % 300, static_cast<value_t>(rng() % 20), 100, 0}, rng());
    const IntSeq g = gen::near_concave({1 + rng() % 300, static_cast<value_t>(rng() % 20), 100, 0}, rng());
    const IntSeq h = maxplus_nearconcave(f, g);
    ASSERT_EQ(h, naive_maxplus(f, g));
    EXPECT_LE(upper_hull_gap(h), max(upper_hull_gap(f), upper_hull_gap(g)));
  }
}

TEST(MinplusNearconvex, CountersAndWork) {
  std::mt19937_64 rng(57);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 2048;
    const value_t delta = static_cast<value_t>(rng() % 32);
    const IntSeq f = gen::near_convex({n, delta, 16, 0}, rng());
    const IntSeq g = gen::near_convex({n, delta, 16, 0}, rng());
    NearConvexStats stats;
    NearConvexOptions opt;
    opt.stats = &stats;
    opt.kernel = SumsetKernel::Transform;
    (void)minplus_nearconvex(f, g, opt);
    const auto [c3, c4] = stats.max_per_diagonal();
    EXPECT_LE(c3, 2U);
    EXPECT_LE(c4, 2U);
    // Sumset output stays within a constant times delta * N log N.
    const auto N = static_cast<double>(next_pow2_above(static_cast<index_t>(n) - 1));
    EXPECT_LE(static_cast<double>(stats.sumset_points), 16.0 * (std::max<value_t>(delta, 1) + 2) * N * (std::log2(N) + 1));
  }
}
