#include <gtest/gtest.h>

#include <random>

#include "nearconv/generators.hpp"
#include "nearconv/knapsack.hpp"
#include "nearconv/oracles.hpp"

using namespace nearconv;

TEST(BruteKnapsack, Examples) {
  const KnapsackSolution s = oracle::brute_knapsack(KnapsackInstance{{{3, 2}, {4, 3}, {5, 4}}, 6});
  EXPECT_EQ(s.value, 8);
  EXPECT_EQ(s.chosen, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(oracle::brute_knapsack(KnapsackInstance{{{3, 2}, {4, 3}}, 0}).value, 0);
  EXPECT_EQ(oracle::brute_knapsack(KnapsackInstance{{{9, 4}}, 4}).value, 9);
  KnapsackInstance big;
  big.items.assign(25, Item{1, 1});
  EXPECT_THROW((void)oracle::brute_knapsack(big), std::invalid_argument);
}

TEST(BruteKnapsack, AgreesWithBellman) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    gen::InstanceSpec spec{1 + rng() % 16, 50, 30, static_cast<value_t>(1 + rng() % 150)};
    const KnapsackInstance inst = gen::instance(spec, rng());
    EXPECT_EQ(oracle::brute_knapsack(inst).value, bellman_dp(inst.items, inst.capacity, false).profit().at(inst.capacity));
  }
}

TEST(BruteBoxMinplus, Examples) {
  const PartialSeq h = oracle::brute_box_minplus(IntSeq({0, 3}), IntSeq({1, 1}));
  EXPECT_EQ(h.to_intseq(), IntSeq({1, 1, 4}));
  EXPECT_EQ(oracle::brute_box_minplus(IntSeq({2}, 4), IntSeq({5}, 1)).to_intseq(), IntSeq({7}, 5));
  EXPECT_EQ(oracle::box_sumset_size(IntSeq({0, 3}), IntSeq({1, 1})), 4U);
  const IntSeq wide(std::vector<value_t>(4096, 0));
  EXPECT_THROW((void)oracle::brute_box_minplus(wide, IntSeq(std::vector<value_t>(2048, 0))), std::invalid_argument);
}
