#include <gtest/gtest.h>

#include <random>

#include "nearconv/generators.hpp"
#include "nearconv/knapsack.hpp"
#include "nearconv/oracles.hpp"

using namespace nearconv;

namespace {

KnapsackInstance small() { return KnapsackInstance{{{3, 2}, {4, 3}, {5, 4}}, 6}; }

KnapsackInstance random_instance(std::mt19937_64& rng, std::size_t n, value_t bound) {
  gen::InstanceSpec spec;
  spec.n = n;
  spec.pmax = gen::uniform(rng, 1, bound);
  spec.wmax = gen::uniform(rng, 1, bound);
  spec.capacity = gen::uniform(rng, 1, static_cast<value_t>(n) * spec.wmax / 2);
  return gen::instance(spec, rng());
}

}  // namespace

TEST(Preprocess, Examples) {
  const auto a = preprocess(KnapsackInstance{{{5, 100}}, 10});
  ASSERT_TRUE(std::holds_alternative<TrivialInstance>(a));
  EXPECT_EQ(std::get<TrivialInstance>(a).solution.value, 0);
  EXPECT_TRUE(std::get<TrivialInstance>(a).solution.chosen.empty());

  const auto b = preprocess(KnapsackInstance{{{3, 2}, {4, 3}}, 10});
  ASSERT_TRUE(std::holds_alternative<TrivialInstance>(b));
  EXPECT_EQ(std::get<TrivialInstance>(b).solution.value, 7);

  const auto c = preprocess(small());
  ASSERT_TRUE(std::holds_alternative<NormalizedInstance>(c));
  EXPECT_EQ(std::get<NormalizedInstance>(c).instance.n(), 3U);

  const auto d = preprocess(KnapsackInstance{{{1, 9}, {3, 2}, {4, 3}, {5, 4}}, 6});
  ASSERT_TRUE(std::holds_alternative<NormalizedInstance>(d));
  EXPECT_EQ(std::get<NormalizedInstance>(d).original, (std::vector<std::size_t>{1, 2, 3}));

  EXPECT_THROW((void)preprocess(KnapsackInstance{{}, 5}), input_error);
}

TEST(BellmanDp, Examples) {
  const BellmanTable t = bellman_dp(small().items, 6);
  EXPECT_EQ(t.profit(), IntSeq({0, 0, 3, 4, 5, 7, 8}));
  EXPECT_EQ(t.reconstruct(6), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(bellman_dp({}, 4).profit(), IntSeq({0, 0, 0, 0, 0}));
  EXPECT_EQ(bellman_dp({{7, 3}}, 5).profit(), IntSeq({0, 0, 0, 7, 7, 7}));
}

TEST(BellmanDp, EveryEntryReconstructs) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 50; ++t) {
    const KnapsackInstance inst = random_instance(rng, 1 + rng() % 16, 20);
    const BellmanTable tab = bellman_dp(inst.items, inst.capacity);
    for (index_t j = 0; j <= inst.capacity; ++j) {
      KnapsackInstance cut = inst;
      cut.capacity = j;
      EXPECT_EQ(tab.profit().at(j), oracle::brute_knapsack(cut).value);
      const KnapsackSolution s = make_solution(inst, tab.reconstruct(j));
      EXPECT_EQ(s.value, tab.profit().at(j));
      EXPECT_LE(s.weight, j);
    }
  }
}

TEST(MinWeightDp, MatchesDefinition) {
  const MinWeightTable t(small().items, 14, 7);
  // Profits 3,4,5: least weight reaching at least j.
  EXPECT_EQ(t.weight(), IntSeq({0, 2, 2, 2, 3, 4, 5, 5, 6, 7, 9, 9, 9, 16, 23}));
  EXPECT_EQ(t.reachable(), 12);
  const KnapsackSolution s = make_solution(small(), t.reconstruct(8));
  EXPECT_GE(s.value, 8);
  EXPECT_EQ(s.weight, 6);
  EXPECT_THROW((void)t.reconstruct(13), std::out_of_range);
}

TEST(Schedule, WorkedExample) {
  KnapsackInstance inst;
  for (int i = 0; i < 16; ++i) inst.items.push_back({i == 0 ? 4 : 1, 2});
  inst.capacity = 32;
  const Schedule s = schedule(inst);
  ASSERT_TRUE(std::holds_alternative<ScheduleParams>(s));
  const auto& p = std::get<ScheduleParams>(s);
  EXPECT_EQ(p.q, 4);
  EXPECT_EQ(p.delta, Rational(16));
  EXPECT_EQ(p.eta, 44);
  EXPECT_EQ(p.radius[0], 4);
  EXPECT_EQ(p.levels[0], IndexRange(0, 32));
  EXPECT_EQ(p.levels.size(), 3U);
}

TEST(Schedule, Fallbacks) {
  KnapsackInstance heavy{{{100, 2}, {1, 2}, {1, 2}, {1, 2}}, 8};
  EXPECT_TRUE(std::holds_alternative<UseFallback>(schedule(heavy)));
  KnapsackInstance single{{{1, 5}, {2, 5}, {3, 5}}, 5};
  EXPECT_TRUE(std::holds_alternative<UseFallback>(schedule(single)));
}

TEST(Schedule, EtaHasFloor) {
  EXPECT_EQ(eta_for(1), 11);
  EXPECT_EQ(eta_for(2), 11);
  EXPECT_EQ(eta_for(128), 77);
  EXPECT_EQ(eta_for(100), 74);
}

TEST(Greedy, Examples) {
  EXPECT_EQ(greedy_upper_bound(small()), 8);
  EXPECT_EQ(greedy_upper_bound(KnapsackInstance{{{4, 2}, {3, 3}}, 5}), 7);
}

TEST(Greedy, BracketsOptimum) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 200; ++t) {
    const KnapsackInstance inst = random_instance(rng, 1 + rng() % 40, 30);
    const value_t opt = bellman_dp(inst.items, inst.capacity, false).profit().at(inst.capacity);
    const value_t v = greedy_upper_bound(inst);
    EXPECT_LE(opt, v);
    EXPECT_LE(v, opt + inst.pmax());
  }
}

TEST(Solvers, SmallInstance) {
  for (auto algo : {Algorithm::Bellman, Algorithm::Fast, Algorithm::Symmetric, Algorithm::Auto}) {
    const KnapsackSolution s = solve(small(), algo, 1);
    EXPECT_EQ(s.value, 8);
    EXPECT_EQ(s.chosen, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(s.weight, 6);
  }
}

TEST(Solvers, IndicesReferToRawInstance) {
  const KnapsackInstance raw{{{9, 50}, {3, 2}, {4, 3}, {5, 4}}, 6};
  for (auto algo : {Algorithm::Bellman, Algorithm::Fast, Algorithm::Symmetric}) {
    EXPECT_EQ(solve(raw, algo, 3).chosen, (std::vector<std::size_t>{1, 3}));
  }
}

TEST(Solvers, AutoPicksByBound) {
  EXPECT_EQ(resolve_auto(KnapsackInstance{{{5, 3}}, 3}), Algorithm::Fast);
  EXPECT_EQ(resolve_auto(KnapsackInstance{{{5, 5}}, 5}), Algorithm::Fast);
  EXPECT_EQ(resolve_auto(KnapsackInstance{{{3, 5}}, 5}), Algorithm::Symmetric);
}

TEST(Solvers, SoundAndUsuallyOptimal) {
  std::mt19937_64 rng(63);
  int fast_opt = 0, sym_opt = 0;
  const int trials = 40;
  for (int t = 0; t < trials; ++t) {
    const KnapsackInstance inst = random_instance(rng, 64 + rng() % 65, 64);
    const value_t opt = solve_bellman(inst).value;
    LevelTrace trace;
    const KnapsackSolution f = solve_fast(inst, static_cast<std::uint64_t>(t), {}, &trace);
    ASSERT_TRUE(is_feasible(inst, f));
    EXPECT_LE(f.value, opt);
    fast_opt += f.value == opt;
    for (const auto& level : trace.slices) {
      for (const auto& slice : level) {
        for (std::size_t i = 1; i < slice.size(); ++i) EXPECT_LE(slice[i - 1], slice[i]);
        EXPECT_LE(upper_hull_gap(slice), Rational(inst.pmax()));
      }
    }
    const KnapsackSolution s = solve_symmetric(inst, static_cast<std::uint64_t>(t));
    ASSERT_TRUE(is_feasible(inst, s));
    EXPECT_LE(s.value, opt);
    sym_opt += s.value == opt;
  }
  EXPECT_GE(fast_opt * 100, trials * 95);
  EXPECT_GE(sym_opt * 100, trials * 95);
}

TEST(Solvers, TreeIsBuiltWhenScheduleAllows) {
  gen::InstanceSpec spec{512, 4, 4, 800};
  const KnapsackInstance inst = gen::instance(spec, 5);
  LevelTrace trace;
  const KnapsackSolution s = solve_fast(inst, 9, {}, &trace);
  EXPECT_FALSE(trace.fallback);
  EXPECT_GE(trace.params.q, 2);
  EXPECT_EQ(trace.slices.size(), static_cast<std::size_t>(trace.params.log_q + 1));
  EXPECT_EQ(s.value, solve_bellman(inst).value);
  std::size_t items = 0;
  for (const auto& g : trace.groups) items += g.size();
  EXPECT_EQ(items, inst.n());
}

TEST(Solvers, DeterministicAndThreadIndependent) {
  std::mt19937_64 rng(65);
  for (int t = 0; t < 10; ++t) {
    const KnapsackInstance inst = random_instance(rng, 200, 16);
    SolveOptions one, four;
    four.threads = 4;
    for (auto algo : {Algorithm::Fast, Algorithm::Symmetric}) {
      const auto a = solve(inst, algo, 77, one);
      const auto b = solve(inst, algo, 77, one);
      const auto c = solve(inst, algo, 77, four);
      EXPECT_EQ(a.chosen, b.chosen);
      EXPECT_EQ(a.chosen, c.chosen);
      EXPECT_EQ(a.value, c.value);
    }
  }
}
