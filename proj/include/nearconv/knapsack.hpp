#ifndef NEARCONV_KNAPSACK_HPP
#define NEARCONV_KNAPSACK_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

#include "hull.hpp"
#include "nearconvex_minplus.hpp"
#include "rational.hpp"
#include "seq.hpp"
#include "types.hpp"

namespace nearconv {

struct Item {
  value_t profit = 0;
  value_t weight = 0;
  friend bool operator==(const Item&, const Item&) = default;
};

struct KnapsackInstance {
  std::vector<Item> items;
  value_t capacity = 0;

  [[nodiscard]] std::size_t n() const noexcept { return items.size(); }
  [[nodiscard]] value_t wmax() const noexcept {
    value_t m = 0;
    for (const auto& it : items) m = std::max(m, it.weight);
    return m;
  }
  [[nodiscard]] value_t pmax() const noexcept {
    value_t m = 0;
    for (const auto& it : items) m = std::max(m, it.profit);
    return m;
  }
  [[nodiscard]] value_t total_weight() const noexcept {
    value_t s = 0;
    for (const auto& it : items) s += it.weight;
    return s;
  }
  [[nodiscard]] value_t total_profit() const noexcept {
    value_t s = 0;
    for (const auto& it : items) s += it.profit;
    return s;
  }
};

// chosen holds sorted 0-based indices into the instance it was solved for.
struct KnapsackSolution {
  value_t value = 0;
  std::vector<std::size_t> chosen;
  value_t weight = 0;
};

// Recomputes value and weight of `chosen` from the instance.
inline KnapsackSolution make_solution(const KnapsackInstance& inst, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  KnapsackSolution s;
  for (std::size_t i : chosen) {
    s.value += inst.items.at(i).profit;
    s.weight += inst.items.at(i).weight;
  }
  s.chosen = std::move(chosen);
  return s;
}

inline bool is_feasible(const KnapsackInstance& inst, const KnapsackSolution& s) {
  if (!std::is_sorted(s.chosen.begin(), s.chosen.end())) return false;
  if (std::adjacent_find(s.chosen.begin(), s.chosen.end()) != s.chosen.end()) return false;
  value_t p = 0, w = 0;
  for (std::size_t i : s.chosen) {
    if (i >= inst.n()) return false;
    p += inst.items[i].profit;
    w += inst.items[i].weight;
  }
  return p == s.value && w == s.weight && w <= inst.capacity;
}

// ---------------------------------------------------------------------------
// Preprocessing

struct TrivialInstance {
  KnapsackSolution solution;  // indices into the raw instance
};

struct NormalizedInstance {
  KnapsackInstance instance;
  std::vector<std::size_t> original;  // normalized index -> raw index
};

using Preprocessed = std::variant<TrivialInstance, NormalizedInstance>;

inline Preprocessed preprocess(const KnapsackInstance& raw) {
  if (raw.items.empty()) throw input_error("preprocess: empty instance");
  if (raw.capacity < 0) throw input_error("preprocess: negative capacity");
  NormalizedInstance norm;
  norm.instance.capacity = raw.capacity;
  for (std::size_t i = 0; i < raw.n(); ++i) {
    if (raw.items[i].profit <= 0 || raw.items[i].weight <= 0) throw input_error("preprocess: profits and weights must be positive");
    if (raw.items[i].weight > raw.capacity) continue;
    norm.instance.items.push_back(raw.items[i]);
    norm.original.push_back(i);
  }
  if (norm.instance.total_weight() <= raw.capacity) return TrivialInstance{make_solution(raw, norm.original)};
  return norm;
}

// Maps a solution of the normalized instance back to raw indices.
inline KnapsackSolution lift(const KnapsackInstance& raw, const NormalizedInstance& norm, const KnapsackSolution& s) {
  std::vector<std::size_t> out;
  out.reserve(s.chosen.size());
  for (std::size_t i : s.chosen) out.push_back(norm.original[i]);
  return make_solution(raw, std::move(out));
}

// ---------------------------------------------------------------------------
// Dynamic programs with decision bits

namespace detail {

class DecisionBits {
 public:
  DecisionBits() = default;
  DecisionBits(std::size_t rows, std::size_t cols) : cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }
  [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }

 private:
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace detail

// Profit array P[0..jmax] of a fixed item list: P[i] is the best profit of a
// subset of weight at most i.
class BellmanTable {
 public:
  BellmanTable(const std::vector<Item>& items, index_t jmax, bool keep_decisions = true) : items_(items) {
    if (jmax < 0) throw std::invalid_argument("bellman_dp: negative bound");
    const auto len = static_cast<std::size_t>(jmax + 1);
    std::vector<value_t> p(len, 0);
    if (keep_decisions) bits_ = detail::DecisionBits(items.size(), len);
    for (std::size_t t = 0; t < items.size(); ++t) {
      const auto w = static_cast<std::size_t>(items[t].weight);
      const value_t pr = items[t].profit;
      for (std::size_t j = len; j-- > w;) {
        const value_t cand = p[j - w] + pr;
        if (cand > p[j]) {
          p[j] = cand;
          if (keep_decisions) bits_.set(t, j);
        }
      }
    }
    profit_ = IntSeq(std::move(p), 0);
  }

  [[nodiscard]] const IntSeq& profit() const noexcept { return profit_; }

  // Local item indices of a subset with weight <= j and profit P[j].
  [[nodiscard]] std::vector<std::size_t> reconstruct(index_t j) const {
    if (bits_.empty() && !items_.empty()) throw std::logic_error("bellman_dp: decisions were not kept");
    if (j < 0 || j > profit_.last()) throw std::out_of_range("bellman_dp: entry outside the table");
    std::vector<std::size_t> out;
    auto c = static_cast<std::size_t>(j);
    for (std::size_t t = items_.size(); t-- > 0;) {
      if (bits_.get(t, c)) {
        out.push_back(t);
        c -= static_cast<std::size_t>(items_[t].weight);
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Item> items_;
  IntSeq profit_;
  detail::DecisionBits bits_;
};

inline BellmanTable bellman_dp(const std::vector<Item>& items, index_t jmax, bool keep_decisions = true) {
  return BellmanTable(items, jmax, keep_decisions);
}

// Weight array Wt[0..jmax]: Wt[j] is the least weight of a subset with profit
// at least j. Profits beyond the total profit P are unreachable; their
// entries continue as Wt[P] + (j - P) * overflow_step so the array stays
// finite and every such entry exceeds any budget below overflow_step.
class MinWeightTable {
 public:
  MinWeightTable(const std::vector<Item>& items, index_t jmax, value_t overflow_step) : items_(items) {
    if (jmax < 0) throw std::invalid_argument("min_weight_dp: negative bound");
    const auto len = static_cast<std::size_t>(jmax + 1);
    constexpr value_t kInf = std::numeric_limits<value_t>::max() / 4;
    std::vector<value_t> w(len, kInf);
    w[0] = 0;
    bits_ = detail::DecisionBits(items.size(), len);
    value_t total = 0;
    for (std::size_t t = 0; t < items.size(); ++t) {
      const value_t pr = items[t].profit, wt = items[t].weight;
      total += pr;
      for (std::size_t j = len; j-- > 1;) {
        const std::size_t from = static_cast<index_t>(j) > pr ? j - static_cast<std::size_t>(pr) : 0;
        if (w[from] == kInf) continue;
        const value_t cand = w[from] + wt;
        if (cand < w[j]) {
          w[j] = cand;
          bits_.set(t, j);
        }
      }
    }
    reachable_ = std::min<index_t>(total, jmax);
    for (index_t j = reachable_ + 1; j <= jmax; ++j) {
      w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(reachable_)] + (j - reachable_) * overflow_step;
    }
    weight_ = IntSeq(std::move(w), 0);
  }

  [[nodiscard]] const IntSeq& weight() const noexcept { return weight_; }
  [[nodiscard]] index_t reachable() const noexcept { return reachable_; }

  // Local item indices of a subset with profit >= j and weight Wt[j].
  [[nodiscard]] std::vector<std::size_t> reconstruct(index_t j) const {
    if (j < 0 || j > reachable_) throw std::out_of_range("min_weight_dp: entry is not reachable");
    std::vector<std::size_t> out;
    auto c = static_cast<std::size_t>(j);
    for (std::size_t t = items_.size(); t-- > 0 && c > 0;) {
      if (bits_.get(t, c)) {
        out.push_back(t);
        const auto pr = static_cast<std::size_t>(items_[t].profit);
        c = c > pr ? c - pr : 0;
      }
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Item> items_;
  IntSeq weight_;
  index_t reachable_ = 0;
  detail::DecisionBits bits_;
};

// ---------------------------------------------------------------------------
// Parameter schedule

struct ScheduleParams {
  index_t q = 1;
  int log_q = 0;
  Rational delta{0};  // budget_scale * budget / q
  index_t eta = 11;
  value_t budget = 0;  // W, or the profit target in the symmetric run
  std::vector<IndexRange> levels;  // J^0 .. J^{log q}, clipped at `budget`
  std::vector<index_t> radius;  // ceil(sqrt(delta * 2^l))
};

struct UseFallback {};

using Schedule = std::variant<UseFallback, ScheduleParams>;

inline index_t eta_for(std::size_t n) {
  const double raw = 11.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 1)));
  return std::max<index_t>(11, static_cast<index_t>(std::ceil(raw - 1e-9)));
}

namespace detail {

// Smallest r >= 0 with r^2 * den >= num.
inline index_t ceil_sqrt_ratio(int128 num, int128 den) {
  auto r = static_cast<index_t>(std::sqrt(static_cast<long double>(num) / static_cast<long double>(den)));
  while (r > 0 && int128(r - 1) * (r - 1) * den >= num) --r;
  while (int128(r) * r * den < num) ++r;
  return r;
}

// Shared by both orientations: `scale` is the per-item bound on the budget
// axis (wmax for weights, pmax for profits) and `other` the per-item bound of
// the value axis.
inline Schedule make_schedule(std::size_t n, value_t budget, value_t scale, value_t other) {
  if (n == 0 || budget <= 0 || scale <= 0 || other <= 0) return UseFallback{};
  // q = 2^t with q^3 * other^2 * scale <= n^2 * budget and q * scale <= budget.
  const int128 lhs_unit = int128(other) * other * scale;
  const int128 rhs = int128(n) * int128(n) * budget;
  int t = 0;
  while (t < 40) {
    const int128 q_next = int128(1) << (t + 1);
    if (q_next * q_next * q_next > rhs / lhs_unit + 1) break;
    if (q_next * q_next * q_next * lhs_unit > rhs) break;
    if (q_next * scale > budget) break;
    ++t;
  }
  const index_t q = index_t{1} << t;
  if (q < 2) return UseFallback{};

  ScheduleParams p;
  p.q = q;
  p.log_q = t;
  p.budget = budget;
  p.delta = Rational(int128(scale) * budget, q).reduced();
  p.eta = eta_for(n);
  for (int l = 0; l <= t; ++l) {
    const index_t r = ceil_sqrt_ratio(int128(scale) * budget * (int128(1) << l), q);
    const Rational center(int128(budget) << l, q);
    const Rational half = Rational(int128(r) * p.eta);
    IndexRange J = IndexRange::from_bounds(center - half, center + half);
    // Entries above the budget never feed C[budget].
    J.hi = std::min<index_t>(J.hi, budget);
    J.lo = std::min(J.lo, J.hi);
    p.levels.push_back(J);
    p.radius.push_back(r);
  }
  return p;
}

template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t workers = std::min<std::size_t>(threads, count);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Schedule of the profit-indexed solver.
inline Schedule schedule(const KnapsackInstance& inst) {
  return detail::make_schedule(inst.n(), inst.capacity, inst.wmax(), inst.pmax());
}

// ---------------------------------------------------------------------------
// Greedy estimate

// floor of the fractional optimum: OPT <= result <= OPT + pmax.
inline value_t greedy_upper_bound(const KnapsackInstance& inst) {
  std::vector<std::size_t> order(inst.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return int128(inst.items[a].profit) * inst.items[b].weight > int128(inst.items[b].profit) * inst.items[a].weight;
  });
  value_t room = inst.capacity, value = 0;
  for (std::size_t i : order) {
    const Item& it = inst.items[i];
    if (it.weight <= room) {
      room -= it.weight;
      value += it.profit;
    } else {
      value += static_cast<value_t>(int128(room) * it.profit / it.weight);
      break;
    }
  }
  return value;
}

// ---------------------------------------------------------------------------
// Level tree

struct SolveOptions {
  unsigned threads = 1;
  bool keep_trace = false;
};

// Everything a run keeps: parameters, groups, base tables and every slice
// C^l_j restricted to J^l.
struct LevelTrace {
  bool fallback = true;
  ScheduleParams params;
  std::vector<std::vector<std::size_t>> groups;  // group -> normalized item indices
  std::vector<std::vector<IntSeq>> slices;       // level -> group -> slice over J^l
};

namespace detail {

// Restriction of s to r, clipped to the domain of s.
inline IntSeq restrict_to(const IntSeq& s, const IndexRange& r) {
  const index_t lo = std::max(r.lo, s.first());
  const index_t hi = std::min(r.hi, s.last());
  if (lo > hi) throw std::logic_error("level slice: empty restriction");
  return s.slice({lo, hi});
}

template <class Table>
struct TreeRun {
  std::vector<Table> base;
  LevelTrace trace;
};

// Builds the level tree. Base tables come from make_table(items, hi); levels
// combine through combine(a, b).
template <class Table, class MakeTable, class Values, class Combine>
TreeRun<Table> build_tree(const KnapsackInstance& inst, const ScheduleParams& params, std::uint64_t seed,
                          unsigned threads, MakeTable make_table, Values values_of, Combine combine) {
  TreeRun<Table> run;
  auto& tr = run.trace;
  tr.fallback = false;
  tr.params = params;
  tr.groups.assign(static_cast<std::size_t>(params.q), {});
  std::mt19937_64 rng(seed);
  const auto mask = static_cast<std::uint64_t>(params.q - 1);
  for (std::size_t i = 0; i < inst.n(); ++i) tr.groups[static_cast<std::size_t>(rng() & mask)].push_back(i);

  const IndexRange J0 = params.levels[0];
  std::vector<std::optional<Table>> tables(tr.groups.size());
  parallel_for(tr.groups.size(), threads, [&](std::size_t j) {
    std::vector<Item> items;
    items.reserve(tr.groups[j].size());
    for (std::size_t i : tr.groups[j]) items.push_back(inst.items[i]);
    tables[j].emplace(make_table(items, J0.hi));
  });
  tr.slices.assign(static_cast<std::size_t>(params.log_q + 1), {});
  tr.slices[0].reserve(tables.size());
  for (auto& t : tables) {
    tr.slices[0].push_back(values_of(*t).slice(J0));
    run.base.push_back(std::move(*t));
  }
  for (int l = 1; l <= params.log_q; ++l) {
    const auto& prev = tr.slices[static_cast<std::size_t>(l - 1)];
    auto& cur = tr.slices[static_cast<std::size_t>(l)];
    cur.assign(prev.size() / 2, IntSeq{});
    parallel_for(cur.size(), threads, [&](std::size_t j) {
      cur[j] = restrict_to(combine(prev[2 * j], prev[2 * j + 1]), params.levels[static_cast<std::size_t>(l)]);
    });
  }
  return run;
}

// Walks witnesses from (top level, group 0, index) down to level 0 and
// returns, per group, the base-table index to reconstruct.
inline std::vector<std::pair<std::size_t, index_t>> descend(const LevelTrace& tr, index_t index) {
  std::vector<std::pair<std::size_t, index_t>> nodes{{0, index}};
  for (int l = tr.params.log_q; l >= 1; --l) {
    const auto& parent = tr.slices[static_cast<std::size_t>(l)];
    const auto& child = tr.slices[static_cast<std::size_t>(l - 1)];
    std::vector<std::pair<std::size_t, index_t>> next;
    for (const auto& [j, k] : nodes) {
      const value_t target = parent[j].at(k);
      const IntSeq& a = child[2 * j];
      const IntSeq& b = child[2 * j + 1];
      bool found = false;
      for (index_t i = a.first(); i <= a.last() && !found; ++i) {
        const index_t r = k - i;
        if (r < b.first() || r > b.last()) continue;
        if (a.at(i) + b.at(r) == target) {
          next.emplace_back(2 * j, i);
          next.emplace_back(2 * j + 1, r);
          found = true;
        }
      }
      if (!found) throw std::logic_error("reconstruct: no witness for a level entry");
    }
    nodes = std::move(next);
  }
  return nodes;
}

}  // namespace detail

// Item set behind entry `index` of the top slice, given the base tables.
template <class Table>
std::vector<std::size_t> reconstruct(const LevelTrace& tr, const std::vector<Table>& base, index_t index) {
  std::vector<std::size_t> out;
  for (const auto& [j, i] : detail::descend(tr, index)) {
    for (std::size_t local : base[j].reconstruct(i)) out.push_back(tr.groups[j][local]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Solvers on normalized instances

inline KnapsackSolution solve_bellman_normalized(const KnapsackInstance& inst) {
  const BellmanTable t = bellman_dp(inst.items, inst.capacity);
  return make_solution(inst, t.reconstruct(inst.capacity));
}

// Profit-indexed randomized solver. The returned solution is always feasible
// and its value is the profit of the returned set.
inline KnapsackSolution solve_fast_normalized(const KnapsackInstance& inst, std::uint64_t seed, const SolveOptions& opt = {},
                                              LevelTrace* trace = nullptr) {
  const Schedule sch = schedule(inst);
  if (std::holds_alternative<UseFallback>(sch)) {
    if (trace != nullptr) *trace = LevelTrace{};
    return solve_bellman_normalized(inst);
  }
  const auto& params = std::get<ScheduleParams>(sch);
  auto run = detail::build_tree<BellmanTable>(
      inst, params, seed, opt.threads, [](const std::vector<Item>& items, index_t hi) { return BellmanTable(items, hi); },
      [](const BellmanTable& t) -> const IntSeq& { return t.profit(); },
      [](const IntSeq& a, const IntSeq& b) { return maxplus_nearconcave(a, b); });
  const index_t W = inst.capacity;
  auto sol = make_solution(inst, reconstruct(run.trace, run.base, W));
  if (sol.value != run.trace.slices.back()[0].at(W)) throw std::logic_error("solve_fast: reconstruction disagrees with C[W]");
  if (trace != nullptr) *trace = std::move(run.trace);
  return sol;
}

// Schedule of the weight-indexed solver: profits and weights trade places and
// the target profit estimate replaces the capacity.
inline Schedule symmetric_schedule(const KnapsackInstance& inst) {
  return detail::make_schedule(inst.n(), greedy_upper_bound(inst), inst.pmax(), inst.wmax());
}

inline KnapsackSolution solve_symmetric_normalized(const KnapsackInstance& inst, std::uint64_t seed,
                                                   const SolveOptions& opt = {}, LevelTrace* trace = nullptr) {
  const value_t W = inst.capacity;
  const value_t target = greedy_upper_bound(inst);
  const value_t step = W + 1;
  const Schedule sch = symmetric_schedule(inst);
  if (std::holds_alternative<UseFallback>(sch)) {
    if (trace != nullptr) *trace = LevelTrace{};
    const MinWeightTable t(inst.items, target, step);
    index_t best = 0;
    for (index_t j = target; j >= 0; --j) {
      if (t.weight().at(j) <= W) {
        best = j;
        break;
      }
    }
    return make_solution(inst, t.reconstruct(best));
  }
  const auto& params = std::get<ScheduleParams>(sch);
  auto run = detail::build_tree<MinWeightTable>(
      inst, params, seed, opt.threads,
      [step](const std::vector<Item>& items, index_t hi) { return MinWeightTable(items, hi, step); },
      [](const MinWeightTable& t) -> const IntSeq& { return t.weight(); },
      [](const IntSeq& a, const IntSeq& b) { return minplus_nearconvex(a, b); });
  const IntSeq& top = run.trace.slices.back()[0];
  KnapsackSolution sol;
  for (index_t i = top.last(); i >= top.first(); --i) {
    if (top.at(i) <= W) {
      sol = make_solution(inst, reconstruct(run.trace, run.base, i));
      break;
    }
  }
  if (sol.weight > W) throw std::logic_error("solve_symmetric: reconstruction exceeds the capacity");
  if (trace != nullptr) *trace = std::move(run.trace);
  return sol;
}

// ---------------------------------------------------------------------------
// Entry points on raw instances

enum class Algorithm { Bellman, Fast, Symmetric, Auto };

// Auto runs the solver whose bound is smaller: n wmax pmax^(2/3) against
// n pmax wmax^(2/3), i.e. fast iff wmax <= pmax.
inline Algorithm resolve_auto(const KnapsackInstance& inst) {
  return inst.wmax() <= inst.pmax() ? Algorithm::Fast : Algorithm::Symmetric;
}

inline KnapsackSolution solve(const KnapsackInstance& raw, Algorithm algo, std::uint64_t seed = 0,
                              const SolveOptions& opt = {}, LevelTrace* trace = nullptr) {
  const Preprocessed pre = preprocess(raw);
  if (const auto* triv = std::get_if<TrivialInstance>(&pre)) {
    if (trace != nullptr) *trace = LevelTrace{};
    return triv->solution;
  }
  const auto& norm = std::get<NormalizedInstance>(pre);
  const KnapsackInstance& inst = norm.instance;
  if (algo == Algorithm::Auto) algo = resolve_auto(inst);
  KnapsackSolution s;
  switch (algo) {
    case Algorithm::Bellman:
      if (trace != nullptr) *trace = LevelTrace{};
      s = solve_bellman_normalized(inst);
      break;
    case Algorithm::Fast:
      s = solve_fast_normalized(inst, seed, opt, trace);
      break;
    default:
      s = solve_symmetric_normalized(inst, seed, opt, trace);
      break;
  }
  return lift(raw, norm, s);
}

inline KnapsackSolution solve_bellman(const KnapsackInstance& raw) { return solve(raw, Algorithm::Bellman); }
inline KnapsackSolution solve_fast(const KnapsackInstance& raw, std::uint64_t seed, const SolveOptions& opt = {},
                                   LevelTrace* trace = nullptr) {
  return solve(raw, Algorithm::Fast, seed, opt, trace);
}
inline KnapsackSolution solve_symmetric(const KnapsackInstance& raw, std::uint64_t seed, const SolveOptions& opt = {},
                                        LevelTrace* trace = nullptr) {
  return solve(raw, Algorithm::Symmetric, seed, opt, trace);
}

}  // namespace nearconv

#endif  // NEARCONV_KNAPSACK_HPP
