#ifndef NEARCONV_ORACLES_HPP
#define NEARCONV_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knapsack.hpp"
#include "seq.hpp"
#include "types.hpp"

// Brute-force references. They use plain loops over raw values and share no
// code with the solvers beyond the basic containers.
namespace nearconv::oracle {

inline constexpr std::size_t kMaxBruteItems = 24;
inline constexpr std::size_t kMaxBoxPairs = std::size_t{1} << 22;

// Exact optimum by enumerating every subset; ties keep the first mask found.
inline KnapsackSolution brute_knapsack(const KnapsackInstance& inst) {
  const std::size_t n = inst.items.size();
  if (n > kMaxBruteItems) throw std::invalid_argument("brute_knapsack: more than 24 items");
  std::uint32_t best_mask = 0;
  std::int64_t best_value = 0, best_weight = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::int64_t p = 0, w = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        p += inst.items[i].profit;
        w += inst.items[i].weight;
      }
    }
    if (w <= inst.capacity && p > best_value) {
      best_value = p;
      best_weight = w;
      best_mask = mask;
    }
  }
  KnapsackSolution s;
  s.value = best_value;
  s.weight = best_weight;
  for (std::size_t i = 0; i < n; ++i) {
    if (best_mask >> i & 1U) s.chosen.push_back(i);
  }
  return s;
}

// Per-diagonal minimum over the box I x J by a double loop.
inline PartialSeq brute_box_minplus(const IntSeq& f, const IntSeq& g) {
  if (f.size() * g.size() > kMaxBoxPairs) throw std::invalid_argument("brute_box_minplus: box exceeds 2^22 pairs");
  const std::size_t len = f.size() + g.size() - 1;
  std::vector<std::optional<std::int64_t>> h(len);
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      const std::int64_t v = f.values()[a] + g.values()[b];
      auto& slot = h[a + b];
      if (!slot || v < *slot) slot = v;
    }
  }
  return PartialSeq(f.offset() + g.offset(), std::move(h));
}

// Number of distinct points (i + j, f(i) + g(j)) over the box.
inline std::size_t box_sumset_size(const IntSeq& f, const IntSeq& g) {
  if (f.size() * g.size() > kMaxBoxPairs) throw std::invalid_argument("box_sumset_size: box exceeds 2^22 pairs");
  std::size_t count = 0;
  std::vector<std::int64_t> sums;
  for (std::size_t k = 0; k + 1 < f.size() + g.size(); ++k) {
    sums.clear();
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (k < a || k - a >= g.size()) continue;
      sums.push_back(f.values()[a] + g.values()[k - a]);
    }
    std::sort(sums.begin(), sums.end());
    count += static_cast<std::size_t>(std::unique(sums.begin(), sums.end()) - sums.begin());
  }
  return count;
}

}  // namespace nearconv::oracle

#endif  // NEARCONV_ORACLES_HPP
