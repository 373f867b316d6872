#ifndef NEARCONV_GENERATORS_HPP
#define NEARCONV_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "knapsack.hpp"
#include "seq.hpp"
#include "types.hpp"

namespace nearconv::gen {

// Uniform integer in [lo, hi] by rejection on mt19937_64 output, so a seed
// produces the same stream with every standard library.
inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(rng());
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

struct InstanceSpec {
  std::size_t n = 128;
  value_t pmax = 64;
  value_t wmax = 64;
  value_t capacity = 0;  // 0 picks n * wmax / 4
};

inline KnapsackInstance instance(const InstanceSpec& spec, std::uint64_t seed) {
  if (spec.n == 0 || spec.pmax < 1 || spec.wmax < 1 || spec.capacity < 0) throw input_error("gen instance: invalid bounds");
  if (spec.pmax > kValueBound || spec.wmax > kValueBound || spec.capacity > kValueBound) {
    throw input_error("gen instance: bounds exceed 2^40");
  }
  std::mt19937_64 rng(seed);
  KnapsackInstance inst;
  inst.items.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    const value_t p = uniform(rng, 1, spec.pmax);
    const value_t w = uniform(rng, 1, spec.wmax);
    inst.items.push_back({p, w});
  }
  inst.capacity = spec.capacity > 0 ? spec.capacity : std::max<value_t>(1, static_cast<value_t>(spec.n) * spec.wmax / 4);
  return inst;
}

struct SeqSpec {
  std::size_t length = 1024;
  value_t delta = 4;
  value_t max_slope = 1024;
  index_t offset = 0;
};

// Convex base from sorted random slopes in [-max_slope, max_slope], prefix
// summed from 0, plus uniform noise in [0, delta].
inline IntSeq near_convex(const SeqSpec& spec, std::uint64_t seed) {
  if (spec.length == 0 || spec.delta < 0 || spec.max_slope < 0 || spec.offset < 0) throw input_error("gen seq: invalid bounds");
  if (static_cast<long double>(spec.max_slope) * static_cast<long double>(spec.length) + spec.delta > kValueBound) {
    throw input_error("gen seq: values would exceed 2^40");
  }
  std::mt19937_64 rng(seed);
  std::vector<value_t> slopes(spec.length - 1);
  for (auto& s : slopes) s = uniform(rng, -spec.max_slope, spec.max_slope);
  std::sort(slopes.begin(), slopes.end());
  std::vector<value_t> v(spec.length);
  value_t acc = 0;
  for (std::size_t i = 0; i < spec.length; ++i) {
    if (i > 0) acc += slopes[i - 1];
    v[i] = acc + uniform(rng, 0, spec.delta);
  }
  return IntSeq(std::move(v), spec.offset);
}

inline IntSeq near_concave(const SeqSpec& spec, std::uint64_t seed) { return negate(near_convex(spec, seed)); }

// Uniform values in [lo, hi].
inline IntSeq uniform_seq(std::size_t length, value_t lo, value_t hi, std::uint64_t seed, index_t offset = 0) {
  std::mt19937_64 rng(seed);
  std::vector<value_t> v(length);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return IntSeq(std::move(v), offset);
}

}  // namespace nearconv::gen

#endif  // NEARCONV_GENERATORS_HPP
