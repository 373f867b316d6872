#ifndef NEARCONV_ACCEPTANCE_HPP
#define NEARCONV_ACCEPTANCE_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "convex_minplus.hpp"
#include "generators.hpp"
#include "hull.hpp"
#include "knapsack.hpp"
#include "nearconvex_minplus.hpp"
#include "oracles.hpp"
#include "seq.hpp"
#include "sumset.hpp"

namespace nearconv::acceptance {

struct Config {
  std::uint64_t seed = 20240601;
  std::size_t trials = 0;  // 0 keeps each criterion's own corpus size
};

struct Result {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

using clock = std::chrono::steady_clock;

inline double since(clock::time_point t0) { return std::chrono::duration<double>(clock::now() - t0).count(); }

inline std::size_t corpus(const Config& cfg, std::size_t fallback) { return cfg.trials != 0 ? cfg.trials : fallback; }

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Result finish(int id, std::string name, bool ok, const std::string& detail, clock::time_point t0, double limit) {
  Result r;
  r.id = id;
  r.name = std::move(name);
  r.seconds = since(t0);
  r.pass = ok && r.seconds <= limit;
  std::ostringstream os;
  os << detail;
  if (r.seconds > limit) os << "; exceeded the " << limit << " s budget";
  r.detail = os.str();
  return r;
}

// Convex integer sequence: sorted slopes, prefix summed.
inline IntSeq convex_seq(std::mt19937_64& rng, std::size_t len, std::uint64_t seed) {
  const value_t slope = gen::uniform(rng, 0, 1000);
  return gen::near_convex({len, 0, slope, 0}, seed);
}

struct KnapsackCorpus {
  std::size_t runs = 0;
  std::size_t sound = 0;
  std::size_t optimal = 0;
  std::size_t slices = 0;
  std::size_t slices_within = 0;
  double seconds = 0;
};

inline KnapsackInstance corpus_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  gen::InstanceSpec spec;
  spec.n = 128;
  spec.pmax = gen::uniform(rng, 1, 64);
  spec.wmax = gen::uniform(rng, 1, 64);
  spec.capacity = gen::uniform(rng, 1, static_cast<value_t>(spec.n) * spec.wmax / 2);
  return gen::instance(spec, mix(seed, 1));
}

inline KnapsackCorpus knapsack_corpus(const Config& cfg, bool symmetric) {
  const auto t0 = clock::now();
  KnapsackCorpus c;
  const std::size_t trials = corpus(cfg, 300);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = mix(cfg.seed, (symmetric ? 60000 : 40000) + t);
    const KnapsackInstance inst = corpus_instance(seed);
    LevelTrace trace;
    SolveOptions opt;
    const KnapsackSolution s = symmetric ? solve_symmetric(inst, seed, opt, &trace) : solve_fast(inst, seed, opt, &trace);
    const value_t best = bellman_dp(inst.items, inst.capacity, false).profit().at(inst.capacity);
    ++c.runs;
    if (is_feasible(inst, s) && s.value <= best) ++c.sound;
    if (s.value == best) ++c.optimal;
    if (!symmetric) {
      const Rational bound(inst.pmax());
      for (const auto& level : trace.slices) {
        for (const auto& slice : level) {
          ++c.slices;
          if (upper_hull_gap(slice) <= bound) ++c.slices_within;
        }
      }
    }
  }
  c.seconds = since(t0);
  return c;
}

}  // namespace detail

// 1. minplus_nearconvex agrees with the naive convolution on arbitrary data.
inline Result convolution_exactness(const Config& cfg) {
  const auto t0 = detail::clock::now();
  const std::size_t trials = detail::corpus(cfg, 500);
  std::mt19937_64 rng(detail::mix(cfg.seed, 1));
  std::size_t exact = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 512));
    const auto m = static_cast<std::size_t>(gen::uniform(rng, 1, 512));
    const IntSeq f = gen::uniform_seq(n, -1000000, 1000000, rng());
    const IntSeq g = gen::uniform_seq(m, -1000000, 1000000, rng());
    if (minplus_nearconvex(f, g) == naive_minplus(f, g)) ++exact;
  }
  std::ostringstream os;
  os << exact << "/" << trials << " pairs exact";
  return detail::finish(1, "convolution exactness", exact == trials, os.str(), t0, 60);
}

// 2. convex_minplus values and minimal witnesses.
inline Result convex_kernel(const Config& cfg) {
  const auto t0 = detail::clock::now();
  const std::size_t trials = detail::corpus(cfg, 300);
  std::mt19937_64 rng(detail::mix(cfg.seed, 2));
  std::size_t good = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const IntSeq f = detail::convex_seq(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 256)), rng());
    const IntSeq g = detail::convex_seq(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 256)), rng());
    const ConvexConv cc = convex_minplus(lower_hull(f), lower_hull(g));
    const IntSeq h = naive_minplus(f, g);
    bool ok = cc.values.size() == h.size();
    for (std::size_t k = 0; ok && k < h.size(); ++k) {
      ok = cc.values[k] == Rational(h[k]);
      const auto w = static_cast<std::size_t>(cc.path.witnesses[k]);
      ok = ok && w < f.size() && k - w < g.size() && f[w] + g[k - w] == h[k];
      for (std::size_t i = 0; ok && i < w; ++i) {
        if (k - i < g.size() && f[i] + g[k - i] == h[k]) ok = false;
      }
    }
    if (ok) ++good;
  }
  std::ostringstream os;
  os << good << "/" << trials << " pairs exact with minimal witnesses";
  return detail::finish(2, "convex kernel", good == trials, os.str(), t0, 10);
}

// 3. Case-3 boxes harvested from live runs.
inline Result sumset_kernel(const Config& cfg) {
  const auto t0 = detail::clock::now();
  const std::size_t want = detail::corpus(cfg, 300);
  std::mt19937_64 rng(detail::mix(cfg.seed, 3));

  struct Harvested {
    IntSeq f, g;
    LinearBand bf, bg;
    Rational delta;
  };
  // Round-robin over box sides so large boxes are not crowded out.
  std::map<index_t, std::vector<Harvested>> by_side;
  std::size_t total = 0;
  for (int run = 0; run < 64 && total < 8 * want; ++run) {
    const std::size_t n = std::size_t{1} << gen::uniform(rng, 8, 11);
    const value_t delta = value_t{1} << gen::uniform(rng, 0, 4);
    const value_t slope = gen::uniform(rng, 0, 8);
    const IntSeq f = gen::near_convex({n, delta, slope, 0}, rng());
    const IntSeq g = gen::near_convex({n, delta, slope, 0}, rng());
    NearConvexOptions opt;
    opt.on_case3 = [&](const Case3Box& b) {
      if (b.f.size() < 2 || b.f.size() > 1024) return;
      auto& bucket = by_side[static_cast<index_t>(b.f.size())];
      if (bucket.size() >= want) return;
      bucket.push_back({b.f, b.g, b.band_f, b.band_g, b.delta});
      ++total;
    };
    (void)minplus_nearconvex(f, g, opt);
  }
  std::vector<Harvested> boxes;
  for (std::size_t round = 0; boxes.size() < want; ++round) {
    bool any = false;
    for (auto& [side, bucket] : by_side) {
      if (round < bucket.size() && boxes.size() < want) {
        boxes.push_back(bucket[round]);
        any = true;
      }
    }
    if (!any) break;
  }

  std::size_t exact = 0, bounded = 0, transformed = 0;
  for (const auto& b : boxes) {
    const PartialSeq expect = oracle::brute_box_minplus(b.f, b.g);
    const auto tr = banded_sumset_min(b.f, b.g, b.bf, b.bg, SumsetKernel::Transform);
    const auto di = banded_sumset_min(b.f, b.g, b.bf, b.bg, SumsetKernel::Direct);
    bool same = true;
    for (index_t k = expect.offset(); k <= expect.last(); ++k) {
      same = same && tr.h.at(k) == expect.at(k) && di.h.at(k) == expect.at(k);
    }
    if (same) ++exact;
    const std::size_t size = oracle::box_sumset_size(b.f, b.g);
    const auto cap = static_cast<std::size_t>(2 * b.f.size()) * static_cast<std::size_t>(8 * b.delta.ceil() + 8);
    bool within = size <= cap;
    if (tr.stats.transformed) {
      ++transformed;
      within = within && tr.stats.points == size;
    }
    if (within) ++bounded;
  }
  std::ostringstream os;
  os << exact << "/" << boxes.size() << " boxes exact, " << bounded << " within (|I|+|J|)(8 ceil(delta)+8), "
     << transformed << " through the transform";
  const bool ok = boxes.size() == want && exact == want && bounded == want;
  return detail::finish(3, "sumset kernel", ok, os.str(), t0, 30);
}

// 4, 5, 8 share one run of the profit-indexed solver.
inline std::vector<Result> knapsack_fast(const Config& cfg) {
  const auto t0 = detail::clock::now();
  const auto c = detail::knapsack_corpus(cfg, false);
  std::vector<Result> out;
  {
    std::ostringstream os;
    os << c.sound << "/" << c.runs << " feasible, consistent and at most the optimum";
    out.push_back(detail::finish(4, "knapsack soundness", c.sound == c.runs, os.str(), t0, 120));
  }
  {
    std::ostringstream os;
    os << c.optimal << "/" << c.runs << " optimal (need 95%)";
    out.push_back(detail::finish(5, "knapsack optimality rate", c.optimal * 100 >= c.runs * 95, os.str(), t0, 120));
  }
  {
    std::ostringstream os;
    os << c.slices_within << "/" << c.slices << " slices with upper hull gap <= pmax";
    out.push_back(detail::finish(8, "slice near-concavity", c.slices_within == c.slices, os.str(), t0, 120));
  }
  return out;
}

// 6. Weight-indexed solver on its own corpus.
inline Result knapsack_symmetric(const Config& cfg) {
  const auto t0 = detail::clock::now();
  const auto c = detail::knapsack_corpus(cfg, true);
  std::ostringstream os;
  os << c.sound << "/" << c.runs << " sound, " << c.optimal << "/" << c.runs << " optimal (need 95%)";
  return detail::finish(6, "symmetric variant", c.sound == c.runs && c.optimal * 100 >= c.runs * 95, os.str(), t0, 120);
}

// 7. Max-plus of near-concave pairs keeps the larger gap.
inline Result concavity_preservation(const Config& cfg) {
  const auto t0 = detail::clock::now();
  const std::size_t trials = detail::corpus(cfg, 200);
  std::mt19937_64 rng(detail::mix(cfg.seed, 7));
  std::size_t good = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    gen::SeqSpec a{static_cast<std::size_t>(gen::uniform(rng, 1, 256)), gen::uniform(rng, 0, 32), gen::uniform(rng, 0, 500), 0};
    gen::SeqSpec b{static_cast<std::size_t>(gen::uniform(rng, 1, 256)), gen::uniform(rng, 0, 32), gen::uniform(rng, 0, 500), 0};
    const IntSeq f = gen::near_concave(a, rng());
    const IntSeq g = gen::near_concave(b, rng());
    const IntSeq h = maxplus_nearconcave(f, g);
    if (h == naive_maxplus(f, g) && upper_hull_gap(h) <= max(upper_hull_gap(f), upper_hull_gap(g))) ++good;
  }
  std::ostringstream os;
  os << good << "/" << trials << " pairs with gap(h) <= max(gap(f), gap(g))";
  return detail::finish(7, "near-concavity preservation", good == trials, os.str(), t0, 20);
}

// 9. Running time against delta at n = 2^15.
inline Result delta_scaling(const Config& cfg) {
  const auto t0 = detail::clock::now();
  constexpr std::size_t n = std::size_t{1} << 15;
  auto timed = [&](value_t delta) {
    const IntSeq f = gen::near_convex({n, delta, 1024, 0}, detail::mix(cfg.seed, 90 + delta));
    const IntSeq g = gen::near_convex({n, delta, 1024, 0}, detail::mix(cfg.seed, 190 + delta));
    std::vector<double> runs;
    for (int r = 0; r < 3; ++r) {
      const auto s = detail::clock::now();
      (void)minplus_nearconvex(f, g);
      runs.push_back(detail::since(s));
    }
    std::sort(runs.begin(), runs.end());
    return runs[1];
  };
  const double t4 = timed(4);
  const double t64 = timed(64);
  const double ratio = t64 / t4;
  std::ostringstream os;
  os.precision(3);
  os << "T(64)/T(4) = " << ratio << " (" << t64 << " s / " << t4 << " s, limit 32)";
  return detail::finish(9, "delta scaling", ratio <= 32.0, os.str(), t0, 60);
}

// 10. At most two Case-3 and two Case-4 boxes per (side, box diagonal).
inline Result structural_counters(const Config& cfg) {
  const auto t0 = detail::clock::now();
  const std::size_t trials = detail::corpus(cfg, 50);
  std::mt19937_64 rng(detail::mix(cfg.seed, 10));
  std::size_t good = 0;
  std::size_t worst3 = 0, worst4 = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 2048));
    const auto m = static_cast<std::size_t>(gen::uniform(rng, 1, 2048));
    IntSeq f, g;
    if (t % 2 == 0) {
      f = gen::uniform_seq(n, -1000, 1000, rng());
      g = gen::uniform_seq(m, -1000, 1000, rng());
    } else {
      const value_t delta = gen::uniform(rng, 0, 64);
      f = gen::near_convex({n, delta, gen::uniform(rng, 0, 256), 0}, rng());
      g = gen::near_convex({m, delta, gen::uniform(rng, 0, 256), 0}, rng());
    }
    NearConvexStats stats;
    NearConvexOptions opt;
    opt.stats = &stats;
    (void)minplus_nearconvex(f, g, opt);
    const auto [c3, c4] = stats.max_per_diagonal();
    worst3 = std::max(worst3, c3);
    worst4 = std::max(worst4, c4);
    if (c3 <= 2 && c4 <= 2) ++good;
  }
  std::ostringstream os;
  os << good << "/" << trials << " runs within bounds (max Case-3 " << worst3 << ", max Case-4 " << worst4 << ")";
  return detail::finish(10, "structural counters", good == trials, os.str(), t0, 60);
}

// Runs every criterion in order, reporting each as it completes.
inline std::vector<Result> run_all(const Config& cfg, const std::function<void(const Result&)>& report = {}) {
  std::vector<Result> out;
  auto add = [&](Result r) {
    if (report) report(r);
    out.push_back(std::move(r));
  };
  add(convolution_exactness(cfg));
  add(convex_kernel(cfg));
  add(sumset_kernel(cfg));
  for (auto& r : knapsack_fast(cfg)) add(std::move(r));
  add(knapsack_symmetric(cfg));
  add(concavity_preservation(cfg));
  add(delta_scaling(cfg));
  add(structural_counters(cfg));
  std::sort(out.begin(), out.end(), [](const Result& a, const Result& b) { return a.id < b.id; });
  return out;
}

inline void print(std::ostream& os, const Result& r) {
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " (";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << r.seconds << " s)\n";
  os.unsetf(std::ios::fixed);
}

}  // namespace nearconv::acceptance

#endif  // NEARCONV_ACCEPTANCE_HPP
