#ifndef NEARCONV_BENCH_HPP
#define NEARCONV_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "knapsack.hpp"
#include "types.hpp"

namespace nearconv::bench {

// Parameter sweep. SPEC is a ';'-separated list of key=v1,v2,... entries with
// keys n, pmax, wmax, W (0 means n*wmax/4), seeds (count) and algos.
struct Sweep {
  std::vector<value_t> n{64, 128, 256};
  std::vector<value_t> pmax{64};
  std::vector<value_t> wmax{64};
  std::vector<value_t> capacity{0};
  value_t seeds = 1;
  std::vector<std::string> algos{"fast", "bellman"};
};

inline Algorithm parse_algorithm(const std::string& s) {
  if (s == "bellman") return Algorithm::Bellman;
  if (s == "fast") return Algorithm::Fast;
  if (s == "symmetric") return Algorithm::Symmetric;
  if (s == "auto") return Algorithm::Auto;
  throw input_error("unknown algorithm '" + s + "'");
}

inline Sweep parse_sweep(const std::string& spec) {
  Sweep sw;
  std::stringstream entries(spec);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw input_error("sweep entry '" + entry + "' lacks '='");
    const std::string key = entry.substr(0, eq);
    std::vector<std::string> vals;
    std::stringstream list(entry.substr(eq + 1));
    std::string v;
    while (std::getline(list, v, ',')) {
      if (!v.empty()) vals.push_back(v);
    }
    if (vals.empty()) throw input_error("sweep key '" + key + "' has no values");
    auto ints = [&](value_t lo) {
      std::vector<value_t> out;
      for (const auto& s : vals) {
        std::size_t pos = 0;
        value_t x = 0;
        try {
          x = std::stoll(s, &pos);
        } catch (const std::exception&) {
          pos = 0;
        }
        if (pos != s.size() || pos == 0) throw input_error("sweep value '" + s + "' is not an integer");
        if (x < lo || x > kValueBound) throw input_error("sweep value '" + s + "' out of range for " + key);
        out.push_back(x);
      }
      return out;
    };
    if (key == "n") {
      sw.n = ints(1);
    } else if (key == "pmax") {
      sw.pmax = ints(1);
    } else if (key == "wmax") {
      sw.wmax = ints(1);
    } else if (key == "W") {
      sw.capacity = ints(0);
    } else if (key == "seeds") {
      const auto s = ints(1);
      if (s.size() != 1) throw input_error("seeds takes a single count");
      sw.seeds = s[0];
    } else if (key == "algos") {
      for (const auto& a : vals) (void)parse_algorithm(a);
      sw.algos = vals;
    } else {
      throw input_error("unknown sweep key '" + key + "'");
    }
  }
  return sw;
}

struct Row {
  std::string algo;
  value_t n = 0, wmax = 0, pmax = 0, capacity = 0;
  std::uint64_t seed = 0;
  value_t value = 0;
  std::int64_t wall_ns = 0;
};

inline void write_header(std::ostream& os) { os << "algo,n,wmax,pmax,W,seed,value,wall_ns\n"; }

inline void write_row(std::ostream& os, const Row& r) {
  os << r.algo << ',' << r.n << ',' << r.wmax << ',' << r.pmax << ',' << r.capacity << ',' << r.seed << ',' << r.value
     << ',' << r.wall_ns << '\n';
}

// One row per (algorithm, instance). Instance seeds are base_seed + index.
inline std::vector<Row> run(const Sweep& sw, std::uint64_t base_seed, std::ostream* stream = nullptr) {
  std::vector<Row> rows;
  for (value_t n : sw.n) {
    for (value_t pmax : sw.pmax) {
      for (value_t wmax : sw.wmax) {
        for (value_t cap : sw.capacity) {
          for (value_t s = 0; s < sw.seeds; ++s) {
            const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(s);
            gen::InstanceSpec spec{static_cast<std::size_t>(n), pmax, wmax, cap};
            const KnapsackInstance inst = gen::instance(spec, seed);
            for (const auto& a : sw.algos) {
              const auto t0 = std::chrono::steady_clock::now();
              const KnapsackSolution sol = solve(inst, parse_algorithm(a), seed);
              const auto t1 = std::chrono::steady_clock::now();
              Row r{a, n, wmax, pmax, inst.capacity, seed, sol.value,
                    std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()};
              if (stream != nullptr) write_row(*stream, r);
              rows.push_back(std::move(r));
            }
          }
        }
      }
    }
  }
  return rows;
}

}  // namespace nearconv::bench

#endif  // NEARCONV_BENCH_HPP
