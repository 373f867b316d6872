#ifndef NEARCONV_SUMSET_HPP
#define NEARCONV_SUMSET_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ntt.hpp"
#include "rational.hpp"
#include "seq.hpp"
#include "types.hpp"

namespace nearconv {

// A line over `range`, given by its exact values at both endpoints, together
// with the half width of the band around it.
struct LinearBand {
  IndexRange range;
  Rational at_lo{0};
  Rational at_hi{0};
  value_t half_width = 0;

  // Slope as a long double; 0 for a single-point range.
  [[nodiscard]] long double slope() const {
    if (range.hi == range.lo) return 0.0L;
    const long double lo = static_cast<long double>(at_lo.num()) / static_cast<long double>(at_lo.den());
    const long double hi = static_cast<long double>(at_hi.num()) / static_cast<long double>(at_hi.den());
    return (hi - lo) / static_cast<long double>(range.hi - range.lo);
  }
};

enum class SumsetKernel {
  Transform,  // packed indicator vectors, convolved by NTT
  Direct,     // per-diagonal minimum over all pairs of the box
  Adaptive,   // Direct while the box side is within a constant multiple of the residue window
};

struct SumsetStats {
  std::size_t points = 0;         // distinct decoded sumset points (Transform only)
  value_t modulus = 0;            // residue window M per diagonal
  std::size_t packed_length = 0;  // largest transform length used
  std::size_t splits = 0;         // quadrant splits forced by the transform length cap
  bool transformed = false;
};

struct SumsetResult {
  PartialSeq h;
  SumsetStats stats;
};

namespace detail {

inline int128 floor_div_pow2(int128 a, int shift) noexcept { return a >> shift; }  // arithmetic shift floors

inline value_t pmod(int128 a, value_t m) noexcept {
  int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<value_t>(r);
}

// Direct kernel on f[i0 .. i0+sf-1] x g[j0 .. j0+sg-1], relaxing into out.
inline void sumset_direct(const value_t* f, std::size_t sf, const value_t* g, std::size_t sg, index_t k0,
                          PartialSeq& out) {
  std::vector<value_t> best(sf + sg - 1, std::numeric_limits<value_t>::max());
  for (std::size_t a = 0; a < sf; ++a) {
    const value_t fa = f[a];
    value_t* row = best.data() + a;
    for (std::size_t b = 0; b < sg; ++b) row[b] = std::min(row[b], fa + g[b]);
  }
  for (std::size_t t = 0; t < best.size(); ++t) out.relax_min(k0 + static_cast<index_t>(t), best[t]);
}

struct Guide {
  int128 slope_fixed = 0;  // slope * 2^kShift, rounded
  static constexpr int kShift = 20;
  [[nodiscard]] int128 at(index_t x) const noexcept { return floor_div_pow2(slope_fixed * x, kShift); }
};

// Transform kernel. Every value is written as guide(x) + residual; the
// residual spreads bound the range of f(i) + g(j) on each diagonal, so each
// sum is determined by its residue modulo M and the packed key
//   (i - i0) * 2M + (f(i) mod M)
// identifies (i, f(i)) for decoding.
inline void sumset_transform(const value_t* f, std::size_t sf, const value_t* g, std::size_t sg, index_t k0,
                             const Guide& guide, PartialSeq& out, SumsetStats& stats) {
  int128 rf_min = std::numeric_limits<int128>::max(), rf_max = std::numeric_limits<int128>::min();
  int128 rg_min = rf_min, rg_max = rf_max;
  for (std::size_t a = 0; a < sf; ++a) {
    const int128 r = int128(f[a]) - guide.at(static_cast<index_t>(a));
    rf_min = std::min(rf_min, r);
    rf_max = std::max(rf_max, r);
  }
  for (std::size_t b = 0; b < sg; ++b) {
    const int128 r = int128(g[b]) - guide.at(static_cast<index_t>(b));
    rg_min = std::min(rg_min, r);
    rg_max = std::max(rg_max, r);
  }
  // guide(a) + guide(b) lies in [guide(a+b) - 1, guide(a+b)].
  const int128 window = (rf_max - rf_min) + (rg_max - rg_min) + 2;
  const std::size_t stride = 2 * static_cast<std::size_t>(std::min<int128>(window, int128(1) << 40));
  const value_t M = static_cast<value_t>(stride / 2);
  const std::size_t out_len = (sf + sg) * stride - 1;
  if (2 * stride > kMaxIndicatorLength || 2 * sf * sg <= out_len) {
    // Wide residue window: the pairs are cheaper than any packing.
    sumset_direct(f, sf, g, sg, k0, out);
    return;
  }
  std::size_t pow2 = 1;
  while (pow2 < out_len) pow2 <<= 1;
  if (pow2 > kMaxIndicatorLength) {
    // Halve the longer side. Each call re-derives its residuals from local
    // indices, which the window argument allows for any floor(c * x) guide.
    ++stats.splits;
    if (sf >= sg) {
      const std::size_t h = sf / 2;
      sumset_transform(f, h, g, sg, k0, guide, out, stats);
      sumset_transform(f + h, sf - h, g, sg, k0 + static_cast<index_t>(h), guide, out, stats);
    } else {
      const std::size_t h = sg / 2;
      sumset_transform(f, sf, g, h, k0, guide, out, stats);
      sumset_transform(f, sf, g + h, sg - h, k0 + static_cast<index_t>(h), guide, out, stats);
    }
    return;
  }
  stats.modulus = std::max(stats.modulus, M);
  stats.packed_length = std::max(stats.packed_length, pow2);
  stats.transformed = true;

  std::vector<std::uint8_t> p(sf * stride, 0), q(sg * stride, 0);
  for (std::size_t a = 0; a < sf; ++a) p[a * stride + static_cast<std::size_t>(pmod(f[a], M))] = 1;
  for (std::size_t b = 0; b < sg; ++b) q[b * stride + static_cast<std::size_t>(pmod(g[b], M))] = 1;
  const auto nz = indicator_convolve(p, q);
  for (std::size_t key : nz) {
    const index_t t = static_cast<index_t>(key / stride);
    const value_t z = static_cast<value_t>(key % stride);
    // Residue sums z and z - M decode to the same point.
    if (z < M || !std::binary_search(nz.begin(), nz.end(), key - static_cast<std::size_t>(M))) ++stats.points;
    const int128 lo = guide.at(t) - 1 + rf_min + rg_min;
    const int128 value = lo + pmod(int128(z) - lo, M);
    out.relax_min(k0 + t, static_cast<value_t>(value));
  }
}

}  // namespace detail

// min{ f(i) + g(j) : i in I, j in J, i + j = k } for every k in
// [I.lo + J.lo .. I.hi + J.hi], where f lives on I and g on J, |I| = |J|, and
// both point sets lie in bands of a common slope. The transform path costs
// O(window * s log) with a window of O(half_width).
//
// Band membership is certified from the data: with an integer guide line of
// the band slope, the residual spread of each input must stay within
// 2 * half_width + 3 (the +3 absorbs guide rounding). Otherwise band_violation.
inline SumsetResult banded_sumset_min(const IntSeq& fa, const IntSeq& ga, const LinearBand& band_f,
                                      const LinearBand& band_g, SumsetKernel kernel = SumsetKernel::Adaptive) {
  const IndexRange I = fa.domain();
  const IndexRange J = ga.domain();
  if (I.size() != J.size()) throw std::invalid_argument("banded_sumset_min: |I| != |J|");
  if (band_f.range != I || band_g.range != J) throw std::invalid_argument("banded_sumset_min: band range mismatch");
  const std::size_t s = fa.size();

  const long double slope = band_f.slope();
  if (s > 1) {
    const long double sg = band_g.slope();
    const long double tol = 1e-9L * std::max<long double>(1.0L, std::fabs(slope)) + 1e-12L;
    if (std::fabs(slope - sg) > tol) throw std::invalid_argument("banded_sumset_min: band slopes differ");
  }
  detail::Guide guide;
  guide.slope_fixed = static_cast<int128>(std::llroundl(slope * static_cast<long double>(1 << detail::Guide::kShift)));
  if (std::fabs(slope) * (1 << detail::Guide::kShift) > 9.0e18L) {
    // Too steep for a 64-bit rounding; go through long double truncation.
    guide.slope_fixed = static_cast<int128>(slope * static_cast<long double>(1 << detail::Guide::kShift));
  }

  auto spread = [&](const IntSeq& x) {
    int128 lo = std::numeric_limits<int128>::max(), hi = std::numeric_limits<int128>::min();
    for (std::size_t a = 0; a < x.size(); ++a) {
      const int128 r = int128(x[a]) - guide.at(static_cast<index_t>(a));
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    return hi - lo;
  };
  if (spread(fa) > 2 * int128(band_f.half_width) + 3) throw band_violation("banded_sumset_min: f leaves its band");
  if (spread(ga) > 2 * int128(band_g.half_width) + 3) throw band_violation("banded_sumset_min: g leaves its band");

  const index_t k0 = I.lo + J.lo;
  SumsetResult res;
  res.h = PartialSeq::top(k0, static_cast<index_t>(2 * s - 1));

  bool direct = kernel == SumsetKernel::Direct;
  if (kernel == SumsetKernel::Adaptive) {
    const value_t window = 2 * band_f.half_width + 2 * band_g.half_width + 8;
    direct = static_cast<value_t>(s) <= 64 * window;
  }
  if (direct) {
    detail::sumset_direct(fa.values().data(), s, ga.values().data(), s, k0, res.h);
  } else {
    detail::sumset_transform(fa.values().data(), s, ga.values().data(), s, k0, guide, res.h, res.stats);
  }
  return res;
}

}  // namespace nearconv

#endif  // NEARCONV_SUMSET_HPP
