#ifndef NEARCONV_HULL_HPP
#define NEARCONV_HULL_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "seq.hpp"
#include "types.hpp"

namespace nearconv {

struct HullPoint {
  index_t index = 0;
  value_t value = 0;
  friend bool operator==(const HullPoint&, const HullPoint&) = default;
};

// Lower convex hull of a sequence (the pointwise maximal convex minorant)
// together with its exact vertical gap.
struct HullApprox {
  // Hull vertices; each is an input point. Slopes strictly increase.
  std::vector<HullPoint> breakpoints;
  // max(1, raw_gap): the near-convexity parameter.
  Rational delta{1};
  // max_i f(i) - hull(i), unclamped.
  Rational raw_gap{0};
  IndexRange domain;
};

namespace detail {

inline int128 cross(const HullPoint& o, const HullPoint& a, const HullPoint& b) noexcept {
  return int128(a.index - o.index) * (int128(b.value) - o.value) - (int128(a.value) - o.value) * int128(b.index - o.index);
}

// Hull value at i on the segment a-b (a.index <= i <= b.index).
inline Rational segment_value(const HullPoint& a, const HullPoint& b, index_t i) {
  if (a.index == b.index) return Rational(a.value);
  const int128 len = b.index - a.index;
  return Rational(int128(a.value) * (b.index - i) + int128(b.value) * (i - a.index), len);
}

}  // namespace detail

// Graham scan over points already sorted by index; O(|f|).
inline HullApprox lower_hull(const IntSeq& f) {
  if (f.offset() < 0) throw std::invalid_argument("lower_hull: negative offset");
  HullApprox h;
  h.domain = f.domain();
  auto& hull = h.breakpoints;
  hull.reserve(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) {
    const HullPoint pt{f.offset() + static_cast<index_t>(p), f[p]};
    // Drop the last vertex while it lies on or above the chord to pt.
    while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }

  Rational gap{0};
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const HullPoint a = hull[s], b = hull[s + 1];
    const int128 len = b.index - a.index;
    // Within one segment the denominator is fixed, so compare numerators.
    int128 best = 0;
    for (index_t i = a.index + 1; i < b.index; ++i) {
      const int128 num = int128(f[static_cast<std::size_t>(i - f.offset())]) * len - (int128(a.value) * (b.index - i) + int128(b.value) * (i - a.index));
      best = std::max(best, num);
    }
    gap = max(gap, Rational(best, len));
  }
  h.raw_gap = gap.reduced();
  h.delta = max(Rational{1}, h.raw_gap);
  return h;
}

// Exact hull value at global index i.
inline Rational eval_hull(const HullApprox& h, index_t i) {
  if (!h.domain.contains(i)) throw std::out_of_range("eval_hull: index outside domain");
  const auto& bp = h.breakpoints;
  auto it = std::lower_bound(bp.begin(), bp.end(), i, [](const HullPoint& p, index_t x) { return p.index < x; });
  if (it != bp.end() && it->index == i) return Rational(it->value);
  return detail::segment_value(*(it - 1), *it, i).reduced();
}

// Hull values over the whole domain, in order. O(|domain|).
inline std::vector<Rational> hull_values(const HullApprox& h) {
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(h.domain.size()));
  const auto& bp = h.breakpoints;
  out.emplace_back(bp.front().value);
  for (std::size_t s = 0; s + 1 < bp.size(); ++s) {
    for (index_t i = bp[s].index + 1; i <= bp[s + 1].index; ++i) {
      out.push_back(detail::segment_value(bp[s], bp[s + 1], i).reduced());
    }
  }
  return out;
}

// Unclamped near-concavity gap of f: max_i (-f)(i) - hull(-f)(i).
inline Rational upper_hull_gap(const IntSeq& f) { return lower_hull(negate(f)).raw_gap; }

}  // namespace nearconv

#endif  // NEARCONV_HULL_HPP
