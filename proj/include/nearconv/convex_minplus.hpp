#ifndef NEARCONV_CONVEX_MINPLUS_HPP
#define NEARCONV_CONVEX_MINPLUS_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "hull.hpp"
#include "rational.hpp"
#include "types.hpp"

namespace nearconv {

// Minimal witnesses i*_0 .. i*_{n+m} of the convex convolution. Each step
// moves by 0 or 1, so the points (i*_k, k - i*_k) form a monotone path.
struct WitnessPath {
  std::vector<index_t> witnesses;

  [[nodiscard]] index_t operator[](index_t k) const { return witnesses[static_cast<std::size_t>(k)]; }
  [[nodiscard]] index_t last_diagonal() const noexcept { return static_cast<index_t>(witnesses.size()) - 1; }
};

struct ConvexConv {
  std::vector<Rational> values;  // hull_f (min,+) hull_g on [0 .. n+m]
  WitnessPath path;
};

// Linear-time min-plus convolution of two convex functions given by their
// values on [0..n] and [0..m]. Ties go to the smaller index, which makes
// every reported witness the minimal one.
inline ConvexConv convex_minplus(std::span<const Rational> bf, std::span<const Rational> bg) {
  if (bf.empty() || bg.empty()) throw std::invalid_argument("convex_minplus: empty input");
  const index_t n = static_cast<index_t>(bf.size()) - 1;
  const index_t m = static_cast<index_t>(bg.size()) - 1;
  ConvexConv out;
  out.values.reserve(static_cast<std::size_t>(n + m + 1));
  out.path.witnesses.reserve(static_cast<std::size_t>(n + m + 1));

  auto sum = [&](index_t i, index_t k) { return bf[static_cast<std::size_t>(i)] + bg[static_cast<std::size_t>(k - i)]; };

  index_t w = 0;
  out.path.witnesses.push_back(0);
  out.values.push_back(sum(0, 0));
  for (index_t k = 1; k <= n + m; ++k) {
    const bool stay_ok = k - w <= m;
    const bool step_ok = w + 1 <= n;
    if (!stay_ok) {
      ++w;
    } else if (step_ok) {
      // Strict comparison keeps the smaller index on ties.
      if (sum(w + 1, k) < sum(w, k)) ++w;
    }
    out.path.witnesses.push_back(w);
    out.values.push_back(sum(w, k));
  }
  return out;
}

inline ConvexConv convex_minplus(const HullApprox& bf, const HullApprox& bg) {
  if (bf.domain.lo != 0 || bg.domain.lo != 0) throw std::invalid_argument("convex_minplus: hull domains must start at 0");
  const auto fv = hull_values(bf);
  const auto gv = hull_values(bg);
  return convex_minplus(fv, gv);
}

enum class PathSide { Above, On, Below };

// Position of (i, j) relative to the witness path on diagonal i + j.
inline PathSide path_position(const WitnessPath& path, index_t i, index_t j) {
  const index_t k = i + j;
  if (k < 0 || k > path.last_diagonal()) throw std::out_of_range("path_position: diagonal out of range");
  const index_t w = path[k];
  if (i > w) return PathSide::Above;
  if (i < w) return PathSide::Below;
  return PathSide::On;
}

}  // namespace nearconv

#endif  // NEARCONV_CONVEX_MINPLUS_HPP
