#ifndef NEARCONV_NEARCONVEX_MINPLUS_HPP
#define NEARCONV_NEARCONVEX_MINPLUS_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "convex_minplus.hpp"
#include "hull.hpp"
#include "rational.hpp"
#include "seq.hpp"
#include "sumset.hpp"
#include "types.hpp"

namespace nearconv {

// Hulls, hull convolution and witness path of a padded pair, shared read-only
// by the whole recursion.
struct RelevanceContext {
  HullApprox bf, bg;
  std::vector<Rational> bf_values, bg_values;
  ConvexConv bh;
  std::vector<Rational> bh_plus;  // bh(k) + 2 delta
  Rational delta{1};
  Rational two_delta{2};
  value_t half_width = 2;  // ceil(2 delta)

  static RelevanceContext build(const IntSeq& f, const IntSeq& g) {
    RelevanceContext ctx;
    ctx.bf = lower_hull(f);
    ctx.bg = lower_hull(g);
    ctx.bf_values = hull_values(ctx.bf);
    ctx.bg_values = hull_values(ctx.bg);
    ctx.bh = convex_minplus(ctx.bf_values, ctx.bg_values);
    ctx.delta = max(ctx.bf.delta, ctx.bg.delta).reduced();
    ctx.two_delta = (ctx.delta * 2).reduced();
    ctx.half_width = static_cast<value_t>(ctx.two_delta.ceil());
    ctx.bh_plus.reserve(ctx.bh.values.size());
    for (const auto& v : ctx.bh.values) ctx.bh_plus.push_back((v + ctx.two_delta).reduced());
    return ctx;
  }

  [[nodiscard]] index_t n() const noexcept { return static_cast<index_t>(bf_values.size()) - 1; }
  [[nodiscard]] index_t m() const noexcept { return static_cast<index_t>(bg_values.size()) - 1; }
};

// (i, j) is 2*delta-relevant: bf(i) + bg(j) <= bh(i+j) + 2 delta.
inline bool relevant(const RelevanceContext& ctx, index_t i, index_t j) {
  if (i < 0 || j < 0 || i > ctx.n() || j > ctx.m()) throw std::out_of_range("relevant: point outside the grid");
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  return ctx.bf_values[ui] + ctx.bg_values[uj] <= ctx.bh_plus[ui + uj];
}

// I x J with |I| = |J| = side, aligned to multiples of side.
struct Box {
  IndexRange I;
  IndexRange J;

  [[nodiscard]] index_t side() const noexcept { return I.size(); }
  [[nodiscard]] IndexRange diagonals() const { return {I.lo + J.lo, I.hi + J.hi}; }
};

enum class BoxCase { Dummy1 = 1, Dummy2 = 2, Sumset = 3, Split = 4 };

// Counters for one run. Box diagonals are the anti-diagonals
// d = I.lo / s + J.lo / s of the grid of side-s boxes.
struct NearConvexStats {
  std::array<std::size_t, 5> cases{};  // indexed by BoxCase
  std::map<std::pair<index_t, index_t>, std::array<std::size_t, 2>> per_diagonal;  // (s, d) -> {case 3, case 4}
  std::size_t sumset_points = 0;
  std::size_t transformed_boxes = 0;

  // Largest Case-3 / Case-4 count over all (s, d).
  [[nodiscard]] std::pair<std::size_t, std::size_t> max_per_diagonal() const {
    std::pair<std::size_t, std::size_t> out{0, 0};
    for (const auto& [key, c] : per_diagonal) {
      out.first = std::max(out.first, c[0]);
      out.second = std::max(out.second, c[1]);
    }
    return out;
  }
};

struct Case3Box {
  const IntSeq& f;
  const IntSeq& g;
  const LinearBand& band_f;
  const LinearBand& band_g;
  const Rational& delta;
};

struct NearConvexOptions {
  SumsetKernel kernel = SumsetKernel::Adaptive;
  NearConvexStats* stats = nullptr;
  std::function<void(const Case3Box&)> on_case3;
};

namespace detail {

class BoxRecursion {
 public:
  BoxRecursion(const RelevanceContext& ctx, const IntSeq& f, const IntSeq& g, const NearConvexOptions& opt,
               PartialSeq& out)
      : ctx_(ctx), f_(f), g_(g), opt_(opt), out_(out) {}

  void run(index_t ia, index_t ja, index_t s) {
    const index_t ib = ia + s - 1, jb = ja + s - 1;
    if (path_position(ctx_.bh.path, ia, jb) == PathSide::Above && !relevant(ctx_, ia, jb)) {
      count(BoxCase::Dummy1, ia, ja, s);
      return;
    }
    if (path_position(ctx_.bh.path, ib, ja) == PathSide::Below && !relevant(ctx_, ib, ja)) {
      count(BoxCase::Dummy2, ia, ja, s);
      return;
    }
    if (relevant(ctx_, ia, jb) && relevant(ctx_, ib, ja)) {
      count(BoxCase::Sumset, ia, ja, s);
      sumset(ia, ja, s);
      return;
    }
    if (s == 1) throw std::logic_error("rec_minconv: unit box matches no case");
    count(BoxCase::Split, ia, ja, s);
    const index_t h = s / 2;
    run(ia, ja, h);
    run(ia, ja + h, h);
    run(ia + h, ja, h);
    run(ia + h, ja + h, h);
  }

 private:
  void count(BoxCase c, index_t ia, index_t ja, index_t s) {
    if (opt_.stats == nullptr) return;
    ++opt_.stats->cases[static_cast<std::size_t>(c)];
    if (c == BoxCase::Sumset || c == BoxCase::Split) {
      auto& slot = opt_.stats->per_diagonal[{s, ia / s + ja / s}];
      ++slot[c == BoxCase::Sumset ? 0 : 1];
    }
  }

  void sumset(index_t ia, index_t ja, index_t s) {
    const index_t ib = ia + s - 1, jb = ja + s - 1;
    const IntSeq fa = f_.slice({ia, ib});
    const IntSeq ga = g_.slice({ja, jb});
    const auto at = [](const std::vector<Rational>& v, index_t i) -> const Rational& {
      return v[static_cast<std::size_t>(i)];
    };
    // f hugs the chord of bf; g hugs the line bh(k) - chord(k - j) + delta
    // with k = ia + jb, which has the same slope.
    const Rational& bh_k = at(ctx_.bh.values, ia + jb);
    LinearBand band_f{{ia, ib}, at(ctx_.bf_values, ia), at(ctx_.bf_values, ib), ctx_.half_width};
    LinearBand band_g{{ja, jb}, (bh_k - at(ctx_.bf_values, ib) + ctx_.delta).reduced(),
                      (bh_k - at(ctx_.bf_values, ia) + ctx_.delta).reduced(), ctx_.half_width};
    if (opt_.on_case3) opt_.on_case3(Case3Box{fa, ga, band_f, band_g, ctx_.delta});
    const auto res = banded_sumset_min(fa, ga, band_f, band_g, opt_.kernel);
    if (opt_.stats != nullptr) {
      opt_.stats->sumset_points += res.stats.points;
      if (res.stats.transformed) ++opt_.stats->transformed_boxes;
    }
    out_.min_with(res.h);
  }

  const RelevanceContext& ctx_;
  const IntSeq& f_;
  const IntSeq& g_;
  const NearConvexOptions& opt_;
  PartialSeq& out_;
};

inline bool is_pow2(index_t x) noexcept { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace detail

// Box recursion on padded f, g (equal power-of-two length, offset 0). The
// result covers the box diagonals; entries no relevant point reaches are TOP.
inline PartialSeq rec_minconv(const RelevanceContext& ctx, const IntSeq& f, const IntSeq& g, const Box& box,
                              const NearConvexOptions& opt = {}) {
  const index_t s = box.side();
  if (box.J.size() != s || !detail::is_pow2(s) || box.I.lo % s != 0 || box.J.lo % s != 0) {
    throw std::invalid_argument("rec_minconv: box is not dyadic");
  }
  if (box.I.hi > ctx.n() || box.J.hi > ctx.m()) throw std::out_of_range("rec_minconv: box outside the grid");
  const IndexRange d = box.diagonals();
  PartialSeq out = PartialSeq::top(d.lo, d.size());
  detail::BoxRecursion(ctx, f, g, opt, out).run(box.I.lo, box.J.lo, s);
  return out;
}

// Exact min-plus convolution of two integer sequences. Every sequence is
// near-convex for its own hull gap, so no precondition beyond the value
// bound applies; the running time scales with the larger gap.
inline IntSeq minplus_nearconvex(const IntSeq& f, const IntSeq& g, const NearConvexOptions& opt = {}) {
  check_value_bound(f, "minplus_nearconvex: f");
  check_value_bound(g, "minplus_nearconvex: g");
  const index_t offset = f.offset() + g.offset();
  auto [fp, gp, pad] = pad_to_common_pow2(f.with_offset(0), g.with_offset(0));
  const RelevanceContext ctx = RelevanceContext::build(fp, gp);
  const index_t N = pad.padded_length;
  const PartialSeq full = rec_minconv(ctx, fp, gp, Box{{0, N - 1}, {0, N - 1}}, opt);
  std::vector<value_t> h;
  h.reserve(static_cast<std::size_t>(pad.n + pad.m + 1));
  for (index_t k = 0; k <= pad.n + pad.m; ++k) {
    const auto v = full.at(k);
    if (!v) throw std::logic_error("minplus_nearconvex: diagonal left uncovered");
    h.push_back(*v);
  }
  return IntSeq(std::move(h), offset);
}

// Max-plus convolution through the negation identity.
inline IntSeq maxplus_nearconcave(const IntSeq& f, const IntSeq& g, const NearConvexOptions& opt = {}) {
  return negate(minplus_nearconvex(negate(f), negate(g), opt));
}

}  // namespace nearconv

#endif  // NEARCONV_NEARCONVEX_MINPLUS_HPP
