#ifndef NEARCONV_SEQ_HPP
#define NEARCONV_SEQ_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "types.hpp"

namespace nearconv {

// Closed integer interval [lo .. hi] with lo >= 0.
struct IndexRange {
  index_t lo = 0;
  index_t hi = 0;

  IndexRange() = default;
  IndexRange(index_t lo_, index_t hi_) : lo(lo_), hi(hi_) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("IndexRange: need 0 <= lo <= hi");
  }

  // [a..b] for fractional bounds: max(0, floor(a)) .. ceil(b).
  static IndexRange from_bounds(const Rational& a, const Rational& b) {
    if (b < a) throw std::invalid_argument("IndexRange: a > b");
    const int128 lo = std::max<int128>(0, a.floor());
    const int128 hi = std::max<int128>(lo, b.ceil());
    return {static_cast<index_t>(lo), static_cast<index_t>(hi)};
  }

  [[nodiscard]] index_t size() const noexcept { return hi - lo + 1; }
  [[nodiscard]] bool contains(index_t i) const noexcept { return lo <= i && i <= hi; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Finite integer sequence whose first entry sits at global index `offset`.
class IntSeq {
 public:
  IntSeq() : values_{0} {}
  explicit IntSeq(std::vector<value_t> values, index_t offset = 0) : offset_(offset), values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("IntSeq: length must be >= 1");
  }

  [[nodiscard]] index_t offset() const noexcept { return offset_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] index_t first() const noexcept { return offset_; }
  [[nodiscard]] index_t last() const noexcept { return offset_ + static_cast<index_t>(values_.size()) - 1; }
  [[nodiscard]] IndexRange domain() const { return {offset_, last()}; }
  [[nodiscard]] const std::vector<value_t>& values() const noexcept { return values_; }
  [[nodiscard]] std::span<const value_t> span() const noexcept { return values_; }

  // Access by global index.
  [[nodiscard]] value_t at(index_t k) const {
    if (k < offset_ || k > last()) throw std::out_of_range("IntSeq: index outside domain");
    return values_[static_cast<std::size_t>(k - offset_)];
  }
  // Access by local position.
  [[nodiscard]] value_t operator[](std::size_t pos) const noexcept { return values_[pos]; }

  [[nodiscard]] value_t max_value() const { return *std::max_element(values_.begin(), values_.end()); }
  [[nodiscard]] value_t min_value() const { return *std::min_element(values_.begin(), values_.end()); }

  // Entries at global indices r.lo .. r.hi; r must lie inside the domain.
  [[nodiscard]] IntSeq slice(const IndexRange& r) const {
    if (r.lo < offset_ || r.hi > last()) throw std::out_of_range("IntSeq: slice outside domain");
    auto b = values_.begin() + (r.lo - offset_);
    return IntSeq(std::vector<value_t>(b, b + r.size()), r.lo);
  }

  [[nodiscard]] IntSeq with_offset(index_t offset) const { return IntSeq(values_, offset); }

  friend bool operator==(const IntSeq&, const IntSeq&) = default;

 private:
  index_t offset_ = 0;
  std::vector<value_t> values_;
};

// Sequence with undefined (TOP) entries. TOP is the identity of the pointwise
// combination: +inf under min, -inf under max. An all-TOP sequence is kept
// lazily as an empty value vector.
class PartialSeq {
 public:
  PartialSeq() = default;
  PartialSeq(index_t offset, std::vector<std::optional<value_t>> values)
      : offset_(offset), length_(static_cast<index_t>(values.size())), values_(std::move(values)) {}

  static PartialSeq top(index_t offset, index_t length) {
    PartialSeq p;
    p.offset_ = offset;
    p.length_ = length;
    return p;
  }

  [[nodiscard]] index_t offset() const noexcept { return offset_; }
  [[nodiscard]] index_t length() const noexcept { return length_; }
  [[nodiscard]] index_t last() const noexcept { return offset_ + length_ - 1; }
  [[nodiscard]] bool all_top() const noexcept { return values_.empty(); }

  [[nodiscard]] std::optional<value_t> at(index_t k) const {
    if (k < offset_ || k > last()) throw std::out_of_range("PartialSeq: index outside domain");
    if (values_.empty()) return std::nullopt;
    return values_[static_cast<std::size_t>(k - offset_)];
  }

  // Pointwise min with `other`, whose domain must lie inside this one.
  void min_with(const PartialSeq& other) { combine(other, false); }
  void max_with(const PartialSeq& other) { combine(other, true); }

  // Pointwise min at one position.
  void relax_min(index_t k, value_t v) {
    materialize();
    auto& slot = values_[static_cast<std::size_t>(k - offset_)];
    if (!slot || v < *slot) slot = v;
  }

  // Converts to IntSeq; throws if any entry is TOP.
  [[nodiscard]] IntSeq to_intseq() const {
    if (values_.empty() && length_ > 0) throw std::logic_error("PartialSeq: TOP entry in finite conversion");
    std::vector<value_t> out;
    out.reserve(values_.size());
    for (const auto& v : values_) {
      if (!v) throw std::logic_error("PartialSeq: TOP entry in finite conversion");
      out.push_back(*v);
    }
    return IntSeq(std::move(out), offset_);
  }

 private:
  void materialize() {
    if (values_.empty() && length_ > 0) values_.assign(static_cast<std::size_t>(length_), std::nullopt);
  }

  void combine(const PartialSeq& other, bool take_max) {
    if (other.all_top()) return;
    if (other.offset_ < offset_ || other.last() > last()) throw std::out_of_range("PartialSeq: combine outside domain");
    materialize();
    for (index_t t = 0; t < other.length_; ++t) {
      const auto& src = other.values_[static_cast<std::size_t>(t)];
      if (!src) continue;
      auto& dst = values_[static_cast<std::size_t>(other.offset_ - offset_ + t)];
      if (!dst || (take_max ? *src > *dst : *src < *dst)) dst = src;
    }
  }

  index_t offset_ = 0;
  index_t length_ = 0;
  std::vector<std::optional<value_t>> values_;
};

// Pointwise negation; same offset.
inline IntSeq negate(const IntSeq& s) {
  std::vector<value_t> out(s.values());
  for (auto& v : out) v = -v;
  return IntSeq(std::move(out), s.offset());
}

// O(|f|*|g|) reference min-plus convolution.
inline IntSeq naive_minplus(const IntSeq& f, const IntSeq& g) {
  const std::size_t n = f.size(), m = g.size();
  std::vector<value_t> h(n + m - 1);
  for (std::size_t k = 0; k < h.size(); ++k) {
    const std::size_t lo = k >= m ? k - m + 1 : 0;
    const std::size_t hi = std::min(k, n - 1);
    value_t best = f[lo] + g[k - lo];
    for (std::size_t i = lo + 1; i <= hi; ++i) best = std::min(best, f[i] + g[k - i]);
    h[k] = best;
  }
  return IntSeq(std::move(h), f.offset() + g.offset());
}

// O(|f|*|g|) reference max-plus convolution.
inline IntSeq naive_maxplus(const IntSeq& f, const IntSeq& g) {
  const std::size_t n = f.size(), m = g.size();
  std::vector<value_t> h(n + m - 1);
  for (std::size_t k = 0; k < h.size(); ++k) {
    const std::size_t lo = k >= m ? k - m + 1 : 0;
    const std::size_t hi = std::min(k, n - 1);
    value_t best = f[lo] + g[k - lo];
    for (std::size_t i = lo + 1; i <= hi; ++i) best = std::max(best, f[i] + g[k - i]);
    h[k] = best;
  }
  return IntSeq(std::move(h), f.offset() + g.offset());
}

// Throws input_error unless every entry satisfies |v| <= kValueBound.
inline void check_value_bound(const IntSeq& s, const char* what) {
  for (value_t v : s.values()) {
    if (v > kValueBound || v < -kValueBound) {
      throw input_error(std::string(what) + ": entry " + std::to_string(v) + " exceeds the 2^40 magnitude bound");
    }
  }
}

struct PadInfo {
  index_t n = 0;  // last index of f before padding
  index_t m = 0;  // last index of g before padding
  index_t padded_length = 0;  // N, a power of two with N > max(n, m)
  value_t pad_weight = 0;  // W_pad
};

inline index_t next_pow2_above(index_t x) {
  index_t p = 1;
  while (p <= x) p <<= 1;
  return p;
}

// Pads offset-0 sequences f[0..n], g[0..m] to the common length N, the
// smallest power of two strictly greater than max(n, m). Entry n+j of f
// becomes min f + 2j*W_pad (likewise for g), with
//   W_pad = (max f - min f) + (max g - min g) + 1.
// The padded tail is a steep convex continuation: it leaves the hull gaps of
// both inputs unchanged and cannot win any diagonal k <= n+m.
inline std::tuple<IntSeq, IntSeq, PadInfo> pad_to_common_pow2(const IntSeq& f, const IntSeq& g) {
  if (f.offset() != 0 || g.offset() != 0) throw std::invalid_argument("pad_to_common_pow2: offsets must be 0");
  PadInfo info;
  info.n = static_cast<index_t>(f.size()) - 1;
  info.m = static_cast<index_t>(g.size()) - 1;
  info.padded_length = next_pow2_above(std::max(info.n, info.m));
  const int128 span_f = int128(f.max_value()) - f.min_value();
  const int128 span_g = int128(g.max_value()) - g.min_value();
  const int128 w = span_f + span_g + 1;
  // Largest padded entry must stay below 2^62.
  const int128 limit = int128(1) << 62;
  if (int128(2) * info.padded_length * w + std::max(std::abs(f.min_value()), std::abs(g.min_value())) >= limit) {
    throw input_error("pad_to_common_pow2: padded values overflow 62 bits");
  }
  info.pad_weight = static_cast<value_t>(w);

  auto pad = [&](const IntSeq& s) {
    std::vector<value_t> v(s.values());
    const value_t base = s.min_value();
    const index_t last = static_cast<index_t>(s.size()) - 1;
    for (index_t j = 1; last + j <= info.padded_length - 1; ++j) v.push_back(base + 2 * j * info.pad_weight);
    return IntSeq(std::move(v), 0);
  };
  return {pad(f), pad(g), info};
}

}  // namespace nearconv

#endif  // NEARCONV_SEQ_HPP
