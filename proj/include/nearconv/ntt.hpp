#ifndef NEARCONV_NTT_HPP
#define NEARCONV_NTT_HPP

#include <utility>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace nearconv {

namespace ntt {

inline constexpr std::uint32_t kMod = 998244353;  // 119 * 2^23 + 1
inline constexpr std::uint32_t kRoot = 3;
inline constexpr int kMaxLog = 23;

inline std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e) noexcept {
  std::uint64_t r = 1;
  b %= kMod;
  while (e != 0) {
    if (e & 1) r = r * b % kMod;
    b = b * b % kMod;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// In-place iterative transform; a.size() must be a power of two <= 2^23.
inline void transform(std::vector<std::uint32_t>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<std::uint32_t> tw;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    std::uint64_t w = pow_mod(kRoot, (kMod - 1) / len);
    if (inverse) w = pow_mod(w, kMod - 2);
    const std::size_t half = len >> 1;
    tw.resize(half);
    tw[0] = 1;
    for (std::size_t t = 1; t < half; ++t) tw[t] = static_cast<std::uint32_t>(tw[t - 1] * w % kMod);
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t t = 0; t < half; ++t) {
        const std::uint32_t u = a[i + t];
        const std::uint32_t v = static_cast<std::uint32_t>(std::uint64_t(a[i + t + half]) * tw[t] % kMod);
        a[i + t] = u + v >= kMod ? u + v - kMod : u + v;
        a[i + t + half] = u >= v ? u - v : u + kMod - v;
      }
    }
  }
  if (inverse) {
    const std::uint64_t inv_n = pow_mod(n, kMod - 2);
    for (auto& x : a) x = static_cast<std::uint32_t>(x * inv_n % kMod);
  }
}

}  // namespace ntt

inline constexpr std::size_t kMaxIndicatorLength = std::size_t{1} << ntt::kMaxLog;

// Support of the convolution of two 0/1 vectors: every k with (p*q)[k] > 0,
// ascending. Counts never reach the modulus because they are bounded by the
// vector lengths, so the transform result is exact.
inline std::vector<std::size_t> indicator_convolve(std::span<const std::uint8_t> p, std::span<const std::uint8_t> q) {
  if (p.empty() || q.empty()) return {};
  const std::size_t out_len = p.size() + q.size() - 1;
  std::size_t n = 1;
  while (n < out_len) n <<= 1;
  if (n > kMaxIndicatorLength) throw std::length_error("indicator_convolve: transform length exceeds 2^23");
  std::vector<std::uint32_t> a(n, 0), b(n, 0);
  for (std::size_t i = 0; i < p.size(); ++i) a[i] = p[i] ? 1 : 0;
  for (std::size_t i = 0; i < q.size(); ++i) b[i] = q[i] ? 1 : 0;
  ntt::transform(a, false);
  ntt::transform(b, false);
  for (std::size_t i = 0; i < n; ++i) a[i] = static_cast<std::uint32_t>(std::uint64_t(a[i]) * b[i] % ntt::kMod);
  ntt::transform(a, true);
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < out_len; ++k) {
    if (a[k] != 0) nz.push_back(k);
  }
  return nz;
}

}  // namespace nearconv

#endif  // NEARCONV_NTT_HPP
