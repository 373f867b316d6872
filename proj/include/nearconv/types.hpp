#ifndef NEARCONV_TYPES_HPP
#define NEARCONV_TYPES_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nearconv {

using value_t = std::int64_t;
using index_t = std::int64_t;
using int128 = __int128;
using uint128 = unsigned __int128;

// Input magnitude bound. Padded sums and hull cross products stay inside
// 128-bit intermediates as long as every input entry satisfies |v| <= 2^40.
inline constexpr value_t kValueBound = value_t{1} << 40;

// Thrown when user-supplied data is malformed or out of bounds.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
  input_error(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

// An input point outside its declared band. Signals a relevance bug upstream.
class band_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nearconv

#endif  // NEARCONV_TYPES_HPP
