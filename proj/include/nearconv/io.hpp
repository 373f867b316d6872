#ifndef NEARCONV_IO_HPP
#define NEARCONV_IO_HPP

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "knapsack.hpp"
#include "seq.hpp"
#include "types.hpp"

namespace nearconv::io {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t b = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

inline value_t parse_int(std::string_view tok, std::size_t line, const char* what) {
  value_t v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || p != end) {
    throw input_error(std::string("expected integer ") + what + ", got '" + std::string(tok) + "'", line);
  }
  return v;
}

inline void check_range(value_t v, value_t lo, value_t hi, std::size_t line, const char* what) {
  if (v < lo || v > hi) {
    throw input_error(std::string(what) + " " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]",
                      line);
  }
}

// Non-blank lines with their 1-based line numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(no, line);
  }
  return out;
}

}  // namespace detail

inline constexpr std::size_t kMaxLength = std::size_t{1} << 26;

// "LEN OFFSET" on the first line, then LEN integers spread over any lines.
inline IntSeq read_sequence(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw input_error("empty sequence file", 1);
  const auto head = detail::split_ws(lines[0].second);
  if (head.size() != 2) throw input_error("header must be 'LEN OFFSET'", lines[0].first);
  const value_t len = detail::parse_int(head[0], lines[0].first, "LEN");
  const value_t off = detail::parse_int(head[1], lines[0].first, "OFFSET");
  detail::check_range(len, 1, static_cast<value_t>(kMaxLength), lines[0].first, "LEN");
  detail::check_range(off, 0, kValueBound, lines[0].first, "OFFSET");
  std::vector<value_t> v;
  v.reserve(static_cast<std::size_t>(len));
  std::size_t last_line = lines[0].first;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    for (auto tok : detail::split_ws(lines[l].second)) {
      if (static_cast<value_t>(v.size()) == len) throw input_error("more than LEN values", lines[l].first);
      const value_t x = detail::parse_int(tok, lines[l].first, "value");
      detail::check_range(x, -kValueBound, kValueBound, lines[l].first, "value");
      v.push_back(x);
    }
    last_line = lines[l].first;
  }
  if (static_cast<value_t>(v.size()) != len) {
    throw input_error("expected " + std::to_string(len) + " values, found " + std::to_string(v.size()), last_line);
  }
  return IntSeq(std::move(v), off);
}

inline void write_sequence(std::ostream& out, const IntSeq& s) {
  out << s.size() << ' ' << s.offset() << '\n';
  for (std::size_t i = 0; i < s.size(); ++i) out << s[i] << (i + 1 == s.size() ? '\n' : ' ');
}

// "n W" on the first line, then one "p w" line per item.
inline KnapsackInstance read_instance(std::istream& in) {
  const auto lines = detail::content_lines(in);
  if (lines.empty()) throw input_error("empty instance file", 1);
  const auto head = detail::split_ws(lines[0].second);
  if (head.size() != 2) throw input_error("header must be 'n W'", lines[0].first);
  const value_t n = detail::parse_int(head[0], lines[0].first, "n");
  const value_t W = detail::parse_int(head[1], lines[0].first, "W");
  detail::check_range(n, 1, value_t{1} << 24, lines[0].first, "n");
  detail::check_range(W, 0, kValueBound, lines[0].first, "W");
  KnapsackInstance inst;
  inst.capacity = W;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const std::size_t no = lines[l].first;
    if (static_cast<value_t>(inst.items.size()) == n) throw input_error("more than n item lines", no);
    const auto tok = detail::split_ws(lines[l].second);
    if (tok.size() != 2) throw input_error("item line must be 'p w'", no);
    const value_t p = detail::parse_int(tok[0], no, "profit");
    const value_t w = detail::parse_int(tok[1], no, "weight");
    detail::check_range(p, 1, kValueBound, no, "profit");
    detail::check_range(w, 1, kValueBound, no, "weight");
    inst.items.push_back({p, w});
  }
  if (static_cast<value_t>(inst.items.size()) != n) {
    throw input_error("expected " + std::to_string(n) + " items, found " + std::to_string(inst.items.size()),
                      lines.back().first);
  }
  const long double total = static_cast<long double>(inst.pmax()) * static_cast<long double>(n);
  if (total > static_cast<long double>(value_t{1} << 62)) throw input_error("total profit may overflow 62 bits");
  return inst;
}

inline void write_instance(std::ostream& out, const KnapsackInstance& inst) {
  out << inst.n() << ' ' << inst.capacity << '\n';
  for (const auto& it : inst.items) out << it.profit << ' ' << it.weight << '\n';
}

// "OPT v" and, on request, "ITEMS" with sorted 1-based indices.
inline void write_solution(std::ostream& out, const KnapsackSolution& s, bool with_items) {
  out << "OPT " << s.value << '\n';
  if (with_items) {
    out << "ITEMS";
    for (std::size_t i : s.chosen) out << ' ' << i + 1;
    out << '\n';
  }
}

}  // namespace nearconv::io

#endif  // NEARCONV_IO_HPP
