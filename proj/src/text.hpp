#pragma once

// Line and token helpers shared by the text parsers.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nsw2v/core.hpp"

namespace nsw2v::text {

/// Splits on LF. A single trailing LF does not produce an extra empty line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

/// Splits on single spaces. Rejects leading, trailing or doubled spaces.
inline std::vector<std::string_view> split_tokens(std::string_view line, std::string_view what) {
  std::vector<std::string_view> tokens;
  if (line.empty()) return tokens;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(' ', start);
    const std::string_view tok =
        line.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (tok.empty()) throw ParseError(std::string(what) + ": stray space in '" + std::string(line) + "'");
    tokens.push_back(tok);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return tokens;
}

template <typename T>
T parse_number(std::string_view tok, std::string_view what) {
  T value{};
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw ParseError(std::string(what) + ": bad number '" + std::string(tok) + "'");
  return value;
}

/// Parses a strictly increasing list of indices below `bound`.
inline std::vector<std::size_t> parse_index_set(std::string_view line, std::size_t bound,
                                                std::string_view what) {
  std::vector<std::size_t> out;
  for (auto tok : split_tokens(line, what)) {
    const auto idx = parse_number<std::size_t>(tok, what);
    if (idx >= bound)
      throw ParseError(std::string(what) + ": index " + std::to_string(idx) + " out of range");
    if (!out.empty() && idx <= out.back())
      throw ParseError(std::string(what) + ": indices must be strictly increasing");
    out.push_back(idx);
  }
  return out;
}

inline std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(idx[k]);
  }
  return s;
}

}  // namespace nsw2v::text
