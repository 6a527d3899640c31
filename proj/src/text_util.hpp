#pragma once

// Small line-oriented helpers shared by the text formats.

#include <cctype>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ordramsey::text {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Splits "k1=v1 k2=v2 ... kn=rest" into {v1, ..., rest}. Every value but the
/// last is a single whitespace-free token; the last runs to end of line, so
/// it may hold an ordinal with spaces.
inline std::vector<std::string_view> split_keyed(std::string_view line,
                                                 std::initializer_list<std::string_view> keys) {
  std::vector<std::string_view> out;
  std::string_view rest = trim(line);
  std::size_t i = 0;
  for (auto key : keys) {
    const bool last = ++i == keys.size();
    if (rest.substr(0, key.size()) != key || rest.substr(key.size(), 1) != "=") {
      throw std::invalid_argument("expected '" + std::string(key) + "=' in line: '" +
                                  std::string(line) + "'");
    }
    rest.remove_prefix(key.size() + 1);
    if (last) {
      out.push_back(trim(rest));
      break;
    }
    std::size_t end = 0;
    while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
    out.push_back(rest.substr(0, end));
    rest = trim(rest.substr(end));
  }
  return out;
}

/// Whitespace-separated tokens.
inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace ordramsey::text
