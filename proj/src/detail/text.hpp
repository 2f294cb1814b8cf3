// Copyright 2026 The omlprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oml/error.hpp"

namespace oml::detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Splits into whitespace-separated tokens, dropping `#` comments and blank
// lines. Accepts LF or CRLF.
inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline std::size_t parse_index(const Line& line, std::size_t token) {
  const Token& t = line.tokens.at(token);
  std::size_t value = 0;
  const char* end = t.text.data() + t.text.size();
  auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line.number, t.column,
                     "expected a non-negative integer, got '" + std::string(t.text) + "'");
  }
  if (value > 0xffffffffULL) throw ParseError(line.number, t.column, "index too large");
  return value;
}

inline double parse_double(const Line& line, std::size_t token) {
  const Token& t = line.tokens.at(token);
  std::string copy(t.text);
  char* end = nullptr;
  double value = std::strtod(copy.c_str(), &end);
  if (end != copy.c_str() + copy.size() || copy.empty()) {
    throw ParseError(line.number, t.column, "expected a number, got '" + copy + "'");
  }
  return value;
}

}  // namespace oml::detail
