// Copyright 2026 The coref-forge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COREF_FORGE_TEXT_H_
#define COREF_FORGE_TEXT_H_

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coref_forge {

inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAsciiAlpha(char c) { return IsAsciiUpper(c) || IsAsciiLower(c); }

inline std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (IsAsciiUpper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

inline std::string AsciiUpper(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (IsAsciiLower(c)) c = static_cast<char>(c - 'a' + 'A');
  }
  return out;
}

inline std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Splits on any run of spaces/tabs; empty fields are never produced.
inline std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline bool ParseNonNegativeInt(std::string_view s, int64_t& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end && out >= 0;
}

// Capitalization pattern of a token, judged on ASCII letters only.
enum class CasePattern { kLower, kTitle, kUpper, kMixed, kNone };

inline CasePattern DetectCase(std::string_view s) {
  int letters = 0, upper = 0;
  bool first_upper = false;
  for (char c : s) {
    if (!IsAsciiAlpha(c)) continue;
    if (letters == 0) first_upper = IsAsciiUpper(c);
    ++letters;
    if (IsAsciiUpper(c)) ++upper;
  }
  if (letters == 0) return CasePattern::kNone;
  if (upper == 0) return CasePattern::kLower;
  if (upper == 1 && first_upper) return CasePattern::kTitle;
  if (upper == letters) return CasePattern::kUpper;
  return CasePattern::kMixed;
}

// Renders a lowercase form in the given pattern. kMixed and kNone leave the
// form lowercase.
inline std::string ApplyCase(std::string_view lower_form, CasePattern p) {
  switch (p) {
    case CasePattern::kUpper:
      return AsciiUpper(lower_form);
    case CasePattern::kTitle: {
      std::string out(lower_form);
      for (char& c : out) {
        if (IsAsciiAlpha(c)) {
          if (IsAsciiLower(c)) c = static_cast<char>(c - 'a' + 'A');
          break;
        }
      }
      return out;
    }
    default:
      return std::string(lower_form);
  }
}

}  // namespace coref_forge

#endif  // COREF_FORGE_TEXT_H_
