/*
 * Copyright 2026 The sdgtag Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SDGTAG_SRC_TEXT_UTIL_H_
#define SDGTAG_SRC_TEXT_UTIL_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdgtag::internal {

inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

inline bool IsAsciiAlnum(char c) {
  return IsAsciiDigit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Decodes one code point starting at `*pos` and advances `*pos`. Malformed
// sequences decode to U+FFFD and consume a single byte.
char32_t DecodeUtf8(std::string_view s, std::size_t* pos);
void AppendUtf8(char32_t cp, std::string* out);

std::string_view Trim(std::string_view s);

// Splits on '\n', dropping a trailing '\r' from each line. A final empty
// line after the last '\n' is not reported.
std::vector<std::string_view> SplitLines(std::string_view s);

// Splits on runs of ASCII whitespace.
std::vector<std::string_view> SplitWhitespace(std::string_view s);

std::optional<double> ParseDouble(std::string_view s);
std::optional<long long> ParseInt(std::string_view s);

// Shortest decimal representation that round-trips to the same double.
std::string FormatDouble(double value);

// Throws DataError if the file cannot be read.
std::string ReadFile(const std::filesystem::path& path);

}  // namespace sdgtag::internal

#endif  // SDGTAG_SRC_TEXT_UTIL_H_
