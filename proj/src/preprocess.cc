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

#include "sdgtag/preprocess.h"

#include <array>
#include <optional>
#include <utility>

#include "resources.h"
#include "sdgtag/errors.h"
#include "sdgtag/stemmer.h"
#include "text_util.h"

namespace sdgtag {
namespace {

using internal::AppendUtf8;
using internal::DecodeUtf8;
using internal::IsAsciiAlnum;
using internal::IsAsciiDigit;
using internal::IsAsciiSpace;

char32_t ToLower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 32;
  if (c < 0x80) return c;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  if (c >= 0x100 && c <= 0x137) return c | 1;
  if ((c >= 0x139 && c <= 0x148) || (c >= 0x179 && c <= 0x17E)) {
    return (c & 1) ? c + 1 : c;
  }
  if (c >= 0x14A && c <= 0x177) return c | 1;
  if (c == 0x178) return 0xFF;
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 32;
  if (c >= 0x410 && c <= 0x42F) return c + 32;
  if (c >= 0x400 && c <= 0x40F) return c + 80;
  return c;
}

std::string Lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if (static_cast<unsigned char>(s[i]) < 0x80) {
      const char c = s[i++];
      out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
      continue;
    }
    AppendUtf8(ToLower(DecodeUtf8(s, &i)), &out);
  }
  return out;
}

// Bytes that can be part of a word for the purpose of the goal rewrites.
bool IsWordByte(char c) {
  return IsAsciiAlnum(c) || static_cast<unsigned char>(c) >= 0x80;
}

bool ConsumeLiteral(std::string_view s, std::size_t* pos, std::string_view lit) {
  if (s.substr(*pos, lit.size()) != lit) return false;
  *pos += lit.size();
  return true;
}

bool ConsumeSpaces(std::string_view s, std::size_t* pos) {
  const std::size_t start = *pos;
  while (*pos < s.size() && IsAsciiSpace(s[*pos])) ++*pos;
  return *pos > start;
}

// Matches "sustainable development goal" or "...goals" at `start`, which
// must be a word start. Returns the end offset on success.
std::optional<std::size_t> MatchGoalPhrase(std::string_view s,
                                           std::size_t start) {
  std::size_t p = start;
  if (!ConsumeLiteral(s, &p, "sustainable")) return std::nullopt;
  if (!ConsumeSpaces(s, &p)) return std::nullopt;
  if (!ConsumeLiteral(s, &p, "development")) return std::nullopt;
  if (!ConsumeSpaces(s, &p)) return std::nullopt;
  if (!ConsumeLiteral(s, &p, "goal")) return std::nullopt;
  if (p < s.size() && s[p] == 's') ++p;
  if (p < s.size() && IsWordByte(s[p])) return std::nullopt;
  return p;
}

std::string ReplaceGoalPhrase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    if ((i == 0 || !IsWordByte(s[i - 1])) && s[i] == 's') {
      if (const auto end = MatchGoalPhrase(s, i)) {
        out += "sdg";
        i = *end;
        continue;
      }
    }
    out.push_back(s[i++]);
  }
  return out;
}

struct Span {
  std::size_t begin;
  std::size_t end;
};

std::optional<int> GoalNumber(std::string_view word) {
  if (word.empty() || word.size() > 2 || word[0] == '0') return std::nullopt;
  int n = 0;
  for (char c : word) {
    if (!IsAsciiDigit(c)) return std::nullopt;
    n = n * 10 + (c - '0');
  }
  if (n < 1 || n > 17) return std::nullopt;
  return n;
}

std::optional<int> GoalOrdinal(std::string_view word) {
  static constexpr std::array<std::string_view, 17> kWords = {
      "first",      "second",     "third",      "fourth",     "fifth",
      "sixth",      "seventh",    "eighth",     "ninth",      "tenth",
      "eleventh",   "twelfth",    "thirteenth", "fourteenth", "fifteenth",
      "sixteenth",  "seventeenth"};
  for (std::size_t k = 0; k < kWords.size(); ++k) {
    if (word == kWords[k]) return static_cast<int>(k + 1);
  }
  if (word.size() < 3) return std::nullopt;
  const std::string_view suffix = word.substr(word.size() - 2);
  const auto n = GoalNumber(word.substr(0, word.size() - 2));
  if (!n) return std::nullopt;
  const int last = *n % 10;
  const bool teen = *n >= 11 && *n <= 13;
  std::string_view expected = "th";
  if (!teen && last == 1) expected = "st";
  if (!teen && last == 2) expected = "nd";
  if (!teen && last == 3) expected = "rd";
  if (suffix != expected) return std::nullopt;
  return n;
}

bool SingleSpaceGap(std::string_view s, const Span& left, const Span& right) {
  return right.begin == left.end + 1 && IsAsciiSpace(s[left.end]);
}

std::string FuseGoalNumbers(std::string_view s) {
  std::vector<Span> spans;
  for (std::size_t i = 0; i < s.size();) {
    if (!IsWordByte(s[i])) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < s.size() && IsWordByte(s[i])) ++i;
    spans.push_back({begin, i});
  }
  auto text = [&](std::size_t k) {
    return s.substr(spans[k].begin, spans[k].end - spans[k].begin);
  };

  struct Edit {
    std::size_t begin;
    std::size_t end;
    int goal;
  };
  std::vector<Edit> edits;
  std::size_t consumed_until = 0;  // spans before this index are taken
  for (std::size_t k = 0; k < spans.size(); ++k) {
    if (text(k) != "sdg") continue;
    if (k + 1 < spans.size() && SingleSpaceGap(s, spans[k], spans[k + 1])) {
      if (const auto n = GoalNumber(text(k + 1))) {
        const std::size_t e = spans[k + 1].end;
        const bool decimal = e + 1 < s.size() &&
                             (s[e] == '.' || s[e] == ',') &&
                             IsAsciiDigit(s[e + 1]);
        if (!decimal) {
          edits.push_back({spans[k].begin, e, *n});
          consumed_until = k + 2;
          ++k;
          continue;
        }
      }
    }
    if (k >= 1 && k - 1 >= consumed_until &&
        SingleSpaceGap(s, spans[k - 1], spans[k])) {
      if (const auto n = GoalOrdinal(text(k - 1))) {
        edits.push_back({spans[k - 1].begin, spans[k].end, *n});
        consumed_until = k + 1;
      }
    }
  }

  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  for (const Edit& e : edits) {
    out.append(s.substr(pos, e.begin - pos));
    out += "sdg";
    out += std::to_string(e.goal);
    pos = e.end;
  }
  out.append(s.substr(pos));
  return out;
}

enum class CharClass { kWord, kSpace, kHyphen, kApostrophe, kDigitJoiner, kPunct };

CharClass Classify(char32_t c) {
  if (c < 0x80) {
    const char a = static_cast<char>(c);
    if (IsAsciiAlnum(a)) return CharClass::kWord;
    if (IsAsciiSpace(a)) return CharClass::kSpace;
    if (a == '-') return CharClass::kHyphen;
    if (a == '\'') return CharClass::kApostrophe;
    if (a == '.' || a == ',') return CharClass::kDigitJoiner;
    return CharClass::kPunct;
  }
  if (c == 0xA0 || c == 0x1680 || (c >= 0x2000 && c <= 0x200B) ||
      c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F ||
      c == 0x3000 || c == 0xFEFF) {
    return CharClass::kSpace;
  }
  if (c == 0x2010 || c == 0x2011) return CharClass::kHyphen;
  if (c == 0x2018 || c == 0x2019) return CharClass::kApostrophe;
  if ((c >= 0xA1 && c <= 0xBF) || c == 0xD7 || c == 0xF7 ||
      (c >= 0x2012 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
      (c >= 0x20A0 && c <= 0x20CF) || (c >= 0x2190 && c <= 0x23FF) ||
      (c >= 0x2500 && c <= 0x27BF) || (c >= 0x3001 && c <= 0x3003) ||
      (c >= 0xFF01 && c <= 0xFF0F) || c == 0xFFFD) {
    return CharClass::kPunct;
  }
  return CharClass::kWord;
}

void SplitClitic(std::string token, std::vector<std::string>* out) {
  static constexpr std::array<std::string_view, 6> kClitics = {
      "'s", "'re", "'ve", "'ll", "'d", "'m"};
  std::string_view t(token);
  if (t.size() > 3 && t.substr(t.size() - 3) == "n't") {
    out->emplace_back(t.substr(0, t.size() - 3));
    out->emplace_back("n't");
    return;
  }
  for (std::string_view clitic : kClitics) {
    if (t.size() > clitic.size() && t.substr(t.size() - clitic.size()) == clitic) {
      out->emplace_back(t.substr(0, t.size() - clitic.size()));
      out->emplace_back(clitic);
      return;
    }
  }
  out->push_back(std::move(token));
}

}  // namespace

std::string Normalize(std::string_view raw) {
  return FuseGoalNumbers(ReplaceGoalPhrase(Lowercase(raw)));
}

bool IsPunctuation(std::string_view token) {
  for (char c : token) {
    if (IsAsciiAlnum(c) || static_cast<unsigned char>(c) >= 0x80) return false;
  }
  return true;
}

std::vector<std::string> Tokenize(std::string_view normalized) {
  std::vector<std::pair<char32_t, CharClass>> chars;
  chars.reserve(normalized.size());
  for (std::size_t i = 0; i < normalized.size();) {
    const char32_t cp = DecodeUtf8(normalized, &i);
    chars.emplace_back(cp, Classify(cp));
  }

  std::vector<std::string> raw_tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) raw_tokens.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t k = 0; k < chars.size(); ++k) {
    const auto [cp, cls] = chars[k];
    const bool next_is_word =
        k + 1 < chars.size() && chars[k + 1].second == CharClass::kWord;
    switch (cls) {
      case CharClass::kWord:
        AppendUtf8(cp, &current);
        break;
      case CharClass::kHyphen:
        if (!current.empty() && next_is_word) {
          current.push_back('-');
        } else {
          flush();
        }
        break;
      case CharClass::kApostrophe:
        if (!current.empty() && next_is_word) {
          current.push_back('\'');
        } else {
          flush();
        }
        break;
      case CharClass::kDigitJoiner:
        if (!current.empty() && IsAsciiDigit(current.back()) &&
            k + 1 < chars.size() && chars[k + 1].first < 0x80 &&
            IsAsciiDigit(static_cast<char>(chars[k + 1].first))) {
          AppendUtf8(cp, &current);
        } else {
          flush();
        }
        break;
      case CharClass::kSpace:
      case CharClass::kPunct:
        flush();
        break;
    }
  }
  flush();

  std::vector<std::string> tokens;
  tokens.reserve(raw_tokens.size());
  for (std::string& t : raw_tokens) SplitClitic(std::move(t), &tokens);
  std::erase_if(tokens, [](const std::string& t) { return IsPunctuation(t); });
  return tokens;
}

const StopWords& StopWords::Bundled() {
  static const StopWords kBundled = Parse(internal::BundledStopWords());
  return kBundled;
}

StopWords StopWords::FromFile(const std::filesystem::path& path) {
  return Parse(internal::ReadFile(path));
}

StopWords StopWords::Parse(std::string_view content) {
  StopWords result;
  for (std::string_view line : internal::SplitLines(content)) {
    line = internal::Trim(line);
    if (!line.empty()) result.words_.emplace(line);
  }
  return result;
}

bool StopWords::Contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

const Lemmatizer& Lemmatizer::Bundled() {
  static const Lemmatizer kBundled = Parse(internal::BundledLemmaExceptions());
  return kBundled;
}

Lemmatizer Lemmatizer::FromFile(const std::filesystem::path& path) {
  return Parse(internal::ReadFile(path));
}

Lemmatizer Lemmatizer::Parse(std::string_view content) {
  Lemmatizer result;
  std::size_t line_no = 0;
  for (std::string_view line : internal::SplitLines(content)) {
    ++line_no;
    line = internal::Trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = internal::SplitWhitespace(line);
    if (fields.size() != 2) {
      throw DataError("lemma lexicon line " + std::to_string(line_no) +
                      ": expected 'form<TAB>lemma'");
    }
    result.lemmas_.emplace(std::string(fields[0]), std::string(fields[1]));
  }
  return result;
}

std::string Lemmatizer::Lemma(std::string_view word) const {
  const auto it = lemmas_.find(std::string(word));
  return it == lemmas_.end() ? std::string(word) : it->second;
}

Preprocessor::Preprocessor()
    : Preprocessor(StopWords::Bundled(), Lemmatizer::Bundled()) {}

Preprocessor::Preprocessor(StopWords stop_words, Lemmatizer lemmatizer)
    : stop_words_(std::move(stop_words)), lemmatizer_(std::move(lemmatizer)) {}

ProcessedDocument Preprocessor::Process(std::string_view raw) const {
  ProcessedDocument doc;
  for (const std::string& token : Tokenize(Normalize(raw))) {
    if (stop_words_.Contains(token)) continue;
    const std::string lemma = lemmatizer_.Lemma(token);
    if (stop_words_.Contains(lemma)) continue;
    std::string stem = SnowballStem(lemma);
    if (stem.empty() || IsPunctuation(stem) || stop_words_.Contains(stem)) {
      continue;
    }
    doc.tokens.push_back(std::move(stem));
  }
  return doc;
}

std::vector<std::string> Preprocessor::SurfaceTokens(std::string_view raw) const {
  return Tokenize(Normalize(raw));
}

}  // namespace sdgtag
