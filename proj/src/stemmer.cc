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

// Implementation of the Snowball English stemming algorithm
// (https://snowballstem.org/algorithms/english/stemmer.html).
//
// Positions are byte offsets. 'Y' marks a consonantal y between the prelude
// and the postlude.

#include "sdgtag/stemmer.h"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace sdgtag {
namespace {

bool IsVowel(char c) {
  switch (c) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
    case 'y':
      return true;
    default:
      return false;
  }
}

bool IsValidLiEnding(char c) {
  switch (c) {
    case 'c':
    case 'd':
    case 'e':
    case 'g':
    case 'h':
    case 'k':
    case 'm':
    case 'n':
    case 'r':
    case 't':
      return true;
    default:
      return false;
  }
}

bool IsDouble(std::string_view w) {
  if (w.size() < 2) return false;
  const char c = w.back();
  if (w[w.size() - 2] != c) return false;
  switch (c) {
    case 'b':
    case 'd':
    case 'f':
    case 'g':
    case 'm':
    case 'n':
    case 'p':
    case 'r':
    case 't':
      return true;
    default:
      return false;
  }
}

class Word {
 public:
  explicit Word(std::string text) : w_(std::move(text)) {}

  const std::string& str() const { return w_; }
  std::size_t size() const { return w_.size(); }

  bool EndsWith(std::string_view suffix) const {
    return w_.size() >= suffix.size() &&
           std::string_view(w_).substr(w_.size() - suffix.size()) == suffix;
  }

  // Start offset of `suffix`, assuming EndsWith(suffix).
  std::size_t SuffixStart(std::string_view suffix) const {
    return w_.size() - suffix.size();
  }

  void Replace(std::string_view suffix, std::string_view replacement) {
    w_.replace(SuffixStart(suffix), suffix.size(), replacement);
  }

  void Truncate(std::size_t new_size) { w_.resize(new_size); }
  void Append(std::string_view s) { w_.append(s); }

  bool InR1(std::size_t pos) const { return pos >= r1_; }
  bool InR2(std::size_t pos) const { return pos >= r2_; }
  std::size_t r1() const { return r1_; }

  // Returns true if the first `end` bytes end in a short syllable. A
  // trailing "past" also counts.
  bool EndsInShortSyllable(std::size_t end) const {
    if (end >= 4 && std::string_view(w_).substr(end - 4, 4) == "past") {
      return true;
    }
    if (end >= 3) {
      const char a = w_[end - 3];
      const char b = w_[end - 2];
      const char c = w_[end - 1];
      if (!IsVowel(a) && IsVowel(b) && !IsVowel(c) && c != 'w' && c != 'x' &&
          c != 'Y') {
        return true;
      }
    }
    if (end == 2) {
      return IsVowel(w_[0]) && !IsVowel(w_[1]);
    }
    return false;
  }

  bool ContainsVowel(std::size_t begin, std::size_t end) const {
    for (std::size_t i = begin; i < end; ++i) {
      if (IsVowel(w_[i])) return true;
    }
    return false;
  }

  void MarkRegions() {
    static constexpr std::array<std::string_view, 9> kPrefixes = {
        "arsen", "commun", "emerg", "gener", "inter",
        "later", "organ",  "past",  "univers"};
    r1_ = w_.size();
    r2_ = w_.size();
    std::size_t p = 0;
    bool have_r1 = false;
    for (std::string_view prefix : kPrefixes) {
      if (std::string_view(w_).substr(0, prefix.size()) == prefix) {
        p = prefix.size();
        have_r1 = true;
        break;
      }
    }
    if (!have_r1) {
      p = AfterVowelConsonant(0);
      if (p == std::string::npos) return;
    }
    r1_ = p;
    const std::size_t q = AfterVowelConsonant(p);
    if (q == std::string::npos) return;
    r2_ = q;
  }

  void SetY() {
    if (!w_.empty() && w_[0] == 'y') w_[0] = 'Y';
    for (std::size_t i = 1; i < w_.size(); ++i) {
      if (w_[i] == 'y' && IsVowel(w_[i - 1])) w_[i] = 'Y';
    }
  }

  void UnsetY() {
    for (char& c : w_) {
      if (c == 'Y') c = 'y';
    }
  }

 private:
  // Position just past the first non-vowel that follows a vowel at or after
  // `from`; npos if there is none.
  std::size_t AfterVowelConsonant(std::size_t from) const {
    std::size_t i = from;
    while (i < w_.size() && !IsVowel(w_[i])) ++i;
    while (i < w_.size() && IsVowel(w_[i])) ++i;
    if (i >= w_.size()) return std::string::npos;
    return i + 1;
  }

  std::string w_;
  std::size_t r1_ = 0;
  std::size_t r2_ = 0;
};

// Longest suffix of `w` among `candidates`, or an empty view.
template <std::size_t N>
std::string_view LongestSuffix(const Word& w,
                               const std::array<std::string_view, N>& cands) {
  std::string_view best;
  for (std::string_view s : cands) {
    if (s.size() > best.size() && w.EndsWith(s)) best = s;
  }
  return best;
}

bool Exception1(std::string_view word, std::string* out) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>,
                              15>
      kExceptions = {{{"skis", "ski"},
                      {"skies", "sky"},
                      {"idly", "idl"},
                      {"gently", "gentl"},
                      {"ugly", "ugli"},
                      {"early", "earli"},
                      {"only", "onli"},
                      {"singly", "singl"},
                      {"sky", "sky"},
                      {"news", "news"},
                      {"howe", "howe"},
                      {"atlas", "atlas"},
                      {"cosmos", "cosmos"},
                      {"bias", "bias"},
                      {"andes", "andes"}}};
  for (const auto& [from, to] : kExceptions) {
    if (word == from) {
      *out = std::string(to);
      return true;
    }
  }
  return false;
}

void Step0(Word& w) {
  static constexpr std::array<std::string_view, 3> kSuffixes = {"'s'", "'s",
                                                                 "'"};
  const std::string_view s = LongestSuffix(w, kSuffixes);
  if (!s.empty()) w.Truncate(w.SuffixStart(s));
}

void Step1a(Word& w) {
  static constexpr std::array<std::string_view, 6> kSuffixes = {
      "sses", "ied", "ies", "s", "us", "ss"};
  const std::string_view s = LongestSuffix(w, kSuffixes);
  if (s.empty()) return;
  const std::size_t start = w.SuffixStart(s);
  if (s == "sses") {
    w.Replace(s, "ss");
  } else if (s == "ied" || s == "ies") {
    w.Replace(s, start > 1 ? "i" : "ie");
  } else if (s == "s") {
    // A vowel somewhere before the letter preceding the s.
    if (start >= 2 && w.ContainsVowel(0, start - 1)) w.Truncate(start);
  }
}

bool WholeWordIs(const Word& w, std::size_t end, std::string_view what) {
  return end == what.size() && std::string_view(w.str()).substr(0, end) == what;
}

void Step1b(Word& w) {
  static constexpr std::array<std::string_view, 6> kSuffixes = {
      "eed", "eedly", "ed", "edly", "ing", "ingly"};
  const std::string_view s = LongestSuffix(w, kSuffixes);
  if (s.empty()) return;
  const std::size_t start = w.SuffixStart(s);
  if (s == "eed" || s == "eedly") {
    if (!w.InR1(start)) return;
    if (WholeWordIs(w, start, "succ") || WholeWordIs(w, start, "proc") ||
        WholeWordIs(w, start, "exc")) {
      return;
    }
    w.Replace(s, "ee");
    return;
  }
  if (s == "ing") {
    // "dying" -> "die"; "inning", "outing" and friends stay as they are.
    if (start == 2 && w.str()[1] == 'y' && !IsVowel(w.str()[0])) {
      w.Truncate(1);
      w.Append("ie");
      return;
    }
    for (std::string_view keep :
         {"even", "cann", "inn", "earr", "herr", "out"}) {
      if (WholeWordIs(w, start, keep)) return;
    }
  }
  if (!w.ContainsVowel(0, start)) return;
  w.Truncate(start);
  if (w.EndsWith("at") || w.EndsWith("bl") || w.EndsWith("iz")) {
    w.Append("e");
  } else if (IsDouble(w.str())) {
    // "added" -> "add", but "hopped" -> "hop".
    const char first = w.str()[0];
    const bool keep = w.size() == 3 && (first == 'a' || first == 'e' ||
                                        first == 'o');
    if (!keep) w.Truncate(w.size() - 1);
  } else if (w.r1() == w.size() && w.EndsInShortSyllable(w.size())) {
    w.Append("e");
  }
}

void Step1c(Word& w) {
  if (w.size() < 3) return;
  const char last = w.str().back();
  if (last != 'y' && last != 'Y') return;
  if (IsVowel(w.str()[w.size() - 2])) return;
  w.Truncate(w.size() - 1);
  w.Append("i");
}

void Step2(Word& w) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>,
                              25>
      kRules = {{{"tional", "tion"},  {"enci", "ence"},    {"anci", "ance"},
                 {"abli", "able"},    {"entli", "ent"},    {"izer", "ize"},
                 {"ization", "ize"},  {"ational", "ate"},  {"ation", "ate"},
                 {"ator", "ate"},     {"alism", "al"},     {"aliti", "al"},
                 {"alli", "al"},      {"fulness", "ful"},  {"ousli", "ous"},
                 {"ousness", "ous"},  {"iveness", "ive"},  {"iviti", "ive"},
                 {"biliti", "ble"},   {"bli", "ble"},      {"ogi", "og"},
                 {"fulli", "ful"},    {"lessli", "less"},  {"li", ""},
                 {"ogist", "og"}}};
  std::string_view best;
  std::string_view replacement;
  for (const auto& [suffix, repl] : kRules) {
    if (suffix.size() > best.size() && w.EndsWith(suffix)) {
      best = suffix;
      replacement = repl;
    }
  }
  if (best.empty()) return;
  const std::size_t start = w.SuffixStart(best);
  if (!w.InR1(start)) return;
  if (best == "ogi") {
    if (start == 0 || w.str()[start - 1] != 'l') return;
  } else if (best == "li") {
    if (start == 0 || !IsValidLiEnding(w.str()[start - 1])) return;
  }
  w.Replace(best, replacement);
}

void Step3(Word& w) {
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 9>
      kRules = {{{"tional", "tion"},
                 {"ational", "ate"},
                 {"alize", "al"},
                 {"icate", "ic"},
                 {"iciti", "ic"},
                 {"ical", "ic"},
                 {"ful", ""},
                 {"ness", ""},
                 {"ative", ""}}};
  std::string_view best;
  std::string_view replacement;
  for (const auto& [suffix, repl] : kRules) {
    if (suffix.size() > best.size() && w.EndsWith(suffix)) {
      best = suffix;
      replacement = repl;
    }
  }
  if (best.empty()) return;
  const std::size_t start = w.SuffixStart(best);
  if (!w.InR1(start)) return;
  if (best == "ative" && !w.InR2(start)) return;
  w.Replace(best, replacement);
}

void Step4(Word& w) {
  static constexpr std::array<std::string_view, 18> kSuffixes = {
      "al",   "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement",
      "ment", "ent",  "ism",  "ate", "iti", "ous",  "ive",  "ize", "ion"};
  const std::string_view s = LongestSuffix(w, kSuffixes);
  if (s.empty()) return;
  const std::size_t start = w.SuffixStart(s);
  if (!w.InR2(start)) return;
  if (s == "ion") {
    if (start == 0) return;
    const char prev = w.str()[start - 1];
    if (prev != 's' && prev != 't') return;
  }
  w.Truncate(start);
}

void Step5(Word& w) {
  if (w.EndsWith("e")) {
    const std::size_t start = w.size() - 1;
    if (w.InR2(start) || (w.InR1(start) && !w.EndsInShortSyllable(start))) {
      w.Truncate(start);
    }
  } else if (w.EndsWith("l")) {
    const std::size_t start = w.size() - 1;
    if (w.InR2(start) && start > 0 && w.str()[start - 1] == 'l') {
      w.Truncate(start);
    }
  }
}

}  // namespace

std::string SnowballStem(std::string_view word) {
  std::string out;
  if (Exception1(word, &out)) return out;
  if (word.size() < 3) return std::string(word);

  std::string text(word);
  if (text[0] == '\'') text.erase(0, 1);
  Word w(std::move(text));
  w.SetY();
  w.MarkRegions();

  Step0(w);
  Step1a(w);
  Step1b(w);
  Step1c(w);
  Step2(w);
  Step3(w);
  Step4(w);
  Step5(w);
  w.UnsetY();
  return w.str();
}

}  // namespace sdgtag
