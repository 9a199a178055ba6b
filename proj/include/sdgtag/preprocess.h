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

#ifndef SDGTAG_PREPROCESS_H_
#define SDGTAG_PREPROCESS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace sdgtag {

// Stemmed, stop-word-free tokens of a text, in input order.
struct ProcessedDocument {
  std::vector<std::string> tokens;

  std::size_t token_count() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  bool operator==(const ProcessedDocument&) const = default;
};

// Lowercases `raw` and rewrites explicit goal mentions:
//   "sustainable development goal(s)"  -> "sdg"
//   "sdg 5", "sdg5"                    -> "sdg5"   (cardinal 1..17 following)
//   "second sdg", "2nd sdg"            -> "sdg2"   (ordinal 1st..17th preceding)
// Cardinals and ordinals may be separated from "sdg" by at most one
// whitespace character. The function is idempotent.
std::string Normalize(std::string_view raw);

// Splits normalized text into surface tokens on whitespace and punctuation.
// Hyphens and apostrophes inside a word, and '.' or ',' between digits, stay
// attached. English clitics ("'s", "n't", "'re", ...) become their own
// tokens. Curly apostrophes are folded to '\''.
std::vector<std::string> Tokenize(std::string_view normalized);

// True if `token` has no letter or digit (ASCII) and no non-ASCII byte.
bool IsPunctuation(std::string_view token);

// A set of lowercase stop words, one per line in its file form.
class StopWords {
 public:
  StopWords() = default;

  // The frozen English list shipped in data/stopwords.txt.
  static const StopWords& Bundled();
  static StopWords FromFile(const std::filesystem::path& path);
  static StopWords Parse(std::string_view content);

  bool Contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Dictionary lemmatizer for irregular English nouns and verbs; unknown words
// pass through unchanged. File form: "form<TAB>lemma" per line.
class Lemmatizer {
 public:
  Lemmatizer() = default;

  static const Lemmatizer& Bundled();
  static Lemmatizer FromFile(const std::filesystem::path& path);
  static Lemmatizer Parse(std::string_view content);

  std::string Lemma(std::string_view word) const;
  std::size_t size() const { return lemmas_.size(); }

 private:
  std::unordered_map<std::string, std::string> lemmas_;
};

// The text pipeline shared by corpus documents and queries:
// normalize, tokenize, lemmatize, stem, then drop stop words and
// punctuation.
class Preprocessor {
 public:
  // Uses the bundled stop-word list and lemma lexicon.
  Preprocessor();
  Preprocessor(StopWords stop_words, Lemmatizer lemmatizer);

  ProcessedDocument Process(std::string_view raw) const;

  // Normalized, unstemmed tokens with stop words kept; the surface that
  // word embeddings are looked up on.
  std::vector<std::string> SurfaceTokens(std::string_view raw) const;

  const StopWords& stop_words() const { return stop_words_; }
  const Lemmatizer& lemmatizer() const { return lemmatizer_; }

 private:
  StopWords stop_words_;
  Lemmatizer lemmatizer_;
};

}  // namespace sdgtag

#endif  // SDGTAG_PREPROCESS_H_
