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

#ifndef SDGTAG_TFIDF_H_
#define SDGTAG_TFIDF_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdgtag/preprocess.h"

namespace sdgtag {

inline constexpr int kNumGoals = 17;
inline constexpr std::size_t kCorpusSize = 2 * kNumGoals;

struct SdgDefinition {
  int id = 0;
  std::string title;
  std::string description;
};

// Parses a JSON array of {"id", "title", "description"} objects.
std::vector<SdgDefinition> ParseSdgDefinitions(std::string_view json);
std::vector<SdgDefinition> LoadSdgDefinitions(const std::filesystem::path& path);
// The official goal statements shipped in data/sdg_definitions.json.
const std::vector<SdgDefinition>& BundledSdgDefinitions();

// "sdg<id>".
std::string GoalToken(int sdg_id);

enum class DocumentKind { kClass, kBias };

struct CorpusDocument {
  int sdg_id = 0;
  DocumentKind kind = DocumentKind::kClass;
  // Raw text: description + " sdg<id>" for class documents, "sdg<id>" for
  // bias documents.
  std::string text;
  ProcessedDocument processed;
};

// The 34 documents, interleaved (class_1, bias_1, class_2, bias_2, ...).
class Corpus {
 public:
  // Throws DuplicateSdgId or MissingSdgId unless `defs` holds ids 1..17
  // exactly once each.
  static Corpus Build(std::span<const SdgDefinition> defs,
                      const Preprocessor& preprocessor);

  static constexpr std::size_t ClassIndex(int sdg_id) {
    return 2 * static_cast<std::size_t>(sdg_id - 1);
  }
  static constexpr std::size_t BiasIndex(int sdg_id) {
    return ClassIndex(sdg_id) + 1;
  }

  const std::vector<CorpusDocument>& documents() const { return documents_; }
  const CorpusDocument& operator[](std::size_t i) const { return documents_[i]; }
  std::size_t size() const { return documents_.size(); }
  std::vector<ProcessedDocument> ProcessedDocuments() const;

 private:
  std::vector<CorpusDocument> documents_;
};

// Sparse vector over a model vocabulary; entries sorted by index, no zeros.
struct SparseVector {
  std::vector<std::pair<std::uint32_t, double>> entries;

  bool empty() const { return entries.empty(); }
  double Norm() const;
  double Get(std::uint32_t index) const;
};

double SparseDot(const SparseVector& a, const SparseVector& b);

// Cosine similarity; 0 when either vector is empty.
double SparseCosine(const SparseVector& a, const SparseVector& b);

// TF-IDF model with a vocabulary fixed at build time.
//
// Weights are raw term count times the smoothed inverse document frequency
//   idf(t) = ln((1 + N) / (1 + df(t))) + 1,
// and every vector is L2-normalized.
class TfIdfModel {
 public:
  static constexpr int kFormatVersion = 1;

  // Throws EmptyCorpus if `documents` is empty.
  static TfIdfModel Build(std::span<const ProcessedDocument> documents);
  static TfIdfModel Build(const Corpus& corpus);

  // Out-of-vocabulary tokens are ignored; may return an empty vector.
  SparseVector Vectorize(const ProcessedDocument& doc) const;

  // Cosine of `query` against every document vector.
  std::vector<double> Similarities(const ProcessedDocument& query) const;

  // Index of `token` in the vocabulary, or -1.
  long IndexOf(std::string_view token) const;
  double Idf(std::string_view token) const;

  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  const std::vector<double>& idf() const { return idf_; }
  const std::vector<SparseVector>& doc_vectors() const { return doc_vectors_; }
  std::size_t num_documents() const { return doc_vectors_.size(); }

  // Versioned JSON dump: {"format", "version", "num_documents",
  // "vocabulary", "idf", "doc_vectors": [[[index, weight], ...], ...]}.
  std::string ToJson() const;
  static TfIdfModel FromJson(std::string_view json);

 private:
  std::vector<std::string> vocabulary_;  // sorted
  std::vector<double> idf_;
  std::vector<SparseVector> doc_vectors_;
};

}  // namespace sdgtag

#endif  // SDGTAG_TFIDF_H_
