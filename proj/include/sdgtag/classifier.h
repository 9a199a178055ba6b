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

#ifndef SDGTAG_CLASSIFIER_H_
#define SDGTAG_CLASSIFIER_H_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdgtag/embeddings.h"
#include "sdgtag/preprocess.h"
#include "sdgtag/similarity.h"
#include "sdgtag/tfidf.h"

namespace sdgtag {

enum class Strategy {
  kCdmDan,
  kCdmTransformer,
  kAweBaseline,
  kUseDanBaseline,
  kUseTransformerBaseline,
};

inline constexpr std::array<Strategy, 5> kAllStrategies = {
    Strategy::kCdmDan, Strategy::kCdmTransformer, Strategy::kAweBaseline,
    Strategy::kUseDanBaseline, Strategy::kUseTransformerBaseline};

std::string_view StrategyName(Strategy s);
// Accepts cdm_dan, cdm_transformer, awe_baseline, use_dan_baseline and
// use_transformer_baseline; throws DataError otherwise.
Strategy ParseStrategy(std::string_view name);

struct StrategySpec {
  Strategy strategy = Strategy::kCdmDan;
  EncoderTag encoder = EncoderTag::kDan;
  bool uses_tfidf = true;
  bool uses_topic_weight = true;

  static StrategySpec Of(Strategy s);
  std::string_view name() const { return StrategyName(strategy); }
};

struct ClassifierOptions {
  CombineVariant combine = CombineVariant::kFormula;
  TopicWeightVariant topic_weight = TopicWeightVariant::kSquareOfMean;
};

// W = C * (1 + log2(token_count)); W = C when token_count is 0.
std::vector<double> LogLengthScale(std::span<const double> C,
                                   std::size_t token_count);

// B[k-1] = W[class_k] + W[bias_k] for k = 1..17. `W` must have 34 entries.
std::vector<double> BiasedSimilarity(std::span<const double> W);

// Returns B - mean(B); stores the mean in `*mean` when given.
std::vector<double> Center(std::span<const double> B, double* mean = nullptr);

struct Label {
  int sdg_id = 0;
  double score = 0.0;
  bool operator==(const Label&) const = default;
};

struct ClassificationResult {
  // Descending by score, ties by ascending sdg_id.
  std::vector<Label> labels;

  bool is_unrelated() const { return labels.empty(); }
  std::vector<int> sdg_ids() const;
  bool operator==(const ClassificationResult&) const = default;
};

// Keeps the classes whose centered score is strictly above `threshold`.
// `centered[k-1]` is the score of SDG k.
ClassificationResult ThresholdRank(std::span<const double> centered,
                                   double threshold);

// Everything a threshold decision needs; independent of the threshold.
struct QueryScores {
  std::size_t token_count = 0;
  std::vector<double> centered;  // 17 entries, SDG k at index k-1
};

// Every intermediate quantity of one classification.
struct ClassificationTrace {
  ProcessedDocument processed;
  SimilarityBundle similarities;
  std::vector<double> W;
  double L = 0.0;
  std::vector<double> B;  // before centering
  double M = 0.0;
  std::vector<double> centered;
  double threshold = 0.0;
  ClassificationResult result;
};

// The resources a classifier draws on. Only `preprocessor` and `corpus`
// are mandatory; each strategy checks for what it needs.
struct Models {
  Preprocessor preprocessor;
  Corpus corpus;
  std::optional<TfIdfModel> tfidf;
  std::optional<EmbeddingTable> word_table;
  std::optional<SentenceCache> dan_cache;
  std::optional<SentenceCache> transformer_cache;

  // Corpus from `defs` through the bundled preprocessor, TF-IDF built
  // in-process, no embeddings.
  static Models FromDefinitions(std::span<const SdgDefinition> defs);

  const SentenceCache* cache(EncoderTag tag) const;
};

class Classifier {
 public:
  explicit Classifier(std::shared_ptr<const Models> models,
                      ClassifierOptions options = {});

  ClassificationTrace Explain(std::string_view query, const StrategySpec& spec,
                              double threshold) const;
  QueryScores Score(std::string_view query, const StrategySpec& spec) const;
  ClassificationResult Classify(std::string_view query,
                                const StrategySpec& spec,
                                double threshold) const;

  // Scores every query on up to `workers` threads (0 = hardware
  // concurrency). Results keep input order. Throws CacheMiss listing all
  // missing digests before any query is scored.
  std::vector<QueryScores> ScoreBatch(std::span<const std::string> queries,
                                      const StrategySpec& spec,
                                      std::size_t workers) const;

  // Sorted, distinct sentence-cache digests that `spec` would need for
  // `queries` (corpus texts included) and that are absent.
  std::vector<std::string> MissingDigests(std::span<const std::string> queries,
                                          const StrategySpec& spec) const;

  // Throws DataError naming the first resource `spec` needs but lacks.
  void CheckResources(const StrategySpec& spec) const;

  const Models& models() const { return *models_; }
  const ClassifierOptions& options() const { return options_; }

 private:
  bool NeedsWordTable(const StrategySpec& spec) const;
  bool NeedsSentenceCache(const StrategySpec& spec) const;
  void Fill(std::string_view query, const StrategySpec& spec,
            ClassificationTrace* trace) const;

  std::shared_ptr<const Models> models_;
  ClassifierOptions options_;
  std::vector<DenseVector> corpus_awe_;
  // Per encoder tag; a null entry marks a corpus text missing from the cache.
  std::array<std::vector<const DenseVector*>, 2> corpus_sentences_;
};

}  // namespace sdgtag

#endif  // SDGTAG_CLASSIFIER_H_
