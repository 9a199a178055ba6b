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

#ifndef SDGTAG_SIMILARITY_H_
#define SDGTAG_SIMILARITY_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdgtag/embeddings.h"
#include "sdgtag/preprocess.h"
#include "sdgtag/tfidf.h"

namespace sdgtag {

// Which similarity is added to F before topic weighting.
enum class CombineVariant {
  kFormula,  // C = (F + U) * R
  kProse,    // C = (F + G) * R
};

// How the topic weight R is derived from G.
enum class TopicWeightVariant {
  kSquareOfMean,   // R = mean(G)^2
  kMeanOfSquares,  // R = mean(G^2)
};

std::string_view CombineVariantName(CombineVariant v);
CombineVariant ParseCombineVariant(std::string_view name);
std::string_view TopicWeightVariantName(TopicWeightVariant v);
TopicWeightVariant ParseTopicWeightVariant(std::string_view name);

// Per-query similarities against the corpus, index-aligned with
// Corpus::documents(). Vectors a strategy does not compute are left empty.
struct SimilarityBundle {
  std::vector<double> F;  // TF-IDF cosine, in [0, 1]
  std::vector<double> G;  // average-word-embedding cosine, in [-1, 1]
  std::vector<double> U;  // sentence-encoder cosine, in [-1, 1]
  double R = 0.0;         // topic weight
  std::vector<double> C;  // combined similarity
};

// F[i] = cosine(vectorize(query), doc_vectors[i]).
std::vector<double> TfIdfSimilarities(const TfIdfModel& model,
                                      const ProcessedDocument& query);

// Cosine of `query` against each of `corpus`.
std::vector<double> DenseSimilarities(const DenseVector& query,
                                      std::span<const DenseVector> corpus);

// G over raw texts: both sides go through the surface tokenization of
// `preprocessor` and are averaged in `table`.
std::vector<double> AweSimilarities(const EmbeddingTable& table,
                                    const Preprocessor& preprocessor,
                                    std::span<const std::string> corpus_texts,
                                    std::string_view query_text);

// U over raw texts: both sides are normalized and looked up in `cache`.
// Throws CacheMiss listing every missing digest.
std::vector<double> SentenceSimilarities(
    const SentenceCache& cache, std::span<const std::string> corpus_texts,
    std::string_view query_text);

double TopicWeight(std::span<const double> G,
                   TopicWeightVariant variant = TopicWeightVariant::kSquareOfMean);

// C[i] = (F[i] + X[i]) * R with X = U or G according to `variant`.
std::vector<double> Combine(std::span<const double> F,
                            std::span<const double> U,
                            std::span<const double> G, double R,
                            CombineVariant variant = CombineVariant::kFormula);

}  // namespace sdgtag

#endif  // SDGTAG_SIMILARITY_H_
