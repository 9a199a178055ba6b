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

#include "sdgtag/similarity.h"

#include <algorithm>
#include <set>

#include "sdgtag/errors.h"

namespace sdgtag {

std::string_view CombineVariantName(CombineVariant v) {
  return v == CombineVariant::kFormula ? "formula" : "prose";
}

CombineVariant ParseCombineVariant(std::string_view name) {
  if (name == "formula") return CombineVariant::kFormula;
  if (name == "prose") return CombineVariant::kProse;
  throw DataError("unknown combine variant '" + std::string(name) +
                  "' (expected formula or prose)");
}

std::string_view TopicWeightVariantName(TopicWeightVariant v) {
  return v == TopicWeightVariant::kSquareOfMean ? "square_of_mean"
                                                : "mean_of_squares";
}

TopicWeightVariant ParseTopicWeightVariant(std::string_view name) {
  if (name == "square_of_mean") return TopicWeightVariant::kSquareOfMean;
  if (name == "mean_of_squares") return TopicWeightVariant::kMeanOfSquares;
  throw DataError("unknown topic weight variant '" + std::string(name) +
                  "' (expected square_of_mean or mean_of_squares)");
}

std::vector<double> TfIdfSimilarities(const TfIdfModel& model,
                                      const ProcessedDocument& query) {
  return model.Similarities(query);
}

std::vector<double> DenseSimilarities(const DenseVector& query,
                                      std::span<const DenseVector> corpus) {
  std::vector<double> sims;
  sims.reserve(corpus.size());
  for (const DenseVector& doc : corpus) sims.push_back(DenseCosine(query, doc));
  return sims;
}

std::vector<double> AweSimilarities(const EmbeddingTable& table,
                                    const Preprocessor& preprocessor,
                                    std::span<const std::string> corpus_texts,
                                    std::string_view query_text) {
  std::vector<DenseVector> corpus;
  corpus.reserve(corpus_texts.size());
  for (const std::string& text : corpus_texts) {
    corpus.push_back(
        AverageWordEmbedding(preprocessor.SurfaceTokens(text), table));
  }
  const DenseVector query =
      AverageWordEmbedding(preprocessor.SurfaceTokens(query_text), table);
  return DenseSimilarities(query, corpus);
}

std::vector<double> SentenceSimilarities(
    const SentenceCache& cache, std::span<const std::string> corpus_texts,
    std::string_view query_text) {
  std::set<std::string> missing;
  auto lookup = [&](std::string_view text) -> const DenseVector* {
    std::string digest = TextDigest(Normalize(text));
    const DenseVector* v = cache.FindDigest(digest);
    if (v == nullptr) missing.insert(std::move(digest));
    return v;
  };
  const DenseVector* query = lookup(query_text);
  std::vector<const DenseVector*> corpus;
  corpus.reserve(corpus_texts.size());
  for (const std::string& text : corpus_texts) corpus.push_back(lookup(text));
  if (!missing.empty()) {
    throw CacheMiss(std::vector<std::string>(missing.begin(), missing.end()));
  }
  std::vector<double> sims;
  sims.reserve(corpus.size());
  for (const DenseVector* doc : corpus) sims.push_back(DenseCosine(*query, *doc));
  return sims;
}

double TopicWeight(std::span<const double> G, TopicWeightVariant variant) {
  if (G.empty()) return 0.0;
  double sum = 0.0;
  if (variant == TopicWeightVariant::kSquareOfMean) {
    for (double g : G) sum += g;
    const double mean = sum / static_cast<double>(G.size());
    return mean * mean;
  }
  for (double g : G) sum += g * g;
  return sum / static_cast<double>(G.size());
}

std::vector<double> Combine(std::span<const double> F,
                            std::span<const double> U,
                            std::span<const double> G, double R,
                            CombineVariant variant) {
  const std::span<const double> other =
      variant == CombineVariant::kFormula ? U : G;
  if (other.size() != F.size()) {
    throw DimensionMismatch(0, F.size(), other.size());
  }
  std::vector<double> C(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) C[i] = (F[i] + other[i]) * R;
  return C;
}

}  // namespace sdgtag
