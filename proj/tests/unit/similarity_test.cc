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

#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "sdgtag/errors.h"

namespace sdgtag {
namespace {

using Vec = std::vector<double>;

double Mean(const Vec& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

TEST(TfIdfSimilaritiesTest, BiasDocumentsRouteGoalTokens) {
  const Models models = Models::FromDefinitions(BundledSdgDefinitions());
  const Vec F = TfIdfSimilarities(*models.tfidf, models.preprocessor.Process("sdg5"));
  for (int j = 1; j <= kNumGoals; ++j) {
    EXPECT_EQ(F[Corpus::BiasIndex(j)], j == 5 ? 1.0 : 0.0);
  }
}

TEST(TfIdfSimilaritiesTest, SelfAndOutOfVocabulary) {
  const Models models = Models::FromDefinitions(BundledSdgDefinitions());
  for (int k = 1; k <= kNumGoals; ++k) {
    const std::string& text = models.corpus[Corpus::ClassIndex(k)].text;
    const Vec F = TfIdfSimilarities(*models.tfidf, models.preprocessor.Process(text));
    EXPECT_NEAR(F[Corpus::ClassIndex(k)], 1.0, 1e-12);
  }
  const Vec zero = TfIdfSimilarities(*models.tfidf, models.preprocessor.Process("qwzx blorp"));
  EXPECT_EQ(zero, Vec(kCorpusSize, 0.0));
}

TEST(AweSimilaritiesTest, OrthogonalToyVectors) {
  const EmbeddingTable t = EmbeddingTable::Parse("2\ncat\t1 0\ndog\t0 1\n");
  const Preprocessor p;
  const std::vector<std::string> corpus = {"dog", "cat", "xyzzy"};
  const Vec G = AweSimilarities(t, p, corpus, "cat");
  EXPECT_EQ(G, (Vec{0.0, 1.0, 0.0}));
  EXPECT_EQ(AweSimilarities(t, p, corpus, "blorp"), (Vec{0.0, 0.0, 0.0}));
}

TEST(AweSimilaritiesTest, SelfSimilarityOnCorpus) {
  const auto models = testing::SyntheticModels();
  std::vector<std::string> texts;
  for (const auto& d : models->corpus.documents()) texts.push_back(d.text);
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const Vec G = AweSimilarities(*models->word_table, models->preprocessor, texts, texts[i]);
    EXPECT_NEAR(G[i], 1.0, 1e-12);
  }
}

TEST(SentenceSimilaritiesTest, HandPlacedVectors) {
  SentenceCache cache(2, EncoderTag::kDan);
  cache.AddText("end poverty", {1, 0});
  cache.AddText("zero hunger", {0.6, 0.8});
  const std::vector<std::string> corpus = {"End poverty", "Zero hunger"};
  const Vec U = SentenceSimilarities(cache, corpus, "END POVERTY");
  EXPECT_EQ(U[0], 1.0);
  EXPECT_NEAR(U[1], 0.6, 1e-15);
}

TEST(SentenceSimilaritiesTest, ListsEveryMissingDigest) {
  SentenceCache cache(2, EncoderTag::kDan);
  cache.AddText("a", {1, 0});
  const std::vector<std::string> corpus = {"a", "b", "c", "b"};
  try {
    SentenceSimilarities(cache, corpus, "q");
    FAIL() << "expected CacheMiss";
  } catch (const CacheMiss& e) {
    EXPECT_EQ(e.digests().size(), 3u);
    EXPECT_TRUE(std::is_sorted(e.digests().begin(), e.digests().end()));
  }
}

TEST(TopicWeightTest, Examples) {
  EXPECT_EQ(TopicWeight(Vec(34, 0.0)), 0.0);
  EXPECT_EQ(TopicWeight(Vec(34, 1.0)), 1.0);
  EXPECT_NEAR(TopicWeight(Vec{0.1, 0.5, 0.3}), 0.09, 1e-15);
  EXPECT_NEAR(TopicWeight(Vec{0.1, 0.5, 0.3}, TopicWeightVariant::kMeanOfSquares),
              (0.01 + 0.25 + 0.09) / 3.0, 1e-15);
  EXPECT_EQ(TopicWeight(Vec{}), 0.0);
}

TEST(CombineTest, Examples) {
  EXPECT_EQ(Combine(Vec{0, 0}, Vec{0, 0}, Vec{0.4, 0.2}, 0.3), (Vec{0, 0}));
  EXPECT_EQ(Combine(Vec{1.0}, Vec{1.0}, Vec{0.0}, 0.25), (Vec{0.5}));
  EXPECT_EQ(Combine(Vec{0.3, 0.9}, Vec{-0.2, 0.4}, Vec{1, 1}, 0.0), (Vec{0, 0}));
  EXPECT_EQ(Combine(Vec{1.0}, Vec{0.0}, Vec{0.5}, 0.5, CombineVariant::kProse),
            (Vec{0.75}));
  EXPECT_THROW(Combine(Vec{1.0, 0.0}, Vec{1.0}, Vec{1.0, 1.0}, 1.0), DimensionMismatch);
}

TEST(VariantNamesTest, RoundTrip) {
  for (CombineVariant v : {CombineVariant::kFormula, CombineVariant::kProse}) {
    EXPECT_EQ(ParseCombineVariant(CombineVariantName(v)), v);
  }
  for (TopicWeightVariant v :
       {TopicWeightVariant::kSquareOfMean, TopicWeightVariant::kMeanOfSquares}) {
    EXPECT_EQ(ParseTopicWeightVariant(TopicWeightVariantName(v)), v);
  }
  EXPECT_THROW(ParseCombineVariant("sum"), DataError);
  EXPECT_THROW(ParseTopicWeightVariant("mean"), DataError);
}

TEST(CombineTest, RandomVectorsRespectDefinitionsAndBounds) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> sym(-1.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    Vec F(kCorpusSize), G(kCorpusSize), U(kCorpusSize);
    for (int j = 0; j < kCorpusSize; ++j) {
      F[j] = unit(rng);
      G[j] = sym(rng);
      U[j] = sym(rng);
    }
    const double R = TopicWeight(G);
    EXPECT_EQ(R, Mean(G) * Mean(G));
    const Vec C = Combine(F, U, G, R);
    for (int j = 0; j < kCorpusSize; ++j) {
      EXPECT_EQ(C[j], (F[j] + U[j]) * R);
      EXPECT_LE(std::abs(C[j]), 2.0 * R + 1e-15);
    }
  }
}

}  // namespace
}  // namespace sdgtag
