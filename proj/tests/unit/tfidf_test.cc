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

#include "sdgtag/tfidf.h"

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "sdgtag/errors.h"

namespace sdgtag {
namespace {

ProcessedDocument Doc(std::vector<std::string> tokens) { return {std::move(tokens)}; }

class CorpusTest : public ::testing::Test {
 protected:
  Preprocessor preprocessor_;
  Corpus corpus_ = Corpus::Build(BundledSdgDefinitions(), preprocessor_);
  TfIdfModel model_ = TfIdfModel::Build(corpus_);
};

TEST_F(CorpusTest, HasInterleavedClassAndBiasDocuments) {
  ASSERT_EQ(corpus_.size(), kCorpusSize);
  for (int k = 1; k <= kNumGoals; ++k) {
    const CorpusDocument& cls = corpus_[Corpus::ClassIndex(k)];
    const CorpusDocument& bias = corpus_[Corpus::BiasIndex(k)];
    EXPECT_EQ(cls.sdg_id, k);
    EXPECT_EQ(cls.kind, DocumentKind::kClass);
    EXPECT_EQ(cls.processed.tokens.back(), GoalToken(k));
    EXPECT_EQ(bias.kind, DocumentKind::kBias);
    EXPECT_EQ(bias.text, GoalToken(k));
    EXPECT_EQ(bias.processed.tokens, std::vector<std::string>{GoalToken(k)});
  }
}

TEST_F(CorpusTest, GoalTokenIdfUsesDocumentFrequencyTwo) {
  EXPECT_NEAR(model_.Idf("sdg3"), std::log(35.0 / 3.0) + 1.0, 1e-12);
}

TEST_F(CorpusTest, VocabularyCoversExactlyTheCorpusTokens) {
  std::set<std::string> tokens;
  for (const CorpusDocument& d : corpus_.documents()) {
    tokens.insert(d.processed.tokens.begin(), d.processed.tokens.end());
  }
  EXPECT_EQ(std::vector<std::string>(tokens.begin(), tokens.end()),
            model_.vocabulary());
}

TEST_F(CorpusTest, DocumentVectorsAreUnitNorm) {
  for (const SparseVector& v : model_.doc_vectors()) {
    EXPECT_NEAR(v.Norm(), 1.0, 1e-9);
  }
}

TEST_F(CorpusTest, BiasDocumentsAreSelective) {
  for (int k = 1; k <= kNumGoals; ++k) {
    const SparseVector q = model_.Vectorize(Doc({GoalToken(k)}));
    for (int j = 1; j <= kNumGoals; ++j) {
      const double cos =
          SparseCosine(q, model_.doc_vectors()[Corpus::BiasIndex(j)]);
      EXPECT_EQ(cos, j == k ? 1.0 : 0.0) << k << " vs " << j;
    }
  }
}

TEST_F(CorpusTest, ClassDocumentRetrievesItself) {
  for (int k = 1; k <= kNumGoals; ++k) {
    const SparseVector q = model_.Vectorize(corpus_[Corpus::ClassIndex(k)].processed);
    const SparseVector& d = model_.doc_vectors()[Corpus::ClassIndex(k)];
    ASSERT_EQ(q.entries.size(), d.entries.size());
    for (std::size_t i = 0; i < q.entries.size(); ++i) {
      EXPECT_EQ(q.entries[i].first, d.entries[i].first);
      EXPECT_NEAR(q.entries[i].second, d.entries[i].second, 1e-9);
    }
  }
}

TEST_F(CorpusTest, RepeatedTokensKeepDirection) {
  for (int k = 1; k <= kNumGoals; ++k) {
    ProcessedDocument doc = corpus_[Corpus::ClassIndex(k)].processed;
    ProcessedDocument tripled = doc;
    for (int r = 0; r < 2; ++r) {
      tripled.tokens.insert(tripled.tokens.end(), doc.tokens.begin(), doc.tokens.end());
    }
    EXPECT_NEAR(SparseCosine(model_.Vectorize(doc), model_.Vectorize(tripled)), 1.0,
                1e-12);
  }
}

TEST_F(CorpusTest, JsonDumpRoundTripsAndIsStable) {
  const std::string json = model_.ToJson();
  const TfIdfModel loaded = TfIdfModel::FromJson(json);
  EXPECT_EQ(loaded.vocabulary(), model_.vocabulary());
  EXPECT_EQ(loaded.idf(), model_.idf());
  EXPECT_EQ(loaded.ToJson(), json);
  EXPECT_EQ(TfIdfModel::Build(corpus_).ToJson(), json);
}

TEST(CorpusBuildTest, RejectsDuplicateAndMissingIds) {
  std::vector<SdgDefinition> defs = BundledSdgDefinitions();
  const Preprocessor p;
  std::vector<SdgDefinition> dup = defs;
  dup[5].id = 5;
  EXPECT_THROW(Corpus::Build(dup, p), DuplicateSdgId);
  std::vector<SdgDefinition> missing = defs;
  missing.erase(missing.begin() + 11);
  try {
    Corpus::Build(missing, p);
    FAIL() << "expected MissingSdgId";
  } catch (const MissingSdgId& e) {
    EXPECT_EQ(e.id(), 12);
  }
}

TEST(CorpusBuildTest, ClassDocumentEndsWithGoalToken) {
  std::vector<SdgDefinition> defs = BundledSdgDefinitions();
  defs[6].description = "affordable clean energy";
  const Corpus corpus = Corpus::Build(defs, Preprocessor());
  EXPECT_EQ(corpus[Corpus::ClassIndex(7)].processed.tokens,
            (std::vector<std::string>{"afford", "clean", "energi", "sdg7"}));
}

TEST(TfIdfModelTest, EmptyCorpusThrows) {
  EXPECT_THROW(TfIdfModel::Build(std::vector<ProcessedDocument>{}), EmptyCorpus);
}

TEST(TfIdfModelTest, TokenInEveryDocumentHasUnitIdf) {
  const std::vector<ProcessedDocument> docs = {Doc({"a", "b"}), Doc({"a"}), Doc({"a", "c"})};
  const TfIdfModel m = TfIdfModel::Build(docs);
  EXPECT_DOUBLE_EQ(m.Idf("a"), 1.0);
  EXPECT_DOUBLE_EQ(m.Idf("b"), std::log(4.0 / 2.0) + 1.0);
  EXPECT_EQ(m.Idf("zzz"), 0.0);
}

TEST(TfIdfModelTest, OutOfVocabularyQueryIsEmpty) {
  const TfIdfModel m = TfIdfModel::Build(std::vector<ProcessedDocument>{Doc({"a"})});
  EXPECT_TRUE(m.Vectorize(Doc({"x", "y"})).empty());
  EXPECT_EQ(m.Similarities(Doc({"x"})), std::vector<double>{0.0});
}

TEST(SparseCosineTest, HandValues) {
  const SparseVector a{{{0, 3.0}, {1, 4.0}}};
  const SparseVector b{{{0, 4.0}, {1, 3.0}}};
  EXPECT_NEAR(SparseCosine(a, b), 0.96, 1e-12);
  EXPECT_EQ(SparseCosine(a, a), 1.0);
  EXPECT_EQ(SparseCosine(a, SparseVector{{{2, 1.0}}}), 0.0);
  EXPECT_EQ(SparseCosine(a, SparseVector{}), 0.0);
}

TEST(VectorizeTest, RawCountTimesIdfThenNormalize) {
  const std::vector<ProcessedDocument> docs = {Doc({"poverti"}), Doc({"end"}),
                                               Doc({"end"}), Doc({"x"})};
  const TfIdfModel m = TfIdfModel::Build(docs);
  const SparseVector v = m.Vectorize(Doc({"poverti", "poverti", "end"}));
  const double p = 2.0 * m.Idf("poverti");
  const double e = 1.0 * m.Idf("end");
  const double norm = std::sqrt(p * p + e * e);
  EXPECT_NEAR(v.Get(static_cast<std::uint32_t>(m.IndexOf("poverti"))), p / norm, 1e-12);
  EXPECT_NEAR(v.Get(static_cast<std::uint32_t>(m.IndexOf("end"))), e / norm, 1e-12);
}

TEST(VectorizeTest, HandExampleWithGivenIdf) {
  const TfIdfModel m = TfIdfModel::FromJson(
      R"({"format": "sdgtag.tfidf", "version": 1, "num_documents": 0,
          "vocabulary": ["end", "poverti"], "idf": [1.0, 2.0],
          "doc_vectors": []})");
  const SparseVector v = m.Vectorize(Doc({"poverti", "poverti", "end"}));
  EXPECT_NEAR(v.Get(1), 4.0 / std::sqrt(17.0), 1e-15);
  EXPECT_NEAR(v.Get(0), 1.0 / std::sqrt(17.0), 1e-15);
}

TEST(SdgDefinitionsTest, BundledHasSeventeenGoals) {
  const auto& defs = BundledSdgDefinitions();
  ASSERT_EQ(defs.size(), 17u);
  EXPECT_EQ(defs[0].id, 1);
  EXPECT_EQ(defs[0].description, "End poverty in all its forms everywhere");
}

TEST(SdgDefinitionsTest, ParseErrors) {
  EXPECT_THROW(ParseSdgDefinitions("{}"), DataError);
  EXPECT_THROW(ParseSdgDefinitions("[{\"id\": 1}]"), DataError);
  EXPECT_THROW(ParseSdgDefinitions("not json"), DataError);
}

}  // namespace
}  // namespace sdgtag
