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

#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace sdgtag {
namespace {

using Tokens = std::vector<std::string>;

TEST(NormalizeTest, GoalPhraseBecomesNumberedToken) {
  EXPECT_EQ(Normalize("Sustainable Development Goal 5"), "sdg5");
  EXPECT_EQ(Normalize("SUSTAINABLE DEVELOPMENT GOAL 17."), "sdg17.");
}

TEST(NormalizeTest, PluralPhrase) {
  EXPECT_EQ(Normalize("the Sustainable Development Goals"), "the sdg");
}

TEST(NormalizeTest, OrdinalBeforeSdg) {
  EXPECT_EQ(Normalize("second sdg"), "sdg2");
  EXPECT_EQ(Normalize("the 2nd SDG"), "the sdg2");
  EXPECT_EQ(Normalize("Seventeenth Sustainable Development Goal"), "sdg17");
  EXPECT_EQ(Normalize("eighteenth sdg"), "eighteenth sdg");
}

TEST(NormalizeTest, CardinalAfterSdg) {
  EXPECT_EQ(Normalize("SDG 3"), "sdg3");
  EXPECT_EQ(Normalize("sdg1 and sdg 12"), "sdg1 and sdg12");
}

TEST(NormalizeTest, OutOfRangeAndMalformedNumbersStay) {
  EXPECT_EQ(Normalize("sdg 18"), "sdg 18");
  EXPECT_EQ(Normalize("sdg 0"), "sdg 0");
  EXPECT_EQ(Normalize("sdg 05"), "sdg 05");
  EXPECT_EQ(Normalize("sdg 5.5"), "sdg 5.5");
  EXPECT_EQ(Normalize("sdg  5"), "sdg  5");
  EXPECT_EQ(Normalize("sdgs 5"), "sdgs 5");
}

TEST(NormalizeTest, Empty) { EXPECT_EQ(Normalize(""), ""); }

TEST(NormalizeTest, IdempotentOnRandomText) {
  const std::vector<std::string> pieces = {
      "sdg", "SDG", "5", "17", "18", "second", "2nd", "Sustainable",
      "development", "Goal", "goals", " ", "  ", "\t", ".", ",", "5.5",
      "seventeenth", "sdg3", "x", "ÉCOLE", "ΑΒΓ", "-", "'"};
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    const int n = static_cast<int>(rng() % 12);
    for (int j = 0; j < n; ++j) {
      text += pieces[rng() % pieces.size()];
      if (rng() % 2 == 0) text += ' ';
    }
    const std::string once = Normalize(text);
    EXPECT_EQ(Normalize(once), once) << "input: [" << text << "]";
  }
}

TEST(NormalizeTest, LowercasesNonAscii) {
  EXPECT_EQ(Normalize("ÉCOLE Ωmega"), "école ωmega");
}

TEST(TokenizeTest, SplitsOnPunctuationAndWhitespace) {
  EXPECT_EQ(Tokenize("end poverty, everywhere!"),
            (Tokens{"end", "poverty", "everywhere"}));
}

TEST(TokenizeTest, KeepsInternalHyphensAndNumbers) {
  EXPECT_EQ(Tokenize("well-being for 1,000.5 people in sdg3"),
            (Tokens{"well-being", "for", "1,000.5", "people", "in", "sdg3"}));
}

TEST(TokenizeTest, SplitsClitics) {
  EXPECT_EQ(Tokenize("don't"), (Tokens{"do", "n't"}));
  EXPECT_EQ(Tokenize("women’s rights"), (Tokens{"women", "'s", "rights"}));
}

TEST(TokenizeTest, DropsPurePunctuation) {
  EXPECT_TRUE(Tokenize("... -- !!").empty());
  EXPECT_TRUE(IsPunctuation("--"));
  EXPECT_FALSE(IsPunctuation("a-"));
}

TEST(StopWordsTest, BundledListIsFrozen) {
  const StopWords& sw = StopWords::Bundled();
  EXPECT_EQ(sw.size(), 326u);
  EXPECT_TRUE(sw.Contains("the"));
  EXPECT_TRUE(sw.Contains("'s"));
  EXPECT_FALSE(sw.Contains("poverty"));
}

TEST(StopWordsTest, ParseSkipsBlankLines) {
  const StopWords sw = StopWords::Parse("a\n\nb\r\n");
  EXPECT_EQ(sw.size(), 2u);
  EXPECT_TRUE(sw.Contains("b"));
}

TEST(LemmatizerTest, IrregularFormsAndPassThrough) {
  const Lemmatizer& lem = Lemmatizer::Bundled();
  EXPECT_EQ(lem.Lemma("children"), "child");
  EXPECT_EQ(lem.Lemma("women"), "woman");
  EXPECT_EQ(lem.Lemma("poverty"), "poverty");
}

TEST(ProcessTest, StemsAndDropsStopWords) {
  const Preprocessor p;
  EXPECT_EQ(p.Process("Ending poverty in all its forms").tokens,
            (Tokens{"end", "poverti", "form"}));
}

TEST(ProcessTest, AllStopWordsYieldEmpty) {
  const Preprocessor p;
  EXPECT_TRUE(p.Process("the of and").empty());
  EXPECT_TRUE(p.Process("").empty());
}

TEST(ProcessTest, GoalMentionsFuse) {
  const Preprocessor p;
  EXPECT_EQ(p.Process("SDG 3 and sdg3").tokens, (Tokens{"sdg3", "sdg3"}));
  const ProcessedDocument doc = p.Process("Sustainable Development Goal 5");
  EXPECT_EQ(doc.tokens, (Tokens{"sdg5"}));
  EXPECT_EQ(doc.token_count(), 1u);
}

TEST(ProcessTest, LemmatizesBeforeStemming) {
  const Preprocessor p;
  EXPECT_EQ(p.Process("children").tokens, (Tokens{"child"}));
}

TEST(ProcessTest, OutputNeverContainsStopWordsOrPunctuation) {
  const Preprocessor p;
  const std::vector<std::string> words = {
      "The", "of", "poverty", "and", "children's", "won't", "...", "sdg 4",
      "Goals", "everywhere", "'s", "n't", "—", "well-being", "x", "IS",
      "women", "2030", "“quoted”", "all", "ourselves"};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    std::string text;
    const int n = 1 + static_cast<int>(rng() % 15);
    for (int j = 0; j < n; ++j) text += words[rng() % words.size()] + " ";
    const ProcessedDocument doc = p.Process(text);
    for (const std::string& t : doc.tokens) {
      EXPECT_FALSE(p.stop_words().Contains(t)) << t << " in [" << text << "]";
      EXPECT_FALSE(IsPunctuation(t)) << t;
      EXPECT_FALSE(t.empty());
      EXPECT_EQ(t.find(' '), std::string::npos);
    }
  }
}

TEST(SurfaceTokensTest, KeepsStopWordsAndInflection) {
  const Preprocessor p;
  EXPECT_EQ(p.SurfaceTokens("Ending poverty in all its forms"),
            (Tokens{"ending", "poverty", "in", "all", "its", "forms"}));
}

}  // namespace
}  // namespace sdgtag
