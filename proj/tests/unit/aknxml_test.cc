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

#include "sdgtag/aknxml.h"

#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "sdgtag/errors.h"

namespace sdgtag {
namespace {

AknAnnotation ListingAnnotation() {
  AknEntry e = MakeEntry("goal_5_5_2");
  e.paragraph_refs = {"para_3", "para_7"};
  e.confidences = {{"para_3", 1.6334762573242188}, {"para_7", 1.9220209121704102}};
  AknAnnotation ann;
  ann.entries.push_back(e);
  return ann;
}

TEST(AknEmitTest, ClassificationMatchesListing) {
  EXPECT_EQ(EmitClassification(ListingAnnotation()),
            "<classification source=\"#cirsfidUnibo\">\n"
            "  <keyword eId=\"keyword_5_5_2\" value=\"goal_5_5_2\" "
            "href=\"#para_3 #para_7\" showAs=\"SDG 5_5_2\" "
            "refersTo=\"#concept_sdg_5_5_2\" dictionary=\"SDGIO\"/>\n"
            "</classification>\n");
}

TEST(AknEmitTest, TlcConceptMatchesListing) {
  EXPECT_EQ(EmitTlcConcepts(ListingAnnotation()),
            "<TLCConcept eId=\"concept_sdg_5_5_2\" "
            "href=\"/akn/ontology/concepts/un/sdg/sdgio/goal_5_5_2\" "
            "showAs=\"SDG 5_5_2\"/>\n");
}

TEST(AknEmitTest, ProprietaryMatchesListing) {
  EXPECT_EQ(EmitProprietary(ListingAnnotation()),
            "<proprietary source=\"#cirsfidUnibo\">\n"
            "  <akn4un:source href=\"#para_3\">\n"
            "    <akn4un:sdgTarget value=\"goal_5_5_2\" "
            "confidence=\"1.6334762573242188\" name=\"SDGIO\"/>\n"
            "  </akn4un:source>\n"
            "  <akn4un:source href=\"#para_7\">\n"
            "    <akn4un:sdgTarget value=\"goal_5_5_2\" "
            "confidence=\"1.9220209121704102\" name=\"SDGIO\"/>\n"
            "  </akn4un:source>\n"
            "</proprietary>\n");
}

TEST(AknEmitTest, EmptyAnnotation) {
  const AknAnnotation ann;
  EXPECT_EQ(EmitClassification(ann), "<classification source=\"#cirsfidUnibo\"/>\n");
  EXPECT_EQ(EmitTlcConcepts(ann), "");
  EXPECT_EQ(EmitProprietary(ann), "<proprietary source=\"#cirsfidUnibo\"/>\n");
  EXPECT_EQ(ParseFragments(EmitAll(ann)), ann);
}

TEST(AknEmitTest, GoalKeysAndConfidenceFormatting) {
  AknEntry e = MakeEntry(GoalKey(16));
  EXPECT_EQ(e.concept_ref, "#concept_sdg_16");
  EXPECT_EQ(e.show_as, "SDG 16");
  e.paragraph_refs = {"para_1"};
  e.confidences = {{"para_1", 2.0}};
  AknAnnotation ann;
  ann.entries = {e};
  EXPECT_NE(EmitProprietary(ann).find("confidence=\"2\""), std::string::npos);
  EXPECT_NE(EmitTlcConcepts(AknAnnotation{"#x", {MakeEntry("goal_3")}})
                .find("eId=\"concept_sdg_3\""),
            std::string::npos);
}

TEST(AknEmitTest, DuplicateKeysShareOneConcept) {
  AknEntry a = MakeEntry("goal_4");
  a.paragraph_refs = {"p1"};
  a.confidences = {{"p1", 0.7}};
  AknEntry b = MakeEntry("goal_4");
  b.paragraph_refs = {"p2"};
  b.confidences = {{"p2", 0.8}};
  const AknAnnotation ann{"#src", {a, b}};
  const std::string tlc = EmitTlcConcepts(ann);
  EXPECT_EQ(tlc.find("<TLCConcept"), tlc.rfind("<TLCConcept"));
}

TEST(AknEmitTest, InvalidIdentifiersAreRejected) {
  EXPECT_THROW(ValidateEId("para 3"), InvalidEId);
  EXPECT_THROW(ValidateEId(""), InvalidEId);
  EXPECT_THROW(ValidateEId("para-3"), InvalidEId);
  EXPECT_NO_THROW(ValidateEId("para_3"));
  EXPECT_THROW(MakeEntry("sdg_5"), InvalidEId);
  EXPECT_THROW(MakeEntry("goal_5.5"), InvalidEId);
  AknAnnotation ann = ListingAnnotation();
  ann.entries[0].paragraph_refs.push_back("bad ref");
  ann.entries[0].confidences["bad ref"] = 1.0;
  EXPECT_THROW(EmitClassification(ann), InvalidEId);
  AknAnnotation no_conf = ListingAnnotation();
  no_conf.entries[0].confidences.erase("para_7");
  EXPECT_THROW(EmitAll(no_conf), DataError);
}

TEST(AknEmitTest, AttributeValuesAreEscaped) {
  AknAnnotation ann = ListingAnnotation();
  ann.doc_source = "#a&b\"c<d>";
  const std::string xml = EmitAll(ann);
  EXPECT_NE(xml.find("source=\"#a&amp;b&quot;c&lt;d&gt;\""), std::string::npos);
  EXPECT_EQ(ParseFragments(xml), ann);
}

TEST(AknBuildTest, GroupsByGoal) {
  const std::vector<std::pair<std::string, ClassificationResult>> paras = {
      {"para_1", {{{16, 0.9}, {3, 0.7}}}},
      {"para_2", {}},
      {"para_3", {{{3, 1.25}}}},
  };
  const AknAnnotation ann = BuildAnnotation(paras, "#me");
  ASSERT_EQ(ann.entries.size(), 2u);
  EXPECT_EQ(ann.doc_source, "#me");
  EXPECT_EQ(ann.entries[0].sdg_key, "goal_3");
  EXPECT_EQ(ann.entries[0].paragraph_refs, (std::vector<std::string>{"para_1", "para_3"}));
  EXPECT_EQ(ann.entries[0].confidences.at("para_3"), 1.25);
  EXPECT_EQ(ann.entries[1].sdg_key, "goal_16");
  const std::string prop = EmitProprietary(ann);
  EXPECT_EQ(prop.find("para_2"), std::string::npos);
  EXPECT_LT(prop.find("#para_1"), prop.find("#para_3"));
}

TEST(AknRoundTripTest, RandomAnnotations) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> conf(-3.0, 3.0);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::pair<std::string, ClassificationResult>> paras;
    const int n = static_cast<int>(rng() % 8);
    for (int p = 0; p < n; ++p) {
      ClassificationResult r;
      for (int k = 1; k <= kNumGoals; ++k) {
        if (rng() % 6 == 0) r.labels.push_back({k, conf(rng)});
      }
      paras.emplace_back("para_" + std::to_string(p + 1), r);
    }
    const AknAnnotation ann = BuildAnnotation(paras);
    const std::string xml = EmitAll(ann);
    const AknAnnotation back = ParseFragments(xml);
    EXPECT_EQ(back, ann);
    EXPECT_EQ(EmitAll(back), xml);
    for (const AknEntry& e : ann.entries) {
      EXPECT_NE(xml.find("<TLCConcept eId=\"" + e.concept_ref.substr(1) + "\""),
                std::string::npos);
    }
  }
}

TEST(AknParseTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseFragments("<classification source=\"#x\">"), DataError);
  EXPECT_THROW(ParseFragments("<other/>"), DataError);
  EXPECT_THROW(
      ParseFragments("<proprietary source=\"#x\"><akn4un:source href=\"#p\">"
                     "<akn4un:sdgTarget value=\"goal_1\" confidence=\"1\" name=\"SDGIO\"/>"
                     "</akn4un:source></proprietary>"),
      DataError);
}

}  // namespace
}  // namespace sdgtag
