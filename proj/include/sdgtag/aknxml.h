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

#ifndef SDGTAG_AKNXML_H_
#define SDGTAG_AKNXML_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdgtag/classifier.h"

namespace sdgtag {

inline constexpr std::string_view kDefaultDocSource = "#cirsfidUnibo";
inline constexpr std::string_view kSdgDictionary = "SDGIO";
inline constexpr std::string_view kSdgConceptBase =
    "/akn/ontology/concepts/un/sdg/sdgio/";

// One classification key ("goal_5" or "goal_5_5_2") and the paragraphs it
// was assigned to. Paragraph refs are bare eIds ("para_3").
struct AknEntry {
  std::string sdg_key;
  std::vector<std::string> paragraph_refs;
  std::string show_as;
  std::string concept_ref;
  std::string dictionary{kSdgDictionary};
  std::map<std::string, double> confidences;  // paragraph eId -> confidence

  bool operator==(const AknEntry&) const = default;
};

struct AknAnnotation {
  std::string doc_source{kDefaultDocSource};
  std::vector<AknEntry> entries;

  bool operator==(const AknAnnotation&) const = default;
};

// "goal_5_5_2" -> "5_5_2". Throws InvalidEId if the key does not start with
// "goal_" or the rest is not an eId.
std::string SdgKeySuffix(std::string_view sdg_key);

// Entry for `sdg_key` with showAs "SDG <suffix>" and refersTo
// "#concept_sdg_<suffix>", no paragraphs yet.
AknEntry MakeEntry(std::string_view sdg_key);

// "goal_<id>".
std::string GoalKey(int sdg_id);

// Throws InvalidEId unless `eid` matches [A-Za-z0-9_]+.
void ValidateEId(std::string_view eid);

// Throws InvalidEId or DataError when an annotation breaks its invariants.
void ValidateAnnotation(const AknAnnotation& ann);

// <classification source="..."> with one <keyword> per entry.
std::string EmitClassification(const AknAnnotation& ann);
// One <TLCConcept> per distinct sdg_key, in first-appearance order.
std::string EmitTlcConcepts(const AknAnnotation& ann);
// <proprietary> with one <akn4un:source> per paragraph that has entries.
std::string EmitProprietary(const AknAnnotation& ann);
// The three fragments above, concatenated in that order.
std::string EmitAll(const AknAnnotation& ann);

// Groups goal-level results by SDG: entries in ascending sdg_id order,
// paragraphs in input order, confidence = the label score.
AknAnnotation BuildAnnotation(
    std::span<const std::pair<std::string, ClassificationResult>> paragraphs,
    std::string_view doc_source = kDefaultDocSource);

// Reads fragments produced by EmitAll back into an annotation. Throws
// DataError when the XML is malformed or inconsistent.
AknAnnotation ParseFragments(std::string_view xml);

}  // namespace sdgtag

#endif  // SDGTAG_AKNXML_H_
