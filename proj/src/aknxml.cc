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

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "sdgtag/errors.h"
#include "text_util.h"

namespace sdgtag {
namespace {

namespace pt = boost::property_tree;

constexpr std::string_view kGoalPrefix = "goal_";
constexpr std::string_view kConceptPrefix = "concept_sdg_";

bool IsEIdChar(char c) { return internal::IsAsciiAlnum(c) || c == '_'; }

std::string Escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out.push_back(c);
    }
  }
  return out;
}

std::string Attr(std::string_view name, std::string_view value) {
  return " " + std::string(name) + "=\"" + Escape(value) + "\"";
}

// Paragraph eIds in first-appearance order across all entries.
std::vector<std::string> ParagraphOrder(const AknAnnotation& ann) {
  std::vector<std::string> order;
  std::set<std::string> seen;
  for (const AknEntry& e : ann.entries) {
    for (const std::string& p : e.paragraph_refs) {
      if (seen.insert(p).second) order.push_back(p);
    }
  }
  return order;
}

std::string AttrOf(const pt::ptree& node, const std::string& name,
                   std::string_view where) {
  const auto v = node.get_optional<std::string>("<xmlattr>." + name);
  if (!v) {
    throw DataError("AKN " + std::string(where) + ": missing attribute '" +
                    name + "'");
  }
  return *v;
}

std::string StripHash(std::string_view ref, std::string_view where) {
  if (ref.size() < 2 || ref.front() != '#') {
    throw DataError("AKN " + std::string(where) + ": expected '#<eId>', got '" +
                    std::string(ref) + "'");
  }
  return std::string(ref.substr(1));
}

bool IsMarkupChild(const std::string& name) {
  return name == "<xmlattr>" || name == "<xmlcomment>" || name == "<xmltext>";
}

}  // namespace

void ValidateEId(std::string_view eid) {
  if (eid.empty() || !std::all_of(eid.begin(), eid.end(), IsEIdChar)) {
    throw InvalidEId(std::string(eid));
  }
}

std::string SdgKeySuffix(std::string_view sdg_key) {
  if (!sdg_key.starts_with(kGoalPrefix)) throw InvalidEId(std::string(sdg_key));
  const std::string_view suffix = sdg_key.substr(kGoalPrefix.size());
  ValidateEId(suffix);
  return std::string(suffix);
}

std::string GoalKey(int sdg_id) { return "goal_" + std::to_string(sdg_id); }

AknEntry MakeEntry(std::string_view sdg_key) {
  const std::string suffix = SdgKeySuffix(sdg_key);
  AknEntry e;
  e.sdg_key = std::string(sdg_key);
  e.show_as = "SDG " + suffix;
  e.concept_ref = "#" + std::string(kConceptPrefix) + suffix;
  return e;
}

void ValidateAnnotation(const AknAnnotation& ann) {
  for (const AknEntry& e : ann.entries) {
    const std::string suffix = SdgKeySuffix(e.sdg_key);
    if (e.concept_ref != "#" + std::string(kConceptPrefix) + suffix) {
      throw DataError("AKN entry " + e.sdg_key + ": refersTo must be #" +
                      std::string(kConceptPrefix) + suffix);
    }
    for (const std::string& p : e.paragraph_refs) {
      ValidateEId(p);
      if (!e.confidences.contains(p)) {
        throw DataError("AKN entry " + e.sdg_key + ": no confidence for " + p);
      }
    }
  }
}

std::string EmitClassification(const AknAnnotation& ann) {
  ValidateAnnotation(ann);
  std::string out = "<classification" + Attr("source", ann.doc_source);
  if (ann.entries.empty()) return out + "/>\n";
  out += ">\n";
  for (const AknEntry& e : ann.entries) {
    std::string href;
    for (const std::string& p : e.paragraph_refs) {
      if (!href.empty()) href += ' ';
      href += "#" + p;
    }
    out += "  <keyword" + Attr("eId", "keyword_" + SdgKeySuffix(e.sdg_key)) +
           Attr("value", e.sdg_key) + Attr("href", href) +
           Attr("showAs", e.show_as) + Attr("refersTo", e.concept_ref) +
           Attr("dictionary", e.dictionary) + "/>\n";
  }
  return out + "</classification>\n";
}

std::string EmitTlcConcepts(const AknAnnotation& ann) {
  ValidateAnnotation(ann);
  std::string out;
  std::set<std::string> seen;
  for (const AknEntry& e : ann.entries) {
    if (!seen.insert(e.sdg_key).second) continue;
    out += "<TLCConcept" +
           Attr("eId", std::string(kConceptPrefix) + SdgKeySuffix(e.sdg_key)) +
           Attr("href", std::string(kSdgConceptBase) + e.sdg_key) +
           Attr("showAs", e.show_as) + "/>\n";
  }
  return out;
}

std::string EmitProprietary(const AknAnnotation& ann) {
  ValidateAnnotation(ann);
  std::string out = "<proprietary" + Attr("source", ann.doc_source);
  const std::vector<std::string> paragraphs = ParagraphOrder(ann);
  if (paragraphs.empty()) return out + "/>\n";
  out += ">\n";
  for (const std::string& p : paragraphs) {
    out += "  <akn4un:source" + Attr("href", "#" + p) + ">\n";
    for (const AknEntry& e : ann.entries) {
      if (std::find(e.paragraph_refs.begin(), e.paragraph_refs.end(), p) ==
          e.paragraph_refs.end()) {
        continue;
      }
      out += "    <akn4un:sdgTarget" + Attr("value", e.sdg_key) +
             Attr("confidence", internal::FormatDouble(e.confidences.at(p))) +
             Attr("name", e.dictionary) + "/>\n";
    }
    out += "  </akn4un:source>\n";
  }
  return out + "</proprietary>\n";
}

std::string EmitAll(const AknAnnotation& ann) {
  return EmitClassification(ann) + EmitTlcConcepts(ann) + EmitProprietary(ann);
}

AknAnnotation BuildAnnotation(
    std::span<const std::pair<std::string, ClassificationResult>> paragraphs,
    std::string_view doc_source) {
  AknAnnotation ann;
  ann.doc_source = std::string(doc_source);
  std::map<int, AknEntry> by_goal;
  for (const auto& [eid, result] : paragraphs) {
    ValidateEId(eid);
    for (const Label& label : result.labels) {
      auto it = by_goal.find(label.sdg_id);
      if (it == by_goal.end()) {
        it = by_goal.emplace(label.sdg_id, MakeEntry(GoalKey(label.sdg_id))).first;
      }
      if (!it->second.confidences.contains(eid)) {
        it->second.paragraph_refs.push_back(eid);
      }
      it->second.confidences[eid] = label.score;
    }
  }
  for (auto& [id, entry] : by_goal) ann.entries.push_back(std::move(entry));
  return ann;
}

AknAnnotation ParseFragments(std::string_view xml) {
  pt::ptree tree;
  try {
    std::istringstream in("<fragments>" + std::string(xml) + "</fragments>");
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw DataError(std::string("AKN fragments are not well-formed XML: ") +
                    e.what());
  }

  AknAnnotation ann;
  bool have_source = false;
  std::string proprietary_source;
  std::vector<std::tuple<std::string, std::string, double>> targets;

  for (const auto& [name, node] : tree.get_child("fragments")) {
    if (IsMarkupChild(name)) continue;
    if (name == "classification") {
      ann.doc_source = AttrOf(node, "source", "classification");
      have_source = true;
      for (const auto& [kname, kw] : node) {
        if (IsMarkupChild(kname)) continue;
        if (kname != "keyword") {
          throw DataError("AKN classification: unexpected <" + kname + ">");
        }
        AknEntry e;
        e.sdg_key = AttrOf(kw, "value", "keyword");
        const std::string href = AttrOf(kw, "href", "keyword");
        for (std::string_view ref : internal::SplitWhitespace(href)) {
          e.paragraph_refs.push_back(StripHash(ref, "keyword href"));
        }
        e.show_as = AttrOf(kw, "showAs", "keyword");
        e.concept_ref = AttrOf(kw, "refersTo", "keyword");
        e.dictionary = AttrOf(kw, "dictionary", "keyword");
        if (AttrOf(kw, "eId", "keyword") != "keyword_" + SdgKeySuffix(e.sdg_key)) {
          throw DataError("AKN keyword " + e.sdg_key + ": unexpected eId");
        }
        ann.entries.push_back(std::move(e));
      }
    } else if (name == "TLCConcept") {
      const std::string eid = AttrOf(node, "eId", "TLCConcept");
      ValidateEId(eid);
    } else if (name == "proprietary") {
      proprietary_source = AttrOf(node, "source", "proprietary");
      for (const auto& [sname, src] : node) {
        if (IsMarkupChild(sname)) continue;
        if (sname != "akn4un:source") {
          throw DataError("AKN proprietary: unexpected <" + sname + ">");
        }
        const std::string para =
            StripHash(AttrOf(src, "href", "akn4un:source"), "akn4un:source");
        for (const auto& [tname, target] : src) {
          if (IsMarkupChild(tname)) continue;
          if (tname != "akn4un:sdgTarget") {
            throw DataError("AKN akn4un:source: unexpected <" + tname + ">");
          }
          const std::string conf = AttrOf(target, "confidence", "sdgTarget");
          const auto value = internal::ParseDouble(conf);
          if (!value) throw DataError("AKN sdgTarget: bad confidence '" + conf + "'");
          targets.emplace_back(para, AttrOf(target, "value", "sdgTarget"), *value);
        }
      }
    } else {
      throw DataError("AKN fragments: unexpected <" + name + ">");
    }
  }

  if (!proprietary_source.empty() && have_source &&
      proprietary_source != ann.doc_source) {
    throw DataError("AKN fragments: classification and proprietary sources differ");
  }
  if (!have_source && !proprietary_source.empty()) {
    ann.doc_source = proprietary_source;
  }
  for (const auto& [para, key, value] : targets) {
    auto it = std::find_if(ann.entries.begin(), ann.entries.end(),
                           [&](const AknEntry& e) {
                             return e.sdg_key == key &&
                                    !e.confidences.contains(para) &&
                                    std::find(e.paragraph_refs.begin(),
                                              e.paragraph_refs.end(),
                                              para) != e.paragraph_refs.end();
                           });
    if (it == ann.entries.end()) {
      throw DataError("AKN sdgTarget " + key + " on " + para +
                      " has no matching keyword");
    }
    it->confidences[para] = value;
  }
  ValidateAnnotation(ann);
  return ann;
}

}  // namespace sdgtag
