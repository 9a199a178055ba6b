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

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "json.hpp"
#include "resources.h"
#include "sdgtag/errors.h"
#include "text_util.h"

namespace sdgtag {

using Json = nlohmann::ordered_json;

std::vector<SdgDefinition> ParseSdgDefinitions(std::string_view json) {
  Json root;
  try {
    root = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw DataError(std::string("SDG definitions: ") + e.what());
  }
  if (!root.is_array()) {
    throw DataError("SDG definitions: expected a JSON array");
  }
  std::vector<SdgDefinition> defs;
  defs.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const Json& item = root[i];
    const std::string where = "SDG definitions[" + std::to_string(i) + "]";
    if (!item.is_object() || !item.contains("id") ||
        !item["id"].is_number_integer()) {
      throw DataError(where + ": missing integer 'id'");
    }
    if (!item.contains("description") || !item["description"].is_string()) {
      throw DataError(where + ": missing string 'description'");
    }
    SdgDefinition def;
    def.id = item["id"].get<int>();
    def.description = item["description"].get<std::string>();
    if (item.contains("title") && item["title"].is_string()) {
      def.title = item["title"].get<std::string>();
    }
    defs.push_back(std::move(def));
  }
  return defs;
}

std::vector<SdgDefinition> LoadSdgDefinitions(const std::filesystem::path& path) {
  return ParseSdgDefinitions(internal::ReadFile(path));
}

const std::vector<SdgDefinition>& BundledSdgDefinitions() {
  static const std::vector<SdgDefinition> kDefs =
      ParseSdgDefinitions(internal::BundledSdgDefinitions());
  return kDefs;
}

std::string GoalToken(int sdg_id) { return "sdg" + std::to_string(sdg_id); }

Corpus Corpus::Build(std::span<const SdgDefinition> defs,
                     const Preprocessor& preprocessor) {
  std::array<const SdgDefinition*, kNumGoals> by_id{};
  for (const SdgDefinition& def : defs) {
    if (def.id < 1 || def.id > kNumGoals) {
      throw DataError("SDG id " + std::to_string(def.id) +
                      " outside [1, 17]");
    }
    if (by_id[def.id - 1] != nullptr) throw DuplicateSdgId(def.id);
    by_id[def.id - 1] = &def;
  }
  for (int id = 1; id <= kNumGoals; ++id) {
    if (by_id[id - 1] == nullptr) throw MissingSdgId(id);
  }

  Corpus corpus;
  corpus.documents_.reserve(kCorpusSize);
  for (int id = 1; id <= kNumGoals; ++id) {
    const std::string token = GoalToken(id);
    CorpusDocument class_doc;
    class_doc.sdg_id = id;
    class_doc.kind = DocumentKind::kClass;
    class_doc.text = by_id[id - 1]->description + " " + token;
    class_doc.processed = preprocessor.Process(class_doc.text);

    CorpusDocument bias_doc;
    bias_doc.sdg_id = id;
    bias_doc.kind = DocumentKind::kBias;
    bias_doc.text = token;
    bias_doc.processed = preprocessor.Process(bias_doc.text);

    corpus.documents_.push_back(std::move(class_doc));
    corpus.documents_.push_back(std::move(bias_doc));
  }
  return corpus;
}

std::vector<ProcessedDocument> Corpus::ProcessedDocuments() const {
  std::vector<ProcessedDocument> docs;
  docs.reserve(documents_.size());
  for (const CorpusDocument& d : documents_) docs.push_back(d.processed);
  return docs;
}

double SparseVector::Norm() const {
  double sum = 0.0;
  for (const auto& [index, value] : entries) sum += value * value;
  return std::sqrt(sum);
}

double SparseVector::Get(std::uint32_t index) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), index,
      [](const auto& entry, std::uint32_t i) { return entry.first < i; });
  return it != entries.end() && it->first == index ? it->second : 0.0;
}

double SparseDot(const SparseVector& a, const SparseVector& b) {
  double dot = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return dot;
}

double SparseCosine(const SparseVector& a, const SparseVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  const double denom = a.Norm() * b.Norm();
  if (denom == 0.0) return 0.0;
  // Rounding can push a self-similarity a hair above 1.
  return std::clamp(SparseDot(a, b) / denom, 0.0, 1.0);
}

namespace {

SparseVector Normalized(SparseVector v) {
  const double norm = v.Norm();
  if (norm > 0.0) {
    for (auto& entry : v.entries) entry.second /= norm;
  }
  return v;
}

}  // namespace

TfIdfModel TfIdfModel::Build(std::span<const ProcessedDocument> documents) {
  if (documents.empty()) throw EmptyCorpus();

  std::map<std::string, std::size_t> document_frequency;
  for (const ProcessedDocument& doc : documents) {
    std::vector<std::string> distinct = doc.tokens;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    for (const std::string& t : distinct) ++document_frequency[t];
  }

  TfIdfModel model;
  const double n = static_cast<double>(documents.size());
  model.vocabulary_.reserve(document_frequency.size());
  model.idf_.reserve(document_frequency.size());
  for (const auto& [token, df] : document_frequency) {
    model.vocabulary_.push_back(token);
    model.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(df))) +
                         1.0);
  }
  model.doc_vectors_.reserve(documents.size());
  for (const ProcessedDocument& doc : documents) {
    model.doc_vectors_.push_back(model.Vectorize(doc));
  }
  return model;
}

TfIdfModel TfIdfModel::Build(const Corpus& corpus) {
  const std::vector<ProcessedDocument> docs = corpus.ProcessedDocuments();
  return Build(docs);
}

long TfIdfModel::IndexOf(std::string_view token) const {
  const auto it =
      std::lower_bound(vocabulary_.begin(), vocabulary_.end(), token,
                       [](const std::string& a, std::string_view b) {
                         return std::string_view(a) < b;
                       });
  if (it == vocabulary_.end() || *it != token) return -1;
  return static_cast<long>(it - vocabulary_.begin());
}

double TfIdfModel::Idf(std::string_view token) const {
  const long i = IndexOf(token);
  return i < 0 ? 0.0 : idf_[static_cast<std::size_t>(i)];
}

SparseVector TfIdfModel::Vectorize(const ProcessedDocument& doc) const {
  std::map<std::uint32_t, double> counts;
  for (const std::string& token : doc.tokens) {
    const long i = IndexOf(token);
    if (i >= 0) counts[static_cast<std::uint32_t>(i)] += 1.0;
  }
  SparseVector v;
  v.entries.reserve(counts.size());
  for (const auto& [index, count] : counts) {
    v.entries.emplace_back(index, count * idf_[index]);
  }
  return Normalized(std::move(v));
}

std::vector<double> TfIdfModel::Similarities(const ProcessedDocument& query) const {
  const SparseVector q = Vectorize(query);
  std::vector<double> sims;
  sims.reserve(doc_vectors_.size());
  for (const SparseVector& d : doc_vectors_) sims.push_back(SparseCosine(q, d));
  return sims;
}

std::string TfIdfModel::ToJson() const {
  Json root;
  root["format"] = "sdgtag.tfidf";
  root["version"] = kFormatVersion;
  root["num_documents"] = doc_vectors_.size();
  root["vocabulary"] = vocabulary_;
  root["idf"] = idf_;
  Json docs = Json::array();
  for (const SparseVector& v : doc_vectors_) {
    Json entries = Json::array();
    for (const auto& [index, value] : v.entries) {
      entries.push_back(Json::array({index, value}));
    }
    docs.push_back(std::move(entries));
  }
  root["doc_vectors"] = std::move(docs);
  return root.dump(1) + "\n";
}

TfIdfModel TfIdfModel::FromJson(std::string_view json) {
  Json root;
  try {
    root = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw DataError(std::string("TF-IDF model dump: ") + e.what());
  }
  try {
    if (root.at("format") != "sdgtag.tfidf") {
      throw DataError("TF-IDF model dump: unexpected format tag");
    }
    if (root.at("version").get<int>() != kFormatVersion) {
      throw DataError("TF-IDF model dump: unsupported version");
    }
    TfIdfModel model;
    model.vocabulary_ = root.at("vocabulary").get<std::vector<std::string>>();
    model.idf_ = root.at("idf").get<std::vector<double>>();
    if (model.idf_.size() != model.vocabulary_.size() ||
        !std::is_sorted(model.vocabulary_.begin(), model.vocabulary_.end())) {
      throw DataError("TF-IDF model dump: inconsistent vocabulary");
    }
    for (const Json& doc : root.at("doc_vectors")) {
      SparseVector v;
      for (const Json& entry : doc) {
        const auto index = entry.at(0).get<std::uint32_t>();
        if (index >= model.vocabulary_.size()) {
          throw DataError("TF-IDF model dump: index out of range");
        }
        v.entries.emplace_back(index, entry.at(1).get<double>());
      }
      model.doc_vectors_.push_back(std::move(v));
    }
    return model;
  } catch (const Json::exception& e) {
    throw DataError(std::string("TF-IDF model dump: ") + e.what());
  }
}

}  // namespace sdgtag
