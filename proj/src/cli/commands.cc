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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sdgtag/aknxml.h"
#include "sdgtag/embeddings.h"
#include "sdgtag/metrics.h"
#include "sdgtag/tfidf.h"
#include "text_util.h"

namespace sdgtag::cli {
namespace {

using Json = nlohmann::ordered_json;
using internal::FormatDouble;

void WriteFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

void EnsureDirectory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DataError("cannot create '" + dir.string() + "': " + ec.message());
}

std::vector<SdgDefinition> Definitions(const RunConfig& config) {
  if (config.sdg_defs.empty()) return BundledSdgDefinitions();
  return LoadSdgDefinitions(config.sdg_defs);
}

bool IsCdm(Strategy s) {
  return s == Strategy::kCdmDan || s == Strategy::kCdmTransformer;
}

// "text" member of every line; other members are ignored.
std::vector<std::string> ReadTexts(const std::filesystem::path& path) {
  const std::string content = internal::ReadFile(path);
  std::vector<std::string> texts;
  const auto lines = internal::SplitLines(content);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (internal::Trim(lines[i]).empty()) continue;
    const std::string where = path.string() + " line " + std::to_string(i + 1);
    Json obj;
    try {
      obj = Json::parse(lines[i]);
    } catch (const Json::parse_error& e) {
      throw DataError(where + ": " + e.what());
    }
    if (!obj.is_object() || !obj.contains("text") || !obj["text"].is_string()) {
      throw DataError(where + ": missing string 'text'");
    }
    texts.push_back(obj["text"].get<std::string>());
  }
  return texts;
}

// Paragraph eIds: the explicit "eid" when given, else para_<n> numbered
// from 1 within each source.
std::vector<std::string> ParagraphEIds(std::span<const AnnotatedParagraph> dataset) {
  std::map<std::string, std::size_t> counters;
  std::vector<std::string> eids;
  eids.reserve(dataset.size());
  for (const AnnotatedParagraph& p : dataset) {
    const std::size_t n = ++counters[p.source_id];
    eids.push_back(p.eid.empty() ? "para_" + std::to_string(n) : p.eid);
  }
  return eids;
}

void ValidateSourceFileName(const std::string& source_id) {
  const bool ok =
      !source_id.empty() && source_id != "." && source_id != ".." &&
      std::all_of(source_id.begin(), source_id.end(), [](char c) {
        return internal::IsAsciiAlnum(c) || c == '_' || c == '-' || c == '.';
      });
  if (!ok) {
    throw DataError("source_id '" + source_id +
                    "' cannot name an output file ([A-Za-z0-9_.-]+ expected)");
  }
}

using SourceGroups =
    std::vector<std::pair<std::string,
                          std::vector<std::pair<std::string, ClassificationResult>>>>;

void AddToGroup(SourceGroups* groups, const std::string& source,
                std::string eid, ClassificationResult result) {
  auto it = std::find_if(groups->begin(), groups->end(),
                         [&](const auto& g) { return g.first == source; });
  if (it == groups->end()) {
    groups->emplace_back(source, std::vector<std::pair<std::string, ClassificationResult>>());
    it = groups->end() - 1;
  }
  it->second.emplace_back(std::move(eid), std::move(result));
}

void WriteAkn(const SourceGroups& groups, const std::string& doc_source,
              const std::optional<std::filesystem::path>& out_dir,
              std::ostream& out) {
  if (out_dir) EnsureDirectory(*out_dir);
  for (const auto& [source, paragraphs] : groups) {
    const std::string xml = EmitAll(BuildAnnotation(paragraphs, doc_source));
    if (out_dir) {
      ValidateSourceFileName(source);
      WriteFile(*out_dir / (source + ".akn.xml"), xml);
    } else {
      out << xml;
    }
  }
}

std::vector<std::string> TextsOf(std::span<const AnnotatedParagraph> dataset) {
  std::vector<std::string> texts;
  texts.reserve(dataset.size());
  for (const AnnotatedParagraph& p : dataset) texts.push_back(p.text);
  return texts;
}

}  // namespace

std::shared_ptr<const Models> LoadModels(const RunConfig& config,
                                         std::span<const Strategy> strategies) {
  auto models = std::make_shared<Models>();
  const std::vector<SdgDefinition> defs = Definitions(config);
  models->corpus = Corpus::Build(defs, models->preprocessor);

  bool cdm = false, table = false, dan = false, transformer = false;
  for (Strategy s : strategies) {
    const StrategySpec spec = StrategySpec::Of(s);
    cdm = cdm || IsCdm(s);
    table = table || spec.uses_topic_weight || s == Strategy::kAweBaseline;
    if (s != Strategy::kAweBaseline) {
      (spec.encoder == EncoderTag::kDan ? dan : transformer) = true;
    }
  }
  if (cdm) {
    if (config.model.empty()) {
      models->tfidf = TfIdfModel::Build(models->corpus);
    } else {
      models->tfidf = TfIdfModel::FromJson(internal::ReadFile(config.model));
      if (models->tfidf->num_documents() != models->corpus.size()) {
        throw DataError("TF-IDF model dump has " +
                        std::to_string(models->tfidf->num_documents()) +
                        " documents, expected " +
                        std::to_string(models->corpus.size()));
      }
    }
  }
  if (table && !config.word_table.empty()) {
    models->word_table = EmbeddingTable::Load(config.word_table);
  }
  auto load_cache = [](const std::string& path, EncoderTag tag) {
    SentenceCache cache = SentenceCache::Load(path);
    if (cache.encoder() != tag) {
      throw DataError("sentence cache '" + path + "' is tagged " +
                      std::string(EncoderTagName(cache.encoder())) +
                      ", expected " + std::string(EncoderTagName(tag)));
    }
    return cache;
  };
  if (dan && !config.dan_cache.empty()) {
    models->dan_cache = load_cache(config.dan_cache, EncoderTag::kDan);
  }
  if (transformer && !config.transformer_cache.empty()) {
    models->transformer_cache =
        load_cache(config.transformer_cache, EncoderTag::kTransformer);
  }
  return models;
}

int CmdBuild(const RunConfig& config, const std::filesystem::path& out_dir,
             std::ostream& log) {
  const Preprocessor preprocessor;
  const Corpus corpus = Corpus::Build(Definitions(config), preprocessor);
  const TfIdfModel model = TfIdfModel::Build(corpus);

  EnsureDirectory(out_dir);
  WriteFile(out_dir / "tfidf_model.json", model.ToJson());

  std::string digests;
  std::string texts;
  for (const CorpusDocument& doc : corpus.documents()) {
    const std::string canonical = CanonicalizeText(Normalize(doc.text));
    const std::string digest = TextDigest(canonical);
    digests += digest + "\n";
    texts += Json({{"digest", digest}, {"text", canonical}}).dump() + "\n";
  }
  WriteFile(out_dir / "corpus_digests.txt", digests);
  WriteFile(out_dir / "corpus_texts.jsonl", texts);
  log << "built TF-IDF model: " << model.vocabulary().size() << " terms, "
      << model.num_documents() << " documents\n";
  return kExitOk;
}

int CmdPreflight(const RunConfig& config, const PreflightOptions& options,
                 std::ostream& out, std::ostream& log) {
  const Preprocessor preprocessor;
  const Corpus corpus = Corpus::Build(Definitions(config), preprocessor);

  std::vector<std::string> texts;
  for (const CorpusDocument& doc : corpus.documents()) texts.push_back(doc.text);
  for (std::string& t : ReadTexts(options.texts)) texts.push_back(std::move(t));

  std::map<std::string, std::string> needed;  // digest -> canonical text
  std::set<std::string> words;
  for (const std::string& text : texts) {
    std::string canonical = CanonicalizeText(Normalize(text));
    needed.emplace(TextDigest(canonical), std::move(canonical));
    if (options.words_out) {
      for (std::string& w : preprocessor.SurfaceTokens(text)) words.insert(std::move(w));
    }
  }

  std::vector<SentenceCache> caches;
  if (!config.dan_cache.empty()) caches.push_back(SentenceCache::Load(config.dan_cache));
  if (!config.transformer_cache.empty()) {
    caches.push_back(SentenceCache::Load(config.transformer_cache));
  }

  std::vector<std::string> missing;
  for (const auto& [digest, text] : needed) {
    const bool present =
        !caches.empty() &&
        std::all_of(caches.begin(), caches.end(),
                    [&](const SentenceCache& c) { return c.Contains(digest); });
    if (!present) missing.push_back(digest);
  }

  const std::vector<std::string>* listed = &missing;
  std::vector<std::string> all;
  if (options.list_all) {
    for (const auto& entry : needed) all.push_back(entry.first);
    listed = &all;
  }
  for (const std::string& d : *listed) out << d << '\n';

  if (options.texts_out) {
    std::string jsonl;
    for (const std::string& d : *listed) {
      jsonl += Json({{"digest", d}, {"text", needed.at(d)}}).dump() + "\n";
    }
    WriteFile(*options.texts_out, jsonl);
  }
  if (options.words_out) {
    std::string lines;
    for (const std::string& w : words) lines += w + "\n";
    WriteFile(*options.words_out, lines);
  }
  log << missing.size() << " missing of " << needed.size() << "\n";
  return missing.empty() ? kExitOk : kExitCacheIncomplete;
}

int CmdClassify(const RunConfig& config, const std::filesystem::path& input,
                const std::optional<std::filesystem::path>& akn_dir,
                std::ostream& out) {
  const std::vector<AnnotatedParagraph> dataset = LoadDataset(input);
  const Strategy strategy = config.ParsedStrategy();
  const StrategySpec spec = StrategySpec::Of(strategy);
  const Classifier classifier(LoadModels(config, {&strategy, 1}), config.Options());
  const std::vector<QueryScores> scores =
      classifier.ScoreBatch(TextsOf(dataset), spec, config.workers);
  const std::vector<std::string> eids = ParagraphEIds(dataset);

  SourceGroups groups;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    ClassificationResult result = ThresholdRank(scores[i].centered, config.threshold);
    Json labels = Json::array();
    for (const Label& l : result.labels) {
      labels.push_back({{"sdg", l.sdg_id}, {"score", l.score}});
    }
    Json record = {{"source_id", dataset[i].source_id},
                   {"eid", eids[i]},
                   {"labels", std::move(labels)},
                   {"is_unrelated", result.is_unrelated()}};
    out << record.dump() << '\n';
    if (akn_dir) AddToGroup(&groups, dataset[i].source_id, eids[i], std::move(result));
  }
  if (akn_dir) WriteAkn(groups, config.doc_source, akn_dir, out);
  return kExitOk;
}

int CmdEvaluate(const RunConfig& config, const std::filesystem::path& dataset_path,
                std::ostream& out) {
  const std::vector<AnnotatedParagraph> dataset = LoadDataset(dataset_path);
  const Strategy strategy = config.ParsedStrategy();
  const Classifier classifier(LoadModels(config, {&strategy, 1}), config.Options());
  out << Evaluate(classifier, dataset, StrategySpec::Of(strategy), config.threshold,
                  config.seed, config.workers)
             .ToJson();
  return kExitOk;
}

int CmdSweep(const RunConfig& config, const std::filesystem::path& dataset_path,
             std::span<const double> thresholds,
             std::span<const Strategy> strategies,
             const std::filesystem::path& out_dir) {
  if (thresholds.empty()) throw UsageError("sweep needs at least one threshold");
  if (strategies.empty()) throw UsageError("sweep needs at least one strategy");
  std::vector<double> ts(thresholds.begin(), thresholds.end());
  for (double t : ts) {
    if (!std::isfinite(t)) throw UsageError("thresholds must be finite");
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Strategy> ss(strategies.begin(), strategies.end());
  std::sort(ss.begin(), ss.end(), [](Strategy a, Strategy b) {
    return StrategyName(a) < StrategyName(b);
  });
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());

  const std::vector<AnnotatedParagraph> dataset = LoadDataset(dataset_path);
  const Classifier classifier(LoadModels(config, ss), config.Options());
  const std::vector<std::string> texts = TextsOf(dataset);

  // reports[s][t]
  std::vector<std::vector<EvalReport>> reports;
  for (Strategy s : ss) {
    const StrategySpec spec = StrategySpec::Of(s);
    const std::vector<QueryScores> scores =
        classifier.ScoreBatch(texts, spec, config.workers);
    std::vector<EvalReport>& row = reports.emplace_back();
    for (double t : ts) {
      row.push_back(EvaluateScores(dataset, scores, spec.name(), t, config.seed));
    }
  }

  EnsureDirectory(out_dir);
  std::string csv =
      "strategy,threshold,lrap,weighted_f1,br_accuracy,br_weighted_f1,"
      "predicted_labels\n";
  for (std::size_t s = 0; s < ss.size(); ++s) {
    for (const EvalReport& r : reports[s]) {
      csv += r.strategy + "," + FormatDouble(r.threshold) + "," +
             FormatDouble(r.lrap) + "," + FormatDouble(r.weighted_f1) + "," +
             FormatDouble(r.br_accuracy) + "," + FormatDouble(r.br_weighted_f1) +
             "," + std::to_string(r.predicted_labels) + "\n";
    }
  }
  WriteFile(out_dir / "sweep.csv", csv);

  const std::pair<const char*, double EvalReport::*> metrics[] = {
      {"lrap", &EvalReport::lrap},
      {"weighted_f1", &EvalReport::weighted_f1},
      {"br_accuracy", &EvalReport::br_accuracy},
      {"br_weighted_f1", &EvalReport::br_weighted_f1},
  };
  for (const auto& [name, member] : metrics) {
    std::string tsv = "threshold";
    for (Strategy s : ss) tsv += "\t" + std::string(StrategyName(s));
    tsv += "\n";
    for (std::size_t t = 0; t < ts.size(); ++t) {
      tsv += FormatDouble(ts[t]);
      for (std::size_t s = 0; s < ss.size(); ++s) {
        tsv += "\t" + FormatDouble(reports[s][t].*member);
      }
      tsv += "\n";
    }
    WriteFile(out_dir / (std::string(name) + ".tsv"), tsv);
  }
  return kExitOk;
}

int CmdEmitAkn(const RunConfig& config, const std::filesystem::path& classified,
               const std::optional<std::filesystem::path>& out_dir,
               std::ostream& out) {
  const std::string content = internal::ReadFile(classified);
  const auto lines = internal::SplitLines(content);
  SourceGroups groups;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (internal::Trim(lines[i]).empty()) continue;
    const std::string where = classified.string() + " line " + std::to_string(i + 1);
    try {
      const Json record = Json::parse(lines[i]);
      ClassificationResult result;
      for (const Json& l : record.at("labels")) {
        result.labels.push_back({l.at("sdg").get<int>(), l.at("score").get<double>()});
      }
      AddToGroup(&groups, record.at("source_id").get<std::string>(),
                 record.at("eid").get<std::string>(), std::move(result));
    } catch (const Json::exception& e) {
      throw DataError(where + ": " + e.what());
    }
  }
  WriteAkn(groups, config.doc_source, out_dir, out);
  return kExitOk;
}

std::vector<double> ParseThresholds(std::string_view spec) {
  auto number = [&](std::string_view s) {
    const auto v = internal::ParseDouble(internal::Trim(s));
    if (!v || !std::isfinite(*v)) {
      throw UsageError("bad threshold '" + std::string(s) + "'");
    }
    return *v;
  };
  std::vector<double> out;
  if (spec.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= spec.size(); ++i) {
      if (i == spec.size() || spec[i] == ':') {
        parts.push_back(spec.substr(start, i - start));
        start = i + 1;
      }
    }
    if (parts.size() != 3) throw UsageError("threshold range must be start:stop:step");
    const double lo = number(parts[0]);
    const double hi = number(parts[1]);
    const double step = number(parts[2]);
    if (step <= 0.0 || hi < lo) throw UsageError("threshold range must ascend with step > 0");
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    for (std::size_t i = 0; i <= n; ++i) {
      // Rounded so 0.1 steps print as 0.3, not 0.30000000000000004.
      out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e9) / 1e9);
    }
    return out;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ',') {
      out.push_back(number(spec.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace sdgtag::cli
