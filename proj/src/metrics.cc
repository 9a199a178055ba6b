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

#include "sdgtag/metrics.h"

#include <algorithm>
#include <array>

#include "json.hpp"
#include "sdgtag/errors.h"
#include "text_util.h"

namespace sdgtag {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kNumLabels = kNumGoals + 1;  // kNoSdg plus the 17 goals

LabelSet OrNoSdg(const LabelSet& labels) {
  return labels.empty() ? LabelSet{kNoSdg} : labels;
}

bool Contains(const LabelSet& set, int label) {
  return std::binary_search(set.begin(), set.end(), label);
}

}  // namespace

std::vector<AnnotatedParagraph> ParseDataset(std::string_view jsonl) {
  std::vector<AnnotatedParagraph> dataset;
  const auto lines = internal::SplitLines(jsonl);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (internal::Trim(lines[i]).empty()) continue;
    const std::string where = "dataset line " + std::to_string(i + 1);
    Json obj;
    try {
      obj = Json::parse(lines[i]);
    } catch (const Json::parse_error& e) {
      throw DataError(where + ": " + e.what());
    }
    if (!obj.is_object()) throw DataError(where + ": expected a JSON object");
    AnnotatedParagraph p;
    const auto source = obj.find("source_id");
    if (source == obj.end() || !source->is_string()) {
      throw DataError(where + ": missing string 'source_id'");
    }
    p.source_id = source->get<std::string>();
    const auto text = obj.find("text");
    if (text == obj.end() || !text->is_string()) {
      throw DataError(where + ": missing string 'text'");
    }
    p.text = text->get<std::string>();
    if (const auto labels = obj.find("labels"); labels != obj.end()) {
      if (!labels->is_array()) throw DataError(where + ": 'labels' must be an array");
      for (const Json& l : *labels) {
        if (!l.is_number_integer() || l.get<int>() < 1 || l.get<int>() > kNumGoals) {
          throw DataError(where + ": labels must be integers in [1, 17]");
        }
        p.labels.push_back(l.get<int>());
      }
      std::sort(p.labels.begin(), p.labels.end());
      p.labels.erase(std::unique(p.labels.begin(), p.labels.end()),
                     p.labels.end());
    }
    if (const auto eid = obj.find("eid"); eid != obj.end()) {
      if (!eid->is_string()) throw DataError(where + ": 'eid' must be a string");
      p.eid = eid->get<std::string>();
    }
    dataset.push_back(std::move(p));
  }
  return dataset;
}

std::vector<AnnotatedParagraph> LoadDataset(const std::filesystem::path& path) {
  return ParseDataset(internal::ReadFile(path));
}

double Lrap(std::span<const LabelSet> truth,
            std::span<const std::vector<double>> scores,
            std::size_t* scored_samples) {
  if (truth.size() != scores.size()) {
    throw DimensionMismatch(0, truth.size(), scores.size());
  }
  if (truth.empty()) throw EmptyDataset();
  double total = 0.0;
  std::size_t scored = 0;
  for (std::size_t s = 0; s < truth.size(); ++s) {
    const LabelSet& labels = truth[s];
    if (labels.empty()) continue;
    const std::vector<double>& score = scores[s];
    if (score.size() != static_cast<std::size_t>(kNumGoals)) {
      throw DimensionMismatch(0, kNumGoals, score.size());
    }
    double sample = 0.0;
    for (int l : labels) {
      const double sl = score[l - 1];
      std::size_t rank = 0;
      std::size_t true_at_or_above = 0;
      for (int k = 1; k <= kNumGoals; ++k) {
        if (score[k - 1] >= sl) {
          ++rank;
          if (Contains(labels, k)) ++true_at_or_above;
        }
      }
      sample += static_cast<double>(true_at_or_above) / static_cast<double>(rank);
    }
    total += sample / static_cast<double>(labels.size());
    ++scored;
  }
  if (scored_samples != nullptr) *scored_samples = scored;
  return scored == 0 ? 0.0 : total / static_cast<double>(scored);
}

double WeightedF1(std::span<const LabelSet> truth,
                  std::span<const LabelSet> predicted) {
  if (truth.size() != predicted.size()) {
    throw DimensionMismatch(0, truth.size(), predicted.size());
  }
  if (truth.empty()) throw EmptyDataset();
  std::array<std::size_t, kNumLabels> tp{}, fp{}, fn{};
  for (std::size_t s = 0; s < truth.size(); ++s) {
    const LabelSet t = OrNoSdg(truth[s]);
    const LabelSet p = OrNoSdg(predicted[s]);
    for (int l : p) {
      if (Contains(t, l)) {
        ++tp[l];
      } else {
        ++fp[l];
      }
    }
    for (int l : t) {
      if (!Contains(p, l)) ++fn[l];
    }
  }
  double weighted = 0.0;
  std::size_t support_total = 0;
  for (int l = 0; l < kNumLabels; ++l) {
    const std::size_t support = tp[l] + fn[l];
    if (support == 0) continue;
    const double denom = 2.0 * tp[l] + fp[l] + fn[l];
    const double f1 = denom == 0.0 ? 0.0 : 2.0 * tp[l] / denom;
    weighted += f1 * static_cast<double>(support);
    support_total += support;
  }
  return weighted / static_cast<double>(support_total);
}

BestRankedPair BestRanked(const LabelSet& truth, std::span<const int> ranked,
                          std::mt19937_64& rng) {
  const LabelSet t = OrNoSdg(truth);
  const std::vector<int> r =
      ranked.empty() ? std::vector<int>{kNoSdg}
                     : std::vector<int>(ranked.begin(), ranked.end());
  for (int label : r) {
    if (Contains(t, label)) return {label, label};
  }
  const int drawn = t[rng() % t.size()];
  return {drawn, r.front()};
}

ClassDistribution ComputeClassDistribution(std::span<const LabelSet> truth) {
  ClassDistribution d;
  std::size_t none = 0, s16 = 0, s17 = 0, rest = 0;
  for (const LabelSet& labels : truth) {
    if (labels.empty()) {
      ++none;
      continue;
    }
    for (int l : labels) {
      if (l == 16) {
        ++s16;
      } else if (l == 17) {
        ++s17;
      } else {
        ++rest;
      }
    }
  }
  d.instances = none + s16 + s17 + rest;
  if (d.instances == 0) return d;
  const double n = static_cast<double>(d.instances);
  d.no_sdg = none / n;
  d.sdg16 = s16 / n;
  d.sdg17 = s17 / n;
  d.remaining = rest / n;
  return d;
}

std::string EvalReport::ToJson() const {
  Json root;
  root["strategy"] = strategy;
  root["threshold"] = threshold;
  root["rng_seed"] = rng_seed;
  root["samples"] = samples;
  root["lrap"] = lrap;
  root["lrap_scored_samples"] = lrap_scored_samples;
  root["lrap_excluded_samples"] = samples - lrap_scored_samples;
  root["weighted_f1"] = weighted_f1;
  root["br_accuracy"] = br_accuracy;
  root["br_weighted_f1"] = br_weighted_f1;
  root["predicted_labels"] = predicted_labels;
  Json support = Json::object();
  for (const auto& [label, count] : per_class_support) {
    support[label == kNoSdg ? "no_sdg" : GoalToken(label)] = count;
  }
  root["per_class_support"] = std::move(support);
  root["class_distribution"] = {
      {"no_sdg", class_distribution.no_sdg},
      {"sdg16", class_distribution.sdg16},
      {"sdg17", class_distribution.sdg17},
      {"remaining", class_distribution.remaining},
      {"instances", class_distribution.instances},
  };
  return root.dump(2) + "\n";
}

EvalReport EvaluateScores(std::span<const AnnotatedParagraph> dataset,
                          std::span<const QueryScores> scores,
                          std::string_view strategy, double threshold,
                          std::uint64_t seed) {
  if (dataset.size() != scores.size()) {
    throw DimensionMismatch(0, dataset.size(), scores.size());
  }
  if (dataset.empty()) throw EmptyDataset();

  std::vector<LabelSet> truth, predicted, br_truth, br_predicted;
  std::vector<std::vector<double>> ranking_scores;
  truth.reserve(dataset.size());
  predicted.reserve(dataset.size());
  ranking_scores.reserve(dataset.size());

  EvalReport report;
  report.strategy = std::string(strategy);
  report.threshold = threshold;
  report.rng_seed = seed;
  report.samples = dataset.size();

  std::mt19937_64 rng(seed);
  std::size_t br_hits = 0;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    truth.push_back(dataset[i].labels);
    ranking_scores.push_back(scores[i].centered);
    const std::vector<int> ranked =
        ThresholdRank(scores[i].centered, threshold).sdg_ids();
    LabelSet p = ranked;
    std::sort(p.begin(), p.end());
    report.predicted_labels += p.size();
    predicted.push_back(std::move(p));

    const BestRankedPair br = BestRanked(truth.back(), ranked, rng);
    if (br.truth == br.predicted) ++br_hits;
    br_truth.push_back({br.truth});
    br_predicted.push_back({br.predicted});

    for (int l : OrNoSdg(truth.back())) ++report.per_class_support[l];
  }

  report.lrap = Lrap(truth, ranking_scores, &report.lrap_scored_samples);
  report.weighted_f1 = WeightedF1(truth, predicted);
  report.br_accuracy =
      static_cast<double>(br_hits) / static_cast<double>(dataset.size());
  report.br_weighted_f1 = WeightedF1(br_truth, br_predicted);
  report.class_distribution = ComputeClassDistribution(truth);
  return report;
}

EvalReport Evaluate(const Classifier& classifier,
                    std::span<const AnnotatedParagraph> dataset,
                    const StrategySpec& spec, double threshold,
                    std::uint64_t seed, std::size_t workers) {
  std::vector<std::string> texts;
  texts.reserve(dataset.size());
  for (const AnnotatedParagraph& p : dataset) texts.push_back(p.text);
  const std::vector<QueryScores> scores =
      classifier.ScoreBatch(texts, spec, workers);
  return EvaluateScores(dataset, scores, spec.name(), threshold, seed);
}

}  // namespace sdgtag
