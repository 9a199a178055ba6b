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

#ifndef SDGTAG_METRICS_H_
#define SDGTAG_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sdgtag/classifier.h"

namespace sdgtag {

// Synthetic label standing for "no SDG" wherever a label set is empty.
inline constexpr int kNoSdg = 0;

// Sorted, distinct SDG ids in 1..17; empty means "no SDG".
using LabelSet = std::vector<int>;

struct AnnotatedParagraph {
  std::string source_id;
  std::string text;
  LabelSet labels;
  // Optional AKN eId of the paragraph; empty when the input had none.
  std::string eid;
};

// JSON Lines, one {"source_id", "text", "labels", ["eid"]} object per line.
// Labels are sorted and deduplicated. Throws DataError with the line number.
std::vector<AnnotatedParagraph> ParseDataset(std::string_view jsonl);
std::vector<AnnotatedParagraph> LoadDataset(const std::filesystem::path& path);

// Label ranking average precision over the samples with a nonempty truth.
// `scores[i][k-1]` is the score of SDG k. Ties count against the label
// (a label is ranked below every label with an equal or higher score).
// Throws EmptyDataset for an empty dataset; returns 0 with
// `*scored_samples` = 0 when every truth is empty.
double Lrap(std::span<const LabelSet> truth,
            std::span<const std::vector<double>> scores,
            std::size_t* scored_samples = nullptr);

// Support-weighted mean of per-label F1 over the 17 SDGs plus kNoSdg,
// which stands in for empty sets on either side. Labels without support
// carry no weight; an undefined precision or recall counts as 0.
double WeightedF1(std::span<const LabelSet> truth,
                  std::span<const LabelSet> predicted);

struct BestRankedPair {
  int truth = kNoSdg;
  int predicted = kNoSdg;
};

// The best-ranked prediction that is also true, paired with itself. When
// no prediction is true, a uniformly drawn true label (one draw from `rng`)
// is paired with the top prediction. Empty sets behave as {kNoSdg}.
BestRankedPair BestRanked(const LabelSet& truth, std::span<const int> ranked,
                          std::mt19937_64& rng);

struct ClassDistribution {
  double no_sdg = 0.0;
  double sdg16 = 0.0;
  double sdg17 = 0.0;
  double remaining = 0.0;
  std::size_t instances = 0;
};

// Fractions over label instances; an empty label set is one no-SDG instance.
ClassDistribution ComputeClassDistribution(std::span<const LabelSet> truth);

struct EvalReport {
  std::string strategy;
  double threshold = 0.0;
  std::uint64_t rng_seed = 0;
  std::size_t samples = 0;
  double lrap = 0.0;
  std::size_t lrap_scored_samples = 0;
  double weighted_f1 = 0.0;
  double br_accuracy = 0.0;
  double br_weighted_f1 = 0.0;
  std::size_t predicted_labels = 0;
  std::map<int, std::size_t> per_class_support;  // kNoSdg included
  ClassDistribution class_distribution;

  std::string ToJson() const;
};

// All metrics for a dataset whose queries were already scored.
EvalReport EvaluateScores(std::span<const AnnotatedParagraph> dataset,
                          std::span<const QueryScores> scores,
                          std::string_view strategy, double threshold,
                          std::uint64_t seed);

// Scores every paragraph with `classifier`, then calls EvaluateScores.
EvalReport Evaluate(const Classifier& classifier,
                    std::span<const AnnotatedParagraph> dataset,
                    const StrategySpec& spec, double threshold,
                    std::uint64_t seed, std::size_t workers = 1);

}  // namespace sdgtag

#endif  // SDGTAG_METRICS_H_
