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

#ifndef SDGTAG_CLI_COMMANDS_H_
#define SDGTAG_CLI_COMMANDS_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "config.h"
#include "sdgtag/classifier.h"

namespace sdgtag::cli {

// Loads what `strategies` need from `config`. The TF-IDF dump named by
// config.model is read only when a CDM strategy is among them; without it
// the model is built from the corpus.
std::shared_ptr<const Models> LoadModels(const RunConfig& config,
                                         std::span<const Strategy> strategies);

// Writes tfidf_model.json, corpus_digests.txt and corpus_texts.jsonl.
int CmdBuild(const RunConfig& config, const std::filesystem::path& out_dir,
             std::ostream& log);

struct PreflightOptions {
  std::filesystem::path texts;  // JSONL with a "text" member per line
  bool list_all = false;        // list every needed digest, not only missing
  std::optional<std::filesystem::path> texts_out;  // {"digest", "text"} JSONL
  std::optional<std::filesystem::path> words_out;  // surface tokens, sorted
};

// Prints one digest per line and "<n> missing of <m>" to `log`. Returns
// kExitCacheIncomplete when a configured cache lacks any needed digest
// (every digest counts as missing when no cache is configured).
int CmdPreflight(const RunConfig& config, const PreflightOptions& options,
                 std::ostream& out, std::ostream& log);

// One JSON record per input paragraph, in input order. With `akn_dir`,
// also writes <source_id>.akn.xml per source document.
int CmdClassify(const RunConfig& config, const std::filesystem::path& input,
                const std::optional<std::filesystem::path>& akn_dir,
                std::ostream& out);

int CmdEvaluate(const RunConfig& config, const std::filesystem::path& dataset,
                std::ostream& out);

// Writes sweep.csv plus <metric>.tsv plot data into `out_dir`.
int CmdSweep(const RunConfig& config, const std::filesystem::path& dataset,
             std::span<const double> thresholds,
             std::span<const Strategy> strategies,
             const std::filesystem::path& out_dir);

// Turns classify output back into AKN fragments, one file per source in
// `out_dir`, or everything on `out` when `out_dir` is empty.
int CmdEmitAkn(const RunConfig& config, const std::filesystem::path& classified,
               const std::optional<std::filesystem::path>& out_dir,
               std::ostream& out);

// "0.1,0.2" or "start:stop:step" (inclusive).
std::vector<double> ParseThresholds(std::string_view spec);

}  // namespace sdgtag::cli

#endif  // SDGTAG_CLI_COMMANDS_H_
