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

#ifndef SDGTAG_CLI_CONFIG_H_
#define SDGTAG_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "sdgtag/classifier.h"
#include "sdgtag/errors.h"
#include "sdgtag/similarity.h"

namespace sdgtag::cli {

// Bad command-line or configuration values; maps to the usage exit code.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDataError = 2;
inline constexpr int kExitCacheIncomplete = 3;

inline constexpr std::string_view kEnvPrefix = "SDGTAG_";

struct RunConfig {
  std::string sdg_defs;  // empty: the bundled definitions
  std::string word_table;
  std::string dan_cache;
  std::string transformer_cache;
  std::string model;  // optional TF-IDF dump; only CDM strategies read it
  std::string strategy = "cdm_dan";
  double threshold = 0.6;
  std::uint64_t seed = 0;
  std::size_t workers = 0;  // 0: available parallelism
  std::string combine_variant = "formula";
  std::string r_variant = "square_of_mean";
  std::string doc_source = "#cirsfidUnibo";

  Strategy ParsedStrategy() const;
  ClassifierOptions Options() const;
  // Throws UsageError on any unparsable value.
  void Validate() const;
};

// Values given on the command line; unset members leave the lower layers
// alone.
struct FlagValues {
  std::optional<std::string> sdg_defs;
  std::optional<std::string> word_table;
  std::optional<std::string> dan_cache;
  std::optional<std::string> transformer_cache;
  std::optional<std::string> model;
  std::optional<std::string> strategy;
  std::optional<double> threshold;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> workers;
  std::optional<std::string> combine_variant;
  std::optional<std::string> r_variant;
  std::optional<std::string> doc_source;
};

using EnvLookup = std::function<const char*(const char*)>;

// Applies a JSON config object. Relative paths resolve against
// `base_dir`. Unknown keys are rejected.
void ApplyConfigJson(std::string_view json, const std::filesystem::path& base_dir,
                     RunConfig* config);
// Applies SDGTAG_* variables.
void ApplyEnvironment(const EnvLookup& getenv, RunConfig* config);
void ApplyFlags(const FlagValues& flags, RunConfig* config);

// Defaults, then the config file (--config or SDGTAG_CONFIG), then the
// environment, then flags. The result is validated.
RunConfig ResolveConfig(const std::optional<std::string>& config_path,
                        const EnvLookup& getenv, const FlagValues& flags);

}  // namespace sdgtag::cli

#endif  // SDGTAG_CLI_CONFIG_H_
