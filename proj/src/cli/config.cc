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

#include "config.h"

#include <cmath>

#include "json.hpp"
#include "text_util.h"

namespace sdgtag::cli {
namespace {

using Json = nlohmann::json;

std::string ResolvePath(const std::string& value,
                        const std::filesystem::path& base_dir) {
  if (value.empty()) return value;
  const std::filesystem::path p(value);
  if (p.is_absolute() || base_dir.empty()) return value;
  return (base_dir / p).string();
}

template <typename T>
T Get(const Json& j, std::string_view key) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    throw DataError("config: wrong type for '" + std::string(key) + "'");
  }
}

double ParseThreshold(std::string_view s, std::string_view where) {
  const auto v = internal::ParseDouble(internal::Trim(s));
  if (!v) throw UsageError(std::string(where) + ": not a number: '" + std::string(s) + "'");
  return *v;
}

template <typename T>
T ParseCount(std::string_view s, std::string_view where) {
  const auto v = internal::ParseInt(internal::Trim(s));
  if (!v || *v < 0) {
    throw UsageError(std::string(where) + ": expected a nonnegative integer, got '" +
                     std::string(s) + "'");
  }
  return static_cast<T>(*v);
}

}  // namespace

Strategy RunConfig::ParsedStrategy() const {
  try {
    return ParseStrategy(strategy);
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

ClassifierOptions RunConfig::Options() const {
  ClassifierOptions options;
  try {
    options.combine = ParseCombineVariant(combine_variant);
    options.topic_weight = ParseTopicWeightVariant(r_variant);
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
  return options;
}

void RunConfig::Validate() const {
  ParsedStrategy();
  Options();
  if (!std::isfinite(threshold)) throw UsageError("threshold must be finite");
}

void ApplyConfigJson(std::string_view json, const std::filesystem::path& base_dir,
                     RunConfig* config) {
  Json root;
  try {
    root = Json::parse(json);
  } catch (const Json::parse_error& e) {
    throw DataError(std::string("config: ") + e.what());
  }
  if (!root.is_object()) throw DataError("config: expected a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key == "sdg_defs") {
      config->sdg_defs = ResolvePath(Get<std::string>(value, key), base_dir);
    } else if (key == "word_table") {
      config->word_table = ResolvePath(Get<std::string>(value, key), base_dir);
    } else if (key == "sentence_caches") {
      if (!value.is_object()) throw DataError("config: 'sentence_caches' must be an object");
      for (const auto& [tag, path] : value.items()) {
        const std::string p = ResolvePath(Get<std::string>(path, tag), base_dir);
        if (tag == "dan") {
          config->dan_cache = p;
        } else if (tag == "transformer") {
          config->transformer_cache = p;
        } else {
          throw DataError("config: unknown encoder tag '" + tag + "'");
        }
      }
    } else if (key == "model") {
      config->model = ResolvePath(Get<std::string>(value, key), base_dir);
    } else if (key == "strategy") {
      config->strategy = Get<std::string>(value, key);
    } else if (key == "threshold") {
      config->threshold = Get<double>(value, key);
    } else if (key == "seed") {
      config->seed = Get<std::uint64_t>(value, key);
    } else if (key == "workers") {
      config->workers = Get<std::size_t>(value, key);
    } else if (key == "combine_variant") {
      config->combine_variant = Get<std::string>(value, key);
    } else if (key == "r_variant") {
      config->r_variant = Get<std::string>(value, key);
    } else if (key == "doc_source") {
      config->doc_source = Get<std::string>(value, key);
    } else {
      throw DataError("config: unknown key '" + key + "'");
    }
  }
}

void ApplyEnvironment(const EnvLookup& getenv, RunConfig* config) {
  auto env = [&](std::string_view name) -> std::optional<std::string> {
    const std::string full = std::string(kEnvPrefix) + std::string(name);
    const char* v = getenv(full.c_str());
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
  if (auto v = env("SDG_DEFS")) config->sdg_defs = *v;
  if (auto v = env("WORD_TABLE")) config->word_table = *v;
  if (auto v = env("DAN_CACHE")) config->dan_cache = *v;
  if (auto v = env("TRANSFORMER_CACHE")) config->transformer_cache = *v;
  if (auto v = env("MODEL")) config->model = *v;
  if (auto v = env("STRATEGY")) config->strategy = *v;
  if (auto v = env("THRESHOLD")) config->threshold = ParseThreshold(*v, "SDGTAG_THRESHOLD");
  if (auto v = env("SEED")) config->seed = ParseCount<std::uint64_t>(*v, "SDGTAG_SEED");
  if (auto v = env("WORKERS")) config->workers = ParseCount<std::size_t>(*v, "SDGTAG_WORKERS");
  if (auto v = env("COMBINE_VARIANT")) config->combine_variant = *v;
  if (auto v = env("R_VARIANT")) config->r_variant = *v;
  if (auto v = env("DOC_SOURCE")) config->doc_source = *v;
}

void ApplyFlags(const FlagValues& flags, RunConfig* config) {
  if (flags.sdg_defs) config->sdg_defs = *flags.sdg_defs;
  if (flags.word_table) config->word_table = *flags.word_table;
  if (flags.dan_cache) config->dan_cache = *flags.dan_cache;
  if (flags.transformer_cache) config->transformer_cache = *flags.transformer_cache;
  if (flags.model) config->model = *flags.model;
  if (flags.strategy) config->strategy = *flags.strategy;
  if (flags.threshold) config->threshold = *flags.threshold;
  if (flags.seed) config->seed = *flags.seed;
  if (flags.workers) config->workers = *flags.workers;
  if (flags.combine_variant) config->combine_variant = *flags.combine_variant;
  if (flags.r_variant) config->r_variant = *flags.r_variant;
  if (flags.doc_source) config->doc_source = *flags.doc_source;
}

RunConfig ResolveConfig(const std::optional<std::string>& config_path,
                        const EnvLookup& getenv, const FlagValues& flags) {
  RunConfig config;
  std::optional<std::string> path = config_path;
  if (!path) {
    const std::string name = std::string(kEnvPrefix) + "CONFIG";
    if (const char* v = getenv(name.c_str())) path = v;
  }
  if (path && !path->empty()) {
    const std::filesystem::path p(*path);
    ApplyConfigJson(internal::ReadFile(p), p.parent_path(), &config);
  }
  ApplyEnvironment(getenv, &config);
  ApplyFlags(flags, &config);
  config.Validate();
  return config;
}

}  // namespace sdgtag::cli
