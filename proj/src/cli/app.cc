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

#include "app.h"

#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"

namespace sdgtag::cli {
namespace {

// Output file when given, else `fallback`.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) {
    if (path) {
      file_.open(*path, std::ios::binary);
      if (!file_) throw DataError("cannot write '" + *path + "'");
    }
    stream_ = path ? static_cast<std::ostream*>(&file_) : &fallback;
  }
  std::ostream& get() { return *stream_; }
  void Close() {
    stream_->flush();
    if (!*stream_) throw DataError("failed writing output");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<Strategy> ParseStrategies(const std::vector<std::string>& names,
                                      const RunConfig& config) {
  std::vector<Strategy> out;
  for (const std::string& n : names) {
    if (n == "all") {
      out.insert(out.end(), kAllStrategies.begin(), kAllStrategies.end());
      continue;
    }
    try {
      out.push_back(ParseStrategy(n));
    } catch (const DataError& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) out.push_back(config.ParsedStrategy());
  return out;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const EnvLookup& getenv) {
  CLI::App app{"Training-free SDG classification of text paragraphs"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand name.
  app.fallthrough();
  app.set_version_flag("--version", "sdgtag 0.1.0");

  std::optional<std::string> config_path;
  FlagValues flags;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--sdg-defs", flags.sdg_defs, "SDG definitions JSON (default: bundled)");
  app.add_option("--word-table", flags.word_table, "Word-table file");
  app.add_option("--dan-cache", flags.dan_cache, "DAN sentence-cache file");
  app.add_option("--transformer-cache", flags.transformer_cache,
                 "Transformer sentence-cache file");
  app.add_option("--model", flags.model, "TF-IDF model dump (CDM strategies only)");
  app.add_option("--strategy", flags.strategy,
                 "cdm_dan, cdm_transformer, awe_baseline, use_dan_baseline or "
                 "use_transformer_baseline");
  app.add_option("--threshold", flags.threshold, "Decision threshold T");
  app.add_option("--seed", flags.seed, "Seed for the best-ranked fallback draw");
  app.add_option("--workers", flags.workers, "Worker threads (0: all cores)");
  app.add_option("--combine-variant", flags.combine_variant, "formula or prose");
  app.add_option("--r-variant", flags.r_variant, "square_of_mean or mean_of_squares");
  app.add_option("--doc-source", flags.doc_source, "AKN source attribute");

  std::function<int(const RunConfig&)> command;

  CLI::App* build = app.add_subcommand("build", "Build the TF-IDF model and corpus digests");
  std::string build_out;
  build->add_option("--out-dir", build_out, "Output directory")->required();
  build->callback([&] {
    command = [&](const RunConfig& c) { return CmdBuild(c, build_out, err); };
  });

  CLI::App* preflight =
      app.add_subcommand("preflight", "List sentence-cache digests still to export");
  PreflightOptions pf;
  std::string pf_texts;
  std::optional<std::string> pf_out, pf_texts_out, pf_words_out;
  preflight->add_option("--input", pf_texts, "JSONL with a \"text\" per line")->required();
  preflight->add_option("--output", pf_out, "Manifest file (default: stdout)");
  preflight->add_flag("--all", pf.list_all, "List every needed digest");
  preflight->add_option("--texts-out", pf_texts_out, "Write {digest, text} JSONL");
  preflight->add_option("--words-out", pf_words_out, "Write the surface vocabulary");
  preflight->callback([&] {
    command = [&](const RunConfig& c) {
      pf.texts = pf_texts;
      if (pf_texts_out) pf.texts_out = *pf_texts_out;
      if (pf_words_out) pf.words_out = *pf_words_out;
      Sink sink(pf_out, out);
      const int code = CmdPreflight(c, pf, sink.get(), err);
      sink.Close();
      return code;
    };
  });

  CLI::App* classify = app.add_subcommand("classify", "Classify paragraphs");
  std::string cl_input;
  std::optional<std::string> cl_out, cl_akn;
  classify->add_option("--input", cl_input, "Paragraph JSONL")->required();
  classify->add_option("--output", cl_out, "Result JSONL (default: stdout)");
  classify->add_option("--akn", cl_akn, "Also write AKN fragments into this directory");
  classify->callback([&] {
    command = [&](const RunConfig& c) {
      Sink sink(cl_out, out);
      std::optional<std::filesystem::path> akn;
      if (cl_akn) akn = *cl_akn;
      const int code = CmdClassify(c, cl_input, akn, sink.get());
      sink.Close();
      return code;
    };
  });

  CLI::App* evaluate = app.add_subcommand("evaluate", "Evaluate on an annotated dataset");
  std::string ev_dataset;
  std::optional<std::string> ev_out;
  evaluate->add_option("--dataset", ev_dataset, "Annotated JSONL")->required();
  evaluate->add_option("--output", ev_out, "Report JSON (default: stdout)");
  evaluate->callback([&] {
    command = [&](const RunConfig& c) {
      Sink sink(ev_out, out);
      const int code = CmdEvaluate(c, ev_dataset, sink.get());
      sink.Close();
      return code;
    };
  });

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate strategies over thresholds");
  std::string sw_dataset, sw_out, sw_thresholds = "0:2:0.1";
  std::vector<std::string> sw_strategies;
  sweep->add_option("--dataset", sw_dataset, "Annotated JSONL")->required();
  sweep->add_option("--out-dir", sw_out, "Output directory")->required();
  sweep->add_option("--thresholds", sw_thresholds,
                    "Comma list or start:stop:step")->capture_default_str();
  sweep->add_option("--strategies", sw_strategies, "Strategies, or 'all'")->delimiter(',');
  sweep->callback([&] {
    command = [&](const RunConfig& c) {
      const std::vector<double> ts = ParseThresholds(sw_thresholds);
      const std::vector<Strategy> ss = ParseStrategies(sw_strategies, c);
      return CmdSweep(c, sw_dataset, ts, ss, sw_out);
    };
  });

  CLI::App* emit = app.add_subcommand("emit-akn", "AKN fragments from classify output");
  std::string em_input;
  std::optional<std::string> em_out_dir;
  emit->add_option("--input", em_input, "classify output JSONL")->required();
  emit->add_option("--out-dir", em_out_dir, "One file per source (default: stdout)");
  emit->callback([&] {
    command = [&](const RunConfig& c) {
      std::optional<std::filesystem::path> dir;
      if (em_out_dir) dir = *em_out_dir;
      return CmdEmitAkn(c, em_input, dir, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig config = ResolveConfig(config_path, getenv, flags);
    return command(config);
  } catch (const CacheMiss& e) {
    err << "error: " << e.what() << "\n";
    for (const std::string& d : e.digests()) err << "  missing " << d << "\n";
    err << "run `sdgtag preflight` and export the listed texts\n";
    return kExitCacheIncomplete;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
}

}  // namespace sdgtag::cli
