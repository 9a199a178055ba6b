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

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sdgtag/aknxml.h"
#include "sdgtag/classifier.h"
#include "sdgtag/embeddings.h"
#include "sdgtag/errors.h"
#include "sdgtag/metrics.h"
#include "sdgtag/preprocess.h"
#include "sdgtag/stemmer.h"
#include "sdgtag/tfidf.h"

namespace py = pybind11;

namespace sdgtag {
namespace {

const Preprocessor& SharedPreprocessor() {
  static const Preprocessor p;
  return p;
}

using LabelList = std::vector<std::pair<int, double>>;

LabelList ToList(const ClassificationResult& r) {
  LabelList out;
  for (const Label& l : r.labels) out.emplace_back(l.sdg_id, l.score);
  return out;
}

std::shared_ptr<const Models> LoadModels(
    const std::optional<std::filesystem::path>& sdg_defs,
    const std::optional<std::filesystem::path>& word_table,
    const std::optional<std::filesystem::path>& dan_cache,
    const std::optional<std::filesystem::path>& transformer_cache) {
  const std::vector<SdgDefinition> defs =
      sdg_defs ? LoadSdgDefinitions(*sdg_defs) : BundledSdgDefinitions();
  auto models = std::make_shared<Models>(Models::FromDefinitions(defs));
  if (word_table) models->word_table = EmbeddingTable::Load(*word_table);
  if (dan_cache) models->dan_cache = SentenceCache::Load(*dan_cache);
  if (transformer_cache) {
    models->transformer_cache = SentenceCache::Load(*transformer_cache);
  }
  return models;
}

std::vector<LabelSet> Sorted(std::vector<LabelSet> sets) {
  for (LabelSet& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return sets;
}

py::dict TraceToDict(const ClassificationTrace& t) {
  py::dict d;
  d["tokens"] = t.processed.tokens;
  d["F"] = t.similarities.F;
  d["G"] = t.similarities.G;
  d["U"] = t.similarities.U;
  d["R"] = t.similarities.R;
  d["C"] = t.similarities.C;
  d["W"] = t.W;
  d["L"] = t.L;
  d["B"] = t.B;
  d["M"] = t.M;
  d["centered"] = t.centered;
  d["threshold"] = t.threshold;
  d["labels"] = ToList(t.result);
  return d;
}

}  // namespace
}  // namespace sdgtag

PYBIND11_MODULE(_sdgtag, m) {
  using namespace sdgtag;
  m.doc() = "Training-free SDG classifier";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> data_error;
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> cache_miss;
  error.call_once_and_store_result([&] { return py::exception<Error>(m, "Error"); });
  data_error.call_once_and_store_result([&] {
    return py::exception<DataError>(m, "DataError", error.get_stored().ptr());
  });
  cache_miss.call_once_and_store_result([&] {
    return py::exception<CacheMiss>(m, "CacheMiss", error.get_stored().ptr());
  });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CacheMiss& e) {
      py::object exc = cache_miss.get_stored()(e.what());
      exc.attr("digests") = py::cast(e.digests());
      py::set_error(cache_miss.get_stored(), exc);
    } catch (const DataError& e) {
      py::set_error(data_error.get_stored(), e.what());
    } catch (const Error& e) {
      py::set_error(error.get_stored(), e.what());
    }
  });

  m.attr("NUM_GOALS") = kNumGoals;
  m.attr("CORPUS_SIZE") = kCorpusSize;
  m.attr("STRATEGIES") = [] {
    std::vector<std::string> names;
    for (Strategy s : kAllStrategies) names.emplace_back(StrategyName(s));
    return names;
  }();

  m.def("normalize", [](const std::string& text) { return Normalize(text); });
  m.def("process", [](const std::string& text) {
    return SharedPreprocessor().Process(text).tokens;
  });
  m.def("surface_tokens", [](const std::string& text) {
    return SharedPreprocessor().SurfaceTokens(text);
  });
  m.def("stem", [](const std::string& word) { return SnowballStem(word); });
  m.def("canonicalize_text", [](const std::string& text) { return CanonicalizeText(text); });
  m.def("text_digest", [](const std::string& text) { return TextDigest(text); },
        "SHA-256 hex of the canonicalized text");
  m.def("cache_digest", [](const std::string& text) { return TextDigest(Normalize(text)); },
        "Sentence-cache key of a raw text");

  py::class_<Classifier>(m, "Classifier")
      .def(py::init([](std::optional<std::filesystem::path> word_table,
                       std::optional<std::filesystem::path> dan_cache,
                       std::optional<std::filesystem::path> transformer_cache,
                       std::optional<std::filesystem::path> sdg_defs,
                       const std::string& combine_variant, const std::string& r_variant) {
             ClassifierOptions options;
             options.combine = ParseCombineVariant(combine_variant);
             options.topic_weight = ParseTopicWeightVariant(r_variant);
             return std::make_unique<Classifier>(
                 LoadModels(sdg_defs, word_table, dan_cache, transformer_cache), options);
           }),
           py::kw_only(), py::arg("word_table") = py::none(),
           py::arg("dan_cache") = py::none(), py::arg("transformer_cache") = py::none(),
           py::arg("sdg_defs") = py::none(), py::arg("combine_variant") = "formula",
           py::arg("r_variant") = "square_of_mean")
      .def(
          "classify",
          [](const Classifier& c, const std::string& text, const std::string& strategy,
             double threshold) {
            return ToList(c.Classify(text, StrategySpec::Of(ParseStrategy(strategy)), threshold));
          },
          py::arg("text"), py::arg("strategy") = "cdm_dan", py::arg("threshold") = 0.6)
      .def(
          "score",
          [](const Classifier& c, const std::string& text, const std::string& strategy) {
            return c.Score(text, StrategySpec::Of(ParseStrategy(strategy))).centered;
          },
          py::arg("text"), py::arg("strategy") = "cdm_dan")
      .def(
          "score_batch",
          [](const Classifier& c, const std::vector<std::string>& texts,
             const std::string& strategy, std::size_t workers) {
            std::vector<QueryScores> scores;
            {
              py::gil_scoped_release release;
              scores = c.ScoreBatch(texts, StrategySpec::Of(ParseStrategy(strategy)), workers);
            }
            std::vector<std::vector<double>> out;
            for (QueryScores& s : scores) out.push_back(std::move(s.centered));
            return out;
          },
          py::arg("texts"), py::arg("strategy") = "cdm_dan", py::arg("workers") = 0)
      .def(
          "explain",
          [](const Classifier& c, const std::string& text, const std::string& strategy,
             double threshold) {
            return TraceToDict(
                c.Explain(text, StrategySpec::Of(ParseStrategy(strategy)), threshold));
          },
          py::arg("text"), py::arg("strategy") = "cdm_dan", py::arg("threshold") = 0.6)
      .def(
          "missing_digests",
          [](const Classifier& c, const std::vector<std::string>& texts,
             const std::string& strategy) {
            return c.MissingDigests(texts, StrategySpec::Of(ParseStrategy(strategy)));
          },
          py::arg("texts"), py::arg("strategy") = "cdm_dan")
      .def("corpus_texts", [](const Classifier& c) {
        std::vector<std::string> texts;
        for (const CorpusDocument& d : c.models().corpus.documents()) texts.push_back(d.text);
        return texts;
      });

  m.def(
      "lrap",
      [](const std::vector<LabelSet>& truth, const std::vector<std::vector<double>>& scores) {
        return Lrap(Sorted(truth), scores);
      },
      py::arg("truth"), py::arg("scores"));
  m.def(
      "weighted_f1",
      [](const std::vector<LabelSet>& truth, const std::vector<LabelSet>& predicted) {
        return WeightedF1(Sorted(truth), Sorted(predicted));
      },
      py::arg("truth"), py::arg("predicted"));
  m.def(
      "best_ranked",
      [](LabelSet truth, const std::vector<int>& ranked, std::uint64_t seed) {
        std::sort(truth.begin(), truth.end());
        std::mt19937_64 rng(seed);
        const BestRankedPair p = BestRanked(truth, ranked, rng);
        return std::make_pair(p.truth, p.predicted);
      },
      py::arg("truth"), py::arg("ranked"), py::arg("seed") = 0);

  m.def(
      "emit_akn",
      [](const std::vector<std::pair<std::string, LabelList>>& paragraphs,
         const std::string& doc_source) {
        std::vector<std::pair<std::string, ClassificationResult>> results;
        for (const auto& [eid, labels] : paragraphs) {
          ClassificationResult r;
          for (const auto& [id, score] : labels) r.labels.push_back({id, score});
          results.emplace_back(eid, std::move(r));
        }
        return EmitAll(BuildAnnotation(results, doc_source));
      },
      py::arg("paragraphs"), py::arg("doc_source") = std::string(kDefaultDocSource));
}
