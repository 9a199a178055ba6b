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

#include "sdgtag/classifier.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <set>
#include <thread>

#include "sdgtag/errors.h"

namespace sdgtag {
namespace {

std::size_t TagIndex(EncoderTag tag) {
  return tag == EncoderTag::kDan ? 0 : 1;
}

}  // namespace

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kCdmDan:
      return "cdm_dan";
    case Strategy::kCdmTransformer:
      return "cdm_transformer";
    case Strategy::kAweBaseline:
      return "awe_baseline";
    case Strategy::kUseDanBaseline:
      return "use_dan_baseline";
    case Strategy::kUseTransformerBaseline:
      return "use_transformer_baseline";
  }
  return "unknown";
}

Strategy ParseStrategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (StrategyName(s) == name) return s;
  }
  throw DataError("unknown strategy '" + std::string(name) + "'");
}

StrategySpec StrategySpec::Of(Strategy s) {
  StrategySpec spec;
  spec.strategy = s;
  const bool cdm = s == Strategy::kCdmDan || s == Strategy::kCdmTransformer;
  spec.uses_tfidf = cdm;
  spec.uses_topic_weight = cdm;
  spec.encoder = (s == Strategy::kCdmTransformer ||
                  s == Strategy::kUseTransformerBaseline)
                     ? EncoderTag::kTransformer
                     : EncoderTag::kDan;
  return spec;
}

std::vector<double> LogLengthScale(std::span<const double> C,
                                   std::size_t token_count) {
  const double factor =
      token_count == 0 ? 1.0 : 1.0 + std::log2(static_cast<double>(token_count));
  std::vector<double> W(C.begin(), C.end());
  for (double& w : W) w *= factor;
  return W;
}

std::vector<double> BiasedSimilarity(std::span<const double> W) {
  if (W.size() != kCorpusSize) throw DimensionMismatch(0, kCorpusSize, W.size());
  std::vector<double> B(kNumGoals);
  for (int k = 1; k <= kNumGoals; ++k) {
    B[k - 1] = W[Corpus::ClassIndex(k)] + W[Corpus::BiasIndex(k)];
  }
  return B;
}

std::vector<double> Center(std::span<const double> B, double* mean) {
  const double m =
      B.empty() ? 0.0
                : std::accumulate(B.begin(), B.end(), 0.0) /
                      static_cast<double>(B.size());
  if (mean != nullptr) *mean = m;
  std::vector<double> out(B.begin(), B.end());
  for (double& b : out) b -= m;
  return out;
}

std::vector<int> ClassificationResult::sdg_ids() const {
  std::vector<int> ids;
  ids.reserve(labels.size());
  for (const Label& l : labels) ids.push_back(l.sdg_id);
  return ids;
}

ClassificationResult ThresholdRank(std::span<const double> centered,
                                   double threshold) {
  ClassificationResult result;
  for (std::size_t i = 0; i < centered.size(); ++i) {
    if (centered[i] > threshold) {
      result.labels.push_back({static_cast<int>(i) + 1, centered[i]});
    }
  }
  std::stable_sort(result.labels.begin(), result.labels.end(),
                   [](const Label& a, const Label& b) { return a.score > b.score; });
  return result;
}

Models Models::FromDefinitions(std::span<const SdgDefinition> defs) {
  Models models;
  models.corpus = Corpus::Build(defs, models.preprocessor);
  models.tfidf = TfIdfModel::Build(models.corpus);
  return models;
}

const SentenceCache* Models::cache(EncoderTag tag) const {
  const auto& c = tag == EncoderTag::kDan ? dan_cache : transformer_cache;
  return c ? &*c : nullptr;
}

Classifier::Classifier(std::shared_ptr<const Models> models,
                       ClassifierOptions options)
    : models_(std::move(models)), options_(options) {
  const Corpus& corpus = models_->corpus;
  if (models_->word_table) {
    corpus_awe_.reserve(corpus.size());
    for (const CorpusDocument& doc : corpus.documents()) {
      corpus_awe_.push_back(AverageWordEmbedding(
          models_->preprocessor.SurfaceTokens(doc.text), *models_->word_table));
    }
  }
  for (EncoderTag tag : {EncoderTag::kDan, EncoderTag::kTransformer}) {
    const SentenceCache* cache = models_->cache(tag);
    if (cache == nullptr) continue;
    auto& vectors = corpus_sentences_[TagIndex(tag)];
    for (const CorpusDocument& doc : corpus.documents()) {
      vectors.push_back(cache->FindDigest(TextDigest(Normalize(doc.text))));
    }
  }
}

bool Classifier::NeedsWordTable(const StrategySpec& spec) const {
  return spec.uses_topic_weight || spec.strategy == Strategy::kAweBaseline;
}

bool Classifier::NeedsSentenceCache(const StrategySpec& spec) const {
  if (spec.strategy == Strategy::kAweBaseline) return false;
  if (spec.uses_tfidf && options_.combine == CombineVariant::kProse) {
    return false;
  }
  return true;
}

void Classifier::CheckResources(const StrategySpec& spec) const {
  const std::string name(spec.name());
  if (spec.uses_tfidf && !models_->tfidf) {
    throw DataError("strategy " + name + " needs a TF-IDF model");
  }
  if (NeedsWordTable(spec) && !models_->word_table) {
    throw DataError("strategy " + name + " needs a word table");
  }
  if (NeedsSentenceCache(spec) && models_->cache(spec.encoder) == nullptr) {
    throw DataError("strategy " + name + " needs a " +
                    std::string(EncoderTagName(spec.encoder)) +
                    " sentence cache");
  }
}

std::vector<std::string> Classifier::MissingDigests(
    std::span<const std::string> queries, const StrategySpec& spec) const {
  if (!NeedsSentenceCache(spec)) return {};
  const SentenceCache* cache = models_->cache(spec.encoder);
  std::set<std::string> missing;
  auto check = [&](std::string_view text) {
    std::string digest = TextDigest(Normalize(text));
    if (cache == nullptr || !cache->Contains(digest)) {
      missing.insert(std::move(digest));
    }
  };
  for (const CorpusDocument& doc : models_->corpus.documents()) check(doc.text);
  for (const std::string& q : queries) check(q);
  return {missing.begin(), missing.end()};
}

void Classifier::Fill(std::string_view query, const StrategySpec& spec,
                      ClassificationTrace* trace) const {
  CheckResources(spec);
  const Models& m = *models_;
  trace->processed = m.preprocessor.Process(query);
  SimilarityBundle& s = trace->similarities;

  if (spec.uses_tfidf) s.F = TfIdfSimilarities(*m.tfidf, trace->processed);
  if (NeedsWordTable(spec)) {
    const DenseVector q =
        AverageWordEmbedding(m.preprocessor.SurfaceTokens(query), *m.word_table);
    s.G = DenseSimilarities(q, corpus_awe_);
  }
  if (NeedsSentenceCache(spec)) {
    const SentenceCache& cache = *m.cache(spec.encoder);
    const auto& corpus = corpus_sentences_[TagIndex(spec.encoder)];
    std::set<std::string> missing;
    std::string digest = TextDigest(Normalize(query));
    const DenseVector* q = cache.FindDigest(digest);
    if (q == nullptr) missing.insert(std::move(digest));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (corpus[i] == nullptr) {
        missing.insert(TextDigest(Normalize(m.corpus[i].text)));
      }
    }
    if (!missing.empty()) {
      throw CacheMiss(std::vector<std::string>(missing.begin(), missing.end()));
    }
    s.U.reserve(corpus.size());
    for (const DenseVector* doc : corpus) s.U.push_back(DenseCosine(*q, *doc));
  }

  if (spec.uses_topic_weight) {
    s.R = TopicWeight(s.G, options_.topic_weight);
    s.C = Combine(s.F, s.U, s.G, s.R, options_.combine);
  } else {
    // Baselines: the single similarity takes both slots, no topic weight.
    const std::vector<double>& single =
        spec.strategy == Strategy::kAweBaseline ? s.G : s.U;
    s.R = 1.0;
    s.C.resize(single.size());
    for (std::size_t i = 0; i < single.size(); ++i) s.C[i] = 2.0 * single[i];
  }

  const std::size_t n = trace->processed.token_count();
  trace->L = n == 0 ? 0.0 : std::log2(static_cast<double>(n));
  trace->W = LogLengthScale(s.C, n);
  trace->B = BiasedSimilarity(trace->W);
  trace->centered = Center(trace->B, &trace->M);
}

ClassificationTrace Classifier::Explain(std::string_view query,
                                        const StrategySpec& spec,
                                        double threshold) const {
  ClassificationTrace trace;
  Fill(query, spec, &trace);
  trace.threshold = threshold;
  trace.result = ThresholdRank(trace.centered, threshold);
  return trace;
}

QueryScores Classifier::Score(std::string_view query,
                              const StrategySpec& spec) const {
  ClassificationTrace trace;
  Fill(query, spec, &trace);
  return {trace.processed.token_count(), std::move(trace.centered)};
}

ClassificationResult Classifier::Classify(std::string_view query,
                                          const StrategySpec& spec,
                                          double threshold) const {
  return ThresholdRank(Score(query, spec).centered, threshold);
}

std::vector<QueryScores> Classifier::ScoreBatch(
    std::span<const std::string> queries, const StrategySpec& spec,
    std::size_t workers) const {
  CheckResources(spec);
  if (std::vector<std::string> missing = MissingDigests(queries, spec);
      !missing.empty()) {
    throw CacheMiss(std::move(missing));
  }
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(queries.size(), 1));

  std::vector<QueryScores> results(queries.size());
  std::vector<std::exception_ptr> errors(queries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < queries.size(); i = next++) {
      try {
        results[i] = Score(queries[i], spec);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace sdgtag
