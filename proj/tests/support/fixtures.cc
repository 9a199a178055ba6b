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

#include "fixtures.h"

#include <atomic>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sdgtag/preprocess.h"
#include "sdgtag/tfidf.h"

namespace sdgtag::testing {
namespace {

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::string> CorpusTexts(const Models& models) {
  std::vector<std::string> texts;
  for (const CorpusDocument& d : models.corpus.documents()) texts.push_back(d.text);
  return texts;
}

}  // namespace

DenseVector HashUnitVector(std::string_view key, std::size_t dim) {
  std::mt19937_64 rng(Fnv1a(key));
  DenseVector v(dim);
  double norm = 0.0;
  while (norm == 0.0) {
    norm = 0.0;
    for (double& x : v) {
      x = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
      norm += x * x;
    }
  }
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

EmbeddingTable SyntheticWordTable(const Models& models,
                                  std::span<const std::string> extra_texts,
                                  std::size_t dim) {
  std::set<std::string> tokens;
  auto collect = [&](const std::string& text) {
    for (std::string& t : models.preprocessor.SurfaceTokens(text)) {
      tokens.insert(std::move(t));
    }
  };
  for (const std::string& t : CorpusTexts(models)) collect(t);
  for (const std::string& t : extra_texts) collect(t);

  const DenseVector base = HashUnitVector("shared direction", dim);
  EmbeddingTable table(dim);
  for (const std::string& token : tokens) {
    DenseVector v = HashUnitVector("word:" + token, dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = base[i] + 0.6 * v[i];
    table.Add(token, std::move(v));
  }
  return table;
}

SentenceCache SyntheticSentenceCache(const Models& models, EncoderTag tag,
                                     std::span<const std::string> extra_texts) {
  SentenceCache cache(kSentenceDim, tag);
  std::set<std::string> seen;
  std::size_t i = 0;
  for (const std::string& text : CorpusTexts(models)) {
    DenseVector e(kSentenceDim, 0.0);
    e[i++] = 1.0;
    const std::string digest = TextDigest(Normalize(text));
    if (seen.insert(digest).second) cache.AddDigest(digest, std::move(e));
  }
  const std::string salt(EncoderTagName(tag));
  for (const std::string& text : extra_texts) {
    const std::string digest = TextDigest(Normalize(text));
    if (!seen.insert(digest).second) continue;
    cache.AddDigest(digest, HashUnitVector(salt + ":" + digest, kSentenceDim));
  }
  return cache;
}

std::shared_ptr<Models> SyntheticModels(std::span<const std::string> extra_texts) {
  auto models = std::make_shared<Models>(Models::FromDefinitions(BundledSdgDefinitions()));
  models->word_table = SyntheticWordTable(*models, extra_texts);
  models->dan_cache = SyntheticSentenceCache(*models, EncoderTag::kDan, extra_texts);
  models->transformer_cache =
      SyntheticSentenceCache(*models, EncoderTag::kTransformer, extra_texts);
  return models;
}

FixtureFiles WriteFixtureFiles(const Models& models, const std::filesystem::path& dir) {
  FixtureFiles files{dir / "words.tsv", dir / "dan.cache", dir / "transformer.cache"};
  models.word_table->Save(files.word_table);
  models.dan_cache->Save(files.dan_cache);
  models.transformer_cache->Save(files.transformer_cache);
  return files;
}

std::filesystem::path MakeTempDir(std::string_view prefix) {
  static std::atomic<int> counter{0};
  std::random_device rd;
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() /
      (std::string(prefix) + "_" + std::to_string(rd()) + "_" +
       std::to_string(counter++));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

void WriteText(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string RandomQuery(const Models& models, std::uint64_t seed) {
  static const char* const kFillers[] = {"the", "of", "and", "in", "for", "all",
                                         "qwzx", "blorp", "weather", "today",
                                         "Goal", "2nd", "sdg", "7", ",", "."};
  std::mt19937_64 rng(seed);
  const auto& docs = models.corpus.documents();
  const std::size_t words = 1 + rng() % 20;
  std::string out;
  for (std::size_t w = 0; w < words; ++w) {
    if (!out.empty()) out += ' ';
    if (rng() % 3 == 0) {
      out += kFillers[rng() % std::size(kFillers)];
      continue;
    }
    const std::vector<std::string> surface =
        models.preprocessor.SurfaceTokens(docs[rng() % docs.size()].text);
    out += surface[rng() % surface.size()];
  }
  return out;
}

}  // namespace sdgtag::testing
