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

#ifndef SDGTAG_TESTS_SUPPORT_FIXTURES_H_
#define SDGTAG_TESTS_SUPPORT_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdgtag/classifier.h"
#include "sdgtag/embeddings.h"

namespace sdgtag::testing {

// Deterministic pseudo-random unit vector derived from `key`.
DenseVector HashUnitVector(std::string_view key, std::size_t dim);

// A vector for every surface token of the corpus texts and of
// `extra_texts`: a shared direction plus 0.6 times a per-token random
// unit vector, so that topical texts have clearly positive AWE cosines.
EmbeddingTable SyntheticWordTable(const Models& models,
                                  std::span<const std::string> extra_texts = {},
                                  std::size_t dim = 32);

inline constexpr std::size_t kSentenceDim = 48;

// Corpus document i maps to the basis vector e_i. Every other text in
// `extra_texts` gets a random unit vector, unless it normalizes to a
// corpus text, in which case it shares that vector.
SentenceCache SyntheticSentenceCache(const Models& models, EncoderTag tag,
                                     std::span<const std::string> extra_texts = {});

// Bundled definitions, TF-IDF, synthetic word table and both caches.
std::shared_ptr<Models> SyntheticModels(
    std::span<const std::string> extra_texts = {});

// Writes the synthetic word table and caches under `dir` and returns the
// paths as {word_table, dan_cache, transformer_cache}.
struct FixtureFiles {
  std::filesystem::path word_table;
  std::filesystem::path dan_cache;
  std::filesystem::path transformer_cache;
};
FixtureFiles WriteFixtureFiles(const Models& models,
                               const std::filesystem::path& dir);

// Fresh empty directory under the system temp dir.
std::filesystem::path MakeTempDir(std::string_view prefix);

void WriteText(const std::filesystem::path& path, std::string_view content);
std::string ReadText(const std::filesystem::path& path);

// Random text over the corpus surface vocabulary mixed with stop words
// and junk words.
std::string RandomQuery(const Models& models, std::uint64_t seed);

}  // namespace sdgtag::testing

#endif  // SDGTAG_TESTS_SUPPORT_FIXTURES_H_
