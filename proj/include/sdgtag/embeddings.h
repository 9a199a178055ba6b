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

#ifndef SDGTAG_EMBEDDINGS_H_
#define SDGTAG_EMBEDDINGS_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sdgtag {

using DenseVector = std::vector<double>;

// Cosine similarity in [-1, 1]; 0 when either vector has zero norm.
// Throws DimensionMismatch when the lengths differ.
double DenseCosine(std::span<const double> a, std::span<const double> b);

// Word vectors loaded from a word-table file:
//
//   <dimension>
//   <token>\t<f1> <f2> ... <fd>
//   ...
class EmbeddingTable {
 public:
  explicit EmbeddingTable(std::size_t dimension);

  // Throws BadHeader, DimensionMismatch (with the 1-based line) or
  // DuplicateToken.
  static EmbeddingTable Load(const std::filesystem::path& path);
  static EmbeddingTable Parse(std::string_view content);

  // Throws DimensionMismatch or DuplicateToken.
  void Add(std::string token, DenseVector vector);

  // nullptr when the token is absent.
  const DenseVector* Find(std::string_view token) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }

  // Rows sorted by token, shortest round-trip decimals.
  void Write(std::ostream& out) const;
  void Save(const std::filesystem::path& path) const;

 private:
  std::size_t dimension_;
  std::map<std::string, DenseVector, std::less<>> vectors_;
};

// Component-wise mean over token instances present in `table` (a token that
// occurs twice counts twice). Returns the zero vector when nothing is found.
DenseVector AverageWordEmbedding(std::span<const std::string> tokens,
                                 const EmbeddingTable& table);

enum class EncoderTag { kDan, kTransformer };

std::string_view EncoderTagName(EncoderTag tag);
// Accepts "dan" and "transformer"; throws DataError otherwise.
EncoderTag ParseEncoderTag(std::string_view name);

// Trims leading/trailing ASCII whitespace and collapses every internal run
// of ASCII whitespace to one space.
std::string CanonicalizeText(std::string_view text);

// Lowercase hex SHA-256 of CanonicalizeText(text).
std::string TextDigest(std::string_view text);

// Pre-computed sentence-encoder vectors keyed by TextDigest:
//
//   <dimension>\t<encoder_tag>
//   <hex digest>\t<f1> <f2> ... <fd>
//   ...
class SentenceCache {
 public:
  SentenceCache(std::size_t dimension, EncoderTag encoder);

  static SentenceCache Load(const std::filesystem::path& path);
  static SentenceCache Parse(std::string_view content);

  // Throws DimensionMismatch or DataError on a duplicate digest.
  void AddDigest(std::string digest, DenseVector vector);
  void AddText(std::string_view text, DenseVector vector);

  bool Contains(std::string_view digest) const;
  const DenseVector* FindDigest(std::string_view digest) const;

  // Vector cached for `text`; throws CacheMiss when absent.
  const DenseVector& Embedding(std::string_view text) const;

  std::size_t dimension() const { return dimension_; }
  EncoderTag encoder() const { return encoder_; }
  std::size_t size() const { return vectors_.size(); }

  // Rows sorted by digest.
  void Write(std::ostream& out) const;
  void Save(const std::filesystem::path& path) const;

 private:
  std::size_t dimension_;
  EncoderTag encoder_;
  std::map<std::string, DenseVector, std::less<>> vectors_;
};

}  // namespace sdgtag

#endif  // SDGTAG_EMBEDDINGS_H_
