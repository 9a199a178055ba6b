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

#include "sdgtag/embeddings.h"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "sdgtag/errors.h"
#include "text_util.h"

namespace sdgtag {
namespace {

using internal::FormatDouble;
using internal::IsAsciiSpace;

// Parses "<key><TAB><floats>" (or whitespace-separated when there is no
// TAB) into `key` and `values`. `what` names the file kind for messages.
void ParseRow(std::string_view line, std::size_t line_no, std::string_view what,
              std::string* key, DenseVector* values) {
  std::string_view rest;
  const std::size_t tab = line.find('\t');
  if (tab != std::string_view::npos) {
    *key = std::string(internal::Trim(line.substr(0, tab)));
    rest = line.substr(tab + 1);
  } else {
    std::size_t i = 0;
    while (i < line.size() && !IsAsciiSpace(line[i])) ++i;
    *key = std::string(line.substr(0, i));
    rest = line.substr(i);
  }
  if (key->empty()) {
    throw DataError(std::string(what) + " line " + std::to_string(line_no) +
                    ": empty key");
  }
  values->clear();
  for (std::string_view field : internal::SplitWhitespace(rest)) {
    const auto v = internal::ParseDouble(field);
    if (!v || !std::isfinite(*v)) {
      throw DataError(std::string(what) + " line " + std::to_string(line_no) +
                      ": bad number '" + std::string(field) + "'");
    }
    values->push_back(*v);
  }
}

void WriteRow(std::ostream& out, std::string_view key, const DenseVector& v) {
  out << key << '\t';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ' ';
    out << FormatDouble(v[i]);
  }
  out << '\n';
}

bool IsHexDigest(std::string_view s) {
  if (s.size() != 64) return false;
  for (char c : s) {
    const bool hex = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
    if (!hex) return false;
  }
  return true;
}

void CheckFinite(const DenseVector& v) {
  for (double x : v) {
    if (!std::isfinite(x)) throw DataError("embedding has a non-finite entry");
  }
}

void SaveWith(const std::filesystem::path& path, auto&& write) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write(out);
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

}  // namespace

double DenseCosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch(0, a.size(), b.size());
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double cos = dot / (std::sqrt(na) * std::sqrt(nb));
  if (!std::isfinite(cos)) return 0.0;
  return std::clamp(cos, -1.0, 1.0);
}

EmbeddingTable::EmbeddingTable(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw BadHeader("embedding dimension must be positive");
}

EmbeddingTable EmbeddingTable::Load(const std::filesystem::path& path) {
  return Parse(internal::ReadFile(path));
}

EmbeddingTable EmbeddingTable::Parse(std::string_view content) {
  const auto lines = internal::SplitLines(content);
  if (lines.empty()) throw BadHeader("word table: missing dimension header");
  const auto dim = internal::ParseInt(internal::Trim(lines[0]));
  if (!dim || *dim <= 0) {
    throw BadHeader("word table: header must be a positive integer, got '" +
                    std::string(lines[0]) + "'");
  }
  EmbeddingTable table(static_cast<std::size_t>(*dim));
  std::string token;
  DenseVector values;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (internal::Trim(lines[i]).empty()) continue;
    ParseRow(lines[i], i + 1, "word table", &token, &values);
    if (values.size() != table.dimension_) {
      throw DimensionMismatch(i + 1, table.dimension_, values.size());
    }
    if (table.vectors_.contains(token)) throw DuplicateToken(token);
    table.vectors_.emplace(std::move(token), std::move(values));
    values = DenseVector();
  }
  return table;
}

void EmbeddingTable::Add(std::string token, DenseVector vector) {
  if (vector.size() != dimension_) {
    throw DimensionMismatch(0, dimension_, vector.size());
  }
  CheckFinite(vector);
  if (vectors_.contains(token)) throw DuplicateToken(token);
  vectors_.emplace(std::move(token), std::move(vector));
}

const DenseVector* EmbeddingTable::Find(std::string_view token) const {
  const auto it = vectors_.find(token);
  return it == vectors_.end() ? nullptr : &it->second;
}

void EmbeddingTable::Write(std::ostream& out) const {
  out << dimension_ << '\n';
  for (const auto& [token, v] : vectors_) WriteRow(out, token, v);
}

void EmbeddingTable::Save(const std::filesystem::path& path) const {
  SaveWith(path, [this](std::ostream& out) { Write(out); });
}

DenseVector AverageWordEmbedding(std::span<const std::string> tokens,
                                 const EmbeddingTable& table) {
  DenseVector mean(table.dimension(), 0.0);
  std::size_t found = 0;
  for (const std::string& token : tokens) {
    const DenseVector* v = table.Find(token);
    if (v == nullptr) continue;
    for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += (*v)[i];
    ++found;
  }
  if (found > 0) {
    for (double& x : mean) x /= static_cast<double>(found);
  }
  return mean;
}

std::string_view EncoderTagName(EncoderTag tag) {
  return tag == EncoderTag::kDan ? "dan" : "transformer";
}

EncoderTag ParseEncoderTag(std::string_view name) {
  if (name == "dan") return EncoderTag::kDan;
  if (name == "transformer") return EncoderTag::kTransformer;
  throw DataError("unknown encoder tag '" + std::string(name) + "'");
}

std::string CanonicalizeText(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::string_view word : internal::SplitWhitespace(text)) {
    if (!out.empty()) out.push_back(' ');
    out.append(word);
  }
  return out;
}

std::string TextDigest(std::string_view text) {
  const std::string canonical = CanonicalizeText(text);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(canonical.data(), canonical.size(), md, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex.push_back(kHex[md[i] >> 4]);
    hex.push_back(kHex[md[i] & 0xF]);
  }
  return hex;
}

SentenceCache::SentenceCache(std::size_t dimension, EncoderTag encoder)
    : dimension_(dimension), encoder_(encoder) {
  if (dimension == 0) throw BadHeader("sentence cache dimension must be positive");
}

SentenceCache SentenceCache::Load(const std::filesystem::path& path) {
  return Parse(internal::ReadFile(path));
}

SentenceCache SentenceCache::Parse(std::string_view content) {
  const auto lines = internal::SplitLines(content);
  if (lines.empty()) throw BadHeader("sentence cache: missing header");
  const auto header = internal::SplitWhitespace(lines[0]);
  if (header.size() != 2) {
    throw BadHeader("sentence cache: header must be '<dimension>\\t<encoder>'");
  }
  const auto dim = internal::ParseInt(header[0]);
  if (!dim || *dim <= 0) {
    throw BadHeader("sentence cache: bad dimension '" + std::string(header[0]) +
                    "'");
  }
  EncoderTag tag;
  try {
    tag = ParseEncoderTag(header[1]);
  } catch (const DataError& e) {
    throw BadHeader(std::string("sentence cache: ") + e.what());
  }
  SentenceCache cache(static_cast<std::size_t>(*dim), tag);
  std::string digest;
  DenseVector values;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (internal::Trim(lines[i]).empty()) continue;
    ParseRow(lines[i], i + 1, "sentence cache", &digest, &values);
    if (values.size() != cache.dimension_) {
      throw DimensionMismatch(i + 1, cache.dimension_, values.size());
    }
    if (!IsHexDigest(digest)) {
      throw DataError("sentence cache line " + std::to_string(i + 1) +
                      ": key is not a SHA-256 hex digest");
    }
    if (cache.vectors_.contains(digest)) {
      throw DataError("sentence cache line " + std::to_string(i + 1) +
                      ": duplicate digest");
    }
    cache.vectors_.emplace(std::move(digest), std::move(values));
    values = DenseVector();
  }
  return cache;
}

void SentenceCache::AddDigest(std::string digest, DenseVector vector) {
  if (vector.size() != dimension_) {
    throw DimensionMismatch(0, dimension_, vector.size());
  }
  if (!IsHexDigest(digest)) {
    throw DataError("'" + digest + "' is not a SHA-256 hex digest");
  }
  CheckFinite(vector);
  if (vectors_.contains(digest)) {
    throw DataError("duplicate digest " + digest);
  }
  vectors_.emplace(std::move(digest), std::move(vector));
}

void SentenceCache::AddText(std::string_view text, DenseVector vector) {
  AddDigest(TextDigest(text), std::move(vector));
}

bool SentenceCache::Contains(std::string_view digest) const {
  return vectors_.find(digest) != vectors_.end();
}

const DenseVector* SentenceCache::FindDigest(std::string_view digest) const {
  const auto it = vectors_.find(digest);
  return it == vectors_.end() ? nullptr : &it->second;
}

const DenseVector& SentenceCache::Embedding(std::string_view text) const {
  std::string digest = TextDigest(text);
  const DenseVector* v = FindDigest(digest);
  if (v == nullptr) throw CacheMiss({std::move(digest)});
  return *v;
}

void SentenceCache::Write(std::ostream& out) const {
  out << dimension_ << '\t' << EncoderTagName(encoder_) << '\n';
  for (const auto& [digest, v] : vectors_) WriteRow(out, digest, v);
}

void SentenceCache::Save(const std::filesystem::path& path) const {
  SaveWith(path, [this](std::ostream& out) { Write(out); });
}

}  // namespace sdgtag
