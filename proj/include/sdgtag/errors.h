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

#ifndef SDGTAG_ERRORS_H_
#define SDGTAG_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sdgtag {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, definitions, datasets).
class DataError : public Error {
 public:
  using Error::Error;
};

class DuplicateSdgId : public DataError {
 public:
  explicit DuplicateSdgId(int id)
      : DataError("duplicate SDG id " + std::to_string(id)), id_(id) {}
  int id() const { return id_; }

 private:
  int id_;
};

class MissingSdgId : public DataError {
 public:
  explicit MissingSdgId(int id)
      : DataError("missing definition for SDG id " + std::to_string(id)),
        id_(id) {}
  int id() const { return id_; }

 private:
  int id_;
};

class EmptyCorpus : public DataError {
 public:
  EmptyCorpus() : DataError("cannot build a TF-IDF model from zero documents") {}
};

class BadHeader : public DataError {
 public:
  using DataError::DataError;
};

// `line` is 1-based; 0 when the mismatch is not tied to a file line.
class DimensionMismatch : public DataError {
 public:
  DimensionMismatch(std::size_t line, std::size_t expected, std::size_t got)
      : DataError(Describe(line, expected, got)), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  static std::string Describe(std::size_t line, std::size_t expected,
                              std::size_t got) {
    std::string msg = "dimension mismatch: expected " +
                      std::to_string(expected) + ", got " + std::to_string(got);
    if (line > 0) msg += " (line " + std::to_string(line) + ")";
    return msg;
  }

  std::size_t line_;
};

class DuplicateToken : public DataError {
 public:
  explicit DuplicateToken(std::string token)
      : DataError("duplicate token '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class EmptyDataset : public DataError {
 public:
  EmptyDataset() : DataError("dataset has no scorable samples") {}
};

class InvalidEId : public DataError {
 public:
  explicit InvalidEId(const std::string& eid)
      : DataError("invalid eId '" + eid + "' (expected [A-Za-z0-9_]+)") {}
};

// A sentence-cache lookup failed. The exporter has to be rerun over the
// listed digests.
class CacheMiss : public Error {
 public:
  explicit CacheMiss(std::vector<std::string> digests)
      : Error(Describe(digests)), digests_(std::move(digests)) {}
  const std::vector<std::string>& digests() const { return digests_; }

 private:
  static std::string Describe(const std::vector<std::string>& digests) {
    std::string msg = "sentence cache miss for " +
                      std::to_string(digests.size()) + " text(s)";
    if (!digests.empty()) msg += ", first: " + digests.front();
    return msg;
  }

  std::vector<std::string> digests_;
};

}  // namespace sdgtag

#endif  // SDGTAG_ERRORS_H_
