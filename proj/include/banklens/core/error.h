// Copyright 2026 The Banklens Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BANKLENS_CORE_ERROR_H_
#define BANKLENS_CORE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace banklens {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A constructor or factory rejected a value that breaks a type invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A caller passed an argument outside an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Input bytes are not well-formed UTF-8.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// A file or stream could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Data that parses but contradicts itself (e.g. conflicting lexicon rows).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A keyed lookup missed.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Cosine similarity is undefined for a zero vector.
class SimilarityError : public Error {
 public:
  using Error::Error;
};

// An embedding provider failed to produce vectors.
class ProviderError : public Error {
 public:
  using Error::Error;
};

// A remote service timed out, refused, or answered outside its protocol.
class RemoteError : public Error {
 public:
  using Error::Error;
};

// Incompatible configuration, e.g. a model trained in another embedding space.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& message, int epoch)
      : Error(message), epoch_(epoch) {}

  int epoch() const { return epoch_; }

 private:
  int epoch_;
};

// The lexicon aspect strategy found no aspect keyword in a comment.
class UnclassifiableError : public Error {
 public:
  using Error::Error;
};

}  // namespace banklens

#endif  // BANKLENS_CORE_ERROR_H_
