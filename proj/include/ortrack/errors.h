// Copyright 2026 The ortrack Authors.
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

#ifndef ORTRACK_ERRORS_H_
#define ORTRACK_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ortrack {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line()` is 1-based; 0 means "no specific line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Torso keypoints carry no usable orientation signal.
class OrientationUnavailable : public Error {
 public:
  using Error::Error;
};

// Singular or otherwise ill-conditioned linear algebra.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// A lookup by identity that found nothing.
class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace ortrack

#endif  // ORTRACK_ERRORS_H_
