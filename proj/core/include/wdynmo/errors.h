// Copyright 2026 The wdynmo Authors
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

#ifndef WDYNMO_ERRORS_H_
#define WDYNMO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace wdynmo {

// Base class of every error thrown by the library. The CLI maps each
// subclass to a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the domain of the operation (bad vertex id,
// malformed tree, negative number, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The instance does not satisfy a documented precondition of a solver.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The operation is not defined for this kind of instance (e.g. directed).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A configured size limit or the 64-bit arithmetic range was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The directed instance admits no in-degree-at-most-one peeling order.
class NotInFamilyError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Malformed input text. `location` is a JSON pointer or "line N".
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& message)
      : Error(location.empty() ? message : location + ": " + message),
        location_(location) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace wdynmo

#endif  // WDYNMO_ERRORS_H_
