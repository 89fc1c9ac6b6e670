// Copyright 2026 The lexdom Authors
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

#ifndef LEXDOM_ERRORS_HPP_
#define LEXDOM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexdom {

// Root of every error thrown by the library. The CLI maps each subclass to a
// distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a byte offset for graph6 payloads
// and a 1-based line number for corpus files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A mathematical hypothesis does not hold for the input (isolated vertex for
// a total kind, trivial factor, no applicable theorem, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a configured size cap (vertex capacity, solver order caps).
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Caller broke an operation contract (bad vertex index, loop edge, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two theorem evaluations disagree, or a constructed object fails its own
// validation. Never expected; raised rather than hidden.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace lexdom

#endif  // LEXDOM_ERRORS_HPP_
