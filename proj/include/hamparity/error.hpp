// Copyright 2026 The hamparity Authors
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

#ifndef HAMPARITY_ERROR_HPP
#define HAMPARITY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hamparity {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotDirected,
  LengthMismatch,
  ScaleRefusal,
  MalformedRequirement,
  NotATournament,
  NotComplete,
  BadPartition,
  EmptyA,
  MalformedExtension,
  DuplicateEndpointPair,
  SearchExhausted,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the C
/// layer maps them onto status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hamparity

#endif  // HAMPARITY_ERROR_HPP
