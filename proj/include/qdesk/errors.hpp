// Copyright 2026 The qdesk Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qdesk {

// Process exit codes used by the CLI. Library errors carry one so the
// command layer can map them without string matching.
enum class ExitCode : int {
  ok = 0,
  usage = 1,
  input = 2,
  capacity = 3,
  failure = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

// Bad argument value (zero shots, mismatched sizes, degenerate ranges, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(ExitCode::input, what) {}
};

// Qubit or variable index duplicated or out of range.
class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what) : Error(ExitCode::input, what) {}
};

// A matrix or model failed a structural check (unitarity, symmetry, ...).
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ExitCode::input, what) {}
};

// A documented size cap was exceeded.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ExitCode::capacity, what) {}
};

// A search exhausted its budget without a result.
class NoSolutionError : public Error {
 public:
  explicit NoSolutionError(const std::string& what) : Error(ExitCode::failure, what) {}
};

}  // namespace qdesk
