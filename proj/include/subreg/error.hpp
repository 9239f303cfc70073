// Copyright 2026 The polysubreg Authors
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

#ifndef SUBREG_ERROR_HPP_
#define SUBREG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace subreg {

enum class ErrorCode {
  kDimensionMismatch,
  kInvalidArgument,
  kIterationCap,
  kEmptySet,
  kNotInSet,
  kDimCap,
  kInvalidInstance,
  kNotPolyhedral,
  kNoWitness,
  kParse,
  kUnknownCatalogEntry,
  kIo,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIterationCap: return "IterationCap";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kNotInSet: return "NotInSet";
    case ErrorCode::kDimCap: return "DimCap";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kNotPolyhedral: return "NotPolyhedral";
    case ErrorCode::kNoWitness: return "NoWitness";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kUnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when the simplex method exceeds its pivot budget.
class IterationCapError : public Error {
 public:
  IterationCapError(int iterations, const std::string& what)
      : Error(ErrorCode::kIterationCap, what), iterations_(iterations) {}

  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace subreg

#endif  // SUBREG_ERROR_HPP_
