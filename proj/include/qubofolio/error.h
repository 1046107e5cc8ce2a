// Copyright 2026 The Qubofolio Authors
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

#ifndef QUBOFOLIO_ERROR_H_
#define QUBOFOLIO_ERROR_H_

#include <stdexcept>
#include <string>

namespace qubofolio {

// Error categories. The numeric values double as CLI exit codes and as the
// C API status values, so they are part of the stable contract.
enum class ErrorCode : int {
  kSpec = 2,        // invalid problem specification or argument
  kSizeCap = 3,     // instance exceeds a solver or simulator cap
  kParse = 4,       // unreadable or malformed input file
  kSweepFailed = 5, // every row of a sweep failed
  kMismatch = 6,    // solution does not fit the problem layout
  kIo = 7,          // file cannot be opened or written
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qubofolio

#endif  // QUBOFOLIO_ERROR_H_
