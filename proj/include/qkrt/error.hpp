// Copyright 2026 The qkrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qkrt {

/// Machine-readable failure categories. The CLI maps each to a distinct exit
/// status and reports the name in its error JSON.
enum class ErrorCode {
  InvalidArgument = 2,
  WidthMismatch = 3,
  BackendNotFound = 4,
  MalformedCsv = 5,
  MalformedJson = 6,
  Io = 7,
  CapacityExceeded = 8,
  IllConditioned = 9,
  UnknownGate = 10,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qkrt
