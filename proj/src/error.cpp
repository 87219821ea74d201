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

#include "qkrt/error.hpp"

namespace qkrt {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return "INVALID_ARGUMENT";
    case ErrorCode::WidthMismatch:
      return "WIDTH_MISMATCH";
    case ErrorCode::BackendNotFound:
      return "BACKEND_NOT_FOUND";
    case ErrorCode::MalformedCsv:
      return "MALFORMED_CSV";
    case ErrorCode::MalformedJson:
      return "MALFORMED_JSON";
    case ErrorCode::Io:
      return "IO_ERROR";
    case ErrorCode::CapacityExceeded:
      return "CAPACITY_EXCEEDED";
    case ErrorCode::IllConditioned:
      return "ILL_CONDITIONED";
    case ErrorCode::UnknownGate:
      return "UNKNOWN_GATE";
  }
  return "UNKNOWN";
}

}  // namespace qkrt
