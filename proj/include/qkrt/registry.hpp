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

#include <string>
#include <string_view>
#include <vector>

#include "qkrt/model.hpp"

namespace qkrt {

/// Named backends. The built-in set holds the five IBM systems whose QV/CLOPS
/// figures anchor the model plus ibmq_auckland; CLOPS values are the published
/// rounded figures (2.3K is stored as 2300).
class BackendRegistry {
 public:
  BackendRegistry() = default;
  explicit BackendRegistry(std::vector<BackendSpec> backends);

  static BackendRegistry builtin();

  const std::vector<BackendSpec>& backends() const { return backends_; }
  /// Throws Error{BackendNotFound}.
  const BackendSpec& find(std::string_view name) const;

  /// {"backends": [{"name": ..., "num_qubits": ..., "quantum_volume": ...,
  ///   "clops": ..., "topology": ...}, ...]}
  std::string to_json() const;
  static BackendRegistry from_json(std::string_view text);

 private:
  std::vector<BackendSpec> backends_;
};

}  // namespace qkrt
