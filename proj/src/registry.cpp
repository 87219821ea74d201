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

#include "qkrt/registry.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <json.hpp>

#include "qkrt/error.hpp"

namespace qkrt {

BackendRegistry::BackendRegistry(std::vector<BackendSpec> backends) : backends_(std::move(backends)) {
  for (const auto& b : backends_) b.validate();
  for (std::size_t i = 0; i < backends_.size(); ++i) {
    for (std::size_t j = i + 1; j < backends_.size(); ++j) {
      if (backends_[i].name == backends_[j].name) {
        throw Error(ErrorCode::InvalidArgument, fmt::format("duplicate backend '{}'", backends_[i].name));
      }
    }
  }
}

BackendRegistry BackendRegistry::builtin() {
  return BackendRegistry({
      {"ibm_hanoi", 27, 64, 2300.0, Topology::HeavyHexLike},
      {"ibmq_guadalupe", 16, 32, 2400.0, Topology::HeavyHexLike},
      {"ibmq_jakarta", 7, 16, 2400.0, Topology::HeavyHexLike},
      {"ibmq_mumbai", 27, 128, 1800.0, Topology::HeavyHexLike},
      {"ibmq_toronto", 27, 32, 1800.0, Topology::HeavyHexLike},
      {"ibmq_auckland", 27, 64, 2400.0, Topology::HeavyHexLike},
  });
}

const BackendSpec& BackendRegistry::find(std::string_view name) const {
  auto it = std::find_if(backends_.begin(), backends_.end(), [&](const BackendSpec& b) { return b.name == name; });
  if (it == backends_.end()) throw Error(ErrorCode::BackendNotFound, fmt::format("unknown backend '{}'", name));
  return *it;
}

std::string BackendRegistry::to_json() const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& b : backends_) {
    nlohmann::ordered_json j;
    j["name"] = b.name;
    j["num_qubits"] = b.num_qubits;
    j["quantum_volume"] = b.quantum_volume;
    j["clops"] = b.clops;
    j["topology"] = std::string(topology_name(b.topology));
    list.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["backends"] = std::move(list);
  return root.dump(2) + "\n";
}

BackendRegistry BackendRegistry::from_json(std::string_view text) {
  try {
    const auto root = nlohmann::json::parse(text);
    std::vector<BackendSpec> backends;
    for (const auto& j : root.at("backends")) {
      BackendSpec b;
      b.name = j.at("name").get<std::string>();
      b.num_qubits = j.at("num_qubits").get<int>();
      b.quantum_volume = j.at("quantum_volume").get<std::int64_t>();
      b.clops = j.at("clops").get<double>();
      b.topology = j.contains("topology") ? topology_from_name(j["topology"].get<std::string>())
                                          : Topology::HeavyHexLike;
      backends.push_back(std::move(b));
    }
    return BackendRegistry(std::move(backends));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, fmt::format("backend registry JSON: {}", e.what()));
  }
}

}  // namespace qkrt
