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

#include "qkrt/deff.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "qkrt/error.hpp"
#include "qkrt/random.hpp"

namespace qkrt {

namespace {

constexpr std::uint64_t kKernelStream = 1;
constexpr std::uint64_t kQvStream = 2;

double mean(std::span<const int> xs) {
  return static_cast<double>(std::accumulate(xs.begin(), xs.end(), std::int64_t{0})) /
         static_cast<double>(xs.size());
}

}  // namespace

int equivalent_qv_width(int n, int reps) {
  if (n < 2 || reps < 1) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("need n >= 2 and D >= 1, got n={} D={}", n, reps));
  }
  const std::int64_t area = std::int64_t{2} * reps * n;
  std::int64_t v = 0;
  while (v * v < area) ++v;
  return static_cast<int>(v);
}

DeffEstimate effective_layers_from_depths(std::span<const int> kernel_depths, std::span<const int> qv_depths,
                                          int v) {
  if (kernel_depths.empty() || qv_depths.empty()) {
    throw Error(ErrorCode::InvalidArgument, "effective layers need at least one kernel and one QV sample");
  }
  DeffEstimate est;
  est.v = v;
  est.kernel_samples = static_cast<int>(kernel_depths.size());
  est.qv_samples = static_cast<int>(qv_depths.size());
  est.mean_kernel_depth = mean(kernel_depths);
  est.mean_qv_depth = mean(qv_depths);
  if (est.mean_qv_depth <= 0.0) throw Error(ErrorCode::InvalidArgument, "mean QV depth must be positive");
  est.d_eff = est.mean_kernel_depth / est.mean_qv_depth * v;
  return est;
}

DeffEstimate effective_layers(const KernelFamily& fam, const CouplingMap& map, const DeffOptions& opts) {
  if (opts.kernel_samples < 1 || opts.qv_samples < 1) {
    throw Error(ErrorCode::InvalidArgument, "sample counts must be at least 1");
  }
  const int v = equivalent_qv_width(fam.n, fam.reps);
  const int needed = std::max(fam.n, v);
  if (map.num_qubits() < needed) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("coupling map has {} qubits; this family needs {} (n={}, v={})", map.num_qubits(),
                            needed, fam.n, v));
  }

  std::vector<int> kernel_depths(static_cast<std::size_t>(opts.kernel_samples));
  for (int s = 0; s < opts.kernel_samples; ++s) {
    Rng rng = make_rng(opts.seed, {kKernelStream, static_cast<std::uint64_t>(s)});
    const auto x = random_features(fam.n, rng);
    const auto y = random_features(fam.n, rng);
    kernel_depths[s] = transpiled_depth(kernel_circuit(fam, x, y), map);
  }
  std::vector<int> qv_depths(static_cast<std::size_t>(opts.qv_samples));
  for (int s = 0; s < opts.qv_samples; ++s) {
    const auto seed = derive_seed(opts.seed, {kQvStream, static_cast<std::uint64_t>(s)});
    qv_depths[s] = transpiled_depth(qv_circuit(v, v, seed), map);
  }
  DeffEstimate est = effective_layers_from_depths(kernel_depths, qv_depths, v);
  est.seed = opts.seed;
  return est;
}

DeffEstimate qv_effective_layers(int layers) {
  if (layers < 1) throw Error(ErrorCode::InvalidArgument, "QV layer count must be at least 1");
  DeffEstimate est;
  est.v = layers;
  est.d_eff = layers;
  return est;
}

std::string to_json(const DeffEstimate& est) {
  nlohmann::ordered_json j;
  j["v"] = est.v;
  j["mean_kernel_depth"] = est.mean_kernel_depth;
  j["mean_qv_depth"] = est.mean_qv_depth;
  j["d_eff"] = est.d_eff;
  j["kernel_samples"] = est.kernel_samples;
  j["qv_samples"] = est.qv_samples;
  j["seed"] = est.seed;
  return j.dump(2);
}

}  // namespace qkrt
