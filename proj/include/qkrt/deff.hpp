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

/**
 * @file deff.hpp
 * @brief Effective number of quantum volume layers of a kernel-circuit family.
 *
 * A kernel circuit on n qubits with 2D template repetitions has volumetric
 * area 2Dn. The square QV circuit of equal area has width v = ceil(sqrt(2Dn)).
 * The effective layer count rescales v by the ratio of mean transpiled depths:
 *
 *   d_eff = mean depth(kernel circuits) / mean depth(QV_v circuits) * v
 *
 * Means are arithmetic over i.i.d. samples. Every sample draws from its own
 * seed stream derived from (seed, role, index), so the estimate is a pure
 * function of its inputs.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "qkrt/generators.hpp"
#include "qkrt/transpiler.hpp"

namespace qkrt {

struct DeffEstimate {
  int v{0};
  double mean_kernel_depth{0.0};
  double mean_qv_depth{0.0};
  double d_eff{0.0};
  int kernel_samples{0};
  int qv_samples{0};
  std::uint64_t seed{0};
};

struct DeffOptions {
  int kernel_samples = 25;
  int qv_samples = 20;
  std::uint64_t seed = 0;
};

/// ceil(sqrt(2 * reps * n)), computed in integers.
int equivalent_qv_width(int n, int reps);

/// Combines precomputed depths. Exposed so alternative depth sources can be
/// plugged in.
DeffEstimate effective_layers_from_depths(std::span<const int> kernel_depths, std::span<const int> qv_depths,
                                          int v);

/// Samples kernel circuits with x, y uniform in [0, 2pi)^n and QV circuits of
/// width and depth v, transpiles both onto `map`, and combines the means.
/// Throws Error{InvalidArgument} if the map has fewer than max(n, v) qubits.
DeffEstimate effective_layers(const KernelFamily& fam, const CouplingMap& map, const DeffOptions& opts = {});

/// For jobs made of QV circuits the effective layer count is the layer count
/// itself; no sampling is done.
DeffEstimate qv_effective_layers(int layers);

std::string to_json(const DeffEstimate& est);

}  // namespace qkrt
