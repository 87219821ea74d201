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
 * @file execsim.hpp
 * @brief Parametric execution-stack timing and its calibration.
 *
 * Synthetic wall-clock time of a job:
 *
 *   T = (t_job + M * (t_circ + K * S * d_eff * t_layer_shot)) * (1 + eta)
 *
 * with eta ~ Normal(0, jitter) truncated to (-0.9, inf). The fixed job and
 * per-circuit terms do not scale with shots, which is what drives the CLOPS
 * model to under-predict at low S. A per-layer-shot time below 1/C makes it
 * over-predict at high S.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qkrt/model.hpp"

namespace qkrt {

struct StackTimingParams {
  double job_overhead{0.0};      // t_job, seconds per job
  double circuit_overhead{0.0};  // t_circ, seconds per circuit
  double layer_shot_time{0.0};   // t_layer_shot, seconds per layer per shot
  double jitter{0.0};            // relative noise amplitude

  void validate() const;

  std::string to_json() const;
  static StackTimingParams from_json(std::string_view text);
};

/// Noise-free part of the runtime.
double expected_job_runtime(const JobSpec& job, const StackTimingParams& params);

double simulate_job_runtime(const JobSpec& job, const StackTimingParams& params, std::uint64_t seed);

struct Observation {
  JobSpec job;
  double seconds{0.0};
};

struct FitOptions {
  /// Pins t_job instead of fitting it. Needed when every observation has the
  /// same M, which leaves t_job and t_circ confounded.
  std::optional<double> fixed_job_overhead;
  /// Largest accepted ratio of extreme singular values of the scaled design.
  double max_condition = 1e10;
};

/// Least-squares fit of the overhead terms; jitter is the residual standard
/// deviation of T_observed / T_fitted - 1. Throws Error{InvalidArgument} with
/// fewer than three observations or a single S value, and
/// Error{IllConditioned} naming the unidentifiable parameters when the design
/// is rank deficient.
StackTimingParams fit_params(std::span<const Observation> observations, const FitOptions& opts = {});

struct SweepJob {
  JobSpec job;
  double aspect_ratio{1.0};
};

struct SweepRow {
  std::string backend;
  std::uint64_t circuits{0};
  std::uint64_t shots{0};
  double aspect_ratio{1.0};
  double d_eff{0.0};
  double predicted{0.0};
  double simulated{0.0};
  double ratio{0.0};
  double loss{0.0};
};

/// Predicted vs simulated runtime per job. Job i draws its jitter from the
/// stream derived from (seed, i).
std::vector<SweepRow> sweep(std::span<const SweepJob> jobs, const StackTimingParams& params,
                            const BackendSpec& backend, std::uint64_t seed);

/// backend,M,S,a,d_eff,T_pred,T_sim,r,L
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace qkrt
