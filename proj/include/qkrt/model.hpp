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
 * @file model.hpp
 * @brief CLOPS-based job runtime model.
 *
 * A system with CLOPS C runs M circuits of D layers, K parameter updates and
 * S shots in M*D*K*S / C seconds when the stack has no fixed overheads. For
 * kernel circuits D is replaced by the effective layer count and K is 1.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qkrt/transpiler.hpp"

namespace qkrt {

/// Shots, circuits and parameter updates of the standard CLOPS measurement.
inline constexpr std::uint64_t kClopsShots = 100;
inline constexpr std::uint64_t kClopsCircuits = 100;
inline constexpr std::uint64_t kClopsUpdates = 10;

struct BackendSpec {
  std::string name;
  int num_qubits{0};
  std::int64_t quantum_volume{0};
  double clops{0.0};
  Topology topology{Topology::HeavyHexLike};

  /// log2(quantum_volume).
  int qv_layers() const;
  CouplingMap coupling_map() const;
  /// Throws Error{InvalidArgument} unless V is a power of two, C > 0 and
  /// log2(V) <= num_qubits.
  void validate() const;
};

struct JobSpec {
  std::uint64_t circuits{1};  // M
  std::uint64_t shots{1};     // S
  std::uint64_t updates{1};   // K
  double d_eff{1.0};

  /// Layer-shots executed by the job, M*K*S*d_eff.
  double work() const {
    return static_cast<double>(circuits) * static_cast<double>(updates) * static_cast<double>(shots) * d_eff;
  }

  void validate() const;
};

struct RuntimeReport {
  double predicted{0.0};
  std::optional<double> actual;
  double ratio{0.0};
  double loss{0.0};

  bool under_predicted() const { return ratio < 1.0; }
};

/// C = M*D*K*S / T.
double clops_from_measurement(std::uint64_t circuits, double layers, std::uint64_t updates, std::uint64_t shots,
                              double seconds);

/// T_hat = M*K*S*d_eff / C.
double predict_runtime(const JobSpec& job, double clops);
double predict_runtime(const JobSpec& job, const BackendSpec& backend);

/// Asymmetric loss of a runtime ratio r = T_hat / T: r - 1 above one,
/// 1/r - 1 below.
double runtime_loss(double ratio);

RuntimeReport score(double predicted, double actual);

/// N(N-1)/2 kernel circuits for N feature vectors.
std::uint64_t kernel_job_size(std::uint64_t dataset_size);

/// Runtime of the full kernel matrix for N vectors.
double extrapolate(std::uint64_t dataset_size, std::uint64_t shots, double d_eff, double clops);

/// ceil(c * N^(8/3) / eps^2). eps must lie in (0, 1].
std::uint64_t required_shots(std::uint64_t dataset_size, double epsilon, double constant);

/// c * N^(14/3) * d_eff / (C * eps^2), the companion total-runtime scaling.
double runtime_scaling(std::uint64_t dataset_size, double epsilon, double constant, double d_eff, double clops);

/// "≈ 292 days", "≈ 63.1 years", "≈ 26.1 s" and so on.
std::string human_duration(double seconds);

}  // namespace qkrt
