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

#include "qkrt/model.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qkrt/error.hpp"

namespace qkrt {

int BackendSpec::qv_layers() const {
  int layers = 0;
  while ((std::int64_t{1} << layers) < quantum_volume) ++layers;
  return layers;
}

CouplingMap BackendSpec::coupling_map() const { return CouplingMap::make(topology, num_qubits); }

void BackendSpec::validate() const {
  if (name.empty()) throw Error(ErrorCode::InvalidArgument, "backend name is empty");
  if (quantum_volume < 2 || (quantum_volume & (quantum_volume - 1)) != 0) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("backend {}: quantum volume {} is not a power of two", name, quantum_volume));
  }
  if (!(clops > 0.0)) throw Error(ErrorCode::InvalidArgument, fmt::format("backend {}: CLOPS must be positive", name));
  if (qv_layers() > num_qubits) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("backend {}: log2(QV)={} exceeds {} qubits", name, qv_layers(), num_qubits));
  }
}

void JobSpec::validate() const {
  if (circuits < 1 || shots < 1 || updates < 1) {
    throw Error(ErrorCode::InvalidArgument, "job needs M >= 1, S >= 1 and K >= 1");
  }
  if (!(d_eff > 0.0)) throw Error(ErrorCode::InvalidArgument, "job needs d_eff > 0");
}

double clops_from_measurement(std::uint64_t circuits, double layers, std::uint64_t updates, std::uint64_t shots,
                              double seconds) {
  if (!(seconds > 0.0)) throw Error(ErrorCode::InvalidArgument, "elapsed time must be positive");
  if (circuits < 1 || updates < 1 || shots < 1 || !(layers > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "M, D, K and S must be positive");
  }
  return static_cast<double>(circuits) * layers * static_cast<double>(updates) * static_cast<double>(shots) / seconds;
}

double predict_runtime(const JobSpec& job, double clops) {
  job.validate();
  if (!(clops > 0.0)) throw Error(ErrorCode::InvalidArgument, "CLOPS must be positive");
  return job.work() * (1.0 / clops);
}

double predict_runtime(const JobSpec& job, const BackendSpec& backend) { return predict_runtime(job, backend.clops); }

double runtime_loss(double ratio) {
  if (!(ratio > 0.0)) throw Error(ErrorCode::InvalidArgument, "runtime ratio must be positive");
  return ratio >= 1.0 ? ratio - 1.0 : 1.0 / ratio - 1.0;
}

RuntimeReport score(double predicted, double actual) {
  if (!(predicted > 0.0) || !(actual > 0.0)) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("runtimes must be positive (predicted={}, actual={})", predicted, actual));
  }
  RuntimeReport r;
  r.predicted = predicted;
  r.actual = actual;
  r.ratio = predicted / actual;
  r.loss = runtime_loss(r.ratio);
  return r;
}

std::uint64_t kernel_job_size(std::uint64_t dataset_size) {
  if (dataset_size < 2) throw Error(ErrorCode::InvalidArgument, "kernel jobs need at least two feature vectors");
  // Halve whichever factor is even so the product cannot overflow early.
  const std::uint64_t a = dataset_size;
  const std::uint64_t b = dataset_size - 1;
  return a % 2 == 0 ? (a / 2) * b : a * (b / 2);
}

double extrapolate(std::uint64_t dataset_size, std::uint64_t shots, double d_eff, double clops) {
  JobSpec job;
  job.circuits = kernel_job_size(dataset_size);
  job.shots = shots;
  job.updates = 1;
  job.d_eff = d_eff;
  return predict_runtime(job, clops);
}

std::uint64_t required_shots(std::uint64_t dataset_size, double epsilon, double constant) {
  if (dataset_size < 2) throw Error(ErrorCode::InvalidArgument, "shot scaling needs N >= 2");
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("target error must lie in (0, 1], got {}", epsilon));
  }
  if (!(constant > 0.0)) throw Error(ErrorCode::InvalidArgument, "scaling constant must be positive");
  const double shots = constant * std::pow(static_cast<double>(dataset_size), 8.0 / 3.0) / (epsilon * epsilon);
  return static_cast<std::uint64_t>(std::ceil(shots));
}

double runtime_scaling(std::uint64_t dataset_size, double epsilon, double constant, double d_eff, double clops) {
  required_shots(dataset_size, epsilon, constant);  // argument checks
  if (!(clops > 0.0) || !(d_eff > 0.0)) throw Error(ErrorCode::InvalidArgument, "d_eff and CLOPS must be positive");
  return constant * std::pow(static_cast<double>(dataset_size), 14.0 / 3.0) * d_eff / (clops * epsilon * epsilon);
}

std::string human_duration(double seconds) {
  constexpr double kMinute = 60.0;
  constexpr double kHour = 3600.0;
  constexpr double kDay = 86400.0;
  constexpr double kYear = 365.0 * kDay;
  auto fmt3 = [](double v) { return fmt::format("{:.3g}", v); };
  if (seconds >= kYear) return "≈ " + fmt3(seconds / kYear) + " years";
  if (seconds >= kDay) return "≈ " + fmt3(seconds / kDay) + " days";
  if (seconds >= kHour) return "≈ " + fmt3(seconds / kHour) + " hours";
  if (seconds >= kMinute) return "≈ " + fmt3(seconds / kMinute) + " minutes";
  return "≈ " + fmt3(seconds) + " s";
}

}  // namespace qkrt
