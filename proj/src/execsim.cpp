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

#include "qkrt/execsim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <set>

#include <Eigen/Dense>
#include <fmt/format.h>
#include <json.hpp>

#include "qkrt/error.hpp"
#include "qkrt/random.hpp"

namespace qkrt {

namespace {

constexpr double kJitterFloor = -0.9;
constexpr std::array<const char*, 3> kParamNames{"t_job", "t_circ", "t_layer_shot"};

}  // namespace

void StackTimingParams::validate() const {
  if (job_overhead < 0.0 || circuit_overhead < 0.0 || layer_shot_time < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "stack timing parameters must be nonnegative");
  }
  if (jitter < 0.0 || jitter >= 1.0) throw Error(ErrorCode::InvalidArgument, "jitter must lie in [0, 1)");
}

std::string StackTimingParams::to_json() const {
  nlohmann::ordered_json j;
  j["t_job"] = job_overhead;
  j["t_circ"] = circuit_overhead;
  j["t_layer_shot"] = layer_shot_time;
  j["jitter"] = jitter;
  return j.dump(2) + "\n";
}

StackTimingParams StackTimingParams::from_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    StackTimingParams p;
    p.job_overhead = j.value("t_job", 0.0);
    p.circuit_overhead = j.value("t_circ", 0.0);
    p.layer_shot_time = j.at("t_layer_shot").get<double>();
    p.jitter = j.value("jitter", 0.0);
    p.validate();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, fmt::format("timing parameters JSON: {}", e.what()));
  }
}

double expected_job_runtime(const JobSpec& job, const StackTimingParams& params) {
  job.validate();
  params.validate();
  return params.job_overhead + static_cast<double>(job.circuits) * params.circuit_overhead +
         job.work() * params.layer_shot_time;
}

double simulate_job_runtime(const JobSpec& job, const StackTimingParams& params, std::uint64_t seed) {
  const double base = expected_job_runtime(job, params);
  if (params.jitter == 0.0) return base;
  Rng rng(seed);
  std::normal_distribution<double> noise(0.0, params.jitter);
  double eta;
  do {
    eta = noise(rng);
  } while (eta <= kJitterFloor);
  return base * (1.0 + eta);
}

StackTimingParams fit_params(std::span<const Observation> observations, const FitOptions& opts) {
  if (observations.size() < 3) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("fit needs at least 3 observations, got {} (3 unknowns)", observations.size()));
  }
  std::set<std::uint64_t> shot_values;
  for (const auto& o : observations) {
    o.job.validate();
    if (!(o.seconds > 0.0)) throw Error(ErrorCode::InvalidArgument, "observed runtimes must be positive");
    shot_values.insert(o.job.shots);
  }
  if (shot_values.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "fit needs observations at two or more distinct shot counts");
  }

  // Free parameters, in kParamNames order, that enter the design.
  std::vector<int> free;
  if (!opts.fixed_job_overhead) free.push_back(0);
  free.push_back(1);
  free.push_back(2);

  const auto rows = static_cast<Eigen::Index>(observations.size());
  const auto cols = static_cast<Eigen::Index>(free.size());
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd target(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& o = observations[static_cast<std::size_t>(i)];
    const double m = static_cast<double>(o.job.circuits);
    const std::array<double, 3> features{1.0, m, o.job.work()};
    for (Eigen::Index c = 0; c < cols; ++c) design(i, c) = features[free[c]];
    target(i) = o.seconds - opts.fixed_job_overhead.value_or(0.0);
  }

  const Eigen::VectorXd scale = design.colwise().norm().transpose();
  const Eigen::MatrixXd scaled = design * scale.cwiseInverse().asDiagonal();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(cols - 1) <= 0.0 || sv(0) / sv(cols - 1) > opts.max_condition) {
    const Eigen::VectorXd null_dir = svd.matrixV().col(cols - 1);
    std::vector<std::string> culprits;
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (std::abs(null_dir(c)) > 0.1) culprits.emplace_back(kParamNames[free[c]]);
    }
    throw Error(ErrorCode::IllConditioned,
                fmt::format("fit is rank deficient: {} not separately identifiable from these observations "
                            "(vary M, or pin t_job)",
                            fmt::join(culprits, " and ")));
  }
  const Eigen::VectorXd solution = svd.solve(target).cwiseQuotient(scale);

  std::array<double, 3> values{opts.fixed_job_overhead.value_or(0.0), 0.0, 0.0};
  for (Eigen::Index c = 0; c < cols; ++c) values[free[c]] = solution(c);
  const double tol = 1e-9 * target.cwiseAbs().maxCoeff();
  for (std::size_t k = 0; k < 3; ++k) {
    if (values[k] < -tol) {
      throw Error(ErrorCode::IllConditioned,
                  fmt::format("fitted {} = {:.6g} is negative; the affine stack model does not fit these data",
                              kParamNames[k], values[k]));
    }
    values[k] = std::max(values[k], 0.0);
  }

  StackTimingParams p;
  p.job_overhead = values[0];
  p.circuit_overhead = values[1];
  p.layer_shot_time = values[2];

  const Eigen::Index dof = rows - cols;
  if (dof > 0) {
    double sum_sq = 0.0;
    for (const auto& o : observations) {
      const double rel = o.seconds / expected_job_runtime(o.job, p) - 1.0;
      sum_sq += rel * rel;
    }
    p.jitter = std::sqrt(sum_sq / static_cast<double>(dof));
  }
  if (p.jitter >= 1.0) {
    throw Error(ErrorCode::IllConditioned, fmt::format("residual jitter {:.3g} is not below 1", p.jitter));
  }
  return p;
}

std::vector<SweepRow> sweep(std::span<const SweepJob> jobs, const StackTimingParams& params,
                            const BackendSpec& backend, std::uint64_t seed) {
  std::vector<SweepRow> rows;
  rows.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& sj = jobs[i];
    SweepRow row;
    row.backend = backend.name;
    row.circuits = sj.job.circuits;
    row.shots = sj.job.shots;
    row.aspect_ratio = sj.aspect_ratio;
    row.d_eff = sj.job.d_eff;
    row.predicted = predict_runtime(sj.job, backend);
    row.simulated = simulate_job_runtime(sj.job, params, derive_seed(seed, {i}));
    const auto report = score(row.predicted, row.simulated);
    row.ratio = report.ratio;
    row.loss = report.loss;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "backend,M,S,a,d_eff,T_pred,T_sim,r,L\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}\n", r.backend, r.circuits, r.shots,
                       r.aspect_ratio, r.d_eff, r.predicted, r.simulated, r.ratio, r.loss);
  }
}

}  // namespace qkrt
