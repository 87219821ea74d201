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

#include <gtest/gtest.h>

#include "qkrt/error.hpp"
#include "qkrt/registry.hpp"

using namespace qkrt;

namespace {

constexpr double kDay = 86400.0;
constexpr double kYear = 365.25 * kDay;

JobSpec job(std::uint64_t m, std::uint64_t s, double d_eff, std::uint64_t k = 1) {
  JobSpec j;
  j.circuits = m;
  j.shots = s;
  j.updates = k;
  j.d_eff = d_eff;
  return j;
}

}  // namespace

TEST(Clops, FromMeasurement) {
  // 100 * 4 * 10 * 100 = 4e5 layer-shots in 1000 s.
  EXPECT_DOUBLE_EQ(clops_from_measurement(100, 4, 10, 100, 1000.0), 400.0);
  EXPECT_THROW(clops_from_measurement(100, 4, 10, 100, 0.0), Error);
  EXPECT_THROW(clops_from_measurement(0, 4, 10, 100, 1.0), Error);
}

TEST(Clops, RoundTrip) {
  const double c = clops_from_measurement(kClopsCircuits, 5, kClopsUpdates, kClopsShots, 1234.5);
  EXPECT_NEAR(predict_runtime(job(kClopsCircuits, kClopsShots, 5, kClopsUpdates), c), 1234.5, 1e-9);
}

TEST(Predict, UnitCase) { EXPECT_EQ(predict_runtime(job(1, 1, 1), 1.0), 1.0); }

TEST(Predict, Table1Backends) {
  const auto reg = BackendRegistry::builtin();
  const auto& hanoi = reg.find("ibm_hanoi");
  EXPECT_EQ(hanoi.qv_layers(), 6);
  EXPECT_NEAR(predict_runtime(job(100, 100, hanoi.qv_layers()), hanoi), 25.6, 25.6 * 0.05);
  const auto& jakarta = reg.find("ibmq_jakarta");
  EXPECT_NEAR(predict_runtime(job(100, 100, jakarta.qv_layers()), jakarta), 16.4, 16.4 * 0.05);
}

TEST(Predict, LinearInEveryFactor) {
  const JobSpec base = job(10, 20, 1.5, 3);
  const double t = predict_runtime(base, 700.0);
  EXPECT_DOUBLE_EQ(predict_runtime(job(20, 20, 1.5, 3), 700.0), 2 * t);
  EXPECT_DOUBLE_EQ(predict_runtime(job(10, 40, 1.5, 3), 700.0), 2 * t);
  EXPECT_DOUBLE_EQ(predict_runtime(job(10, 20, 3.0, 3), 700.0), 2 * t);
  EXPECT_DOUBLE_EQ(predict_runtime(job(10, 20, 1.5, 6), 700.0), 2 * t);
  EXPECT_DOUBLE_EQ(predict_runtime(base, 1400.0), t / 2);
}

TEST(Predict, RejectsInvalidJobs) {
  EXPECT_THROW(predict_runtime(job(0, 1, 1), 1.0), Error);
  EXPECT_THROW(predict_runtime(job(1, 1, 0.0), 1.0), Error);
  EXPECT_THROW(predict_runtime(job(1, 1, 1), 0.0), Error);
}

TEST(Score, Examples) {
  const auto exact = score(10.0, 10.0);
  EXPECT_EQ(exact.ratio, 1.0);
  EXPECT_EQ(exact.loss, 0.0);
  EXPECT_FALSE(exact.under_predicted());

  const auto hanoi = score(25.6, 68.0);
  EXPECT_NEAR(hanoi.ratio, 0.376, 5e-4);
  EXPECT_NEAR(hanoi.loss, 1.66, 5e-3);
  EXPECT_TRUE(hanoi.under_predicted());

  EXPECT_DOUBLE_EQ(runtime_loss(2.0), 1.0);
  EXPECT_DOUBLE_EQ(runtime_loss(0.5), 1.0);
  EXPECT_DOUBLE_EQ(runtime_loss(0.25), 3.0);
  EXPECT_DOUBLE_EQ(runtime_loss(4.0), 3.0);
  EXPECT_NEAR(runtime_loss(0.1), 9.0, 1e-12);
  EXPECT_NEAR(runtime_loss(1.9), 0.9, 1e-12);
  EXPECT_THROW(score(0.0, 1.0), Error);
  EXPECT_THROW(score(1.0, -1.0), Error);
}

TEST(Score, LossShape) {
  double prev = runtime_loss(0.01);
  for (double r = 0.02; r < 1.0; r += 0.01) {
    EXPECT_LT(runtime_loss(r), prev);
    prev = runtime_loss(r);
  }
  prev = 0.0;
  for (double r = 1.01; r < 10.0; r += 0.01) {
    EXPECT_GT(runtime_loss(r), prev);
    prev = runtime_loss(r);
  }
}

TEST(KernelJobSize, Examples) {
  EXPECT_EQ(kernel_job_size(2), 1u);
  EXPECT_EQ(kernel_job_size(2513), 3'156'328u);
  EXPECT_EQ(kernel_job_size(70571), 2'490'097'735u);
  EXPECT_THROW(kernel_job_size(1), Error);
  for (std::uint64_t n = 2; n < 500; ++n) EXPECT_EQ(kernel_job_size(n + 1) - kernel_job_size(n), n);
  EXPECT_EQ(kernel_job_size(4'000'000'000ull), 2'000'000'000ull * 3'999'999'999ull);
}

TEST(Extrapolate, FloodDataset) {
  const double slow = extrapolate(2513, 4000, 2.0, 1000.0);
  EXPECT_NEAR(slow, 3'156'328.0 * 4000 * 2 / 1000, 1e-3);
  EXPECT_GE(slow / kDay, 250.0);
  EXPECT_LE(slow / kDay, 330.0);
  EXPECT_NEAR(extrapolate(2513, 4000, 2.0, 10000.0) / kDay, 29.2, 0.1);
  EXPECT_GT(extrapolate(70571, 4000, 2.0, 10000.0) / kYear, 50.0);
}

TEST(RequiredShots, Scaling) {
  EXPECT_EQ(required_shots(2, 1.0, 1.0), 7u);
  const double ratio = static_cast<double>(required_shots(200, 0.1, 1.0)) / required_shots(100, 0.1, 1.0);
  EXPECT_NEAR(ratio, std::pow(2.0, 8.0 / 3.0), 1e-6);
  EXPECT_NEAR(static_cast<double>(required_shots(100, 0.05, 1.0)) / required_shots(100, 0.1, 1.0), 4.0, 1e-6);
  EXPECT_THROW(required_shots(2, 0.0, 1.0), Error);
  EXPECT_THROW(required_shots(2, 1.5, 1.0), Error);
  EXPECT_THROW(required_shots(2, 0.5, 0.0), Error);
  EXPECT_THROW(required_shots(1, 0.5, 1.0), Error);
}

TEST(RequiredShots, RuntimeScalingExponent) {
  const double a = runtime_scaling(100, 0.1, 1.0, 2.0, 1000.0);
  const double b = runtime_scaling(200, 0.1, 1.0, 2.0, 1000.0);
  EXPECT_NEAR(b / a, std::pow(2.0, 14.0 / 3.0), 1e-9);
}

TEST(HumanDuration, Units) {
  EXPECT_EQ(human_duration(25.6), "≈ 25.6 s");
  EXPECT_EQ(human_duration(3'156'328.0 * 4000 * 2 / 1000), "≈ 292 days");
  EXPECT_EQ(human_duration(2 * kYear), "≈ 2 years");
}

TEST(Backend, Validation) {
  BackendSpec b{"x", 5, 32, 1000.0, Topology::Line};
  EXPECT_NO_THROW(b.validate());
  b.quantum_volume = 48;
  EXPECT_THROW(b.validate(), Error);
  b.quantum_volume = 64;
  EXPECT_THROW(b.validate(), Error);
  b.quantum_volume = 32;
  b.clops = 0;
  EXPECT_THROW(b.validate(), Error);
}

TEST(Registry, BuiltinAndLookup) {
  const auto reg = BackendRegistry::builtin();
  EXPECT_EQ(reg.backends().size(), 6u);
  EXPECT_EQ(reg.find("ibmq_auckland").clops, 2400.0);
  try {
    reg.find("ibm_nowhere");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BackendNotFound);
  }
}

TEST(Registry, JsonRoundTripIsByteIdentical) {
  const std::string first = BackendRegistry::builtin().to_json();
  const std::string second = BackendRegistry::from_json(first).to_json();
  EXPECT_EQ(first, second);
  EXPECT_THROW(BackendRegistry::from_json("{\"backends\": [{\"name\": 1}]}"), Error);
  EXPECT_THROW(BackendRegistry::from_json("not json"), Error);
}
