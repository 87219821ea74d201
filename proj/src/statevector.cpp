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

#include "qkrt/statevector.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "qkrt/error.hpp"
#include "qkrt/gate_matrix.hpp"

namespace qkrt {

namespace {

void check_width(int n, const SimOptions& opts) {
  if (n > opts.max_qubits) {
    throw Error(ErrorCode::CapacityExceeded,
                fmt::format("circuit width {} exceeds the simulator cap of {} qubits; "
                            "raise SimOptions::max_qubits (memory grows as 2^n)",
                            n, opts.max_qubits));
  }
}

}  // namespace

StateVector::StateVector(int n) : n_(n), amps_(std::size_t{1} << n, Complex{0.0, 0.0}) {
  amps_[0] = 1.0;
}

StateVector StateVector::basis(int n, std::size_t index) {
  StateVector s(n);
  s.amps_[0] = 0.0;
  s.amps_.at(index) = 1.0;
  return s;
}

void StateVector::apply(const Gate& g) {
  const std::size_t dim = amps_.size();
  if (g.qubits.size() == 1) {
    const Eigen::Matrix2cd m = gate_matrix_1q(g);
    const std::size_t mask = std::size_t{1} << g.qubits[0];
    for (std::size_t i = 0; i < dim; ++i) {
      if (i & mask) continue;
      const Complex a0 = amps_[i];
      const Complex a1 = amps_[i | mask];
      amps_[i] = m(0, 0) * a0 + m(0, 1) * a1;
      amps_[i | mask] = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return;
  }
  const Eigen::Matrix4cd m = gate_matrix_2q(g);
  const std::size_t m0 = std::size_t{1} << g.qubits[0];
  const std::size_t m1 = std::size_t{1} << g.qubits[1];
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & m0) || (i & m1)) continue;
    const std::array<std::size_t, 4> idx{i, i | m0, i | m1, i | m0 | m1};
    std::array<Complex, 4> in{};
    for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Complex acc{0.0, 0.0};
      for (int k = 0; k < 4; ++k) acc += m(r, k) * in[k];
      amps_[idx[r]] = acc;
    }
  }
}

double StateVector::norm_squared() const {
  return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                         [](double acc, const Complex& a) { return acc + std::norm(a); });
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Complex& a) { return std::norm(a); });
  return p;
}

StateVector simulate(const Circuit& c, const SimOptions& opts) {
  check_width(c.width(), opts);
  return simulate(c, StateVector(c.width()), opts);
}

StateVector simulate(const Circuit& c, StateVector initial, const SimOptions& opts) {
  check_width(c.width(), opts);
  if (initial.num_qubits() != c.width()) {
    throw Error(ErrorCode::WidthMismatch,
                fmt::format("initial state has {} qubits, circuit has {}", initial.num_qubits(), c.width()));
  }
  for (const auto& g : c.gates()) initial.apply(g);
  return initial;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c, const SimOptions& opts) {
  check_width(c.width(), opts);
  const std::size_t dim = std::size_t{1} << c.width();
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto s = simulate(c, StateVector::basis(c.width(), col), opts);
    for (std::size_t row = 0; row < dim; ++row) u(row, col) = s.amplitude(row);
  }
  return u;
}

std::vector<std::uint64_t> sample_counts(const StateVector& state, std::uint64_t shots, Rng& rng) {
  std::vector<double> cdf = state.probabilities();
  std::partial_sum(cdf.begin(), cdf.end(), cdf.begin());
  const double total = cdf.back();
  std::uniform_real_distribution<double> uniform(0.0, total);
  std::vector<std::uint64_t> counts(cdf.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform(rng);
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++counts[static_cast<std::size_t>(it - cdf.begin())];
  }
  return counts;
}

double exact_kernel(const KernelFamily& fam, const FeatureVector& x, const FeatureVector& y,
                    const SimOptions& opts) {
  const auto state = simulate(kernel_circuit(fam, x, y), opts);
  return std::clamp(std::norm(state.amplitude(0)), 0.0, 1.0);
}

KernelEstimate estimate_kernel(const KernelFamily& fam, const FeatureVector& x, const FeatureVector& y,
                               std::uint64_t shots, std::uint64_t seed, const SimOptions& opts) {
  if (shots < 1) throw Error(ErrorCode::InvalidArgument, "kernel estimation needs at least one shot");
  const auto state = simulate(kernel_circuit(fam, x, y), opts);
  Rng rng(seed);
  const auto counts = sample_counts(state, shots, rng);
  KernelEstimate est;
  est.shots = shots;
  est.zero_count = counts[0];
  est.estimate = static_cast<double>(counts[0]) / static_cast<double>(shots);
  return est;
}

KernelMatrix kernel_matrix(const KernelFamily& fam, std::span<const FeatureVector> dataset,
                           std::optional<std::uint64_t> shots, std::uint64_t seed,
                           const SimOptions& opts) {
  const auto n = static_cast<Eigen::Index>(dataset.size());
  KernelMatrix out;
  out.values = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto& x = dataset[static_cast<std::size_t>(i)];
      const auto& y = dataset[static_cast<std::size_t>(j)];
      double value;
      if (shots) {
        const auto pair_seed = derive_seed(seed, {static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)});
        value = estimate_kernel(fam, x, y, *shots, pair_seed, opts).estimate;
      } else {
        value = exact_kernel(fam, x, y, opts);
      }
      out.values(i, j) = value;
      out.values(j, i) = value;
      ++out.evaluations;
    }
  }
  return out;
}

}  // namespace qkrt
