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
 * @file statevector.hpp
 * @brief Dense statevector simulation and shot-based kernel estimation.
 *
 * The simulator is exact and intended for small widths (default cap 12
 * qubits). It is the semantic oracle for every circuit-producing module:
 * generators, decomposition and routing are all checked against it.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qkrt/circuit.hpp"
#include "qkrt/generators.hpp"
#include "qkrt/random.hpp"

namespace qkrt {

struct SimOptions {
  int max_qubits = 12;
};

class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(int n);
  /// Computational basis state |index> on n qubits.
  static StateVector basis(int n, std::size_t index);

  int num_qubits() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  Complex amplitude(std::size_t index) const { return amps_[index]; }

  void apply(const Gate& g);
  double norm_squared() const;
  std::vector<double> probabilities() const;

 private:
  int n_;
  std::vector<Complex> amps_;
};

/// Runs c on |0...0>. Throws Error{CapacityExceeded} above the width cap.
StateVector simulate(const Circuit& c, const SimOptions& opts = {});
StateVector simulate(const Circuit& c, StateVector initial, const SimOptions& opts = {});

/// Full 2^n x 2^n unitary, one simulation per basis column.
Eigen::MatrixXcd circuit_unitary(const Circuit& c, const SimOptions& opts = {});

/// Draws `shots` outcomes from the Born distribution by inverse CDF and
/// returns counts indexed by basis state.
std::vector<std::uint64_t> sample_counts(const StateVector& state, std::uint64_t shots, Rng& rng);

/// |<0|U(y)^dagger U(x)|0>|^2.
double exact_kernel(const KernelFamily& fam, const FeatureVector& x, const FeatureVector& y,
                    const SimOptions& opts = {});

struct KernelEstimate {
  double estimate{0.0};
  std::uint64_t shots{0};
  std::uint64_t zero_count{0};
};

/// Fraction of `shots` samples that return the all-zeros bitstring.
KernelEstimate estimate_kernel(const KernelFamily& fam, const FeatureVector& x, const FeatureVector& y,
                               std::uint64_t shots, std::uint64_t seed, const SimOptions& opts = {});

struct KernelMatrix {
  Eigen::MatrixXd values;
  /// Kernel circuits evaluated: one per unordered pair.
  std::uint64_t evaluations{0};
};

/// Pairwise kernel matrix. With `shots` empty the exact kernel is used;
/// otherwise each pair (i, j) is estimated from its own seed stream derived
/// from (seed, i, j), so the result does not depend on evaluation order. The
/// diagonal is 1 in both modes (U(x)^dagger U(x) leaves |0...0> in place), and
/// only the N(N-1)/2 off-diagonal pairs are evaluated.
KernelMatrix kernel_matrix(const KernelFamily& fam, std::span<const FeatureVector> dataset,
                           std::optional<std::uint64_t> shots, std::uint64_t seed,
                           const SimOptions& opts = {});

}  // namespace qkrt
