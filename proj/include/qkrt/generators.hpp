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
 * @file generators.hpp
 * @brief Quantum volume circuits and ZZ-feature-map kernel circuits.
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qkrt/circuit.hpp"
#include "qkrt/random.hpp"

namespace qkrt {

enum class Entanglement { Linear, Full };

std::string_view entanglement_name(Entanglement e);
/// Accepts "linear" / "full" (case-insensitive).
Entanglement entanglement_from_name(std::string_view name);

/// Qubit pairs entangled by a strategy on n qubits, in gate order.
std::vector<std::pair<int, int>> entangling_pairs(Entanglement e, int n);

/// Exact positive rational, kept in lowest terms.
struct Rational {
  std::int64_t num{0};
  std::int64_t den{1};

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

enum class CircuitShape { WideShallow, Square, NarrowDeep };
std::string_view shape_name(CircuitShape s);

/// Describes an encoding circuit family: n qubits, `reps` repetitions of the
/// base template, and an entanglement strategy.
struct KernelFamily {
  int n{2};
  int reps{1};
  Entanglement entanglement{Entanglement::Linear};

  KernelFamily() = default;
  /// Throws Error{InvalidArgument} unless n >= 2 and reps >= 1.
  KernelFamily(int n, int reps, Entanglement e);

  /// Width times base layers of the kernel circuit, 2*reps*n.
  int volumetric_area() const { return 2 * reps * n; }

  friend bool operator==(const KernelFamily&, const KernelFamily&) = default;
};

using FeatureVector = std::vector<double>;

/// 2*reps / n.
Rational aspect_ratio(const KernelFamily& fam);
CircuitShape classify(const Rational& aspect);

/// Uniform draw from [0, 2pi)^n.
FeatureVector random_features(int n, Rng& rng);

/// Haar-random 4x4 unitary normalized to unit determinant, via QR of a complex
/// Ginibre matrix with the R-diagonal phase correction.
Unitary4 haar_su4(Rng& rng);

/// Quantum volume circuit: each layer is a uniformly random relabeling of the
/// qubits followed by Haar-random SU(4) gates on floor(q/2) disjoint pairs.
Circuit qv_circuit(int qubits, int layers, std::uint64_t seed);

/// U(x) repeated fam.reps times: H on every qubit, then RZ(2 x_j) on every
/// qubit and RZZ(2 (pi - x_j)(pi - x_k)) on every entangled pair.
Circuit encoding_circuit(const KernelFamily& fam, const FeatureVector& x);

/// U(x) followed by U(y)^dagger, with base_layers = 2*reps.
Circuit kernel_circuit(const KernelFamily& fam, const FeatureVector& x, const FeatureVector& y);

}  // namespace qkrt
