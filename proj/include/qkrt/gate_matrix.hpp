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

#pragma once

#include <Eigen/Dense>

#include "qkrt/circuit.hpp"

namespace qkrt {

/// Unitary of a one-qubit gate.
Eigen::Matrix2cd gate_matrix_1q(const Gate& g);

/// Unitary of a two-qubit gate in the basis b0 + 2*b1, b0 being the bit of
/// g.qubits[0].
Eigen::Matrix4cd gate_matrix_2q(const Gate& g);

Eigen::Matrix4cd to_matrix(const Unitary4& u);
Unitary4 from_matrix(const Eigen::Matrix4cd& m);

/// True when a and b agree up to a global phase within tol (Frobenius norm of
/// the phase-aligned difference).
bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol);

}  // namespace qkrt
