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

#include "qkrt/gate_matrix.hpp"

#include <cmath>

#include "qkrt/error.hpp"

namespace qkrt {

namespace {

const Complex kI{0.0, 1.0};

Eigen::Matrix2cd rz(double t) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(-kI * (t / 2));
  m(1, 1) = std::exp(kI * (t / 2));
  return m;
}

Eigen::Matrix2cd ry(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

}  // namespace

Eigen::Matrix2cd gate_matrix_1q(const Gate& g) {
  Eigen::Matrix2cd m;
  switch (g.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      m << s, s, s, -s;
      return m;
    }
    case GateKind::X:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::SX:
      m << Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5);
      return m;
    case GateKind::SXDG:
      m << Complex(0.5, -0.5), Complex(0.5, 0.5), Complex(0.5, 0.5), Complex(0.5, -0.5);
      return m;
    case GateKind::RZ:
      return rz(g.params[0]);
    case GateKind::U3:
      return rz(g.params[1]) * ry(g.params[0]) * rz(g.params[2]);
    default:
      throw Error(ErrorCode::UnknownGate, std::string(gate_name(g.kind)) + " is not a one-qubit gate");
  }
}

Eigen::Matrix4cd gate_matrix_2q(const Gate& g) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  switch (g.kind) {
    case GateKind::CX:
      // control is bit 0, target bit 1
      m(0, 0) = 1;
      m(3, 1) = 1;
      m(2, 2) = 1;
      m(1, 3) = 1;
      return m;
    case GateKind::SWAP:
      m(0, 0) = 1;
      m(2, 1) = 1;
      m(1, 2) = 1;
      m(3, 3) = 1;
      return m;
    case GateKind::RZZ: {
      const double t = g.params[0];
      const Complex even = std::exp(-kI * (t / 2));
      const Complex odd = std::exp(kI * (t / 2));
      m(0, 0) = even;
      m(1, 1) = odd;
      m(2, 2) = odd;
      m(3, 3) = even;
      return m;
    }
    case GateKind::SU4:
      return to_matrix(*g.unitary);
    default:
      throw Error(ErrorCode::UnknownGate, std::string(gate_name(g.kind)) + " is not a two-qubit gate");
  }
}

Eigen::Matrix4cd to_matrix(const Unitary4& u) {
  Eigen::Matrix4cd m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = u[r * 4 + c];
  return m;
}

Unitary4 from_matrix(const Eigen::Matrix4cd& m) {
  Unitary4 u{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) u[r * 4 + c] = m(r, c);
  return u;
}

bool equal_up_to_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const Complex overlap = (b.adjoint() * a).trace();
  if (std::abs(overlap) < 1e-300) return a.norm() < tol && b.norm() < tol;
  const Complex phase = overlap / std::abs(overlap);
  return (a - phase * b).norm() <= tol;
}

}  // namespace qkrt
