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
 * @file circuit.hpp
 * @brief Gate-level circuit intermediate representation.
 *
 * A Circuit is a fixed-width qubit register plus an ordered gate list. There
 * are no classical registers or measurements; sampling happens in the
 * simulator. Gate conventions (qubit 0 is the least significant bit):
 *
 *   RZ(t)    = diag(e^{-it/2}, e^{it/2})
 *   RZZ(t)   = exp(-i t/2 Z(x)Z)
 *   SX       = sqrt(X), SXDG its adjoint
 *   U3(t,p,l) = RZ(p) RY(t) RZ(l)   (up to global phase)
 *   SU4      = arbitrary 4x4 unitary payload, row-major, with the basis index
 *              b0 + 2*b1 where b0 is the bit of qubits[0]
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qkrt {

using Complex = std::complex<double>;
using Unitary4 = std::array<Complex, 16>;

enum class GateKind { H, X, SX, SXDG, RZ, RZZ, CX, SWAP, U3, SU4 };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// Number of qubits a gate kind acts on.
int gate_arity(GateKind kind);
/// Number of real angle parameters a gate kind carries (SU4 carries none;
/// its payload lives in Gate::unitary).
int gate_param_count(GateKind kind);

struct Gate {
  GateKind kind{GateKind::H};
  std::vector<int> qubits;
  std::vector<double> params;
  std::optional<Unitary4> unitary;

  static Gate h(int q) { return {GateKind::H, {q}, {}, {}}; }
  static Gate x(int q) { return {GateKind::X, {q}, {}, {}}; }
  static Gate sx(int q) { return {GateKind::SX, {q}, {}, {}}; }
  static Gate sxdg(int q) { return {GateKind::SXDG, {q}, {}, {}}; }
  static Gate rz(int q, double theta) { return {GateKind::RZ, {q}, {theta}, {}}; }
  static Gate u3(int q, double theta, double phi, double lambda) {
    return {GateKind::U3, {q}, {theta, phi, lambda}, {}};
  }
  static Gate rzz(int a, int b, double theta) { return {GateKind::RZZ, {a, b}, {theta}, {}}; }
  static Gate cx(int control, int target) { return {GateKind::CX, {control, target}, {}, {}}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}, {}, {}}; }
  static Gate su4(int a, int b, const Unitary4& u) { return {GateKind::SU4, {a, b}, {}, u}; }

  bool is_two_qubit() const { return qubits.size() == 2; }

  /// The adjoint gate. Every supported kind maps to a single gate.
  Gate inverse() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(int width, std::optional<int> base_layers = std::nullopt);

  int width() const { return width_; }
  std::optional<int> base_layers() const { return base_layers_; }
  void set_base_layers(std::optional<int> layers) { base_layers_ = layers; }

  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /// Appends after checking qubit range, distinctness, and parameter arity.
  Circuit& append(Gate gate);

  std::size_t two_qubit_gate_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int width_;
  std::optional<int> base_layers_;
  std::vector<Gate> gates_;
};

/// ASAP layering depth with unit cost per gate.
int depth(const Circuit& c);

/// Applies a's gates, then b's. Throws Error{WidthMismatch} on width mismatch.
Circuit compose(const Circuit& a, const Circuit& b);

/// Reversed gate order, each gate replaced by its adjoint.
Circuit inverse(const Circuit& c);

/// Line-oriented text form:
///   width=<n>
///   [base_layers=<D>]
///   KIND q0[,q1] [p0,p1,...]
/// SU4 payloads are written as 32 reals (re, im pairs, row-major).
std::string to_text(const Circuit& c);
void write_text(std::ostream& out, const Circuit& c);

/// Parses one circuit. Throws Error{InvalidArgument} with the line number on
/// malformed input.
Circuit from_text(std::string_view text);

/// Parses a stream of concatenated circuits, each starting at a `width=` line.
std::vector<Circuit> circuits_from_text(std::string_view text);

}  // namespace qkrt
