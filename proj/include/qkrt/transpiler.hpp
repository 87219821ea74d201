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
 * @file transpiler.hpp
 * @brief Lowering to the {RZ, SX, X, CX} basis and greedy SWAP routing.
 *
 * The pipeline exists to measure hardware depth, not to produce optimal
 * circuits. Routing is greedy shortest-path SWAP insertion with no lookahead,
 * and no gate cancellation or resynthesis is attempted.
 */

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qkrt/circuit.hpp"

namespace qkrt {

enum class Topology { Line, Ring, HeavyHexLike, AllToAll, Custom };

std::string_view topology_name(Topology t);
Topology topology_from_name(std::string_view name);

class CouplingMap {
 public:
  /// Throws Error{InvalidArgument} on out-of-range or self-loop edges, or a
  /// disconnected graph.
  CouplingMap(int num_qubits, std::vector<std::pair<int, int>> edges, Topology topology = Topology::Custom);

  static CouplingMap line(int n);
  static CouplingMap ring(int n);
  static CouplingMap all_to_all(int n);
  /// Sparse degree-<=3 lattice: a snake of rows joined by staggered rungs.
  static CouplingMap heavy_hex_like(int n);
  static CouplingMap make(Topology t, int n);

  int num_qubits() const { return n_; }
  Topology topology() const { return topology_; }
  /// Normalized (a < b), sorted, deduplicated.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int q) const { return adjacency_[q]; }

  bool adjacent(int a, int b) const;
  int distance(int a, int b) const { return dist_[a][b]; }
  /// Shortest path from a to b inclusive. Ties go to the lowest-index neighbor.
  std::vector<int> shortest_path(int a, int b) const;

 private:
  int n_;
  Topology topology_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> dist_;
};

/// {"n": 27, "edges": [[0,1], ...], "topology": "heavy_hex_like"}; topology
/// is optional and defaults to custom.
CouplingMap coupling_map_from_json(std::string_view text);
std::string coupling_map_to_json(const CouplingMap& map);

/// Basis gates for the one-qubit unitary u (any global phase), applied in the
/// returned order. Diagonal unitaries lower to a single RZ (or nothing).
std::vector<Gate> synthesize_1q(const Eigen::Matrix2cd& u, int qubit);

/// Three-CX synthesis of an arbitrary two-qubit unitary through its KAK
/// (Cartan) decomposition in the magic basis. Basis index b0 + 2*b1 where b0
/// is the bit of q0.
std::vector<Gate> synthesize_2q(const Eigen::Matrix4cd& u, int q0, int q1);

/// Lowers every gate to {RZ, SX, X, CX}. Equivalent to the input up to a
/// global phase.
Circuit decompose(const Circuit& c);

struct RoutedCircuit {
  /// Width equals the coupling map size; SWAPs appear as SWAP gates.
  Circuit circuit;
  /// final_layout[l] is the physical qubit holding logical wire l at the end.
  /// Covers every physical wire (logical wires >= c.width() are idle ancillas).
  std::vector<int> final_layout;
  std::size_t swaps{0};
};

/// Greedy routing from the trivial layout. For each non-adjacent two-qubit
/// gate the lower-index logical qubit is swapped along a shortest path until
/// the pair is adjacent. Throws Error{InvalidArgument} if the circuit is wider
/// than the map.
RoutedCircuit route(const Circuit& c, const CouplingMap& map);

/// decompose -> route -> decompose (each SWAP becomes 3 CX).
Circuit transpile(const Circuit& c, const CouplingMap& map);

/// depth(transpile(c, map)).
int transpiled_depth(const Circuit& c, const CouplingMap& map);

}  // namespace qkrt
