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

#include "qkrt/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include <fmt/format.h>
#include <json.hpp>

#include "qkrt/error.hpp"
#include "qkrt/gate_matrix.hpp"

namespace qkrt {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

// Angles within this distance of a multiple of 2*pi are dropped.
constexpr double kAngleEps = 1e-12;

double wrap_angle(double a) {
  a = std::remainder(a, 2 * kPi);
  return a;
}

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

// Two-qubit operator B (on q1) (x) A (on q0) in the b0 + 2*b1 basis.
Eigen::Matrix4cd kron(const Eigen::Matrix2cd& on_q1, const Eigen::Matrix2cd& on_q0) {
  Eigen::Matrix4cd m;
  for (int b1 = 0; b1 < 2; ++b1)
    for (int c1 = 0; c1 < 2; ++c1)
      for (int b0 = 0; b0 < 2; ++b0)
        for (int c0 = 0; c0 < 2; ++c0) m(b0 + 2 * b1, c0 + 2 * c1) = on_q1(b1, c1) * on_q0(b0, c0);
  return m;
}

// Factors a local 4x4 unitary into on_q1 (x) on_q0, each up to phase.
std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> factor_local(const Eigen::Matrix4cd& k) {
  auto block = [&](int b1, int c1) {
    Eigen::Matrix2cd blk;
    for (int b0 = 0; b0 < 2; ++b0)
      for (int c0 = 0; c0 < 2; ++c0) blk(b0, c0) = k(b0 + 2 * b1, c0 + 2 * c1);
    return blk;
  };
  int best_b1 = 0;
  int best_c1 = 0;
  double best = -1.0;
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int c1 = 0; c1 < 2; ++c1) {
      const double nrm = block(b1, c1).norm();
      if (nrm > best) {
        best = nrm;
        best_b1 = b1;
        best_c1 = c1;
      }
    }
  }
  Eigen::Matrix2cd on_q0 = block(best_b1, best_c1);
  on_q0 /= std::sqrt(std::abs(on_q0.determinant()));
  Eigen::Matrix2cd on_q1;
  for (int b1 = 0; b1 < 2; ++b1)
    for (int c1 = 0; c1 < 2; ++c1) on_q1(b1, c1) = (on_q0.adjoint() * block(b1, c1)).trace() / 2.0;
  return {on_q1, on_q0};
}

Eigen::Matrix4cd magic_basis() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix4cd m;
  m << s, 0, 0, kI * s,
       0, kI * s, s, 0,
       0, kI * s, -s, 0,
       s, 0, 0, -kI * s;
  return m;
}

// Finds a real orthogonal P (det +1) with P^T S P diagonal for a complex
// symmetric unitary S, by diagonalizing real combinations of Re(S) and Im(S).
Eigen::Matrix4d simultaneous_diagonalizer(const Eigen::Matrix4cd& s) {
  const Eigen::Matrix4d re = s.real();
  const Eigen::Matrix4d im = s.imag();
  // Fixed, deterministic mixing weights; the first generic one succeeds.
  constexpr std::array<double, 6> weights{0.6180339887, 1.4142135623, -0.7320508075,
                                          2.2360679774, 0.2679491924, -3.1415926535};
  for (double w : weights) {
    Eigen::Matrix4d mix = re + w * im;
    mix = 0.5 * (mix + mix.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(mix);
    Eigen::Matrix4d p = eig.eigenvectors();
    const Eigen::Matrix4cd d = p.transpose().cast<Complex>() * s * p.cast<Complex>();
    Eigen::Matrix4cd off = d;
    off.diagonal().setZero();
    if (off.norm() < 1e-9) {
      if (p.determinant() < 0) p.col(0) *= -1.0;
      return p;
    }
  }
  throw Error(ErrorCode::IllConditioned, "two-qubit synthesis: could not diagonalize U^T U in the magic basis");
}

// Basis gates for exp(i (a XX + b YY + c ZZ)), up to global phase.
std::vector<Gate> canonical_gate(double a, double b, double c, int q0, int q1,
                                 std::vector<Eigen::Matrix2cd>& q0_slots,
                                 std::vector<Eigen::Matrix2cd>& q1_slots) {
  // Slots hold the one-qubit dressing between the three CX gates:
  // slot 0 before the first CX, slot 3 after the last.
  q1_slots[0] = rz(kPi / 2) * q1_slots[0];
  q0_slots[1] = rz(-2 * c - kPi / 2);
  q1_slots[1] = ry(-2 * a - kPi / 2);
  q1_slots[2] = ry(2 * b + kPi / 2);
  q0_slots[3] = q0_slots[3] * rz(-kPi / 2);
  return {Gate::cx(q1, q0), Gate::cx(q0, q1), Gate::cx(q1, q0)};
}

}  // namespace

std::string_view topology_name(Topology t) {
  switch (t) {
    case Topology::Line:
      return "line";
    case Topology::Ring:
      return "ring";
    case Topology::HeavyHexLike:
      return "heavy_hex_like";
    case Topology::AllToAll:
      return "all_to_all";
    case Topology::Custom:
      return "custom";
  }
  return "custom";
}

Topology topology_from_name(std::string_view name) {
  for (Topology t : {Topology::Line, Topology::Ring, Topology::HeavyHexLike, Topology::AllToAll, Topology::Custom}) {
    if (topology_name(t) == name) return t;
  }
  throw Error(ErrorCode::InvalidArgument,
              fmt::format("unknown topology '{}' (expected line, ring, heavy_hex_like, all_to_all, custom)", name));
}

CouplingMap::CouplingMap(int num_qubits, std::vector<std::pair<int, int>> edges, Topology topology)
    : n_(num_qubits), topology_(topology) {
  if (n_ < 1) throw Error(ErrorCode::InvalidArgument, "coupling map needs at least one qubit");
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("coupling edge ({}, {}) out of range for {} qubits", a, b, n_));
    }
    if (a == b) throw Error(ErrorCode::InvalidArgument, fmt::format("coupling edge ({}, {}) is a self-loop", a, b));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  dist_.assign(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), -1));
  for (int src = 0; src < n_; ++src) {
    auto& d = dist_[src];
    std::queue<int> frontier;
    d[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : adjacency_[u]) {
        if (d[v] < 0) {
          d[v] = d[u] + 1;
          frontier.push(v);
        }
      }
    }
    if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) {
      throw Error(ErrorCode::InvalidArgument, "coupling map is not connected");
    }
  }
}

CouplingMap CouplingMap::line(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  return CouplingMap(n, std::move(edges), Topology::Line);
}

CouplingMap CouplingMap::ring(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  if (n > 2) edges.emplace_back(0, n - 1);
  return CouplingMap(n, std::move(edges), Topology::Ring);
}

CouplingMap CouplingMap::all_to_all(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return CouplingMap(n, std::move(edges), Topology::AllToAll);
}

CouplingMap CouplingMap::heavy_hex_like(int n) {
  const int row_len = std::max(4, static_cast<int>(std::ceil(std::sqrt(2.0 * n))));
  auto cell = [&](int q) {
    const int row = q / row_len;
    const int offset = q % row_len;
    return std::pair{row, row % 2 == 0 ? offset : row_len - 1 - offset};
  };
  auto index_of = [&](int row, int col) {
    const int offset = row % 2 == 0 ? col : row_len - 1 - col;
    const int q = row * row_len + offset;
    return q < n ? q : -1;
  };
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  // Rungs between row r and r+1 sit at columns congruent to 2*(r%2) mod 4,
  // so each qubit carries at most one rung.
  for (int q = 0; q < n; ++q) {
    const auto [row, col] = cell(q);
    if (col % 4 != 2 * (row % 2)) continue;
    const int below = index_of(row + 1, col);
    if (below >= 0 && below != q + 1) edges.emplace_back(q, below);
  }
  return CouplingMap(n, std::move(edges), Topology::HeavyHexLike);
}

CouplingMap CouplingMap::make(Topology t, int n) {
  switch (t) {
    case Topology::Line:
      return line(n);
    case Topology::Ring:
      return ring(n);
    case Topology::HeavyHexLike:
      return heavy_hex_like(n);
    case Topology::AllToAll:
      return all_to_all(n);
    case Topology::Custom:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "a custom coupling map needs an explicit edge list");
}

bool CouplingMap::adjacent(int a, int b) const { return dist_[a][b] == 1; }

std::vector<int> CouplingMap::shortest_path(int a, int b) const {
  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    for (int v : adjacency_[cur]) {
      if (dist_[v][b] == dist_[cur][b] - 1) {
        cur = v;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

CouplingMap coupling_map_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, fmt::format("coupling map JSON: {}", e.what()));
  }
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::MalformedJson, "coupling edge must be [a, b]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    const Topology t = j.contains("topology") ? topology_from_name(j["topology"].get<std::string>()) : Topology::Custom;
    return CouplingMap(n, std::move(edges), t);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, fmt::format("coupling map JSON: {}", e.what()));
  }
}

std::string coupling_map_to_json(const CouplingMap& map) {
  nlohmann::ordered_json j;
  j["n"] = map.num_qubits();
  j["topology"] = std::string(topology_name(map.topology()));
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [a, b] : map.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j.dump();
}

std::vector<Gate> synthesize_1q(const Eigen::Matrix2cd& u, int qubit) {
  // u ~ RZ(phi) RY(theta) RZ(lambda) after removing the global phase.
  const Eigen::Matrix2cd su = u / std::sqrt(u.determinant());
  const double c = std::abs(su(1, 1));
  const double s = std::abs(su(1, 0));
  const double theta = 2 * std::atan2(s, c);
  double phi;
  double lambda;
  if (s < 1e-14) {
    phi = std::arg(su(1, 1));
    lambda = phi;
  } else if (c < 1e-14) {
    phi = std::arg(su(1, 0));
    lambda = -phi;
  } else {
    phi = std::arg(su(1, 1)) + std::arg(su(1, 0));
    lambda = std::arg(su(1, 1)) - std::arg(su(1, 0));
  }
  std::vector<Gate> out;
  auto emit_rz = [&](double angle) {
    angle = wrap_angle(angle);
    if (std::abs(angle) > kAngleEps) out.push_back(Gate::rz(qubit, angle));
  };
  if (std::abs(std::sin(theta / 2)) < 1e-14) {
    emit_rz(phi + lambda);
    return out;
  }
  emit_rz(lambda);
  out.push_back(Gate::sx(qubit));
  emit_rz(theta + kPi);
  out.push_back(Gate::sx(qubit));
  emit_rz(phi + kPi);
  return out;
}

std::vector<Gate> synthesize_2q(const Eigen::Matrix4cd& u_in, int q0, int q1) {
  const Eigen::Matrix4cd magic = magic_basis();
  const Eigen::Matrix4cd u = u_in / std::pow(u_in.determinant(), 0.25);
  const Eigen::Matrix4cd up = magic.adjoint() * u * magic;
  const Eigen::Matrix4cd sym = up.transpose() * up;

  const Eigen::Matrix4d p = simultaneous_diagonalizer(sym);
  const Eigen::Matrix4cd pc = p.cast<Complex>();
  const Eigen::Vector4cd d = (pc.transpose() * sym * pc).diagonal();
  Eigen::Vector4d theta;
  for (int k = 0; k < 4; ++k) theta(k) = std::arg(d(k)) / 2;
  auto half_phases = [&] {
    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    for (int k = 0; k < 4; ++k) h(k, k) = std::exp(kI * theta(k));
    return h;
  };
  Eigen::Matrix4d k1 = (up * pc * half_phases().adjoint()).real();
  if (k1.determinant() < 0) {
    theta(0) += kPi;
    k1.col(0) *= -1.0;
  }

  // up = k1 * diag(e^{i theta}) * p^T; map each factor back out of the magic basis.
  const Eigen::Matrix4cd left = magic * k1.cast<Complex>() * magic.adjoint();
  const Eigen::Matrix4cd right = magic * pc.transpose() * magic.adjoint();

  // theta_k = g + a*xx_k + b*yy_k + c*zz_k, with xx_k etc. the eigenvalues of
  // the Pauli products on magic basis vector k.
  Eigen::Matrix2cd px;
  px << 0, 1, 1, 0;
  Eigen::Matrix2cd py;
  py << 0, -kI, kI, 0;
  Eigen::Matrix2cd pz;
  pz << 1, 0, 0, -1;
  const Eigen::Vector4cd xx = (magic.adjoint() * kron(px, px) * magic).diagonal();
  const Eigen::Vector4cd yy = (magic.adjoint() * kron(py, py) * magic).diagonal();
  const Eigen::Vector4cd zz = (magic.adjoint() * kron(pz, pz) * magic).diagonal();
  Eigen::Matrix4d system;
  for (int k = 0; k < 4; ++k) system.row(k) << 1.0, xx(k).real(), yy(k).real(), zz(k).real();
  const Eigen::Vector4d coeffs = system.fullPivLu().solve(theta);

  auto [right_q1, right_q0] = factor_local(right);
  auto [left_q1, left_q0] = factor_local(left);

  std::vector<Eigen::Matrix2cd> q0_slots(4, Eigen::Matrix2cd::Identity());
  std::vector<Eigen::Matrix2cd> q1_slots(4, Eigen::Matrix2cd::Identity());
  q0_slots[0] = right_q0;
  q1_slots[0] = right_q1;
  q0_slots[3] = left_q0;
  q1_slots[3] = left_q1;
  const auto cxs = canonical_gate(coeffs(1), coeffs(2), coeffs(3), q0, q1, q0_slots, q1_slots);

  std::vector<Gate> out;
  for (int slot = 0; slot < 4; ++slot) {
    for (auto& g : synthesize_1q(q0_slots[slot], q0)) out.push_back(std::move(g));
    for (auto& g : synthesize_1q(q1_slots[slot], q1)) out.push_back(std::move(g));
    if (slot < 3) out.push_back(cxs[static_cast<std::size_t>(slot)]);
  }
  return out;
}

Circuit decompose(const Circuit& c) {
  Circuit out(c.width(), c.base_layers());
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::RZ:
      case GateKind::SX:
      case GateKind::X:
      case GateKind::CX:
        out.append(g);
        break;
      case GateKind::H:
        out.append(Gate::rz(g.qubits[0], kPi / 2));
        out.append(Gate::sx(g.qubits[0]));
        out.append(Gate::rz(g.qubits[0], kPi / 2));
        break;
      case GateKind::SXDG:
        out.append(Gate::sx(g.qubits[0]));
        out.append(Gate::x(g.qubits[0]));
        break;
      case GateKind::U3:
        for (auto& b : synthesize_1q(gate_matrix_1q(g), g.qubits[0])) out.append(std::move(b));
        break;
      case GateKind::RZZ:
        out.append(Gate::cx(g.qubits[0], g.qubits[1]));
        out.append(Gate::rz(g.qubits[1], g.params[0]));
        out.append(Gate::cx(g.qubits[0], g.qubits[1]));
        break;
      case GateKind::SWAP:
        out.append(Gate::cx(g.qubits[0], g.qubits[1]));
        out.append(Gate::cx(g.qubits[1], g.qubits[0]));
        out.append(Gate::cx(g.qubits[0], g.qubits[1]));
        break;
      case GateKind::SU4:
        for (auto& b : synthesize_2q(to_matrix(*g.unitary), g.qubits[0], g.qubits[1])) out.append(std::move(b));
        break;
      default:
        throw Error(ErrorCode::UnknownGate, fmt::format("no decomposition for gate {}", gate_name(g.kind)));
    }
  }
  return out;
}

RoutedCircuit route(const Circuit& c, const CouplingMap& map) {
  const int n = map.num_qubits();
  if (c.width() > n) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("circuit width {} exceeds coupling map size {}", c.width(), n));
  }
  std::vector<int> to_physical(static_cast<std::size_t>(n));
  std::vector<int> to_logical(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) to_physical[q] = to_logical[q] = q;

  RoutedCircuit result{Circuit(n, c.base_layers()), {}, 0};
  for (const auto& g : c.gates()) {
    Gate mapped = g;
    if (g.is_two_qubit()) {
      const int mover = std::min(g.qubits[0], g.qubits[1]);
      const int anchor = std::max(g.qubits[0], g.qubits[1]);
      while (!map.adjacent(to_physical[mover], to_physical[anchor])) {
        const auto path = map.shortest_path(to_physical[mover], to_physical[anchor]);
        const int from = path[0];
        const int to = path[1];
        result.circuit.append(Gate::swap(from, to));
        ++result.swaps;
        const int displaced = to_logical[to];
        std::swap(to_logical[from], to_logical[to]);
        to_physical[mover] = to;
        to_physical[displaced] = from;
      }
    }
    for (int& q : mapped.qubits) q = to_physical[q];
    result.circuit.append(std::move(mapped));
  }
  result.final_layout = std::move(to_physical);
  return result;
}

Circuit transpile(const Circuit& c, const CouplingMap& map) {
  return decompose(route(decompose(c), map).circuit);
}

int transpiled_depth(const Circuit& c, const CouplingMap& map) { return depth(transpile(c, map)); }

}  // namespace qkrt
