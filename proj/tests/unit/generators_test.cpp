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

#include "qkrt/generators.hpp"

#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "qkrt/error.hpp"
#include "qkrt/gate_matrix.hpp"
#include "qkrt/statevector.hpp"

using namespace qkrt;

namespace {

std::vector<std::pair<int, int>> entangled_pairs(const Circuit& c) {
  std::vector<std::pair<int, int>> out;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::RZZ) out.emplace_back(g.qubits[0], g.qubits[1]);
  }
  return out;
}

}  // namespace

TEST(Entanglement, PairSets) {
  EXPECT_EQ(entangling_pairs(Entanglement::Linear, 4), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(entangling_pairs(Entanglement::Full, 3), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(entanglement_from_name("full"), Entanglement::Full);
  EXPECT_EQ(entanglement_name(Entanglement::Linear), "linear");
  EXPECT_THROW(entanglement_from_name("circular"), Error);
}

TEST(KernelFamily, Validation) {
  EXPECT_THROW(KernelFamily(1, 1, Entanglement::Linear), Error);
  EXPECT_THROW(KernelFamily(2, 0, Entanglement::Linear), Error);
  EXPECT_EQ(KernelFamily(4, 2, Entanglement::Linear).volumetric_area(), 16);
}

TEST(AspectRatio, Examples) {
  const Rational square = aspect_ratio(KernelFamily(4, 2, Entanglement::Linear));
  EXPECT_EQ(square, (Rational{1, 1}));
  EXPECT_EQ(classify(square), CircuitShape::Square);

  const Rational wide = aspect_ratio(KernelFamily(6, 1, Entanglement::Linear));
  EXPECT_EQ(wide, (Rational{1, 3}));
  EXPECT_EQ(classify(wide), CircuitShape::WideShallow);

  const Rational deep = aspect_ratio(KernelFamily(2, 3, Entanglement::Full));
  EXPECT_EQ(deep, (Rational{3, 1}));
  EXPECT_EQ(classify(deep), CircuitShape::NarrowDeep);
}

TEST(QvCircuit, Structure) {
  const Circuit c = qv_circuit(2, 2, 1);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.base_layers(), 2);
  for (int q : {2, 3, 4, 5, 7}) {
    const Circuit qv = qv_circuit(q, 4, 9);
    EXPECT_EQ(qv.width(), q);
    EXPECT_EQ(qv.size(), static_cast<std::size_t>(4 * (q / 2)));
    EXPECT_EQ(qv.two_qubit_gate_count(), qv.size());
  }
  EXPECT_THROW(qv_circuit(1, 1, 0), Error);
  EXPECT_THROW(qv_circuit(2, 0, 0), Error);
}

TEST(QvCircuit, SquareRuleForQv16) {
  // V = 16 gives log2(16) = 4 layers on 4 qubits.
  const Circuit c = qv_circuit(4, 4, 3);
  EXPECT_EQ(c.width(), 4);
  EXPECT_EQ(c.base_layers(), 4);
  EXPECT_EQ(c.size(), 8u);
}

TEST(QvCircuit, DeterministicPerSeed) {
  EXPECT_EQ(qv_circuit(5, 5, 42), qv_circuit(5, 5, 42));
  EXPECT_NE(qv_circuit(5, 5, 42), qv_circuit(5, 5, 43));
}

TEST(QvCircuit, LayersUseDisjointPairs) {
  const Circuit c = qv_circuit(6, 5, 8);
  for (int layer = 0; layer < 5; ++layer) {
    std::set<int> used;
    for (int k = 0; k < 3; ++k) {
      for (int q : c.gates()[layer * 3 + k].qubits) EXPECT_TRUE(used.insert(q).second);
    }
  }
}

TEST(HaarSu4, UnitaryWithUnitDeterminant) {
  Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    const Eigen::Matrix4cd u = to_matrix(haar_su4(rng));
    EXPECT_TRUE((u * u.adjoint()).isApprox(Eigen::Matrix4cd::Identity(), 1e-10));
    EXPECT_NEAR(std::abs(u.determinant() - Complex(1.0, 0.0)), 0.0, 1e-10);
  }
}

TEST(EncodingCircuit, TwoQubitLinearPhases) {
  const KernelFamily fam(2, 1, Entanglement::Linear);
  const FeatureVector x{0.3, 1.2};
  const Circuit c = encoding_circuit(fam, x);
  Circuit expected(2, 1);
  expected.append(Gate::h(0)).append(Gate::h(1));
  expected.append(Gate::rz(0, 2 * 0.3)).append(Gate::rz(1, 2 * 1.2));
  expected.append(Gate::rzz(0, 1, 2 * (std::numbers::pi - 0.3) * (std::numbers::pi - 1.2)));
  EXPECT_EQ(c, expected);
}

TEST(EncodingCircuit, PiFeaturesGiveZeroEntanglingAngle) {
  const KernelFamily fam(3, 2, Entanglement::Full);
  const Circuit c = encoding_circuit(fam, {std::numbers::pi, std::numbers::pi, std::numbers::pi});
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::RZZ) EXPECT_EQ(g.params[0], 0.0);
  }
}

TEST(EncodingCircuit, FullUsesAllPairs) {
  const Circuit c = encoding_circuit(KernelFamily(3, 1, Entanglement::Full), {0.1, 0.2, 0.3});
  EXPECT_EQ(entangled_pairs(c), (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(EncodingCircuit, GateCounts) {
  Rng rng(6);
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d <= 3; ++d) {
      const auto x = random_features(n, rng);
      EXPECT_EQ(encoding_circuit(KernelFamily(n, d, Entanglement::Linear), x).size(),
                static_cast<std::size_t>(d * (n + n + (n - 1))));
      EXPECT_EQ(encoding_circuit(KernelFamily(n, d, Entanglement::Full), x).size(),
                static_cast<std::size_t>(d * (n + n + n * (n - 1) / 2)));
    }
  }
}

TEST(EncodingCircuit, RejectsWrongLength) {
  EXPECT_THROW(encoding_circuit(KernelFamily(3, 1, Entanglement::Linear), {0.1, 0.2}), Error);
}

TEST(KernelCircuit, Structure) {
  const KernelFamily fam(4, 2, Entanglement::Linear);
  Rng rng(2);
  const auto x = random_features(4, rng);
  const auto y = random_features(4, rng);
  const Circuit k = kernel_circuit(fam, x, y);
  EXPECT_EQ(k.width(), 4);
  EXPECT_EQ(k.base_layers(), 4);
  EXPECT_EQ(k.size(), 2 * encoding_circuit(fam, x).size());
  EXPECT_EQ(fam.volumetric_area(), 16);
}

TEST(KernelCircuit, EqualInputsReturnToZeroState) {
  Rng rng(12);
  for (auto e : {Entanglement::Linear, Entanglement::Full}) {
    for (int n = 2; n <= 5; ++n) {
      const KernelFamily fam(n, 2, e);
      const auto x = random_features(n, rng);
      EXPECT_NEAR(std::norm(simulate(kernel_circuit(fam, x, x)).amplitude(0)), 1.0, 1e-10);
    }
  }
}

TEST(RandomFeatures, UniformRange) {
  Rng rng(0);
  for (int i = 0; i < 100; ++i) {
    for (double v : random_features(5, rng)) {
      EXPECT_GE(v, 0.0);
      EXPECT_LT(v, 2 * std::numbers::pi);
    }
  }
}
