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

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qkrt/circuit.hpp"
#include "qkrt/generators.hpp"
#include "qkrt/random.hpp"

namespace testing_util {

/// Random circuit over every gate kind.
inline qkrt::Circuit random_circuit(int width, int gates, qkrt::Rng& rng) {
  using qkrt::Gate;
  std::uniform_int_distribution<int> kind(0, width >= 2 ? 9 : 5);
  std::uniform_int_distribution<int> qubit(0, width - 1);
  std::uniform_real_distribution<double> angle(-3.5, 3.5);
  qkrt::Circuit c(width);
  for (int i = 0; i < gates; ++i) {
    const int q = qubit(rng);
    int r = qubit(rng);
    while (width >= 2 && r == q) r = qubit(rng);
    switch (kind(rng)) {
      case 0: c.append(Gate::h(q)); break;
      case 1: c.append(Gate::x(q)); break;
      case 2: c.append(Gate::sx(q)); break;
      case 3: c.append(Gate::sxdg(q)); break;
      case 4: c.append(Gate::rz(q, angle(rng))); break;
      case 5: c.append(Gate::u3(q, angle(rng), angle(rng), angle(rng))); break;
      case 6: c.append(Gate::cx(q, r)); break;
      case 7: c.append(Gate::swap(q, r)); break;
      case 8: c.append(Gate::rzz(q, r, angle(rng))); break;
      default: c.append(Gate::su4(q, r, qkrt::haar_su4(rng))); break;
    }
  }
  return c;
}

/// Permutation operator taking logical basis states to physical ones:
/// logical bit l lands on physical bit layout[l].
inline Eigen::MatrixXcd layout_permutation(const std::vector<int>& layout) {
  const std::size_t n = layout.size();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t logical = 0; logical < dim; ++logical) {
    std::size_t physical = 0;
    for (std::size_t l = 0; l < n; ++l) {
      if (logical & (std::size_t{1} << l)) physical |= std::size_t{1} << layout[l];
    }
    p(static_cast<Eigen::Index>(physical), static_cast<Eigen::Index>(logical)) = 1.0;
  }
  return p;
}

/// c on the first c.width() wires of a `width`-qubit register.
inline qkrt::Circuit widen(const qkrt::Circuit& c, int width) {
  qkrt::Circuit out(width, c.base_layers());
  for (const auto& g : c.gates()) out.append(g);
  return out;
}

}  // namespace testing_util
