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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "qkrt/error.hpp"
#include "qkrt/gate_matrix.hpp"

namespace qkrt {

std::string_view entanglement_name(Entanglement e) {
  return e == Entanglement::Linear ? "linear" : "full";
}

Entanglement entanglement_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "linear") return Entanglement::Linear;
  if (lower == "full") return Entanglement::Full;
  throw Error(ErrorCode::InvalidArgument,
              fmt::format("unknown entanglement strategy '{}' (expected linear or full)", name));
}

std::vector<std::pair<int, int>> entangling_pairs(Entanglement e, int n) {
  std::vector<std::pair<int, int>> pairs;
  if (e == Entanglement::Linear) {
    for (int j = 0; j + 1 < n; ++j) pairs.emplace_back(j, j + 1);
  } else {
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) pairs.emplace_back(j, k);
  }
  return pairs;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string_view shape_name(CircuitShape s) {
  switch (s) {
    case CircuitShape::WideShallow:
      return "wide and shallow";
    case CircuitShape::Square:
      return "square";
    case CircuitShape::NarrowDeep:
      return "narrow and deep";
  }
  return "";
}

KernelFamily::KernelFamily(int n_, int reps_, Entanglement e) : n(n_), reps(reps_), entanglement(e) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, fmt::format("kernel family needs n >= 2, got {}", n));
  if (reps < 1) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("kernel family needs D >= 1, got {}", reps));
  }
}

Rational aspect_ratio(const KernelFamily& fam) { return make_rational(2 * fam.reps, fam.n); }

CircuitShape classify(const Rational& aspect) {
  if (aspect.num < aspect.den) return CircuitShape::WideShallow;
  if (aspect.num > aspect.den) return CircuitShape::NarrowDeep;
  return CircuitShape::Square;
}

FeatureVector random_features(int n, Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  FeatureVector x(static_cast<std::size_t>(n));
  for (auto& v : x) v = angle(rng);
  return x;
}

Unitary4 haar_su4(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
  Eigen::Matrix4cd z;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) z(r, c) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Eigen::Matrix4cd> qr(z);
  Eigen::Matrix4cd q = qr.householderQ();
  const Eigen::Matrix4cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < 4; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  const Complex det = q.determinant();
  q /= std::pow(det, 0.25);
  return from_matrix(q);
}

Circuit qv_circuit(int qubits, int layers, std::uint64_t seed) {
  if (qubits < 2) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("quantum volume circuit needs q >= 2, got {}", qubits));
  }
  if (layers < 1) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("quantum volume circuit needs layers >= 1, got {}", layers));
  }
  Rng rng(seed);
  Circuit c(qubits, layers);
  std::vector<int> perm(static_cast<std::size_t>(qubits));
  for (int layer = 0; layer < layers; ++layer) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int p = 0; p + 1 < qubits; p += 2) c.append(Gate::su4(perm[p], perm[p + 1], haar_su4(rng)));
  }
  return c;
}

Circuit encoding_circuit(const KernelFamily& fam, const FeatureVector& x) {
  if (static_cast<int>(x.size()) != fam.n) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("feature vector has {} components, family width is {}", x.size(), fam.n));
  }
  constexpr double pi = std::numbers::pi;
  const auto pairs = entangling_pairs(fam.entanglement, fam.n);
  Circuit c(fam.n, fam.reps);
  for (int rep = 0; rep < fam.reps; ++rep) {
    for (int j = 0; j < fam.n; ++j) c.append(Gate::h(j));
    for (int j = 0; j < fam.n; ++j) c.append(Gate::rz(j, 2 * x[j]));
    for (auto [j, k] : pairs) c.append(Gate::rzz(j, k, 2 * (pi - x[j]) * (pi - x[k])));
  }
  return c;
}

Circuit kernel_circuit(const KernelFamily& fam, const FeatureVector& x, const FeatureVector& y) {
  Circuit c = compose(encoding_circuit(fam, x), inverse(encoding_circuit(fam, y)));
  c.set_base_layers(2 * fam.reps);
  return c;
}

}  // namespace qkrt
