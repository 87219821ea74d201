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

#include "qkrt/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "qkrt/error.hpp"

namespace qkrt {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  int params;
};

constexpr std::array<KindInfo, 10> kKinds{{
    {GateKind::H, "H", 1, 0},
    {GateKind::X, "X", 1, 0},
    {GateKind::SX, "SX", 1, 0},
    {GateKind::SXDG, "SXDG", 1, 0},
    {GateKind::RZ, "RZ", 1, 1},
    {GateKind::RZZ, "RZZ", 2, 1},
    {GateKind::CX, "CX", 2, 0},
    {GateKind::SWAP, "SWAP", 2, 0},
    {GateKind::U3, "U3", 1, 3},
    {GateKind::SU4, "SU4", 2, 0},
}};

const KindInfo& info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, fmt::format("circuit text line {}: {}", line, what));
}

template <typename T>
T parse_number(std::string_view token, std::size_t line) {
  token = trim(token);
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    parse_error(line, fmt::format("cannot parse number '{}'", token));
  }
  return value;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

int gate_arity(GateKind kind) { return info(kind).arity; }
int gate_param_count(GateKind kind) { return info(kind).params; }

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::CX:
    case GateKind::SWAP:
      break;
    case GateKind::SX:
      g.kind = GateKind::SXDG;
      break;
    case GateKind::SXDG:
      g.kind = GateKind::SX;
      break;
    case GateKind::RZ:
    case GateKind::RZZ:
      g.params[0] = -params[0];
      break;
    case GateKind::U3:
      g.params = {-params[0], -params[2], -params[1]};
      break;
    case GateKind::SU4: {
      Unitary4 adj{};
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) adj[r * 4 + c] = std::conj((*unitary)[c * 4 + r]);
      g.unitary = adj;
      break;
    }
  }
  return g;
}

Circuit::Circuit(int width, std::optional<int> base_layers)
    : width_(width), base_layers_(base_layers) {
  if (width < 0) throw Error(ErrorCode::InvalidArgument, "circuit width must be nonnegative");
}

Circuit& Circuit::append(Gate gate) {
  const auto& ki = info(gate.kind);
  if (static_cast<int>(gate.qubits.size()) != ki.arity) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("{} acts on {} qubit(s), got {}", ki.name, ki.arity, gate.qubits.size()));
  }
  for (int q : gate.qubits) {
    if (q < 0 || q >= width_) {
      throw Error(ErrorCode::InvalidArgument,
                  fmt::format("{} qubit {} out of range for width {}", ki.name, q, width_));
    }
  }
  if (ki.arity == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw Error(ErrorCode::InvalidArgument, fmt::format("{} qubits must be distinct", ki.name));
  }
  if (static_cast<int>(gate.params.size()) != ki.params) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("{} takes {} parameter(s), got {}", ki.name, ki.params, gate.params.size()));
  }
  if ((gate.kind == GateKind::SU4) != gate.unitary.has_value()) {
    throw Error(ErrorCode::InvalidArgument, "only SU4 gates carry a unitary payload");
  }
  gates_.push_back(std::move(gate));
  return *this;
}

std::size_t Circuit::two_qubit_gate_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.is_two_qubit(); }));
}

int depth(const Circuit& c) {
  std::vector<int> frontier(static_cast<std::size_t>(c.width()), 0);
  int result = 0;
  for (const auto& g : c.gates()) {
    int layer = 0;
    for (int q : g.qubits) layer = std::max(layer, frontier[q]);
    ++layer;
    for (int q : g.qubits) frontier[q] = layer;
    result = std::max(result, layer);
  }
  return result;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.width() != b.width()) {
    throw Error(ErrorCode::WidthMismatch,
                fmt::format("cannot compose circuits of width {} and {}", a.width(), b.width()));
  }
  std::optional<int> layers;
  if (a.base_layers() && b.base_layers()) layers = *a.base_layers() + *b.base_layers();
  Circuit out(a.width(), layers);
  for (const auto& g : a.gates()) out.append(g);
  for (const auto& g : b.gates()) out.append(g);
  return out;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.width(), c.base_layers());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.append(it->inverse());
  return out;
}

void write_text(std::ostream& out, const Circuit& c) {
  out << "width=" << c.width() << '\n';
  if (c.base_layers()) out << "base_layers=" << *c.base_layers() << '\n';
  for (const auto& g : c.gates()) {
    out << gate_name(g.kind) << ' ' << g.qubits[0];
    if (g.qubits.size() == 2) out << ',' << g.qubits[1];
    std::vector<double> values = g.params;
    if (g.unitary) {
      for (const auto& z : *g.unitary) {
        values.push_back(z.real());
        values.push_back(z.imag());
      }
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << (i == 0 ? ' ' : ',') << fmt::format("{:.17g}", values[i]);
    }
    out << '\n';
  }
}

std::string to_text(const Circuit& c) {
  std::ostringstream ss;
  write_text(ss, c);
  return ss.str();
}

Circuit from_text(std::string_view text) {
  auto circuits = circuits_from_text(text);
  if (circuits.size() != 1) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("expected exactly one circuit, found {}", circuits.size()));
  }
  return std::move(circuits.front());
}

std::vector<Circuit> circuits_from_text(std::string_view text) {
  std::vector<Circuit> out;
  std::size_t line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.starts_with("width=")) {
      out.emplace_back(parse_number<int>(line.substr(6), line_no));
      continue;
    }
    if (out.empty()) parse_error(line_no, "gate before 'width=' header");
    if (line.starts_with("base_layers=")) {
      out.back().set_base_layers(parse_number<int>(line.substr(12), line_no));
      continue;
    }
    auto fields = split(line, ' ');
    fields.erase(std::remove_if(fields.begin(), fields.end(), [](auto f) { return f.empty(); }),
                 fields.end());
    if (fields.size() < 2 || fields.size() > 3) parse_error(line_no, "expected 'KIND qubits [params]'");
    auto kind = gate_kind_from_name(fields[0]);
    if (!kind) {
      throw Error(ErrorCode::UnknownGate,
                  fmt::format("circuit text line {}: unknown gate '{}'", line_no, fields[0]));
    }
    Gate g;
    g.kind = *kind;
    for (auto q : split(fields[1], ',')) g.qubits.push_back(parse_number<int>(q, line_no));
    std::vector<double> values;
    if (fields.size() == 3) {
      for (auto p : split(fields[2], ',')) values.push_back(parse_number<double>(p, line_no));
    }
    if (g.kind == GateKind::SU4) {
      if (values.size() != 32) parse_error(line_no, "SU4 payload needs 32 reals");
      Unitary4 u{};
      for (std::size_t i = 0; i < 16; ++i) u[i] = Complex(values[2 * i], values[2 * i + 1]);
      g.unitary = u;
    } else {
      g.params = std::move(values);
    }
    try {
      out.back().append(std::move(g));
    } catch (const Error& e) {
      parse_error(line_no, e.what());
    }
  }
  return out;
}

}  // namespace qkrt
