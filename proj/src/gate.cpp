// Copyright 2026 The dfsqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dfsqft/gate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace dfsqft {

namespace {

constexpr std::array<std::string_view, 5> kMnemonics = {"H", "P", "CN", "R",
                                                        "CR"};

void check_index(int q) {
  if (q < 1) {
    throw std::out_of_range("qubit index " + std::to_string(q) +
                            " must be >= 1");
  }
}

void check_pair(int control, int target) {
  check_index(control);
  check_index(target);
  if (control == target) {
    throw std::invalid_argument("duplicate control/target index " +
                                std::to_string(control));
  }
}

}  // namespace

std::string_view mnemonic(GateKind kind) noexcept {
  return kMnemonics[static_cast<std::size_t>(kind)];
}

std::optional<GateKind> gate_kind_from_mnemonic(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kMnemonics.size(); ++i) {
    if (kMnemonics[i] == text) return static_cast<GateKind>(i);
  }
  return std::nullopt;
}

int arity(GateKind kind) noexcept {
  return (kind == GateKind::H || kind == GateKind::R) ? 1 : 2;
}

bool takes_angle(GateKind kind) noexcept {
  return kind == GateKind::P || kind == GateKind::R || kind == GateKind::CR;
}

Gate Gate::h(int qubit) {
  check_index(qubit);
  return Gate(GateKind::H, qubit, 0, 0.0);
}

Gate Gate::r(int qubit, double alpha) {
  check_index(qubit);
  return Gate(GateKind::R, qubit, 0, alpha);
}

Gate Gate::cn(int control, int target) {
  check_pair(control, target);
  return Gate(GateKind::CN, control, target, 0.0);
}

Gate Gate::p(int control, int target, double theta) {
  check_pair(control, target);
  return Gate(GateKind::P, control, target, theta);
}

Gate Gate::cr(int control, int target, double beta) {
  check_pair(control, target);
  return Gate(GateKind::CR, control, target, beta);
}

Gate Gate::make(GateKind kind, std::vector<int> qubits,
                std::optional<double> angle) {
  if (static_cast<int>(qubits.size()) != dfsqft::arity(kind)) {
    throw std::invalid_argument(std::string(mnemonic(kind)) + " takes " +
                                std::to_string(dfsqft::arity(kind)) +
                                " qubit operand(s)");
  }
  if (angle.has_value() != takes_angle(kind)) {
    throw std::invalid_argument(std::string(mnemonic(kind)) +
                                (takes_angle(kind) ? " requires an angle"
                                                   : " takes no angle"));
  }
  switch (kind) {
    case GateKind::H:
      return h(qubits[0]);
    case GateKind::R:
      return r(qubits[0], *angle);
    case GateKind::CN:
      return cn(qubits[0], qubits[1]);
    case GateKind::P:
      return p(qubits[0], qubits[1], *angle);
    case GateKind::CR:
      return cr(qubits[0], qubits[1], *angle);
  }
  throw std::logic_error("unreachable gate kind");
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (has_angle()) g.angle_ = -angle_;
  return g;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::out_of_range("register size " + std::to_string(n_qubits) +
                            " outside 1.." + std::to_string(kMaxQubits));
  }
}

Circuit::Circuit(int n_qubits, std::vector<Gate> gates) : Circuit(n_qubits) {
  gates_.reserve(gates.size());
  for (const auto& g : gates) add(g);
}

Circuit& Circuit::add(const Gate& gate) {
  if (gate.max_qubit() > n_qubits_) {
    throw std::out_of_range("gate " + std::string(mnemonic(gate.kind())) +
                            " touches qubit " +
                            std::to_string(gate.max_qubit()) +
                            " beyond register size " +
                            std::to_string(n_qubits_));
  }
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("cannot append a " +
                                std::to_string(other.n_qubits_) +
                                "-qubit circuit to a " +
                                std::to_string(n_qubits_) + "-qubit circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

std::size_t Circuit::count(GateKind kind) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [kind](const Gate& g) { return g.kind() == kind; }));
}

Circuit invert(const Circuit& circuit) {
  Circuit out(circuit.n_qubits());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    out.add(it->inverse());
  }
  return out;
}

Circuit from_product(int n_qubits, const std::vector<Gate>& product) {
  return Circuit(n_qubits, std::vector<Gate>(product.rbegin(), product.rend()));
}

}  // namespace dfsqft
