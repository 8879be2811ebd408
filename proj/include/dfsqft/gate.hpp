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

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace dfsqft {

/// Largest register the dense engine will allocate.
inline constexpr int kMaxQubits = 14;

enum class GateKind { H, P, CN, R, CR };

std::string_view mnemonic(GateKind kind) noexcept;
std::optional<GateKind> gate_kind_from_mnemonic(std::string_view text) noexcept;

/// Number of qubit operands taken by a gate kind (1 or 2).
int arity(GateKind kind) noexcept;
bool takes_angle(GateKind kind) noexcept;

/// One elementary gate. Qubit indices are 1-based; qubit t is bit t-1 of a
/// basis index. Two-qubit gates store (control, target).
///
/// Construct through the named factories, which enforce that indices are
/// positive and distinct.
class Gate {
 public:
  static Gate h(int qubit);
  static Gate r(int qubit, double alpha);
  static Gate cn(int control, int target);
  static Gate p(int control, int target, double theta);
  static Gate cr(int control, int target, double beta);

  /// Generic constructor used by the parser; validates kind/arity/angle.
  static Gate make(GateKind kind, std::vector<int> qubits,
                   std::optional<double> angle);

  GateKind kind() const noexcept { return kind_; }
  int arity() const noexcept { return dfsqft::arity(kind_); }

  /// Single-qubit gates: the acted-on qubit. Two-qubit gates: the target.
  int target() const noexcept { return arity() == 1 ? q0_ : q1_; }
  /// Only meaningful for two-qubit gates.
  int control() const noexcept { return q0_; }
  int max_qubit() const noexcept { return q0_ > q1_ ? q0_ : q1_; }

  bool has_angle() const noexcept { return takes_angle(kind_); }
  /// Zero for H and CN.
  double angle() const noexcept { return angle_; }

  Gate inverse() const;

  bool operator==(const Gate&) const = default;

 private:
  Gate(GateKind kind, int q0, int q1, double angle)
      : kind_(kind), q0_(q0), q1_(q1), angle_(angle) {}

  GateKind kind_;
  int q0_;
  int q1_;  // 0 for single-qubit gates
  double angle_;
};

/// Ordered gate list in application order: gates()[0] acts first.
class Circuit {
 public:
  explicit Circuit(int n_qubits);
  Circuit(int n_qubits, std::vector<Gate> gates);

  Circuit& add(const Gate& gate);
  /// Appends `other`'s gates after ours. Register sizes must match.
  Circuit& append(const Circuit& other);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  auto begin() const noexcept { return gates_.begin(); }
  auto end() const noexcept { return gates_.end(); }

  std::size_t count(GateKind kind) const noexcept;

  bool operator==(const Circuit&) const = default;

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

/// Reversed gate list with every gate inverted.
Circuit invert(const Circuit& circuit);

/// Builds the application-order circuit for an operator product written
/// left to right, where the rightmost factor acts first.
Circuit from_product(int n_qubits, const std::vector<Gate>& product);

}  // namespace dfsqft
