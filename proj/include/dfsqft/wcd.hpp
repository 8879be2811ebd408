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

#include <string_view>

#include "dfsqft/gate.hpp"
#include "dfsqft/qft.hpp"
#include "dfsqft/state_vector.hpp"

namespace dfsqft {

/// Pairwise encoding under weak collective decoherence: logical qubit t lives
/// on physical qubits 2t-1 and 2t, with |0^> = |01> and |1^> = |10> (qubit 2t
/// written first).
struct WcdRegister {
  int n_logical;

  int n_physical() const noexcept { return 2 * n_logical; }
  /// (2t-1, 2t)
  int low_qubit(int t) const noexcept { return 2 * t - 1; }
  int high_qubit(int t) const noexcept { return 2 * t; }
};

inline constexpr int kMaxWcdLogical = 6;

/// Encoded computational state for a logical bit string. The first character
/// is logical qubit n.
StateVector wcd_logical_state(std::string_view bits);

/// The 2^n encoded basis states in logical index order l = sum s_t 2^(t-1).
SubspaceBasis wcd_logical_basis(int n);

/// CN(2k,2k-1) H(2k) CN(2k,2k-1) on a 2n-qubit register.
Circuit wcd_hadamard(int k, int n);

/// (CN(2i,2i-1) CN(2j,2j-1)) P(2i,2j)(theta) (CN(2i,2i-1) CN(2j,2j-1)).
Circuit wcd_phase(int i, int j, double theta, int n);

/// U_n = CN(2,1) CN(4,3) ... CN(2n,2n-1), lowered to application order.
Circuit wcd_encoder_circuit(int n);

GateFactory wcd_factory(int n);

/// Logical QFT on n logical qubits (2n physical), 1 <= n <= 6.
BlockedCircuit synth_qft_wcd_blocks(int n);
Circuit synth_qft_wcd(int n);

}  // namespace dfsqft
