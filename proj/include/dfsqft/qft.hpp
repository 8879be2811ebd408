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

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dfsqft/gate.hpp"
#include "dfsqft/state_vector.hpp"

namespace dfsqft {

/// The swap-free QFT network on n qubits, in application order: the block for
/// qubit n first (H on n, then P(k-1,k)(pi/2), ..., P(1,k)(pi/2^(k-1))), down
/// to H on qubit 1.
Circuit synth_qft(int n);

/// Entry (row, col) = 2^(-n/2) exp(2 pi i row col / 2^n).
UnitaryMatrix dft_matrix(int n);

/// Raised when no candidate output ordering matches the DFT.
class ConventionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class OutputOrderKind { Identity, BitReversal };

/// Output permutation Q with circuit_unitary(synth_qft(n)) = Q * dft_matrix(n)
/// up to global phase. `map[l]` is the row Q sends basis state l to.
struct OutputOrder {
  OutputOrderKind kind;
  int n_qubits;
  std::vector<std::uint64_t> map;

  ComplexMatrix matrix() const;
};

std::uint64_t reverse_bits(std::uint64_t value, int n_bits);
OutputOrder make_output_order(OutputOrderKind kind, int n);

/// Compares synth_qft(n) against both candidates; throws ConventionError if
/// neither matches. Identity is tried first, so n = 1 reports Identity.
OutputOrder resolve_output_order(int n);

/// Q_n * dft_matrix(n): the exact action expected of any n-qubit QFT circuit
/// in this toolkit (logical or physical).
ComplexMatrix expected_qft_matrix(int n);

/// Target action of a Hadamard on qubit k of an n-qubit (logical) register.
ComplexMatrix hadamard_action(int k, int n);
/// Target action of P^(i,j)(theta): e^{i theta} where qubits i and j are 1.
ComplexMatrix phase_action(int i, int j, double theta, int n);

/// Produces the Hadamard and controlled-phase blocks used by the QFT scaffold
/// on a fixed physical register. Indices are logical (1-based).
struct GateFactory {
  int n_physical = 0;
  std::function<Circuit(int k)> hadamard;
  std::function<Circuit(int i, int j, double theta)> phase;
};

/// Physical H^(k) and P^(i,j)(theta) on an n-qubit register.
GateFactory plain_factory(int n);

/// A synthesized QFT together with the offsets where each logical gate block
/// begins.
struct BlockedCircuit {
  Circuit circuit;
  std::vector<std::size_t> block_starts;
};

BlockedCircuit synth_logical_qft_blocks(int n, const GateFactory& factory);
Circuit synth_logical_qft(int n, const GateFactory& factory);

}  // namespace dfsqft
