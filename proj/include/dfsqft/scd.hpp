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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfsqft/gate.hpp"
#include "dfsqft/qft.hpp"
#include "dfsqft/state_vector.hpp"

namespace dfsqft {

/// Four-qubit singlet encoding under strong collective decoherence. Logical
/// qubit t lives on physical qubits 4t-3 .. 4t.
struct ScdRegister {
  int n_logical;

  int n_physical() const noexcept { return 4 * n_logical; }
  int first_qubit(int t) const noexcept { return 4 * t - 3; }
  int last_qubit(int t) const noexcept { return 4 * t; }
};

/// Largest logical register the SCD synthesis supports (8 physical qubits).
inline constexpr int kMaxScdLogical = 2;
/// Largest logical register for encoded states alone (12 physical qubits).
inline constexpr int kMaxScdStateLogical = 3;

/// Rotation angles of the block transform.
struct ScdAngles {
  double alpha;  // pi - asin(1/sqrt 3)
  double beta1;  // -pi + asin(1/sqrt 3)
  double beta2;  // -pi/4

  static ScdAngles standard();
};

/// Knobs for lowering the printed block-transform sequence. The default is
/// the sequence exactly as printed: CN(c,t) lists control first and angles
/// are used with their printed signs.
struct ScdConventions {
  bool swap_cnot_arguments = false;
  bool negate_angles = false;

  std::string label() const;
  bool operator==(const ScdConventions&) const = default;
};

/// The two encoded states of one 4-qubit block as 16-dim vectors.
ComplexVector scd_block_zero();
ComplexVector scd_block_one();

/// Encoded state for a logical bit string; the first character is logical
/// qubit n (physical qubits 4n-3 .. 4n).
StateVector scd_logical_state(std::string_view bits);
/// The 2^n encoded basis states in logical index order.
SubspaceBasis scd_logical_basis(int n);

/// U^(k) on physical qubits 4k-3 .. 4k of a 4*max(k, n_logical) register, in
/// application order (14 gates).
Circuit scd_block_transform(int k, int n_logical = 0, ScdConventions conv = {});

/// U = U^(n) ... U^(1) in application order.
Circuit scd_transform_circuit(int n, ScdConventions conv = {});

enum class TransformSource { Sequence, Fallback };

/// Sequence: the lowered gate sequence. Fallback: a basis change sending each
/// block's |0~>, |1~> to |0000>, |1000> and a Gram-Schmidt completion of the
/// block to the remaining computational states in index order. n <= 2.
UnitaryMatrix scd_transform_matrix(int n, TransformSource source,
                                   ScdConventions conv = {});

/// U^(k)^-1 H(4k) U^(k): 29 gates.
Circuit scd_hadamard(int k, int n, ScdConventions conv = {});
/// U^(i)^-1 U^(j)^-1 P(4i,4j)(theta) U^(i) U^(j): 57 gates.
Circuit scd_phase(int i, int j, double theta, int n, ScdConventions conv = {});

GateFactory scd_factory(int n, ScdConventions conv = {});

/// Logical QFT on n <= 2 logical qubits, built with the resolved conventions.
BlockedCircuit synth_qft_scd_blocks(int n);
Circuit synth_qft_scd(int n);

// Convention resolution -----------------------------------------------------

using BlockTransformBuilder =
    std::function<Circuit(int k, int n_logical, ScdConventions conv)>;

struct ConventionAttempt {
  ScdConventions conventions;
  /// Max entrywise error of logical Hadamard restrictions (n = 1, 2).
  double hadamard_deviation = 0.0;
  /// Max entrywise error of logical phase restrictions (n = 2).
  double phase_deviation = 0.0;
  double leakage = 0.0;
  bool passed = false;
};

struct ConventionReport {
  std::vector<ConventionAttempt> attempts;
  std::optional<ScdConventions> resolved;
  /// Same checks evaluated with the fallback basis-change matrix.
  double fallback_hadamard_deviation = 0.0;
  double fallback_phase_deviation = 0.0;
  double fallback_leakage = 0.0;
  /// Max entrywise gap between logical restrictions induced by the resolved
  /// sequence and by the fallback matrix (infinite when nothing resolved).
  double sequence_fallback_gap = 0.0;

  bool erratum() const noexcept { return !resolved.has_value(); }
  TransformSource normative() const noexcept {
    return resolved ? TransformSource::Sequence : TransformSource::Fallback;
  }
};

/// Tests the lowered sequence against the logical Hadamard and phase actions,
/// trying the as-printed conventions first and then the remaining
/// combinations of CN argument swap and angle negation.
ConventionReport resolve_scd_conventions(
    const BlockTransformBuilder& builder = scd_block_transform);

/// Cached result of resolve_scd_conventions() for the shipped sequence.
const ConventionReport& shipped_convention_report();

/// JSON document (schema dfsqft/1) describing every attempt and the outcome.
std::string convention_report_json(const ConventionReport& report);

}  // namespace dfsqft
