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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dfsqft/state_vector.hpp"
#include "oracles.hpp"

namespace dfsqft {
namespace {

std::vector<Gate> sample_gates() {
  return {Gate::h(1),          Gate::h(3),          Gate::r(2, 0.7),
          Gate::r(4, -2.1),    Gate::cn(1, 3),      Gate::cn(4, 2),
          Gate::p(2, 4, 0.3),  Gate::p(3, 1, -1.9), Gate::cr(1, 4, 1.1),
          Gate::cr(4, 1, -0.4)};
}

TEST(StateVector, RejectsWrongLengthAndNorm) {
  EXPECT_THROW(StateVector(2, ComplexVector::Zero(3)), std::invalid_argument);
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = 1.0 + 1e-9;
  EXPECT_THROW(StateVector(2, v), std::invalid_argument);
  v(0) = 1.0;
  EXPECT_NO_THROW(StateVector(2, v));
  EXPECT_THROW(StateVector::basis_state(2, 4), std::out_of_range);
  EXPECT_THROW(StateVector::basis_state(0, 0), std::out_of_range);
  EXPECT_THROW(StateVector::normalized(1, ComplexVector::Zero(2)),
               std::invalid_argument);
}

TEST(StateVector, QubitOneIsLeastSignificantBit) {
  // |s_3 s_2 s_1> = |011> is index 3; X on qubit 3 gives |111>.
  const auto psi = apply_gate(StateVector::basis_state(3, 3),
                              Gate::cn(1, 3));
  EXPECT_NEAR(std::abs(psi[7]), 1.0, kTolerance);
}

TEST(StateVector, GateKernelMatchesKroneckerOracle) {
  std::mt19937_64 rng(1);
  for (const Gate& g : sample_gates()) {
    const ComplexVector v = oracle::random_state(4, rng);
    const StateVector psi(4, v);
    const ComplexVector want = oracle::gate_matrix(g, 4) * v;
    EXPECT_LT(max_abs_deviation(apply_gate(psi, g).amplitudes(), want), 1e-13)
        << mnemonic(g.kind());
  }
}

TEST(StateVector, GateOnSmallerCircuitEmbedsInLargerState) {
  std::mt19937_64 rng(2);
  const Circuit c(2, {Gate::h(1), Gate::cn(1, 2)});
  const ComplexVector v = oracle::random_state(3, rng);
  const StateVector out = apply_circuit(StateVector(3, v), c);
  const ComplexVector want =
      oracle::gate_matrix(Gate::cn(1, 2), 3) * oracle::gate_matrix(Gate::h(1), 3) * v;
  EXPECT_LT(max_abs_deviation(out.amplitudes(), want), 1e-13);
  EXPECT_THROW(apply_circuit(StateVector::basis_state(1, 0), c), std::out_of_range);
}

TEST(StateVector, CircuitUnitaryMatchesOracleAndIsUnitary) {
  Circuit c(4, sample_gates());
  const UnitaryMatrix u = circuit_unitary(c);
  EXPECT_LT(max_abs_deviation(u.matrix(), oracle::circuit_matrix(c)), 1e-13);
  EXPECT_TRUE(u.is_unitary());
  // Widening keeps the action on the low qubits.
  const UnitaryMatrix wide = circuit_unitary(c, 5);
  EXPECT_LT(max_abs_deviation(wide.matrix(),
                              oracle::kron(oracle::identity2(), u.matrix())),
            1e-13);
}

TEST(StateVector, NormPreservedUnderRandomCircuits) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(0, 9);
  const auto gates = sample_gates();
  for (int rep = 0; rep < 20; ++rep) {
    Circuit c(4);
    for (int i = 0; i < 30; ++i) c.add(gates[static_cast<std::size_t>(pick(rng))]);
    const StateVector out = apply_circuit(StateVector(4, oracle::random_state(4, rng)), c);
    EXPECT_NEAR(out.norm(), 1.0, kNormTolerance);
  }
}

TEST(StateVector, FidelityAndPhaseHelpers) {
  const auto zero = StateVector::basis_state(1, 0);
  const auto plus = apply_gate(zero, Gate::h(1));
  EXPECT_NEAR(fidelity(zero, plus), 0.5, 1e-15);
  EXPECT_NEAR(fidelity(plus, plus), 1.0, 1e-15);

  const ComplexMatrix a = oracle::hadamard();
  const ComplexMatrix b = std::polar(1.0, 0.83) * a;
  EXPECT_TRUE(equal_up_to_global_phase(a, b));
  EXPECT_NEAR(global_phase_overlap(a, b), 1.0, 1e-15);
  EXPECT_LT(phase_aligned_deviation(a, b), 1e-15);
  EXPECT_GT(max_abs_deviation(a, b), 0.1);
  EXPECT_FALSE(equal_up_to_global_phase(a, oracle::pauli_x()));
}

TEST(StateVector, RestrictionOfCircuitMatchesRestrictionOfMatrix) {
  // Span of |01>, |10> under CN(2,1) H(2) CN(2,1) on two qubits.
  const SubspaceBasis basis(2, {StateVector::basis_state(2, 1),
                                StateVector::basis_state(2, 2)});
  const Circuit c(2, {Gate::cn(2, 1), Gate::h(2), Gate::cn(2, 1)});
  const Restriction a = restrict_to(c, basis);
  const Restriction b = restrict_to(circuit_unitary(c), basis);
  EXPECT_LT(max_abs_deviation(a.block, b.block), 1e-14);
  EXPECT_NEAR(a.leakage, b.leakage, 1e-14);
  EXPECT_LT(a.leakage, kTolerance);

  // H(1) alone leaks half of each state out of the span.
  const Restriction leak = restrict_to(Circuit(2, {Gate::h(1)}), basis);
  EXPECT_NEAR(leak.leakage, std::sqrt(0.5), 1e-14);
}

TEST(StateVector, SubspaceBasisRejectsNonOrthonormalSets) {
  const auto zero = StateVector::basis_state(1, 0);
  const auto plus = apply_gate(zero, Gate::h(1));
  EXPECT_THROW(SubspaceBasis(1, {zero, plus}), std::invalid_argument);
  EXPECT_THROW(SubspaceBasis(2, {zero}), std::invalid_argument);
}

}  // namespace
}  // namespace dfsqft
