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
#include <numbers>

#include "dfsqft/dfs_analysis.hpp"
#include "dfsqft/wcd.hpp"
#include "oracles.hpp"

namespace dfsqft {
namespace {

constexpr double kPi = std::numbers::pi;
const double kRootHalf = 1.0 / std::sqrt(2.0);

// Logical index l = sum_t s_t 2^(t-1) mapped to the physical basis index by
// placing |01> (bit 0) or |10> (bit 1) on each pair.
std::uint64_t physical_index(std::uint64_t l, int n) {
  std::uint64_t p = 0;
  for (int t = 1; t <= n; ++t) {
    const bool one = (l >> (t - 1)) & 1U;
    p |= std::uint64_t{one ? 2u : 1u} << (2 * (t - 1));
  }
  return p;
}

TEST(WcdStates, EncodeEachPairAsOneExcitation) {
  EXPECT_EQ(wcd_logical_state("0").amplitudes(),
            StateVector::basis_state(2, 0b01).amplitudes());
  EXPECT_EQ(wcd_logical_state("1").amplitudes(),
            StateVector::basis_state(2, 0b10).amplitudes());
  // First character is logical qubit n: "10" means s_2 = 1, s_1 = 0.
  EXPECT_EQ(wcd_logical_state("10").amplitudes(),
            StateVector::basis_state(4, 0b1001).amplitudes());
  EXPECT_THROW(wcd_logical_state("0a"), std::invalid_argument);
  EXPECT_THROW(wcd_logical_state(""), std::invalid_argument);
  for (int n = 1; n <= 4; ++n) {
    const SubspaceBasis b = wcd_logical_basis(n);
    const ComplexMatrix sz = collective_operator(2 * n, Axis::Z);
    for (std::uint64_t l = 0; l < b.size(); ++l) {
      EXPECT_NEAR(std::abs(b[l][physical_index(l, n)]), 1.0, 1e-15);
      EXPECT_LT((sz * b[l].amplitudes()).norm(), kTolerance);
    }
  }
}

TEST(WcdHadamard, MapsBasisStatesToSuperpositions) {
  const ComplexVector zero = wcd_logical_state("0").amplitudes();
  const ComplexVector one = wcd_logical_state("1").amplitudes();
  const ComplexMatrix u = oracle::circuit_matrix(wcd_hadamard(1, 1));
  EXPECT_LT(max_abs_deviation(u * zero, kRootHalf * (zero + one)), kTolerance);
  EXPECT_LT(max_abs_deviation(u * one, kRootHalf * (zero - one)), kTolerance);
  EXPECT_EQ(wcd_hadamard(1, 1).size(), 3u);
}

TEST(WcdHadamard, LogicalRestrictionIsHadamardWithoutLeakage) {
  for (int n = 1; n <= 4; ++n) {
    const SubspaceBasis basis = wcd_logical_basis(n);
    for (int k = 1; k <= n; ++k) {
      const Restriction r = restrict_to(wcd_hadamard(k, n), basis);
      EXPECT_LT(max_abs_deviation(r.block, hadamard_action(k, n)), kTolerance);
      EXPECT_LT(r.leakage, kTolerance);
    }
  }
}

TEST(WcdPhase, PhaseOnlyWhenBothLogicalQubitsAreOne) {
  for (int n = 2; n <= 3; ++n) {
    const SubspaceBasis basis = wcd_logical_basis(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (double theta : {kPi / 2, kPi / 4, kPi / 8}) {
          const ComplexMatrix u = oracle::circuit_matrix(wcd_phase(i, j, theta, n));
          for (std::uint64_t l = 0; l < basis.size(); ++l) {
            const bool both = ((l >> (i - 1)) & 1U) && ((l >> (j - 1)) & 1U);
            const ComplexVector in = basis[l].amplitudes();
            const ComplexVector want = (both ? std::polar(1.0, theta) : Complex(1.0)) * in;
            EXPECT_LT(max_abs_deviation(u * in, want), kTolerance);
          }
        }
      }
    }
  }
  EXPECT_THROW(wcd_phase(1, 1, 0.1, 2), std::invalid_argument);
  EXPECT_EQ(wcd_phase(1, 2, 0.1, 2).size(), 5u);
}

TEST(WcdConjugation, EncoderConjugatesPhysicalGatesIntoLogicalOnes) {
  for (int n = 1; n <= 3; ++n) {
    const ComplexMatrix u = oracle::circuit_matrix(wcd_encoder_circuit(n));
    EXPECT_LT(max_abs_deviation(u * u, ComplexMatrix::Identity(u.rows(), u.cols())),
              1e-15);
    for (int k = 1; k <= n; ++k) {
      const ComplexMatrix want =
          u * oracle::on_qubit(oracle::hadamard(), 2 * k, 2 * n) * u;
      EXPECT_LT(max_abs_deviation(circuit_unitary(wcd_hadamard(k, n)).matrix(), want),
                kTolerance);
    }
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const ComplexMatrix p =
            oracle::gate_matrix(Gate::p(2 * i, 2 * j, kPi / 8), 2 * n);
        EXPECT_LT(max_abs_deviation(
                      circuit_unitary(wcd_phase(i, j, kPi / 8, n)).matrix(), u * p * u),
                  kTolerance);
      }
    }
  }
}

TEST(WcdQft, GateCountsAndStructure) {
  EXPECT_EQ(synth_qft_wcd(1).size(), 3u);
  EXPECT_EQ(synth_qft_wcd(2).size(), 11u);
  EXPECT_EQ(synth_qft_wcd(3).size(), 24u);
  const BlockedCircuit b = synth_qft_wcd_blocks(3);
  EXPECT_EQ(b.block_starts,
            (std::vector<std::size_t>{0, 3, 8, 13, 16, 21}));
  EXPECT_EQ(b.circuit.n_qubits(), 6);
}

TEST(WcdQft, LogicalRestrictionIsTheQft) {
  for (int n = 1; n <= 5; ++n) {
    const Restriction r = restrict_to(synth_qft_wcd(n), wcd_logical_basis(n));
    EXPECT_LT(phase_aligned_deviation(r.block, expected_qft_matrix(n)), kTolerance) << n;
    EXPECT_LT(max_abs_deviation(r.block, expected_qft_matrix(n)), kTolerance) << n;
    EXPECT_LT(r.leakage, kTolerance);
  }
}

TEST(WcdQft, RangeLimits) {
  EXPECT_THROW(synth_qft_wcd(0), std::out_of_range);
  EXPECT_THROW(synth_qft_wcd(7), std::out_of_range);
  EXPECT_THROW(wcd_hadamard(3, 2), std::out_of_range);
}

}  // namespace
}  // namespace dfsqft
