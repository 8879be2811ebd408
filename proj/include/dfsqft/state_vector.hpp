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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dfsqft/gate.hpp"

namespace dfsqft {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Absolute tolerance for comparisons against analytic targets.
inline constexpr double kTolerance = 1e-10;
/// Tolerance on the Euclidean norm of a state.
inline constexpr double kNormTolerance = 1e-12;

/// Normalized amplitude vector over n qubits. Basis index l has bit t-1 equal
/// to the value of qubit t, so the string |s_n ... s_1> reads as the binary
/// expansion of l.
class StateVector {
 public:
  /// Throws if the length is not 2^n_qubits or the norm is not 1 within
  /// kNormTolerance.
  StateVector(int n_qubits, ComplexVector amplitudes);

  static StateVector basis_state(int n_qubits, std::uint64_t index);
  /// Rescales `amplitudes` to unit norm; throws on a zero vector.
  static StateVector normalized(int n_qubits, ComplexVector amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(amplitudes_.size());
  }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_(index); }
  double norm() const { return amplitudes_.norm(); }

 private:
  int n_qubits_;
  ComplexVector amplitudes_;
};

/// Dense square matrix. Unitarity is checked on request, not on construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix matrix);
  static UnitaryMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(matrix_.rows());
  }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Complex operator()(std::size_t row, std::size_t col) const {
    return matrix_(row, col);
  }

  /// max_ij |(U^dagger U - I)_ij|
  double unitarity_deviation() const;
  bool is_unitary(double tol = kTolerance) const {
    return unitarity_deviation() <= tol;
  }

  UnitaryMatrix adjoint() const { return UnitaryMatrix(matrix_.adjoint()); }
  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

 private:
  ComplexMatrix matrix_;
};

/// Ordered orthonormal set of states on a common register.
class SubspaceBasis {
 public:
  /// Throws if the Gram matrix deviates from identity by more than
  /// kTolerance entrywise or registers differ.
  SubspaceBasis(int n_qubits, std::vector<StateVector> vectors);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const StateVector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<StateVector>& vectors() const noexcept { return vectors_; }

  /// 2^n x size() matrix whose columns are the basis vectors.
  const ComplexMatrix& columns() const noexcept { return columns_; }

 private:
  int n_qubits_;
  std::vector<StateVector> vectors_;
  ComplexMatrix columns_;
};

/// In-place gate kernel on a raw amplitude buffer of length 2^n_qubits.
void apply_gate_in_place(std::span<Complex> amplitudes, int n_qubits,
                         const Gate& gate);
void apply_circuit_in_place(std::span<Complex> amplitudes, int n_qubits,
                            const Circuit& circuit);

StateVector apply_gate(const StateVector& state, const Gate& gate);
StateVector apply_circuit(const StateVector& state, const Circuit& circuit);

/// Column l is the circuit applied to basis state l.
UnitaryMatrix circuit_unitary(const Circuit& circuit, int n_qubits);
UnitaryMatrix circuit_unitary(const Circuit& circuit);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

struct Restriction {
  /// block(i, j) = <basis_i| U |basis_j>
  ComplexMatrix block;
  /// max_j || (1 - P) U |basis_j> || with P the projector onto the span.
  double leakage = 0.0;
};

Restriction restrict_to(const UnitaryMatrix& unitary, const SubspaceBasis& basis);
/// Same result without materializing the full unitary.
Restriction restrict_to(const Circuit& circuit, const SubspaceBasis& basis);

/// |tr(A^dagger B)| / dim; equals 1 iff A and B agree up to a global phase
/// (for unitary A, B).
double global_phase_overlap(const ComplexMatrix& a, const ComplexMatrix& b);
bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                              double tol = kTolerance);
/// max_ij |e^{i phi} A_ij - B_ij| with phi chosen from tr(A^dagger B).
double phase_aligned_deviation(const ComplexMatrix& a, const ComplexMatrix& b);
/// max_ij |A_ij - B_ij|
double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace dfsqft
