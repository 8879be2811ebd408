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

#include "dfsqft/state_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dfsqft {

namespace {

std::size_t dim_for(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::out_of_range("register size " + std::to_string(n_qubits) +
                            " outside 1.." + std::to_string(kMaxQubits));
  }
  return std::size_t{1} << n_qubits;
}

std::uint64_t bit(int qubit) { return std::uint64_t{1} << (qubit - 1); }

void check_fits(const Gate& gate, int n_qubits) {
  if (gate.max_qubit() > n_qubits) {
    throw std::out_of_range("gate touches qubit " +
                            std::to_string(gate.max_qubit()) +
                            " beyond register size " +
                            std::to_string(n_qubits));
  }
}

// [[c, -s], [s, c]] on the pair (a0, a1) = (amp with target 0, target 1).
inline void rotate(Complex& a0, Complex& a1, double c, double s) {
  const Complex x0 = a0;
  const Complex x1 = a1;
  a0 = c * x0 - s * x1;
  a1 = s * x0 + c * x1;
}

}  // namespace

StateVector::StateVector(int n_qubits, ComplexVector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != dim_for(n_qubits)) {
    throw std::invalid_argument(
        "amplitude vector length " + std::to_string(amplitudes_.size()) +
        " does not match 2^" + std::to_string(n_qubits));
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (norm " +
                                std::to_string(amplitudes_.norm()) + ")");
  }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
  const std::size_t dim = dim_for(n_qubits);
  if (index >= dim) {
    throw std::out_of_range("basis index " + std::to_string(index) +
                            " outside a " + std::to_string(n_qubits) +
                            "-qubit register");
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(n_qubits, std::move(v));
}

StateVector StateVector::normalized(int n_qubits, ComplexVector amplitudes) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
  amplitudes /= n;
  return StateVector(n_qubits, std::move(amplitudes));
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw std::invalid_argument("unitary matrix must be square and non-empty");
  }
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return UnitaryMatrix(ComplexMatrix::Identity(d, d));
}

double UnitaryMatrix::unitarity_deviation() const {
  const ComplexMatrix gram = matrix_.adjoint() * matrix_;
  return (gram - ComplexMatrix::Identity(gram.rows(), gram.cols()))
      .cwiseAbs()
      .maxCoeff();
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return UnitaryMatrix(a.matrix_ * b.matrix_);
}

SubspaceBasis::SubspaceBasis(int n_qubits, std::vector<StateVector> vectors)
    : n_qubits_(n_qubits), vectors_(std::move(vectors)) {
  const auto dim = static_cast<Eigen::Index>(dim_for(n_qubits));
  columns_.resize(dim, static_cast<Eigen::Index>(vectors_.size()));
  for (std::size_t j = 0; j < vectors_.size(); ++j) {
    if (vectors_[j].n_qubits() != n_qubits) {
      throw std::invalid_argument("basis vector register size mismatch");
    }
    columns_.col(static_cast<Eigen::Index>(j)) = vectors_[j].amplitudes();
  }
  const ComplexMatrix gram = columns_.adjoint() * columns_;
  const ComplexMatrix eye = ComplexMatrix::Identity(gram.rows(), gram.cols());
  if (gram.size() > 0 && (gram - eye).cwiseAbs().maxCoeff() > kTolerance) {
    throw std::invalid_argument("subspace basis is not orthonormal");
  }
}

void apply_gate_in_place(std::span<Complex> amps, int n_qubits,
                         const Gate& gate) {
  if (amps.size() != dim_for(n_qubits)) {
    throw std::invalid_argument("amplitude buffer does not match register");
  }
  check_fits(gate, n_qubits);
  const std::uint64_t dim = amps.size();
  const std::uint64_t t = bit(gate.target());
  const std::uint64_t c = gate.arity() == 2 ? bit(gate.control()) : 0;

  switch (gate.kind()) {
    case GateKind::H: {
      const double s = 1.0 / std::sqrt(2.0);
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & t) continue;
        const Complex a = amps[i];
        const Complex b = amps[i | t];
        amps[i] = s * (a + b);
        amps[i | t] = s * (a - b);
      }
      break;
    }
    case GateKind::R: {
      const double cs = std::cos(gate.angle());
      const double sn = std::sin(gate.angle());
      for (std::uint64_t i = 0; i < dim; ++i) {
        if (i & t) continue;
        rotate(amps[i], amps[i | t], cs, sn);
      }
      break;
    }
    case GateKind::CN:
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & t) || !(i & c)) continue;
        std::swap(amps[i], amps[i | t]);
      }
      break;
    case GateKind::P: {
      const Complex phase = std::polar(1.0, gate.angle());
      const std::uint64_t both = c | t;
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & both) == both) amps[i] *= phase;
      }
      break;
    }
    case GateKind::CR: {
      const double cs = std::cos(gate.angle());
      const double sn = std::sin(gate.angle());
      for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & t) || !(i & c)) continue;
        rotate(amps[i], amps[i | t], cs, sn);
      }
      break;
    }
  }
}

void apply_circuit_in_place(std::span<Complex> amps, int n_qubits,
                            const Circuit& circuit) {
  if (circuit.n_qubits() > n_qubits) {
    throw std::out_of_range("circuit register larger than state register");
  }
  for (const auto& g : circuit) apply_gate_in_place(amps, n_qubits, g);
}

StateVector apply_gate(const StateVector& state, const Gate& gate) {
  ComplexVector out = state.amplitudes();
  apply_gate_in_place({out.data(), static_cast<std::size_t>(out.size())},
                      state.n_qubits(), gate);
  return StateVector(state.n_qubits(), std::move(out));
}

StateVector apply_circuit(const StateVector& state, const Circuit& circuit) {
  ComplexVector out = state.amplitudes();
  apply_circuit_in_place({out.data(), static_cast<std::size_t>(out.size())},
                         state.n_qubits(), circuit);
  return StateVector(state.n_qubits(), std::move(out));
}

UnitaryMatrix circuit_unitary(const Circuit& circuit, int n_qubits) {
  const auto dim = static_cast<Eigen::Index>(dim_for(n_qubits));
  for (const auto& g : circuit) check_fits(g, n_qubits);
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  // Eigen is column-major, so each column is a contiguous state buffer.
  for (Eigen::Index col = 0; col < dim; ++col) {
    std::span<Complex> column(u.col(col).data(), static_cast<std::size_t>(dim));
    for (const auto& g : circuit) apply_gate_in_place(column, n_qubits, g);
  }
  return UnitaryMatrix(std::move(u));
}

UnitaryMatrix circuit_unitary(const Circuit& circuit) {
  return circuit_unitary(circuit, circuit.n_qubits());
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

namespace {

Restriction restriction_from_images(const ComplexMatrix& images,
                                    const SubspaceBasis& basis) {
  Restriction r;
  r.block = basis.columns().adjoint() * images;
  const ComplexMatrix residual = images - basis.columns() * r.block;
  r.leakage = residual.size() == 0 ? 0.0 : residual.colwise().norm().maxCoeff();
  return r;
}

}  // namespace

Restriction restrict_to(const UnitaryMatrix& unitary,
                        const SubspaceBasis& basis) {
  if (unitary.dim() != (std::size_t{1} << basis.n_qubits())) {
    throw std::invalid_argument("restrict: dimension mismatch");
  }
  return restriction_from_images(unitary.matrix() * basis.columns(), basis);
}

Restriction restrict_to(const Circuit& circuit, const SubspaceBasis& basis) {
  if (circuit.n_qubits() != basis.n_qubits()) {
    throw std::invalid_argument("restrict: dimension mismatch");
  }
  ComplexMatrix images = basis.columns();
  const auto dim = static_cast<std::size_t>(images.rows());
  for (Eigen::Index j = 0; j < images.cols(); ++j) {
    apply_circuit_in_place({images.col(j).data(), dim}, basis.n_qubits(),
                           circuit);
  }
  return restriction_from_images(images, basis);
}

double global_phase_overlap(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("global_phase_overlap: dimension mismatch");
  }
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

bool equal_up_to_global_phase(const ComplexMatrix& a, const ComplexMatrix& b,
                              double tol) {
  return global_phase_overlap(a, b) >= 1.0 - tol;
}

double phase_aligned_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("phase_aligned_deviation: dimension mismatch");
  }
  const Complex tr = (a.adjoint() * b).trace();
  const Complex phase = std::abs(tr) > 0.0 ? tr / std::abs(tr) : Complex{1.0};
  return (phase * a - b).cwiseAbs().maxCoeff();
}

double max_abs_deviation(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_deviation: dimension mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace dfsqft
