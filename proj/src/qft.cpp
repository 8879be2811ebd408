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

#include "dfsqft/qft.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dfsqft {

namespace {

void check_range(int n, int max, const char* what) {
  if (n < 1 || n > max) {
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) +
                            " outside 1.." + std::to_string(max));
  }
}

double phase_angle(int i, int k) {
  return std::numbers::pi / static_cast<double>(std::uint64_t{1} << (k - i));
}

}  // namespace

BlockedCircuit synth_logical_qft_blocks(int n, const GateFactory& factory) {
  if (n < 1) throw std::out_of_range("QFT size must be positive");
  BlockedCircuit out{Circuit(factory.n_physical), {}};
  auto push = [&out](const Circuit& block) {
    out.block_starts.push_back(out.circuit.size());
    out.circuit.append(block);
  };
  for (int k = n; k >= 1; --k) {
    push(factory.hadamard(k));
    for (int i = k - 1; i >= 1; --i) {
      push(factory.phase(i, k, phase_angle(i, k)));
    }
  }
  return out;
}

Circuit synth_logical_qft(int n, const GateFactory& factory) {
  return synth_logical_qft_blocks(n, factory).circuit;
}

GateFactory plain_factory(int n) {
  check_range(n, kMaxQubits, "plain factory");
  GateFactory f;
  f.n_physical = n;
  f.hadamard = [n](int k) { return Circuit(n, {Gate::h(k)}); };
  f.phase = [n](int i, int j, double theta) {
    return Circuit(n, {Gate::p(i, j, theta)});
  };
  return f;
}

Circuit synth_qft(int n) {
  check_range(n, kMaxQubits, "synth_qft");
  return synth_logical_qft(n, plain_factory(n));
}

UnitaryMatrix dft_matrix(int n) {
  check_range(n, kMaxQubits, "dft_matrix");
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  const auto d = static_cast<Eigen::Index>(dim);
  ComplexMatrix m(d, d);
  for (std::uint64_t row = 0; row < dim; ++row) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      // Reduce mod 2^n before converting so large products stay exact.
      const std::uint64_t k = (row * col) & (dim - 1);
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                           static_cast<double>(dim);
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          std::polar(scale, angle);
    }
  }
  return UnitaryMatrix(std::move(m));
}

std::uint64_t reverse_bits(std::uint64_t value, int n_bits) {
  std::uint64_t out = 0;
  for (int b = 0; b < n_bits; ++b) {
    out = (out << 1) | ((value >> b) & 1U);
  }
  return out;
}

OutputOrder make_output_order(OutputOrderKind kind, int n) {
  check_range(n, kMaxQubits, "output order");
  const std::uint64_t dim = std::uint64_t{1} << n;
  OutputOrder q{kind, n, {}};
  q.map.resize(dim);
  for (std::uint64_t l = 0; l < dim; ++l) {
    q.map[l] = kind == OutputOrderKind::Identity ? l : reverse_bits(l, n);
  }
  return q;
}

ComplexMatrix OutputOrder::matrix() const {
  const auto d = static_cast<Eigen::Index>(map.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (std::size_t l = 0; l < map.size(); ++l) {
    m(static_cast<Eigen::Index>(map[l]), static_cast<Eigen::Index>(l)) = 1.0;
  }
  return m;
}

OutputOrder resolve_output_order(int n) {
  check_range(n, 8, "resolve_output_order");
  const ComplexMatrix circuit = circuit_unitary(synth_qft(n)).matrix();
  const ComplexMatrix dft = dft_matrix(n).matrix();
  for (auto kind : {OutputOrderKind::Identity, OutputOrderKind::BitReversal}) {
    OutputOrder q = make_output_order(kind, n);
    if (equal_up_to_global_phase(circuit, q.matrix() * dft)) return q;
  }
  throw ConventionError("no matching convention: synth_qft(" +
                        std::to_string(n) +
                        ") matches neither identity nor bit-reversed DFT");
}

ComplexMatrix expected_qft_matrix(int n) {
  return resolve_output_order(n).matrix() * dft_matrix(n).matrix();
}

ComplexMatrix hadamard_action(int k, int n) {
  check_range(n, kMaxQubits, "hadamard_action");
  if (k < 1 || k > n) throw std::out_of_range("hadamard_action: bad qubit");
  const auto dim = Eigen::Index{1} << n;
  const Eigen::Index m = Eigen::Index{1} << (k - 1);
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index l = 0; l < dim; ++l) {
    out(l & ~m, l) += s;
    out(l | m, l) += (l & m) ? -s : s;
  }
  return out;
}

ComplexMatrix phase_action(int i, int j, double theta, int n) {
  check_range(n, kMaxQubits, "phase_action");
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw std::out_of_range("phase_action: bad qubit pair");
  }
  const auto dim = Eigen::Index{1} << n;
  const Eigen::Index both = (Eigen::Index{1} << (i - 1)) | (Eigen::Index{1} << (j - 1));
  ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
  for (Eigen::Index l = 0; l < dim; ++l) {
    if ((l & both) == both) out(l, l) = std::polar(1.0, theta);
  }
  return out;
}

}  // namespace dfsqft
