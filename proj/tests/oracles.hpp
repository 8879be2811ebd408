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

// Reference constructions used only by the tests. They build operators from
// Kronecker products of 2x2 matrices, independently of the simulator kernel.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "dfsqft/gate.hpp"

namespace dfsqft::oracle {

using C = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Mat mat2(C a, C b, C c, C d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Mat identity2() { return Mat::Identity(2, 2); }
inline Mat pauli_x() { return mat2(0, 1, 1, 0); }
inline Mat pauli_y() { return mat2(0, C(0, -1), C(0, 1), 0); }
inline Mat pauli_z() { return mat2(1, 0, 0, -1); }
inline Mat proj0() { return mat2(1, 0, 0, 0); }
inline Mat proj1() { return mat2(0, 0, 0, 1); }
inline Mat hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return mat2(s, s, s, -s);
}
inline Mat rotation(double a) {
  return mat2(std::cos(a), -std::sin(a), std::sin(a), std::cos(a));
}

/// Tensor product with `ops[t]` on qubit t (1-based); qubit n is the most
/// significant factor. Missing entries are identities.
template <typename Lookup>
Mat tensor(int n, Lookup&& op_for_qubit) {
  Mat out = Mat::Identity(1, 1);
  for (int t = n; t >= 1; --t) out = kron(out, op_for_qubit(t));
  return out;
}

inline Mat on_qubit(const Mat& op, int q, int n) {
  return tensor(n, [&](int t) { return t == q ? op : identity2(); });
}

inline Mat on_two(const Mat& a, int qa, const Mat& b, int qb, int n) {
  return tensor(n, [&](int t) {
    if (t == qa) return a;
    if (t == qb) return b;
    return identity2();
  });
}

/// |0><0|_c (x) I + |1><1|_c (x) V_t
inline Mat controlled(const Mat& v, int c, int t, int n) {
  return on_qubit(proj0(), c, n) + on_two(proj1(), c, v, t, n);
}

inline Mat gate_matrix(const Gate& g, int n) {
  switch (g.kind()) {
    case GateKind::H:
      return on_qubit(hadamard(), g.target(), n);
    case GateKind::R:
      return on_qubit(rotation(g.angle()), g.target(), n);
    case GateKind::CN:
      return controlled(pauli_x(), g.control(), g.target(), n);
    case GateKind::CR:
      return controlled(rotation(g.angle()), g.control(), g.target(), n);
    case GateKind::P:
      return controlled(mat2(1, 0, 0, std::polar(1.0, g.angle())), g.control(),
                        g.target(), n);
  }
  return Mat();
}

/// Product of gate matrices with gates()[0] rightmost.
inline Mat circuit_matrix(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits();
  Mat u = Mat::Identity(dim, dim);
  for (const Gate& g : c) u = gate_matrix(g, c.n_qubits()) * u;
  return u;
}

inline Mat collective(int n, const Mat& pauli) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat s = Mat::Zero(dim, dim);
  for (int q = 1; q <= n; ++q) s += on_qubit(pauli, q, n);
  return s;
}

/// Entry (j, k) = 2^(-n/2) exp(2 pi i j k / 2^n), evaluated in long double.
inline Mat dft(int n) {
  const std::int64_t dim = std::int64_t{1} << n;
  Mat f(dim, dim);
  for (std::int64_t j = 0; j < dim; ++j) {
    for (std::int64_t k = 0; k < dim; ++k) {
      const long double ang = 2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>((j * k) % dim) /
                              static_cast<long double>(dim);
      f(j, k) = C(static_cast<double>(std::cos(ang)),
                  static_cast<double>(std::sin(ang))) /
                std::sqrt(static_cast<double>(dim));
    }
  }
  return f;
}

inline Vec random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(Eigen::Index{1} << n);
  for (auto& x : v) x = C(g(rng), g(rng));
  return v / v.norm();
}

inline double max_abs(const Mat& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace dfsqft::oracle
