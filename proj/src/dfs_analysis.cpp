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

#include "dfsqft/dfs_analysis.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dfsqft {

namespace {

// Closed forms stay valid past the brute-force cap; the search for r uses them.
constexpr int kSearchBound = kMaxQubits;

void check_n(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::out_of_range(std::string(what) + ": n = " + std::to_string(n) +
                            " outside " + std::to_string(lo) + ".." +
                            std::to_string(hi));
  }
}

std::uint64_t closed_form_max_dim(int n, CollectiveModel model) {
  if (model == CollectiveModel::Wcd) return binomial(n, n / 2);
  if (n % 2 != 0) return 0;
  return binomial(n, n / 2) - binomial(n, n / 2 + 1);
}

unsigned floor_log2(std::uint64_t x) {
  return static_cast<unsigned>(std::bit_width(x)) - 1U;
}

std::vector<StateVector> columns_to_states(int n, const ComplexMatrix& m) {
  std::vector<StateVector> out;
  out.reserve(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    out.push_back(StateVector::normalized(n, m.col(j)));
  }
  return out;
}

std::array<ComplexMatrix, 3> all_axes(int n) {
  return {collective_operator(n, Axis::X), collective_operator(n, Axis::Y),
          collective_operator(n, Axis::Z)};
}

}  // namespace

std::string to_string(CollectiveModel model) {
  return model == CollectiveModel::Wcd ? "wcd" : "scd";
}

ComplexMatrix collective_operator(int n, Axis axis) {
  check_n(n, 1, kMaxBruteForceQubits, "collective_operator");
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);
  ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index l = 0; l < dim; ++l) {
    for (int q = 0; q < n; ++q) {
      const bool one = (l >> q) & 1;
      const Eigen::Index flipped = l ^ (Eigen::Index{1} << q);
      switch (axis) {
        case Axis::X:
          s(flipped, l) += 1.0;
          break;
        case Axis::Y:
          // sigma_y|0> = i|1>, sigma_y|1> = -i|0>
          s(flipped, l) += one ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
          break;
        case Axis::Z:
          s(l, l) += one ? -1.0 : 1.0;
          break;
      }
    }
  }
  return s;
}

Nullspace common_nullspace(std::span<const ComplexMatrix> operators,
                           double threshold) {
  if (operators.empty()) throw std::invalid_argument("no operators given");
  const Eigen::Index cols = operators.front().cols();
  Eigen::Index rows = 0;
  for (const auto& op : operators) {
    if (op.cols() != cols) throw std::invalid_argument("operator size mismatch");
    rows += op.rows();
  }
  ComplexMatrix stacked(rows, cols);
  Eigen::Index r = 0;
  for (const auto& op : operators) {
    stacked.middleRows(r, op.rows()) = op;
    r += op.rows();
  }
  Eigen::BDCSVD<ComplexMatrix> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  // Columns of V beyond the numerical rank span the null space.
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) >= threshold) ++rank;
  Nullspace out;
  out.singular_values = sv;
  out.basis = svd.matrixV().rightCols(cols - rank);
  return out;
}

SubspaceBasis dfs_basis(int n, CollectiveModel model) {
  check_n(n, 2, kMaxBruteForceQubits, "dfs_basis");
  if (n % 2 != 0) {
    throw std::invalid_argument("dfs_basis: odd n = " + std::to_string(n) +
                                " has no zero sector");
  }
  if (model == CollectiveModel::Wcd) {
    const ComplexMatrix sz = collective_operator(n, Axis::Z);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sz);
    std::vector<Eigen::Index> zero;
    for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
      if (std::abs(eig.eigenvalues()(i)) < kNullspaceThreshold) zero.push_back(i);
    }
    ComplexMatrix cols(sz.rows(), static_cast<Eigen::Index>(zero.size()));
    for (std::size_t j = 0; j < zero.size(); ++j) {
      cols.col(static_cast<Eigen::Index>(j)) = eig.eigenvectors().col(zero[j]);
    }
    return SubspaceBasis(n, columns_to_states(n, cols));
  }
  const auto ops = all_axes(n);
  const Nullspace ns = common_nullspace(ops);
  return SubspaceBasis(n, columns_to_states(n, ns.basis));
}

DfsReport dfs_report(int n, CollectiveModel model) {
  check_n(n, 1, kMaxBruteForceQubits, "dfs_report");
  DfsReport rep;
  rep.n = n;
  rep.model = model;
  if (model == CollectiveModel::Wcd) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(
        collective_operator(n, Axis::Z), Eigen::EigenvaluesOnly);
    for (int m = n; m >= -n; m -= 2) {
      std::uint64_t count = 0;
      for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
        if (std::abs(eig.eigenvalues()(i) - m) < 0.5) ++count;
      }
      rep.sector_labels.push_back("Sz=" + std::to_string(m));
      rep.dims.push_back(count);
    }
  } else {
    const auto ops = all_axes(n);
    rep.sector_labels.push_back("J=0");
    rep.dims.push_back(static_cast<std::uint64_t>(common_nullspace(ops).basis.cols()));
  }
  rep.max_dim = 0;
  for (auto d : rep.dims) rep.max_dim = std::max(rep.max_dim, d);
  return rep;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::uint64_t max_dfs_dimension(int n, CollectiveModel model) {
  check_n(n, 1, kMaxBruteForceQubits, "max_dfs_dimension");
  return closed_form_max_dim(n, model);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  const std::int64_t g = std::gcd(num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::string to_string(const Rational& r) {
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational eta_max(int n, CollectiveModel model) {
  const std::uint64_t d = max_dfs_dimension(n, model);
  if (d < 1) {
    throw std::domain_error("eta_max: no DFS sector for n = " +
                            std::to_string(n));
  }
  return make_rational(floor_log2(d), n);
}

int min_physical_qubits(int m, CollectiveModel model) {
  check_n(m, 1, 5, "min_physical_qubits");
  for (int n = 1; n <= kSearchBound; ++n) {
    const std::uint64_t d = closed_form_max_dim(n, model);
    if (d >= 1 && floor_log2(d) >= static_cast<unsigned>(m)) return n;
  }
  throw std::out_of_range("min_physical_qubits: search bound n <= " +
                          std::to_string(kSearchBound) + " exceeded");
}

}  // namespace dfsqft
