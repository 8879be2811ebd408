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
#include <span>
#include <string>
#include <vector>

#include "dfsqft/state_vector.hpp"

namespace dfsqft {

/// WCD couples through S_z alone; SCD through S_x, S_y and S_z.
enum class CollectiveModel { Wcd, Scd };
enum class Axis { X, Y, Z };

std::string to_string(CollectiveModel model);

/// Largest register handled by the dense brute-force analysis.
inline constexpr int kMaxBruteForceQubits = 10;
/// Singular values below this count as zero.
inline constexpr double kNullspaceThreshold = 1e-9;

/// S_axis = sum_i sigma_axis^(i) on n qubits, with sigma_z|0> = +|0>.
ComplexMatrix collective_operator(int n, Axis axis);

struct Nullspace {
  ComplexMatrix basis;             // orthonormal columns
  Eigen::VectorXd singular_values; // descending, of the stacked operators
};

/// Common null space of `operators` from an SVD of their vertical stack.
Nullspace common_nullspace(std::span<const ComplexMatrix> operators,
                           double threshold = kNullspaceThreshold);

/// WCD: orthonormal basis of the S_z eigenvalue-0 eigenspace. SCD: the common
/// null space of S_x, S_y, S_z. n must be even, 2 <= n <= 10.
SubspaceBasis dfs_basis(int n, CollectiveModel model);

struct DfsReport {
  int n = 0;
  CollectiveModel model = CollectiveModel::Wcd;
  /// WCD: "Sz=<eigenvalue>" from +n down to -n. SCD: "J=0".
  std::vector<std::string> sector_labels;
  std::vector<std::uint64_t> dims;
  std::uint64_t max_dim = 0;
};

/// Sector dimensions from dense eigen/null-space computations (n <= 10).
DfsReport dfs_report(int n, CollectiveModel model);

std::uint64_t binomial(int n, int k);

/// Closed forms: WCD C(n, floor(n/2)); SCD C(n, n/2) - C(n, n/2 + 1) for even
/// n and 0 for odd n. 1 <= n <= 10.
std::uint64_t max_dfs_dimension(int n, CollectiveModel model);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);
std::string to_string(const Rational& r);

/// floor(log2(max_dfs_dimension)) / n. Throws if there is no DFS sector.
Rational eta_max(int n, CollectiveModel model);

/// Smallest n with floor(log2(max_dfs_dimension(n))) >= m, 1 <= m <= 5.
int min_physical_qubits(int m, CollectiveModel model);

}  // namespace dfsqft
