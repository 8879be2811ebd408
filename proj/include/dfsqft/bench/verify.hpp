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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dfsqft/dfs_analysis.hpp"
#include "dfsqft/noise.hpp"
#include "dfsqft/qft.hpp"
#include "dfsqft/scd.hpp"

namespace dfsqft::bench {

enum class Encoding { Plain, Wcd, Scd };

std::string to_string(Encoding e);

struct SizeRange {
  int min;
  int max;
};

/// Logical sizes accepted by synth/verify/noise-bench for each encoding.
SizeRange supported_range(Encoding e);

/// Throws std::out_of_range outside supported_range.
BlockedCircuit synthesize(Encoding e, int n);

struct Check {
  std::string name;
  double tolerance = 0.0;
  double deviation = 0.0;
  bool passed = false;
};

struct Verification {
  std::vector<Check> checks;
  std::optional<ConventionReport> conventions;

  bool all_passed() const;
  const Check* first_failure() const;
  double max_deviation() const;
};

/// Runs every invariant check for the encoding at logical size n.
Verification verify_encoding(Encoding e, int n);

struct NoiseBenchConfig {
  Encoding encoding = Encoding::Wcd;
  int n = 2;
  NoisePolicy policy;
  /// Logical input bits, logical qubit n first. Empty means all zeros.
  std::string input_bits;
};

struct NoiseBenchResult {
  RunReport encoded;
  RunReport unencoded;
};

/// Encoded QFT versus the plain QFT on n qubits, both under the same policy
/// and collective model (WCD noise for wcd, SCD noise for scd).
NoiseBenchResult run_noise_bench(const NoiseBenchConfig& config);

struct DfsTableRow {
  int n = 0;
  std::uint64_t max_dim = 0;
  std::uint64_t max_dim_bruteforce = 0;
  std::optional<Rational> eta;
  std::array<int, 3> r{};  // min_physical_qubits for m = 1, 2, 3
  bool agree = false;
};

std::vector<DfsTableRow> dfs_table(CollectiveModel model, int n_max);
std::string dfs_table_csv(const std::vector<DfsTableRow>& rows);

/// Shortest round-trip decimal, locale independent.
std::string format_double(double v);

}  // namespace dfsqft::bench
