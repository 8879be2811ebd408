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
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dfsqft/dfs_analysis.hpp"
#include "dfsqft/gate.hpp"
#include "dfsqft/state_vector.hpp"

namespace dfsqft {

/// Random angles of one collective kick exp(-i sum_a phi_a S_a). WCD events
/// only carry phi_z.
struct NoiseEvent {
  double phi_x = 0.0;
  double phi_y = 0.0;
  double phi_z = 0.0;
};

enum class Granularity { PerElementaryGate, PerLogicalBlock, EndpointsOnly };
enum class Distribution { Uniform, Gaussian };

std::string to_string(Granularity g);
std::string to_string(Distribution d);

struct NoisePolicy {
  Granularity granularity = Granularity::PerLogicalBlock;
  /// Uniform draws each axis from [0, 2 pi); Gaussian from N(0, sigma^2).
  Distribution distribution = Distribution::Uniform;
  double sigma = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
};

struct RunReport {
  double mean_fidelity = 0.0;
  double min_fidelity = 0.0;
  double std_fidelity = 0.0;
  double mean_leakage = 0.0;
  int trials = 0;
  NoisePolicy policy;
  std::vector<double> fidelities;
  std::vector<double> leakages;
};

/// exp(-i sum_a phi_a S_a) applied as a product of single-qubit factors.
StateVector apply_noise(const StateVector& state, const NoiseEvent& event,
                        CollectiveModel model);

/// The same collective unitary from a dense Hermitian eigendecomposition.
/// Limited to n <= 10.
UnitaryMatrix collective_noise_unitary_dense(int n, const NoiseEvent& event,
                                             CollectiveModel model);

/// Engine for the per-trial substream of (seed, trial).
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);
NoiseEvent sample_noise_event(std::mt19937_64& rng, const NoisePolicy& policy,
                              CollectiveModel model);

/// Gate offsets where noise strikes: an offset p means "before gate p"; the
/// gate count itself means "after the last gate".
std::vector<std::size_t> noise_positions(Granularity granularity,
                                         std::size_t gate_count,
                                         std::span<const std::size_t> block_starts);

/// Runs `policy.trials` noisy executions of `circuit` on `input` and records
/// the fidelity to `ideal_output`. When `logical` is given, each trial also
/// records the leakage of the final state out of its span.
RunReport noisy_run(const Circuit& circuit, const StateVector& input,
                    const StateVector& ideal_output, const NoisePolicy& policy,
                    CollectiveModel model,
                    std::span<const std::size_t> block_starts,
                    const SubspaceBasis* logical = nullptr);

}  // namespace dfsqft
