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

#include "dfsqft/noise.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dfsqft {

namespace {

void check_event(const NoiseEvent& e, CollectiveModel model) {
  if (!std::isfinite(e.phi_x) || !std::isfinite(e.phi_y) ||
      !std::isfinite(e.phi_z)) {
    throw std::invalid_argument("noise angles must be finite");
  }
  if (model == CollectiveModel::Wcd && (e.phi_x != 0.0 || e.phi_y != 0.0)) {
    throw std::invalid_argument("WCD noise events carry only phi_z");
  }
}

// exp(-i (phi . sigma)) = cos r I - i sin r (n . sigma), r = |phi|.
std::array<Complex, 4> single_qubit_kick(const NoiseEvent& e) {
  const double r = std::sqrt(e.phi_x * e.phi_x + e.phi_y * e.phi_y +
                             e.phi_z * e.phi_z);
  const double c = std::cos(r);
  const double s = r > 0.0 ? std::sin(r) / r : 1.0;
  const Complex i{0.0, 1.0};
  const double x = s * e.phi_x;
  const double y = s * e.phi_y;
  const double z = s * e.phi_z;
  // Row-major [u00, u01, u10, u11].
  return {Complex(c, -z), -i * Complex(x, -y), -i * Complex(x, y), Complex(c, z)};
}

void apply_noise_in_place(std::span<Complex> amps, int n_qubits,
                          const NoiseEvent& e) {
  const auto u = single_qubit_kick(e);
  for (int q = 0; q < n_qubits; ++q) {
    const std::uint64_t m = std::uint64_t{1} << q;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
      if (i & m) continue;
      const Complex a0 = amps[i];
      const Complex a1 = amps[i | m];
      amps[i] = u[0] * a0 + u[1] * a1;
      amps[i | m] = u[2] * a0 + u[3] * a1;
    }
  }
}

}  // namespace

std::string to_string(Granularity g) {
  switch (g) {
    case Granularity::PerElementaryGate:
      return "per_elementary_gate";
    case Granularity::PerLogicalBlock:
      return "per_logical_block";
    case Granularity::EndpointsOnly:
      return "endpoints_only";
  }
  return "unknown";
}

std::string to_string(Distribution d) {
  return d == Distribution::Uniform ? "uniform" : "gaussian";
}

StateVector apply_noise(const StateVector& state, const NoiseEvent& event,
                        CollectiveModel model) {
  check_event(event, model);
  ComplexVector out = state.amplitudes();
  apply_noise_in_place({out.data(), static_cast<std::size_t>(out.size())},
                       state.n_qubits(), event);
  return StateVector(state.n_qubits(), std::move(out));
}

UnitaryMatrix collective_noise_unitary_dense(int n, const NoiseEvent& event,
                                             CollectiveModel model) {
  check_event(event, model);
  if (n < 1 || n > kMaxBruteForceQubits) {
    throw std::out_of_range("register of " + std::to_string(n) +
                            " qubits too large for the dense exponential");
  }
  const ComplexMatrix h = event.phi_x * collective_operator(n, Axis::X) +
                          event.phi_y * collective_operator(n, Axis::Y) +
                          event.phi_z * collective_operator(n, Axis::Z);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  const Eigen::VectorXcd phases =
      (eig.eigenvalues().cast<Complex>() * Complex(0.0, -1.0)).array().exp();
  return UnitaryMatrix(eig.eigenvectors() * phases.asDiagonal() *
                       eig.eigenvectors().adjoint());
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

NoiseEvent sample_noise_event(std::mt19937_64& rng, const NoisePolicy& policy,
                              CollectiveModel model) {
  auto draw = [&]() {
    if (policy.distribution == Distribution::Uniform) {
      return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
    }
    if (policy.sigma == 0.0) return 0.0;
    return std::normal_distribution<double>(0.0, policy.sigma)(rng);
  };
  NoiseEvent e;
  if (model == CollectiveModel::Scd) {
    e.phi_x = draw();
    e.phi_y = draw();
  }
  e.phi_z = draw();
  return e;
}

std::vector<std::size_t> noise_positions(Granularity granularity,
                                         std::size_t gate_count,
                                         std::span<const std::size_t> block_starts) {
  std::vector<std::size_t> out;
  switch (granularity) {
    case Granularity::PerElementaryGate:
      for (std::size_t p = 0; p <= gate_count; ++p) out.push_back(p);
      break;
    case Granularity::EndpointsOnly:
      out = {0, gate_count};
      break;
    case Granularity::PerLogicalBlock: {
      if (block_starts.empty() || block_starts.front() != 0) {
        throw std::invalid_argument("block boundaries must start at gate 0");
      }
      for (std::size_t b = 0; b < block_starts.size(); ++b) {
        if (block_starts[b] >= gate_count ||
            (b > 0 && block_starts[b] <= block_starts[b - 1])) {
          throw std::invalid_argument(
              "block boundaries must be strictly increasing gate offsets");
        }
      }
      out.assign(block_starts.begin(), block_starts.end());
      out.push_back(gate_count);
      break;
    }
  }
  return out;
}

RunReport noisy_run(const Circuit& circuit, const StateVector& input,
                    const StateVector& ideal_output, const NoisePolicy& policy,
                    CollectiveModel model,
                    std::span<const std::size_t> block_starts,
                    const SubspaceBasis* logical) {
  if (policy.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (policy.distribution == Distribution::Gaussian && !(policy.sigma >= 0.0)) {
    throw std::invalid_argument("gaussian sigma must be >= 0");
  }
  const int n = circuit.n_qubits();
  if (input.n_qubits() != n || ideal_output.n_qubits() != n) {
    throw std::invalid_argument("noisy_run: register size mismatch");
  }
  if (logical && logical->n_qubits() != n) {
    throw std::invalid_argument("noisy_run: logical basis register mismatch");
  }
  const auto positions = noise_positions(policy.granularity, circuit.size(),
                                         block_starts);
  const auto& gates = circuit.gates();

  RunReport report;
  report.policy = policy;
  report.trials = policy.trials;
  report.fidelities.reserve(static_cast<std::size_t>(policy.trials));
  report.leakages.reserve(static_cast<std::size_t>(policy.trials));

  ComplexVector amps;
  for (int trial = 0; trial < policy.trials; ++trial) {
    auto rng = trial_engine(policy.seed, static_cast<std::uint64_t>(trial));
    amps = input.amplitudes();
    std::span<Complex> buf(amps.data(), static_cast<std::size_t>(amps.size()));
    std::size_t next = 0;
    for (std::size_t g = 0; g <= gates.size(); ++g) {
      while (next < positions.size() && positions[next] == g) {
        apply_noise_in_place(buf, n, sample_noise_event(rng, policy, model));
        ++next;
      }
      if (g < gates.size()) apply_gate_in_place(buf, n, gates[g]);
    }
    const double f = std::norm(ideal_output.amplitudes().dot(amps));
    double leak = 0.0;
    if (logical) {
      const ComplexVector coeffs = logical->columns().adjoint() * amps;
      leak = (amps - logical->columns() * coeffs).norm();
    }
    report.fidelities.push_back(std::min(f, 1.0));
    report.leakages.push_back(leak);
  }

  const double count = static_cast<double>(policy.trials);
  double sum = 0.0;
  double leak_sum = 0.0;
  for (std::size_t t = 0; t < report.fidelities.size(); ++t) {
    sum += report.fidelities[t];
    leak_sum += report.leakages[t];
  }
  report.mean_fidelity = std::min(sum / count, 1.0);
  report.mean_leakage = leak_sum / count;
  report.min_fidelity =
      *std::min_element(report.fidelities.begin(), report.fidelities.end());
  double var = 0.0;
  for (double f : report.fidelities) {
    var += (f - report.mean_fidelity) * (f - report.mean_fidelity);
  }
  report.std_fidelity = std::sqrt(var / count);
  return report;
}

}  // namespace dfsqft
