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

#include "dfsqft/bench/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dfsqft/circuit_io.hpp"
#include "dfsqft/wcd.hpp"

namespace dfsqft::bench {

namespace {

constexpr std::array<double, 3> kPhaseAngles = {
    std::numbers::pi / 2, std::numbers::pi / 4, std::numbers::pi / 8};

// Registers above this size are compared on random states instead of
// materializing the full unitary.
constexpr int kFullMatrixQubits = 8;
constexpr int kProbeStates = 8;

class CheckList {
 public:
  void add(std::string name, double tolerance, double deviation) {
    checks_.push_back({std::move(name), tolerance, deviation,
                       std::isfinite(deviation) && deviation <= tolerance});
  }
  void add_exact(std::string name, bool ok) {
    checks_.push_back({std::move(name), 0.0, ok ? 0.0 : 1.0, ok});
  }
  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::string pair_name(int i, int j) {
  return std::to_string(i) + "," + std::to_string(j);
}

// Max deviation between two circuits, either as full matrices or, on large
// registers, on fixed pseudo-random probe states.
double circuit_difference(const Circuit& a, const Circuit& b) {
  const int n = a.n_qubits();
  if (n <= kFullMatrixQubits) {
    return max_abs_deviation(circuit_unitary(a).matrix(),
                             circuit_unitary(b).matrix());
  }
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  double worst = 0.0;
  for (int s = 0; s < kProbeStates; ++s) {
    ComplexVector v(Eigen::Index{1} << n);
    for (auto& x : v) x = Complex(normal(rng), normal(rng));
    const StateVector psi = StateVector::normalized(n, v);
    worst = std::max(worst, max_abs_deviation(apply_circuit(psi, a).amplitudes(),
                                              apply_circuit(psi, b).amplitudes()));
  }
  return worst;
}

double max_annihilation(const SubspaceBasis& basis, bool all_axes) {
  const int n = basis.n_qubits();
  double worst = 0.0;
  std::vector<Axis> axes = {Axis::Z};
  if (all_axes) axes = {Axis::X, Axis::Y, Axis::Z};
  for (Axis axis : axes) {
    const ComplexMatrix s = collective_operator(n, axis);
    worst = std::max(worst, (s * basis.columns()).colwise().norm().maxCoeff());
  }
  return worst;
}

void check_plain(int n, CheckList& out) {
  const Circuit c = synth_qft(n);
  out.add_exact("qft.gate_count",
                c.count(GateKind::H) == static_cast<std::size_t>(n) &&
                    c.count(GateKind::P) ==
                        static_cast<std::size_t>(n * (n - 1) / 2));
  const UnitaryMatrix u = circuit_unitary(c);
  out.add("qft.unitarity", kTolerance, u.unitarity_deviation());
  try {
    const OutputOrder q = resolve_output_order(n);
    out.add_exact("qft.output_order_resolved", true);
    const ComplexMatrix want = q.matrix() * dft_matrix(n).matrix();
    out.add("qft.matches_dft", kTolerance, phase_aligned_deviation(u.matrix(), want));
    out.add("qft.global_phase_overlap", kTolerance,
            1.0 - global_phase_overlap(u.matrix(), want));
  } catch (const ConventionError&) {
    out.add_exact("qft.output_order_resolved", false);
  }
  out.add_exact("qft.text_round_trip", parse_circuit(print_circuit(c)) == c);
  if (n == 1) {
    out.add("qft1.equals_hadamard", kTolerance,
            max_abs_deviation(u.matrix(), hadamard_action(1, 1)));
  }
}

void check_wcd(int n, CheckList& out) {
  const SubspaceBasis basis = wcd_logical_basis(n);
  if (2 * n <= kMaxBruteForceQubits) {
    out.add("wcd.states_in_sz_zero_sector", kTolerance,
            max_annihilation(basis, false));
  }
  for (int k = 1; k <= n; ++k) {
    const Restriction r = restrict_to(wcd_hadamard(k, n), basis);
    const std::string name = "wcd.hadamard." + std::to_string(k);
    out.add(name, kTolerance, max_abs_deviation(r.block, hadamard_action(k, n)));
    out.add(name + ".leakage", kTolerance, r.leakage);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      double dev = 0.0;
      double leak = 0.0;
      for (double theta : kPhaseAngles) {
        const Restriction r = restrict_to(wcd_phase(i, j, theta, n), basis);
        dev = std::max(dev, max_abs_deviation(r.block, phase_action(i, j, theta, n)));
        leak = std::max(leak, r.leakage);
      }
      const std::string name = "wcd.phase." + pair_name(i, j);
      out.add(name, kTolerance, dev);
      out.add(name + ".leakage", kTolerance, leak);
    }
  }
  const Circuit u = wcd_encoder_circuit(n);
  const Circuit u_inv = invert(u);
  for (int k = 1; k <= n; ++k) {
    Circuit conj = u;
    conj.add(Gate::h(2 * k)).append(u_inv);
    out.add("wcd.conjugation.hadamard." + std::to_string(k), kTolerance,
            circuit_difference(conj, wcd_hadamard(k, n)));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Circuit conj = u;
      conj.add(Gate::p(2 * i, 2 * j, std::numbers::pi / 4)).append(u_inv);
      out.add("wcd.conjugation.phase." + pair_name(i, j), kTolerance,
              circuit_difference(conj, wcd_phase(i, j, std::numbers::pi / 4, n)));
    }
  }
  const Restriction q = restrict_to(synth_qft_wcd(n), basis);
  out.add("wcd.qft.logical_dft", kTolerance,
          phase_aligned_deviation(q.block, expected_qft_matrix(n)));
  out.add("wcd.qft.leakage", kTolerance, q.leakage);
  if (n <= 3) {
    out.add("wcd.qft.matches_plain_qft", kTolerance,
            max_abs_deviation(q.block, circuit_unitary(synth_qft(n)).matrix()));
  }
}

void check_scd(int n, CheckList& out, std::optional<ConventionReport>& conv) {
  const SubspaceBasis basis = scd_logical_basis(n);
  out.add("scd.states_annihilated", kTolerance, max_annihilation(basis, true));

  conv = shipped_convention_report();
  // Either a resolved convention or an erratum report counts; silence does not.
  out.add_exact("scd.convention_report_emitted", !conv->attempts.empty());
  out.add("scd.fallback.hadamard", kTolerance, conv->fallback_hadamard_deviation);
  out.add("scd.fallback.phase", kTolerance, conv->fallback_phase_deviation);
  out.add("scd.fallback.leakage", kTolerance, conv->fallback_leakage);
  // Without a resolved convention there is no gate-level SCD circuit.
  out.add_exact("scd.sequence_resolved", conv->resolved.has_value());
  if (!conv->resolved) return;

  const ScdConventions c = *conv->resolved;
  out.add("scd.sequence_vs_fallback", kTolerance, conv->sequence_fallback_gap);
  out.add_exact("scd.gate_counts",
                scd_block_transform(1, n, c).size() == 14 &&
                    scd_hadamard(1, n, c).size() == 29 &&
                    (n < 2 || scd_phase(2, 1, 0.0, n, c).size() == 57));
  for (int k = 1; k <= n; ++k) {
    const Restriction r = restrict_to(scd_hadamard(k, n, c), basis);
    const std::string name = "scd.hadamard." + std::to_string(k);
    out.add(name, kTolerance, max_abs_deviation(r.block, hadamard_action(k, n)));
    out.add(name + ".leakage", kTolerance, r.leakage);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      double dev = 0.0;
      double leak = 0.0;
      for (double theta : kPhaseAngles) {
        const Restriction r = restrict_to(scd_phase(i, j, theta, n, c), basis);
        dev = std::max(dev, max_abs_deviation(r.block, phase_action(i, j, theta, n)));
        leak = std::max(leak, r.leakage);
      }
      const std::string name = "scd.phase." + pair_name(i, j);
      out.add(name, kTolerance, dev);
      out.add(name + ".leakage", kTolerance, leak);
    }
  }
  const Restriction q = restrict_to(synth_qft_scd(n), basis);
  out.add("scd.qft.logical_dft", kTolerance,
          phase_aligned_deviation(q.block, expected_qft_matrix(n)));
  out.add("scd.qft.leakage", kTolerance, q.leakage);
}

void check_range(Encoding e, int n) {
  const SizeRange r = supported_range(e);
  if (n < r.min || n > r.max) {
    throw std::out_of_range(to_string(e) + ": n = " + std::to_string(n) +
                            " outside " + std::to_string(r.min) + ".." +
                            std::to_string(r.max));
  }
}

std::uint64_t parse_bits(const std::string& bits, int n) {
  if (bits.empty()) return 0;
  if (static_cast<int>(bits.size()) != n) {
    throw std::invalid_argument("input bits must have length " + std::to_string(n));
  }
  std::uint64_t l = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("input bits must be 0/1");
    l = (l << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return l;
}

// sum_i coeffs(i) |basis_i>
StateVector combine(const SubspaceBasis& basis, const ComplexVector& coeffs) {
  return StateVector::normalized(basis.n_qubits(), basis.columns() * coeffs);
}

}  // namespace

std::string to_string(Encoding e) {
  switch (e) {
    case Encoding::Plain:
      return "plain";
    case Encoding::Wcd:
      return "wcd";
    case Encoding::Scd:
      return "scd";
  }
  return "unknown";
}

SizeRange supported_range(Encoding e) {
  switch (e) {
    case Encoding::Plain:
      return {1, 8};
    case Encoding::Wcd:
      return {1, kMaxWcdLogical};
    case Encoding::Scd:
      return {1, kMaxScdLogical};
  }
  return {1, 1};
}

BlockedCircuit synthesize(Encoding e, int n) {
  check_range(e, n);
  switch (e) {
    case Encoding::Plain:
      return synth_logical_qft_blocks(n, plain_factory(n));
    case Encoding::Wcd:
      return synth_qft_wcd_blocks(n);
    case Encoding::Scd:
      return synth_qft_scd_blocks(n);
  }
  throw std::logic_error("unreachable encoding");
}

bool Verification::all_passed() const { return first_failure() == nullptr; }

const Check* Verification::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

double Verification::max_deviation() const {
  double worst = 0.0;
  for (const auto& c : checks) worst = std::max(worst, c.deviation);
  return worst;
}

Verification verify_encoding(Encoding e, int n) {
  check_range(e, n);
  CheckList list;
  Verification v;
  switch (e) {
    case Encoding::Plain:
      check_plain(n, list);
      break;
    case Encoding::Wcd:
      check_wcd(n, list);
      break;
    case Encoding::Scd:
      check_scd(n, list, v.conventions);
      break;
  }
  v.checks = list.take();
  return v;
}

NoiseBenchResult run_noise_bench(const NoiseBenchConfig& config) {
  if (config.encoding == Encoding::Plain) {
    throw std::invalid_argument("noise-bench compares an encoded arm; use wcd or scd");
  }
  check_range(config.encoding, config.n);
  const int n = config.n;
  const std::uint64_t l = parse_bits(config.input_bits, n);
  const ComplexMatrix target = expected_qft_matrix(n);
  const CollectiveModel model = config.encoding == Encoding::Wcd
                                    ? CollectiveModel::Wcd
                                    : CollectiveModel::Scd;
  const auto col = static_cast<Eigen::Index>(l);

  NoiseBenchResult result;
  {
    const BlockedCircuit c = synthesize(config.encoding, n);
    const SubspaceBasis basis = config.encoding == Encoding::Wcd
                                    ? wcd_logical_basis(n)
                                    : scd_logical_basis(n);
    const StateVector input = basis[l];
    const StateVector ideal = combine(basis, target.col(col));
    result.encoded = noisy_run(c.circuit, input, ideal, config.policy, model,
                               c.block_starts, &basis);
  }
  {
    const BlockedCircuit c = synth_logical_qft_blocks(n, plain_factory(n));
    const StateVector input = StateVector::basis_state(n, l);
    const StateVector ideal = StateVector::normalized(n, target.col(col));
    result.unencoded =
        noisy_run(c.circuit, input, ideal, config.policy, model, c.block_starts);
  }
  return result;
}

std::vector<DfsTableRow> dfs_table(CollectiveModel model, int n_max) {
  if (n_max < 1 || n_max > kMaxBruteForceQubits) {
    throw std::out_of_range("n_max must be in 1.." +
                            std::to_string(kMaxBruteForceQubits));
  }
  std::array<int, 3> r{};
  for (int m = 1; m <= 3; ++m) r[static_cast<std::size_t>(m - 1)] = min_physical_qubits(m, model);
  std::vector<DfsTableRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    DfsTableRow row;
    row.n = n;
    row.max_dim = max_dfs_dimension(n, model);
    row.max_dim_bruteforce = dfs_report(n, model).max_dim;
    if (row.max_dim >= 1) row.eta = eta_max(n, model);
    row.r = r;
    row.agree = row.max_dim == row.max_dim_bruteforce;
    rows.push_back(row);
  }
  return rows;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

std::string dfs_table_csv(const std::vector<DfsTableRow>& rows) {
  std::string out =
      "n,max_dim,max_dim_bruteforce,eta_max,eta_max_fraction,r_m1,r_m2,r_m3,"
      "agree\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + ',' + std::to_string(row.max_dim) + ',' +
           std::to_string(row.max_dim_bruteforce) + ',';
    if (row.eta) {
      out += format_double(row.eta->value()) + ',' + to_string(*row.eta);
    } else {
      out += ',';
    }
    for (int r : row.r) out += ',' + std::to_string(r);
    out += row.agree ? ",true\n" : ",false\n";
  }
  return out;
}

}  // namespace dfsqft::bench
