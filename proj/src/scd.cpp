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

#include "dfsqft/scd.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "json.hpp"

namespace dfsqft {

namespace {

constexpr Eigen::Index kBlockDim = 16;

void check_logical_count(int n, int max) {
  if (n < 1 || n > max) {
    throw std::out_of_range("SCD logical count " + std::to_string(n) +
                            " outside 1.." + std::to_string(max));
  }
}

void check_logical_index(int k, int n) {
  if (k < 1 || k > n) {
    throw std::out_of_range("logical index " + std::to_string(k) +
                            " outside 1.." + std::to_string(n));
  }
}

// kron(a, b) with a on the high-order qubits.
ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector ket(std::initializer_list<Complex> amps) {
  ComplexVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (auto a : amps) v(i++) = a;
  return v;
}

// |01> - |10>, written |q_high q_low>.
ComplexVector singlet_pair() { return ket({0.0, 1.0, -1.0, 0.0}); }

ComplexVector block_vector(std::uint64_t logical_bits, int n) {
  ComplexVector v = ket({1.0});
  for (int t = n; t >= 1; --t) {
    const bool one = (logical_bits >> (t - 1)) & 1U;
    v = kron(v, one ? scd_block_one() : scd_block_zero());
  }
  return v;
}

// Orthonormal basis of C^16 starting with |0~>, |1~>, completed by
// Gram-Schmidt over e_0 .. e_15 in index order.
std::vector<ComplexVector> completed_block_basis() {
  std::vector<ComplexVector> basis = {scd_block_zero(), scd_block_one()};
  for (Eigen::Index e = 0; e < kBlockDim && basis.size() < kBlockDim; ++e) {
    ComplexVector v = ComplexVector::Unit(kBlockDim, e);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : basis) v -= u.dot(v) * u;
    }
    const double norm = v.norm();
    if (norm > 1e-8) basis.push_back(v / norm);
  }
  return basis;
}

ComplexMatrix fallback_block_matrix() {
  const auto basis = completed_block_basis();
  std::vector<Eigen::Index> targets = {0, 8};
  for (Eigen::Index t = 1; t < kBlockDim; ++t) {
    if (t != 8) targets.push_back(t);
  }
  ComplexMatrix u = ComplexMatrix::Zero(kBlockDim, kBlockDim);
  for (std::size_t l = 0; l < basis.size(); ++l) {
    u.row(targets[l]) = basis[l].adjoint();
  }
  return u;
}

Gate cnot(int control, int target, const ScdConventions& conv) {
  return conv.swap_cnot_arguments ? Gate::cn(target, control)
                                  : Gate::cn(control, target);
}

double signed_angle(double a, const ScdConventions& conv) {
  return conv.negate_angles ? -a : a;
}

struct LogicalChecks {
  double hadamard = 0.0;
  double phase = 0.0;
  double leakage = 0.0;
  std::vector<ComplexMatrix> blocks;
};

constexpr double kCheckTheta1 = std::numbers::pi / 2;
constexpr double kCheckTheta2 = std::numbers::pi / 4;

// Logical H on n = 1, 2 and logical P on n = 2; the callables return the
// restriction of the physical construction to the encoded basis.
template <typename HadamardFn, typename PhaseFn>
LogicalChecks run_logical_checks(HadamardFn&& hadamard, PhaseFn&& phase) {
  LogicalChecks out;
  auto record = [&out](const Restriction& r, const ComplexMatrix& want,
                       double& slot) {
    slot = std::max(slot, max_abs_deviation(r.block, want));
    out.leakage = std::max(out.leakage, r.leakage);
    out.blocks.push_back(r.block);
  };
  record(hadamard(1, 1), hadamard_action(1, 1), out.hadamard);
  for (int k = 1; k <= 2; ++k) {
    record(hadamard(k, 2), hadamard_action(k, 2), out.hadamard);
  }
  record(phase(2, 1, kCheckTheta1), phase_action(2, 1, kCheckTheta1, 2),
         out.phase);
  record(phase(1, 2, kCheckTheta2), phase_action(1, 2, kCheckTheta2, 2),
         out.phase);
  return out;
}

ComplexMatrix physical_gate_matrix(const Gate& g, int n_qubits) {
  return circuit_unitary(Circuit(n_qubits, {g})).matrix();
}

}  // namespace

ScdAngles ScdAngles::standard() {
  const double a = std::asin(1.0 / std::sqrt(3.0));
  return {std::numbers::pi - a, -std::numbers::pi + a, -std::numbers::pi / 4};
}

std::string ScdConventions::label() const {
  std::string s = swap_cnot_arguments ? "cn-swapped" : "cn-as-printed";
  s += negate_angles ? "+angles-negated" : "+angles-as-printed";
  return s;
}

ComplexVector scd_block_zero() {
  const ComplexVector s = singlet_pair();
  return 0.5 * kron(s, s);
}

ComplexVector scd_block_one() {
  const ComplexVector s = singlet_pair();
  const ComplexVector zero = ket({1.0, 0.0});
  const ComplexVector one = ket({0.0, 1.0});
  return (1.0 / std::sqrt(12.0)) * kron(s, s) +
         (1.0 / std::sqrt(3.0)) * kron(kron(zero, s), one) -
         (1.0 / std::sqrt(3.0)) * kron(kron(one, s), zero);
}

StateVector scd_logical_state(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("empty logical bit string");
  const int n = static_cast<int>(bits.size());
  check_logical_count(n, kMaxScdStateLogical);
  std::uint64_t logical = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string("invalid logical bit '") + c + "'");
    }
    logical = (logical << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return StateVector(4 * n, block_vector(logical, n));
}

SubspaceBasis scd_logical_basis(int n) {
  check_logical_count(n, kMaxScdStateLogical);
  std::vector<StateVector> states;
  for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); ++l) {
    states.emplace_back(4 * n, block_vector(l, n));
  }
  return SubspaceBasis(4 * n, std::move(states));
}

Circuit scd_block_transform(int k, int n_logical, ScdConventions conv) {
  if (k < 1) throw std::out_of_range("block index must be >= 1");
  const int n = std::max(k, n_logical);
  check_logical_count(n, kMaxScdStateLogical);
  const ScdAngles a = ScdAngles::standard();
  const int q4 = 4 * k;
  const int q3 = 4 * k - 1;
  const int q2 = 4 * k - 2;
  const int q1 = 4 * k - 3;
  // Operator product as written; the rightmost factor acts first.
  return from_product(
      4 * n, {cnot(q4, q2, conv), cnot(q2, q1, conv), cnot(q2, q4, conv),
              Gate::r(q2, signed_angle(a.alpha, conv)),
              Gate::cr(q1, q2, signed_angle(a.beta1, conv)),
              Gate::cr(q2, q1, signed_angle(a.beta2, conv)),
              cnot(q2, q4, conv), cnot(q1, q3, conv), cnot(q1, q2, conv),
              cnot(q3, q4, conv), Gate::h(q1), Gate::h(q3),
              cnot(q1, q2, conv), cnot(q3, q4, conv)});
}

Circuit scd_transform_circuit(int n, ScdConventions conv) {
  check_logical_count(n, kMaxScdStateLogical);
  Circuit out(4 * n);
  for (int k = 1; k <= n; ++k) out.append(scd_block_transform(k, n, conv));
  return out;
}

UnitaryMatrix scd_transform_matrix(int n, TransformSource source,
                                   ScdConventions conv) {
  check_logical_count(n, kMaxScdLogical);
  if (source == TransformSource::Sequence) {
    return circuit_unitary(scd_transform_circuit(n, conv));
  }
  const ComplexMatrix block = fallback_block_matrix();
  ComplexMatrix u = block;
  for (int t = 2; t <= n; ++t) u = kron(block, u);
  return UnitaryMatrix(std::move(u));
}

Circuit scd_hadamard(int k, int n, ScdConventions conv) {
  check_logical_count(n, kMaxScdLogical);
  check_logical_index(k, n);
  const Circuit u = scd_block_transform(k, n, conv);
  Circuit out = u;
  out.add(Gate::h(4 * k));
  out.append(invert(u));
  return out;
}

Circuit scd_phase(int i, int j, double theta, int n, ScdConventions conv) {
  check_logical_count(n, kMaxScdLogical);
  check_logical_index(i, n);
  check_logical_index(j, n);
  if (i == j) {
    throw std::invalid_argument("logical phase needs distinct indices, got " +
                                std::to_string(i) + " twice");
  }
  const Circuit ui = scd_block_transform(i, n, conv);
  const Circuit uj = scd_block_transform(j, n, conv);
  Circuit out = uj;
  out.append(ui);
  out.add(Gate::p(4 * i, 4 * j, theta));
  out.append(invert(uj));
  out.append(invert(ui));
  return out;
}

GateFactory scd_factory(int n, ScdConventions conv) {
  check_logical_count(n, kMaxScdLogical);
  GateFactory f;
  f.n_physical = 4 * n;
  f.hadamard = [n, conv](int k) { return scd_hadamard(k, n, conv); };
  f.phase = [n, conv](int i, int j, double theta) {
    return scd_phase(i, j, theta, n, conv);
  };
  return f;
}

BlockedCircuit synth_qft_scd_blocks(int n) {
  check_logical_count(n, kMaxScdLogical);
  const ConventionReport& rep = shipped_convention_report();
  if (!rep.resolved) {
    throw ConventionError(
        "block-transform sequence failed every convention; only the fallback "
        "matrix is valid and it has no gate-level form");
  }
  return synth_logical_qft_blocks(n, scd_factory(n, *rep.resolved));
}

Circuit synth_qft_scd(int n) { return synth_qft_scd_blocks(n).circuit; }

ConventionReport resolve_scd_conventions(const BlockTransformBuilder& builder) {
  ConventionReport report;

  // Fallback route, evaluated on matrices.
  const UnitaryMatrix fb1 = scd_transform_matrix(1, TransformSource::Fallback);
  const UnitaryMatrix fb2 = scd_transform_matrix(2, TransformSource::Fallback);
  const auto fallback = [&](int n) -> const UnitaryMatrix& {
    return n == 1 ? fb1 : fb2;
  };
  const LogicalChecks fb = run_logical_checks(
      [&](int k, int n) {
        const UnitaryMatrix& u = fallback(n);
        const ComplexMatrix h = physical_gate_matrix(Gate::h(4 * k), 4 * n);
        return restrict_to(UnitaryMatrix(u.matrix().adjoint() * h * u.matrix()),
                           scd_logical_basis(n));
      },
      [&](int i, int j, double theta) {
        const UnitaryMatrix& u = fallback(2);
        const ComplexMatrix p =
            physical_gate_matrix(Gate::p(4 * i, 4 * j, theta), 8);
        return restrict_to(UnitaryMatrix(u.matrix().adjoint() * p * u.matrix()),
                           scd_logical_basis(2));
      });
  report.fallback_hadamard_deviation = fb.hadamard;
  report.fallback_phase_deviation = fb.phase;
  report.fallback_leakage = fb.leakage;

  std::optional<LogicalChecks> resolved_checks;
  // As printed first.
  const std::vector<ScdConventions> order = {
      {false, false}, {true, false}, {false, true}, {true, true}};
  for (const auto& conv : order) {
    const LogicalChecks seq = run_logical_checks(
        [&](int k, int n) {
          const Circuit u = builder(k, n, conv);
          Circuit c = u;
          c.add(Gate::h(4 * k));
          c.append(invert(u));
          return restrict_to(c, scd_logical_basis(n));
        },
        [&](int i, int j, double theta) {
          const Circuit ui = builder(i, 2, conv);
          const Circuit uj = builder(j, 2, conv);
          Circuit c = uj;
          c.append(ui);
          c.add(Gate::p(4 * i, 4 * j, theta));
          c.append(invert(uj));
          c.append(invert(ui));
          return restrict_to(c, scd_logical_basis(2));
        });
    ConventionAttempt attempt{conv, seq.hadamard, seq.phase, seq.leakage, false};
    attempt.passed = seq.hadamard < kTolerance && seq.phase < kTolerance &&
                     seq.leakage < kTolerance;
    report.attempts.push_back(attempt);
    if (attempt.passed) {
      report.resolved = conv;
      resolved_checks = seq;
      break;
    }
  }

  if (resolved_checks) {
    double gap = 0.0;
    for (std::size_t b = 0; b < fb.blocks.size(); ++b) {
      gap = std::max(gap, max_abs_deviation(resolved_checks->blocks[b],
                                            fb.blocks[b]));
    }
    report.sequence_fallback_gap = gap;
  } else {
    report.sequence_fallback_gap = std::numeric_limits<double>::infinity();
  }
  return report;
}

const ConventionReport& shipped_convention_report() {
  static const ConventionReport report = resolve_scd_conventions();
  return report;
}

std::string convention_report_json(const ConventionReport& report) {
  using json = nlohmann::ordered_json;
  auto finite_or_null = [](double v) -> json {
    return std::isfinite(v) ? json(v) : json(nullptr);
  };
  json attempts = json::array();
  for (const auto& a : report.attempts) {
    attempts.push_back({{"swap_cnot_arguments", a.conventions.swap_cnot_arguments},
                        {"negate_angles", a.conventions.negate_angles},
                        {"label", a.conventions.label()},
                        {"hadamard_deviation", a.hadamard_deviation},
                        {"phase_deviation", a.phase_deviation},
                        {"leakage", a.leakage},
                        {"passed", a.passed}});
  }
  json doc = {
      {"schema", "dfsqft/1"},
      {"kind", "scd_convention_report"},
      {"tolerance", kTolerance},
      {"attempts", attempts},
      {"resolved", report.resolved ? json(report.resolved->label()) : json(nullptr)},
      {"erratum", report.erratum()},
      {"normative_transform",
       report.normative() == TransformSource::Sequence ? "sequence" : "fallback"},
      {"fallback",
       {{"hadamard_deviation", report.fallback_hadamard_deviation},
        {"phase_deviation", report.fallback_phase_deviation},
        {"leakage", report.fallback_leakage}}},
      {"sequence_fallback_gap", finite_or_null(report.sequence_fallback_gap)},
  };
  return doc.dump(2);
}

}  // namespace dfsqft
