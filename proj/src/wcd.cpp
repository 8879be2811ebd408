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

#include "dfsqft/wcd.hpp"

#include <stdexcept>
#include <string>

namespace dfsqft {

namespace {

void check_logical_count(int n) {
  if (n < 1 || n > kMaxWcdLogical) {
    throw std::out_of_range("WCD logical count " + std::to_string(n) +
                            " outside 1.." + std::to_string(kMaxWcdLogical));
  }
}

void check_logical_index(int k, int n) {
  if (k < 1 || k > n) {
    throw std::out_of_range("logical index " + std::to_string(k) +
                            " outside 1.." + std::to_string(n));
  }
}

// Physical basis index of the encoded string; logical bit s_t sets qubit 2t
// when 1, else qubit 2t-1.
std::uint64_t encoded_index(std::uint64_t logical, int n) {
  std::uint64_t index = 0;
  for (int t = 1; t <= n; ++t) {
    const bool one = (logical >> (t - 1)) & 1U;
    const int qubit = one ? 2 * t : 2 * t - 1;
    index |= std::uint64_t{1} << (qubit - 1);
  }
  return index;
}

}  // namespace

StateVector wcd_logical_state(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("empty logical bit string");
  const int n = static_cast<int>(bits.size());
  check_logical_count(n);
  std::uint64_t logical = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string("invalid logical bit '") + c + "'");
    }
    logical = (logical << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return StateVector::basis_state(2 * n, encoded_index(logical, n));
}

SubspaceBasis wcd_logical_basis(int n) {
  check_logical_count(n);
  std::vector<StateVector> states;
  const std::uint64_t count = std::uint64_t{1} << n;
  states.reserve(count);
  for (std::uint64_t l = 0; l < count; ++l) {
    states.push_back(StateVector::basis_state(2 * n, encoded_index(l, n)));
  }
  return SubspaceBasis(2 * n, std::move(states));
}

Circuit wcd_hadamard(int k, int n) {
  check_logical_count(n);
  check_logical_index(k, n);
  return from_product(2 * n, {Gate::cn(2 * k, 2 * k - 1), Gate::h(2 * k),
                              Gate::cn(2 * k, 2 * k - 1)});
}

Circuit wcd_phase(int i, int j, double theta, int n) {
  check_logical_count(n);
  check_logical_index(i, n);
  check_logical_index(j, n);
  if (i == j) {
    throw std::invalid_argument("logical phase needs distinct indices, got " +
                                std::to_string(i) + " twice");
  }
  const Gate cn_i = Gate::cn(2 * i, 2 * i - 1);
  const Gate cn_j = Gate::cn(2 * j, 2 * j - 1);
  return from_product(2 * n,
                      {cn_i, cn_j, Gate::p(2 * i, 2 * j, theta), cn_i, cn_j});
}

Circuit wcd_encoder_circuit(int n) {
  check_logical_count(n);
  std::vector<Gate> product;
  for (int t = 1; t <= n; ++t) product.push_back(Gate::cn(2 * t, 2 * t - 1));
  return from_product(2 * n, product);
}

GateFactory wcd_factory(int n) {
  check_logical_count(n);
  GateFactory f;
  f.n_physical = 2 * n;
  f.hadamard = [n](int k) { return wcd_hadamard(k, n); };
  f.phase = [n](int i, int j, double theta) { return wcd_phase(i, j, theta, n); };
  return f;
}

BlockedCircuit synth_qft_wcd_blocks(int n) {
  return synth_logical_qft_blocks(n, wcd_factory(n));
}

Circuit synth_qft_wcd(int n) { return synth_qft_wcd_blocks(n).circuit; }

}  // namespace dfsqft
