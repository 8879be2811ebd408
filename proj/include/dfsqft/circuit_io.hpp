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

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dfsqft/gate.hpp"

namespace dfsqft {

/// Malformed circuit text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Text format, one statement per line:
//
//   qubits N            (mandatory first line)
//   H q | R q a | CN c t | P c t a | CR c t a
//   # comment
//
// Angles are "pi", "pi/N", "-pi/N" or a decimal literal.

Circuit parse_circuit(std::string_view text);
std::string print_circuit(const Circuit& circuit);

double parse_angle(std::string_view text);
/// "pi", "pi/2^k", "-pi/2^k" when the value is exactly one of those doubles,
/// otherwise a 17-significant-digit decimal.
std::string format_angle(double angle);

Circuit read_circuit_file(const std::filesystem::path& path);
void write_circuit_file(const std::filesystem::path& path,
                        const Circuit& circuit);

}  // namespace dfsqft
