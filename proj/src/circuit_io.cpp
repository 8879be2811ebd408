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

#include "dfsqft/circuit_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace dfsqft {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

int parse_qubit(std::string_view s) {
  const auto v = parse_int(s);
  if (!v || *v < 1 || *v > kMaxQubits) {
    throw std::invalid_argument("invalid qubit index '" + std::string(s) + "'");
  }
  return static_cast<int>(*v);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

double parse_angle(std::string_view text) {
  bool negative = false;
  std::string_view s = text;
  if (s.starts_with("-pi/")) {
    negative = true;
    s.remove_prefix(1);
  }
  if (s == "pi") return std::numbers::pi;
  if (s.starts_with("pi/")) {
    const auto den = parse_int(s.substr(3));
    if (!den || *den < 1) {
      throw std::invalid_argument("invalid angle '" + std::string(text) + "'");
    }
    const double v = std::numbers::pi / static_cast<double>(*den);
    return negative ? -v : v;
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("invalid angle '" + std::string(text) + "'");
  }
  return v;
}

std::string format_angle(double angle) {
  if (angle == std::numbers::pi) return "pi";
  const double magnitude = angle < 0 ? -angle : angle;
  for (int k = 1; k < 63; ++k) {
    const auto den = std::uint64_t{1} << k;
    if (magnitude == std::numbers::pi / static_cast<double>(den)) {
      return (angle < 0 ? "-pi/" : "pi/") + std::to_string(den);
    }
  }
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), angle,
                                 std::chars_format::general, 17);
  (void)ec;
  return std::string(buf.data(), ptr);
}

Circuit parse_circuit(std::string_view text) {
  std::size_t line_no = 0;
  std::optional<Circuit> circuit;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const auto tokens = split_tokens(line);
    if (!circuit) {
      if (tokens.size() != 2 || tokens[0] != "qubits") {
        throw ParseError(line_no, "expected header 'qubits N'");
      }
      const auto n = parse_int(tokens[1]);
      if (!n || *n < 1 || *n > kMaxQubits) {
        throw ParseError(line_no, "register size must be in 1.." +
                                      std::to_string(kMaxQubits));
      }
      circuit.emplace(static_cast<int>(*n));
      continue;
    }
    if (tokens.empty() || tokens[0].starts_with('#')) continue;

    const auto kind = gate_kind_from_mnemonic(tokens[0]);
    if (!kind) {
      throw ParseError(line_no,
                       "unknown mnemonic '" + std::string(tokens[0]) + "'");
    }
    const std::size_t expected =
        1 + static_cast<std::size_t>(arity(*kind)) + (takes_angle(*kind) ? 1 : 0);
    if (tokens.size() != expected) {
      throw ParseError(line_no, std::string(mnemonic(*kind)) + " expects " +
                                    std::to_string(expected - 1) +
                                    " operand(s), got " +
                                    std::to_string(tokens.size() - 1));
    }
    try {
      std::vector<int> qubits;
      for (int q = 0; q < arity(*kind); ++q) {
        qubits.push_back(parse_qubit(tokens[1 + static_cast<std::size_t>(q)]));
      }
      std::optional<double> angle;
      if (takes_angle(*kind)) angle = parse_angle(tokens.back());
      circuit->add(Gate::make(*kind, std::move(qubits), angle));
    } catch (const std::logic_error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(1, "empty input, expected header 'qubits N'");
  return *std::move(circuit);
}

std::string print_circuit(const Circuit& circuit) {
  std::string out = "qubits " + std::to_string(circuit.n_qubits()) + "\n";
  for (const auto& g : circuit) {
    out += mnemonic(g.kind());
    if (g.arity() == 2) {
      out += ' ' + std::to_string(g.control());
    }
    out += ' ' + std::to_string(g.target());
    if (g.has_angle()) out += ' ' + format_angle(g.angle());
    out += '\n';
  }
  return out;
}

Circuit read_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_circuit(ss.str());
}

void write_circuit_file(const std::filesystem::path& path,
                        const Circuit& circuit) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << print_circuit(circuit);
}

}  // namespace dfsqft
