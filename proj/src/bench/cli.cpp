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

#include "dfsqft/bench/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <stdexcept>

#include "CLI11.hpp"
#include "dfsqft/bench/verify.hpp"
#include "dfsqft/circuit_io.hpp"
#include "json.hpp"

namespace dfsqft::bench {

namespace {

using json = nlohmann::ordered_json;

// Thrown for failures that map to exit code 1.
class RunFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string encoding;
  int n = 0;
  std::string out;
  std::uint64_t seed = 0;
  int trials = 200;
  std::string policy = "block";
  std::string format;
  std::string distribution = "uniform";
  double sigma = 0.0;
  std::string input;
  std::string csv;
  std::string config;
};

const std::map<std::string, Granularity> kPolicies = {
    {"elementary", Granularity::PerElementaryGate},
    {"block", Granularity::PerLogicalBlock},
    {"endpoints", Granularity::EndpointsOnly}};

const std::map<std::string, Encoding> kEncodings = {
    {"plain", Encoding::Plain}, {"wcd", Encoding::Wcd}, {"scd", Encoding::Scd}};

json resolved_config(const Options& o) {
  json c = {{"command", o.command}, {"seed", o.seed}, {"format", o.format}};
  if (!o.out.empty()) c["out"] = o.out;
  if (!o.config.empty()) c["config"] = o.config;
  if (o.command == "dfs-table") {
    c["model"] = o.encoding;
    c["n_max"] = o.n;
  } else {
    c["encoding"] = o.encoding;
    c["n"] = o.n;
  }
  if (o.command == "noise-bench") {
    c["trials"] = o.trials;
    c["policy"] = o.policy;
    c["distribution"] = o.distribution;
    c["sigma"] = o.sigma;
    c["input"] = o.input.empty() ? std::string(static_cast<std::size_t>(o.n), '0')
                                 : o.input;
    if (!o.csv.empty()) c["csv"] = o.csv;
  }
  return c;
}

json report_header(const Options& o, std::string_view kind, double seconds) {
  return {{"schema", "dfsqft/1"},
          {"kind", kind},
          {"version", tool_version()},
          {"config", resolved_config(o)},
          {"seed", o.seed},
          {"duration_s", seconds}};
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    throw RunFailure("cannot write " + path);
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_synth(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const BlockedCircuit c = synthesize(kEncodings.at(o.encoding), o.n);
  const std::string text = print_circuit(c.circuit);
  if (o.out.empty()) {
    out << text;
    return kExitOk;
  }
  write_text(o.out, text, out);
  json doc = report_header(o, "synth", seconds_since(start));
  doc["n_physical"] = c.circuit.n_qubits();
  doc["gate_count"] = c.circuit.size();
  doc["logical_blocks"] = c.block_starts.size();
  out << doc.dump(2) << '\n';
  return kExitOk;
}

std::string checks_csv(const Verification& v) {
  std::string s = "name,tolerance,deviation,passed\n";
  for (const auto& c : v.checks) {
    s += c.name + ',' + format_double(c.tolerance) + ',' +
         format_double(c.deviation) + (c.passed ? ",true\n" : ",false\n");
  }
  return s;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Verification v = verify_encoding(kEncodings.at(o.encoding), o.n);
  if (o.format == "csv") {
    write_text(o.out, checks_csv(v), out);
  } else {
    json doc = report_header(o, "verify", seconds_since(start));
    json checks = json::array();
    for (const auto& c : v.checks) {
      checks.push_back({{"name", c.name},
                        {"tolerance", c.tolerance},
                        {"deviation", c.deviation},
                        {"passed", c.passed}});
    }
    doc["passed"] = v.all_passed();
    doc["max_deviation"] = v.max_deviation();
    doc["checks"] = checks;
    if (v.conventions) {
      doc["conventions"] = json::parse(convention_report_json(*v.conventions));
    }
    write_text(o.out, doc.dump(2) + '\n', out);
  }
  if (const Check* f = v.first_failure()) {
    err << "verify: check " << f->name << " failed: deviation "
        << format_double(f->deviation) << " > tolerance "
        << format_double(f->tolerance) << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

std::string trials_csv(const NoiseBenchResult& r) {
  std::string s = "arm,trial,fidelity,leakage\n";
  auto rows = [&s](const char* arm, const RunReport& rep) {
    for (std::size_t t = 0; t < rep.fidelities.size(); ++t) {
      s += std::string(arm) + ',' + std::to_string(t) + ',' +
           format_double(rep.fidelities[t]) + ',' + format_double(rep.leakages[t]) +
           '\n';
    }
  };
  rows("encoded", r.encoded);
  rows("unencoded", r.unencoded);
  return s;
}

json run_report_json(const RunReport& r) {
  return {{"mean_fidelity", r.mean_fidelity},
          {"min_fidelity", r.min_fidelity},
          {"std_fidelity", r.std_fidelity},
          {"mean_leakage", r.mean_leakage},
          {"trials", r.trials}};
}

int cmd_noise_bench(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  NoiseBenchConfig cfg;
  cfg.encoding = kEncodings.at(o.encoding);
  cfg.n = o.n;
  cfg.input_bits = o.input;
  cfg.policy.granularity = kPolicies.at(o.policy);
  cfg.policy.distribution =
      o.distribution == "gaussian" ? Distribution::Gaussian : Distribution::Uniform;
  cfg.policy.sigma = o.sigma;
  cfg.policy.trials = o.trials;
  cfg.policy.seed = o.seed;
  const NoiseBenchResult r = run_noise_bench(cfg);
  const std::string csv = trials_csv(r);
  if (!o.csv.empty()) write_text(o.csv, csv, out);
  if (o.format == "csv") {
    write_text(o.out, csv, out);
    return kExitOk;
  }
  json doc = report_header(o, "noise_bench", seconds_since(start));
  doc["model"] = cfg.encoding == Encoding::Wcd ? "wcd" : "scd";
  doc["policy"] = {{"granularity", to_string(cfg.policy.granularity)},
                   {"distribution", to_string(cfg.policy.distribution)},
                   {"sigma", cfg.policy.sigma},
                   {"trials", cfg.policy.trials},
                   {"seed", cfg.policy.seed}};
  doc["encoded"] = run_report_json(r.encoded);
  doc["unencoded"] = run_report_json(r.unencoded);
  write_text(o.out, doc.dump(2) + '\n', out);
  return kExitOk;
}

int cmd_dfs_table(const Options& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const CollectiveModel model =
      o.encoding == "wcd" ? CollectiveModel::Wcd : CollectiveModel::Scd;
  const auto rows = dfs_table(model, o.n);
  if (o.format == "json") {
    json doc = report_header(o, "dfs_table", seconds_since(start));
    json arr = json::array();
    for (const auto& row : rows) {
      json j = {{"n", row.n},
                {"max_dim", row.max_dim},
                {"max_dim_bruteforce", row.max_dim_bruteforce},
                {"r", row.r},
                {"agree", row.agree}};
      j["eta_max"] = row.eta ? json(row.eta->value()) : json(nullptr);
      j["eta_max_fraction"] = row.eta ? json(to_string(*row.eta)) : json(nullptr);
      arr.push_back(j);
    }
    doc["rows"] = arr;
    write_text(o.out, doc.dump(2) + '\n', out);
  } else {
    write_text(o.out, dfs_table_csv(rows), out);
  }
  for (const auto& row : rows) {
    if (!row.agree) {
      err << "dfs-table: n = " << row.n << ": closed form " << row.max_dim
          << " != brute force " << row.max_dim_bruteforce << '\n';
      return kExitFailure;
    }
  }
  return kExitOk;
}

}  // namespace

std::string tool_version() { return DFSQFT_VERSION; }

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Decoherence-free QFT synthesis, verification and noise benchmarks",
               "dfsqft"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "File of key=value lines; flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  app.add_option("--out", o.out, "Output path (default: stdout)");
  app.add_option("--seed", o.seed, "64-bit noise seed")->envname("DFSQFT_SEED");
  app.add_option("--trials", o.trials, "Noise trials per arm")
      ->check(CLI::PositiveNumber);
  app.add_option("--policy", o.policy, "Where noise strikes")
      ->check(CLI::IsMember({"elementary", "block", "endpoints"}));
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--distribution", o.distribution, "Noise angle distribution")
      ->check(CLI::IsMember({"uniform", "gaussian"}));
  app.add_option("--sigma", o.sigma, "Standard deviation for gaussian noise")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--input", o.input, "Logical input bits, qubit n first");
  app.add_option("--csv", o.csv, "Also write per-trial CSV to this path");

  const auto encodings = CLI::IsMember({"plain", "wcd", "scd"});
  auto* synth = app.add_subcommand("synth", "Write a QFT circuit in text form");
  auto* verify = app.add_subcommand("verify", "Run the invariant checks");
  auto* bench = app.add_subcommand("noise-bench", "Encoded vs plain QFT under noise");
  for (auto* sub : {synth, verify, bench}) {
    sub->add_option("encoding", o.encoding, "plain, wcd or scd")
        ->required()
        ->check(encodings);
    sub->add_option("n", o.n, "Logical qubits")->required();
  }
  auto* table = app.add_subcommand("dfs-table", "DFS dimension and efficiency table");
  table->add_option("model", o.encoding, "wcd or scd")
      ->required()
      ->check(CLI::IsMember({"wcd", "scd"}));
  table->add_option("n_max", o.n, "Largest register size")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  o.command = app.get_subcommands().front()->get_name();
  if (o.config.empty() && app.get_config_ptr()->count() > 0) {
    o.config = app.get_config_ptr()->as<std::string>();
  }
  if (o.format.empty()) o.format = o.command == "dfs-table" ? "csv" : "json";

  try {
    if (o.command == "synth") return cmd_synth(o, out);
    if (o.command == "verify") return cmd_verify(o, out, err);
    if (o.command == "noise-bench") return cmd_noise_bench(o, out);
    return cmd_dfs_table(o, out, err);
  } catch (const std::invalid_argument& e) {
    err << o.command << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << o.command << ": " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace dfsqft::bench
