// Copyright 2026 The toystab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "toystab/toystab.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParseError = 1;
constexpr int kExitRuntimeError = 2;
constexpr int kExitAssertionFailure = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw toystab::Error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

toystab::SimpleGraph parse_edges(const std::string& spec) {
  // "1-2,2-3" with 1-based vertices; the vertex count is the largest label.
  std::vector<std::pair<size_t, size_t>> edges;
  size_t max_vertex = 0;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t dash = item.find('-');
    if (dash == std::string::npos) {
      throw toystab::Error("bad edge \"" + item + "\" (expected A-B)");
    }
    size_t a = std::stoull(item.substr(0, dash));
    size_t b = std::stoull(item.substr(dash + 1));
    if (a < 1 || b < 1) {
      throw toystab::Error("vertices are 1-based");
    }
    edges.push_back({a - 1, b - 1});
    max_vertex = std::max({max_vertex, a, b});
  }
  toystab::SimpleGraph g(max_vertex);
  for (auto [a, b] : edges) {
    g.add_edge(a, b);
  }
  return g;
}

int run_command(const std::string& file, std::optional<uint64_t> seed,
                bool trace) {
  std::string source = read_file(file);
  toystab::Program program;
  try {
    program = toystab::parse_program(source);
  } catch (const toystab::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  }
  try {
    toystab::RunOptions opts;
    opts.record_states = trace;
    toystab::Trace result = toystab::run(program, seed, opts);
    std::cout << toystab::render_output(program, result, trace);
  } catch (const toystab::RunError& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

int demo_command(const std::string& name, const std::string& edges,
                 std::optional<size_t> measure_z,
                 std::optional<uint64_t> seed) {
  if (name == "dense-coding") {
    auto report = toystab::demo_dense_coding();
    std::cout << report.text();
    return report.ok ? kExitOk : kExitAssertionFailure;
  }
  if (name == "mermin-peres") {
    auto report = toystab::demo_mermin_peres();
    std::cout << report.text();
    return report.ok ? kExitOk : kExitAssertionFailure;
  }
  if (name == "nlwe") {
    auto report = toystab::demo_nlwe();
    std::cout << report.text();
    return report.ok ? kExitOk : kExitAssertionFailure;
  }
  if (name == "graph") {
    if (edges.empty()) {
      std::cerr << "demo graph requires --edges\n";
      return kExitRuntimeError;
    }
    toystab::SimpleGraph g = parse_edges(edges);
    std::optional<size_t> vertex;
    if (measure_z) {
      if (*measure_z < 1 || *measure_z > g.num_vertices()) {
        std::cerr << "--measure-z vertex out of range\n";
        return kExitRuntimeError;
      }
      vertex = *measure_z - 1;
    }
    auto report = toystab::demo_graph(g, vertex, seed);
    std::cout << report.text();
    return report.ok ? kExitOk : kExitAssertionFailure;
  }
  std::cerr << "unknown demo \"" << name << "\"\n";
  return kExitRuntimeError;
}

int count_command(const std::string& kind, size_t n, bool pure,
                  const std::string& method) {
  bool want_formula = method == "formula" || method == "both";
  bool want_enumeration = method == "enumerate" || method == "both";
  toystab::CountReport report;
  if (kind == "states") {
    if (pure) {
      report = toystab::enumerate_pure_states(n);
    } else {
      report = toystab::enumerate_all_states(n);
    }
  } else if (kind == "transforms") {
    report = toystab::enumerate_transformations(n);
  } else {
    std::cerr << "unknown count kind \"" << kind << "\"\n";
    return kExitRuntimeError;
  }
  if (!want_formula) {
    report.formula_value.reset();
  }
  if (!want_enumeration) {
    report.enumerated_value.reset();
  }
  std::cout << report.line() << "\n";
  return report.consistent() ? kExitOk : kExitAssertionFailure;
}

int oracle_check_command(const std::string& file, size_t trials,
                         uint64_t seed) {
  std::string source = read_file(file);
  toystab::Program program;
  try {
    program = toystab::parse_program(source);
  } catch (const toystab::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  }
  toystab::OracleCheckReport report =
      toystab::oracle_check_circuit(program, trials, seed);
  std::cout << report.summary();
  return report.ok ? kExitOk : kExitAssertionFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Stabilizer engine for Spekkens' toy theory and qubit stabilizers"};
  app.require_subcommand(1);

  std::string file;
  std::optional<uint64_t> seed;
  bool trace = false;
  auto* run_cmd = app.add_subcommand("run", "execute a circuit file");
  run_cmd->add_option("file", file, "circuit source")->required();
  run_cmd->add_option("--seed", seed, "seed for random measurement outcomes");
  run_cmd->add_flag("--trace", trace,
                    "print canonical generators after each statement");

  std::string demo_name;
  std::string edges;
  std::optional<size_t> measure_z;
  auto* demo_cmd = app.add_subcommand(
      "demo", "dense-coding | mermin-peres | nlwe | graph");
  demo_cmd->add_option("name", demo_name, "demo name")->required();
  demo_cmd->add_option("--edges", edges, "graph demo edges, e.g. 1-2,2-3");
  demo_cmd->add_option("--measure-z", measure_z,
                       "graph demo: measure Z on this vertex (1-based)");
  demo_cmd->add_option("--seed", seed, "seed for the graph measurement");

  std::string count_kind;
  size_t count_n = 1;
  bool count_pure = false;
  std::string method = "both";
  auto* count_cmd = app.add_subcommand("count", "states | transforms");
  count_cmd->add_option("kind", count_kind, "states or transforms")
      ->required();
  count_cmd->add_option("--n", count_n, "system count")->required();
  count_cmd->add_flag("--pure", count_pure, "count pure states only");
  count_cmd->add_option("--method", method, "formula | enumerate | both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));

  std::string oc_file;
  size_t trials = 1000;
  uint64_t oc_seed = 0;
  auto* oc_cmd = app.add_subcommand(
      "oracle-check", "differential run against the brute-force ontic engine");
  oc_cmd->add_option("file", oc_file, "circuit source")->required();
  oc_cmd->add_option("--trials", trials, "number of sampled trajectories");
  oc_cmd->add_option("--seed", oc_seed, "seed for the sampled trajectories")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return run_command(file, seed, trace);
    }
    if (demo_cmd->parsed()) {
      return demo_command(demo_name, edges, measure_z, seed);
    }
    if (count_cmd->parsed()) {
      return count_command(count_kind, count_n, count_pure, method);
    }
    if (oc_cmd->parsed()) {
      return oracle_check_command(oc_file, trials, oc_seed);
    }
  } catch (const toystab::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}
