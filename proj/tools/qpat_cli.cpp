// qpat command line: run algorithms, browse the pattern catalog, export circuits.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpat/qpat.hpp"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string algorithm;
  int qubits = 0;
  std::vector<std::uint64_t> marked;
  std::optional<std::uint64_t> secret;
  std::string function_path;
  std::uint64_t shots = 1024;
  std::optional<std::uint64_t> seed;
  std::string iterations = "auto";
  std::string format = "text";
  bool unknown_count = false;
};

struct ExportConfig {
  std::string algorithm;
  int qubits = 0;
  std::vector<std::uint64_t> marked;
  std::optional<std::uint64_t> secret;
  std::string function_path;
  std::string iterations = "auto";
  std::string output;
  std::string format = "qasm";
};

void apply_cap_from_environment() {
  const char* env = std::getenv("QPAT_MAX_QUBITS");
  if (!env || !*env) return;
  try {
    qpat::set_qubit_cap(std::stoi(env));
  } catch (const std::exception&) {
    throw UsageError(std::string("QPAT_MAX_QUBITS must be an integer in [1, 62], got '") + env + "'");
  }
}

std::optional<int> parse_iterations(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const int k = std::stoi(text, &used);
    if (used != text.size() || k < 0) throw std::invalid_argument(text);
    return k;
  } catch (const std::exception&) {
    throw UsageError("--iterations must be 'auto' or a non-negative integer, got '" + text + "'");
  }
}

qpat::BooleanFunction require_function(const std::string& path, const std::string& algorithm) {
  if (path.empty()) throw UsageError(algorithm + " needs --function <truth-table.json>");
  return qpat::load_boolean_function(path);
}

int require_qubits(int qubits, const std::string& algorithm) {
  if (qubits == 0) throw UsageError(algorithm + " needs --qubits");
  return qubits;
}

void print_text(const qpat::HybridRunReport& r) {
  std::cout << "algorithm:          " << r.algorithm << "\n"
            << "parameters:         " << r.parameters.dump() << "\n"
            << "seed:               " << r.seed << "\n"
            << "shots:              " << r.shots << "\n"
            << "answer:             " << r.answer << (r.verified ? " (verified)" : " (unverified)") << "\n"
            << "oracle invocations: " << r.oracle_invocations << "\n";
  if (r.iterations) std::cout << "iterations:         " << *r.iterations << "\n";
  if (r.success_frequency) std::cout << "success frequency:  " << *r.success_frequency << "\n";
  std::cout << "pre-processing:     " << r.classical_preprocessing << "\n"
            << "post-processing:    " << r.classical_postprocessing << "\n"
            << "counts:\n";
  for (const auto& [bits, count] : r.counts) std::cout << "  " << bits << "  " << count << "\n";
}

int cmd_run(const RunConfig& cfg) {
  const std::uint64_t seed = cfg.seed.value_or((std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}());
  const auto iterations = parse_iterations(cfg.iterations);
  qpat::HybridRunReport report;
  if (cfg.algorithm == "grover") {
    const int n = require_qubits(cfg.qubits, "grover");
    if (cfg.unknown_count) {
      const std::vector<std::uint64_t> marked = cfg.marked;
      report = qpat::grover_search(
          n, [&marked](qpat::basis_index x) { return std::find(marked.begin(), marked.end(), x) != marked.end(); },
          cfg.shots, seed);
    } else {
      report = qpat::grover_search(n, cfg.marked, cfg.shots, seed, iterations);
    }
  } else if (cfg.algorithm == "deutsch-jozsa") {
    report = qpat::run_deutsch_jozsa(require_function(cfg.function_path, "deutsch-jozsa"), cfg.shots, seed);
  } else if (cfg.algorithm == "bernstein-vazirani") {
    const int n = require_qubits(cfg.qubits, "bernstein-vazirani");
    if (!cfg.secret) throw UsageError("bernstein-vazirani needs --secret");
    report = qpat::run_bernstein_vazirani(*cfg.secret, n, cfg.shots, seed);
  } else if (cfg.algorithm == "simon") {
    report = qpat::simon(require_function(cfg.function_path, "simon"), seed);
  } else {
    throw UsageError("unknown algorithm '" + cfg.algorithm + "'");
  }
  if (cfg.format == "json") {
    std::cout << qpat::to_json(report).dump(2) << "\n";
  } else {
    print_text(report);
  }
  return 0;
}

int cmd_list() {
  for (const auto& d : qpat::pattern_catalog()) std::cout << d.id << "\t" << d.intent << "\n";
  return 0;
}

std::string valid_pattern_names() {
  std::string out;
  for (const auto& d : qpat::pattern_catalog()) out += (out.empty() ? "" : ", ") + d.id;
  return out;
}

int cmd_show(const std::string& name) {
  const auto doc = qpat::find_pattern(name);
  if (!doc) {
    std::cerr << "error: unknown pattern '" << name << "'; valid names: " << valid_pattern_names() << "\n";
    return kExitUsage;
  }
  std::cout << doc->name;
  if (!doc->aliases.empty()) std::cout << " (" << qpat::alias_line(*doc) << ")";
  std::cout << "\n\nIntent:     " << doc->intent << "\nIcon:       " << doc->icon << "\nProblem:    " << doc->problem
            << "\nContext:    " << doc->context << "\nSolution:   " << doc->solution
            << "\nKnown uses: " << doc->known_uses << "\nNext:      ";
  for (const auto& n : doc->next) std::cout << " " << n;
  std::cout << "\n";
  return 0;
}

int cmd_graph() {
  std::cout << qpat::pattern_graph_dot();
  return 0;
}

qpat::Circuit export_circuit(const ExportConfig& cfg) {
  if (cfg.algorithm == "bell") return qpat::bell_circuit();
  if (cfg.algorithm == "deutsch-jozsa") {
    return qpat::deutsch_jozsa_circuit(require_function(cfg.function_path, "deutsch-jozsa"));
  }
  if (cfg.algorithm == "bernstein-vazirani") {
    const int n = require_qubits(cfg.qubits, "bernstein-vazirani");
    if (!cfg.secret) throw UsageError("bernstein-vazirani needs --secret");
    return qpat::bernstein_vazirani_circuit(*cfg.secret, n);
  }
  if (cfg.algorithm == "grover") {
    return qpat::grover_circuit(require_qubits(cfg.qubits, "grover"), cfg.marked, parse_iterations(cfg.iterations));
  }
  if (cfg.algorithm == "function-table") {
    return qpat::emit_function_table(require_function(cfg.function_path, "function-table"));
  }
  throw UsageError("unknown algorithm '" + cfg.algorithm + "'");
}

int cmd_export(const ExportConfig& cfg) {
  const qpat::Circuit circuit = export_circuit(cfg);
  const std::string text = cfg.format == "json" ? qpat::to_json(circuit).dump(2) + "\n" : qpat::to_qasm(circuit);
  if (cfg.output.empty() || cfg.output == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw qpat::argument_error("cannot write '" + cfg.output + "'");
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qpat: quantum algorithm patterns on a state-vector simulator"};
  app.require_subcommand(1);

  RunConfig run;
  auto* run_cmd = app.add_subcommand("run", "Run an algorithm and print its report");
  run_cmd->add_option("algorithm", run.algorithm, "grover | deutsch-jozsa | bernstein-vazirani | simon")->required();
  run_cmd->add_option("-n,--qubits", run.qubits, "Input register width");
  run_cmd->add_option("--marked", run.marked, "Marked basis indices (grover)");
  run_cmd->add_option("--secret", run.secret, "Secret as an integer, qubit 0 = bit 0 (bernstein-vazirani)");
  run_cmd->add_option("--function", run.function_path, "Truth table file {n, m, table}");
  run_cmd->add_option("--shots", run.shots, "Samples drawn from the final state")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run.seed, "64-bit seed; random when omitted and reported either way");
  run_cmd->add_option("--iterations", run.iterations, "'auto' or a Grover step count");
  run_cmd->add_option("--format", run.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  run_cmd->add_flag("--unknown-count", run.unknown_count, "Grover: search by verification without |G|");

  app.add_subcommand("list", "List the patterns");
  std::string show_name;
  auto* show_cmd = app.add_subcommand("show", "Show one pattern document");
  show_cmd->add_option("name", show_name, "Pattern id or name")->required();
  std::string graph_format = "dot";
  auto* graph_cmd = app.add_subcommand("graph", "Print the pattern graph");
  graph_cmd->add_option("--format", graph_format, "dot")->check(CLI::IsMember({"dot"}));

  ExportConfig exp;
  auto* export_cmd = app.add_subcommand("export-qasm", "Record an algorithm's circuit and write it out");
  export_cmd->add_option("algorithm", exp.algorithm, "bell | deutsch-jozsa | bernstein-vazirani | grover | function-table")
      ->required();
  export_cmd->add_option("-n,--qubits", exp.qubits, "Input register width");
  export_cmd->add_option("--marked", exp.marked, "Marked basis indices (grover)");
  export_cmd->add_option("--secret", exp.secret, "Secret as an integer (bernstein-vazirani)");
  export_cmd->add_option("--function", exp.function_path, "Truth table file {n, m, table}");
  export_cmd->add_option("--iterations", exp.iterations, "'auto' or a Grover step count");
  export_cmd->add_option("-o,--output", exp.output, "Output path; '-' or omitted for stdout");
  export_cmd->add_option("--format", exp.format, "qasm | json")->check(CLI::IsMember({"qasm", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    apply_cap_from_environment();
    if (*run_cmd) return cmd_run(run);
    if (app.got_subcommand("list")) return cmd_list();
    if (*show_cmd) return cmd_show(show_name);
    if (*graph_cmd) return cmd_graph();
    if (*export_cmd) return cmd_export(exp);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qpat::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
