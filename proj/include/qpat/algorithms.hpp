#pragma once

// Reference algorithms built only from pattern operations and the
// simulator's public entry points.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpat/amplification.hpp"
#include "qpat/boolean_function.hpp"
#include "qpat/circuit.hpp"
#include "qpat/errors.hpp"
#include "qpat/gf2.hpp"
#include "qpat/good_set.hpp"
#include "qpat/layout.hpp"
#include "qpat/oracle.hpp"
#include "qpat/patterns.hpp"
#include "qpat/rng.hpp"
#include "qpat/simulator.hpp"

namespace qpat {

inline constexpr int kReportSchemaVersion = 1;

/// Outcome of one hybrid run. Shots are sampled from a single prepared
/// state, so `oracle_invocations` counts the oracle applications the
/// simulator actually performed.
struct HybridRunReport {
  std::string algorithm;
  nlohmann::json parameters = nlohmann::json::object();
  std::string classical_preprocessing;
  std::uint64_t oracle_invocations = 0;
  std::string classical_postprocessing;
  std::string answer;
  bool verified = false;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::map<std::string, std::uint64_t> counts;
  std::optional<double> success_frequency;
  std::optional<int> iterations;
};

inline nlohmann::json to_json(const HybridRunReport& r) {
  nlohmann::json j{{"schema_version", kReportSchemaVersion},
                   {"algorithm", r.algorithm},
                   {"parameters", r.parameters},
                   {"seed", r.seed},
                   {"shots", r.shots},
                   {"counts", r.counts},
                   {"oracle_invocations", r.oracle_invocations},
                   {"classical_preprocessing", r.classical_preprocessing},
                   {"classical_postprocessing", r.classical_postprocessing},
                   {"answer", r.answer},
                   {"verified", r.verified}};
  j["success_frequency"] = r.success_frequency ? nlohmann::json(*r.success_frequency) : nlohmann::json(nullptr);
  j["iterations"] = r.iterations ? nlohmann::json(*r.iterations) : nlohmann::json(nullptr);
  return j;
}

namespace detail {
inline std::map<std::string, std::uint64_t> sample_register(const StateVector& s, std::span<const int> qubits,
                                                            std::uint64_t shots, Xoshiro256& rng) {
  std::map<std::string, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < shots; ++i) ++counts[measure_subset(s, qubits, rng).bits];
  return counts;
}
}  // namespace detail

// ------------------------------------------------------------ Deutsch-Jozsa

enum class DjAnswer { Constant, Balanced };

inline std::string to_string(DjAnswer a) { return a == DjAnswer::Constant ? "constant" : "balanced"; }

struct DeutschJozsaResult {
  DjAnswer answer = DjAnswer::Constant;
  basis_index outcome = 0;  ///< measured input register
  std::uint64_t oracle_invocations = 0;
  StateVector final_state;  ///< state just before measurement
};

inline void check_deutsch_jozsa_promise(const BooleanFunction& f) {
  if (!f.is_indicator()) throw promise_error("Deutsch-Jozsa needs a one-bit output (m = 1)");
  if (!f.is_constant() && !f.is_balanced()) throw promise_error("function is neither constant nor balanced");
}

/// |0>^n|1> -> H^(n+1) -> U_f -> H^n on the input -> measure the input.
/// Deutsch's problem is the n = 1 case.
inline DeutschJozsaResult deutsch_jozsa(const BooleanFunction& f, Xoshiro256& rng) {
  check_deutsch_jozsa_promise(f);
  const auto layout = RegisterLayout::standard(f.n(), 1);
  const Oracle oracle = synthesize_oracle(f, "f");
  InstrumentedOracle counted(oracle);

  StateVector s = initialize(layout, init::IndicatorAncilla{});
  s = uniform_superposition(s, QubitRange{0, layout.total_qubits()});
  s = counted.apply(s);
  s = uniform_superposition(s, layout.computational());
  const auto input = layout.computational().qubits();
  const auto m = measure_subset(s, std::span<const int>(input), rng);
  return {m.outcome == 0 ? DjAnswer::Constant : DjAnswer::Balanced, m.outcome, counted.invocations(), std::move(s)};
}

/// Gate-level recording of the Deutsch-Jozsa pipeline, without measurement.
inline Circuit deutsch_jozsa_circuit(const BooleanFunction& f) {
  check_deutsch_jozsa_promise(f);
  const auto layout = RegisterLayout::standard(f.n(), 1);
  Circuit c = emit_initialize(layout, init::IndicatorAncilla{});
  c.append(emit_uniform_superposition(layout.total_qubits(), QubitRange{0, layout.total_qubits()}));
  c.append(synthesize_oracle(f, "f").action());
  c.append(emit_uniform_superposition(layout.total_qubits(), layout.computational()));
  return c;
}

inline HybridRunReport run_deutsch_jozsa(const BooleanFunction& f, std::uint64_t shots, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  const auto result = deutsch_jozsa(f, rng);
  const auto input = RegisterLayout::standard(f.n(), 1).computational().qubits();
  HybridRunReport r;
  r.algorithm = "deutsch-jozsa";
  r.parameters = {{"n", f.n()}, {"table", f.table()}};
  r.classical_preprocessing = "promise check over the truth table";
  r.oracle_invocations = result.oracle_invocations;
  r.classical_postprocessing = "constant iff the input register reads all zeros";
  r.answer = to_string(result.answer);
  r.verified = (result.answer == DjAnswer::Constant) == f.is_constant();
  r.seed = seed;
  r.shots = shots;
  r.counts = detail::sample_register(result.final_state, input, shots, rng);
  return r;
}

// ------------------------------------------------------- Bernstein-Vazirani

inline BooleanFunction inner_product_function(basis_index secret, int n) {
  if (n < 1 || n > BooleanFunction::kMaxInputBits) throw argument_error("secret width must lie in [1, 24]");
  if (secret >> n) throw argument_error("secret does not fit in " + std::to_string(n) + " bits");
  return BooleanFunction::from_map(n, 1, [secret](basis_index x) { return basis_index(gf2_dot(secret, x)); });
}

struct BernsteinVaziraniResult {
  basis_index recovered = 0;
  std::uint64_t oracle_invocations = 0;
  StateVector final_state;
};

/// Recovers a from one call to the oracle of f(x) = a . x mod 2.
inline BernsteinVaziraniResult bernstein_vazirani(basis_index secret, int n, Xoshiro256& rng) {
  const BooleanFunction f = inner_product_function(secret, n);
  const auto layout = RegisterLayout::standard(n, 1);
  const Oracle oracle = synthesize_oracle(f, "a.x");
  InstrumentedOracle counted(oracle);

  StateVector s = initialize(layout, init::IndicatorAncilla{});
  s = uniform_superposition(s, QubitRange{0, layout.total_qubits()});
  s = counted.apply(s);
  s = uniform_superposition(s, layout.computational());
  const auto input = layout.computational().qubits();
  const auto m = measure_subset(s, std::span<const int>(input), rng);
  return {m.outcome, counted.invocations(), std::move(s)};
}

inline Circuit bernstein_vazirani_circuit(basis_index secret, int n) {
  const BooleanFunction f = inner_product_function(secret, n);
  const auto layout = RegisterLayout::standard(n, 1);
  Circuit c = emit_initialize(layout, init::IndicatorAncilla{});
  c.append(emit_uniform_superposition(layout.total_qubits(), QubitRange{0, layout.total_qubits()}));
  c.append(synthesize_oracle(f, "a.x").action());
  c.append(emit_uniform_superposition(layout.total_qubits(), layout.computational()));
  return c;
}

inline HybridRunReport run_bernstein_vazirani(basis_index secret, int n, std::uint64_t shots, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  const auto result = bernstein_vazirani(secret, n, rng);
  const auto input = RegisterLayout::standard(n, 1).computational().qubits();
  HybridRunReport r;
  r.algorithm = "bernstein-vazirani";
  r.parameters = {{"n", n}, {"secret", secret}};
  r.classical_preprocessing = "truth table of a . x mod 2";
  r.oracle_invocations = result.oracle_invocations;
  r.classical_postprocessing = "read the secret off the measured input register";
  r.answer = to_bitstring(result.recovered, n);
  r.verified = result.recovered == secret;
  r.seed = seed;
  r.shots = shots;
  r.counts = detail::sample_register(result.final_state, input, shots, rng);
  return r;
}

// ------------------------------------------------------------------- Grover

inline Circuit hadamard_preparation(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
  return emit_uniform_superposition(n, std::span<const int>(all));
}

/// Grover with a known marked set: optimal_iterations (or `iterations`)
/// Grover steps on H^n|0>, then `shots` samples of the register.
inline HybridRunReport grover_search(int n, const std::vector<basis_index>& marked, std::uint64_t shots,
                                     std::uint64_t seed, std::optional<int> iterations = std::nullopt) {
  check_qubit_count(n);
  const GoodSet good = GoodSet::of(dimension_of(n), marked);
  if (good.empty()) throw no_solution_error("Grover search with a known marked set needs at least one marked index");
  const AmplificationProblem problem(hadamard_preparation(n), good);
  const int k = iterations.value_or(optimal_iterations(problem));
  if (k < 0) throw argument_error("iteration count must be non-negative");

  StateVector s = simulate(problem.prepare(), StateVector::zero(n));
  std::uint64_t invocations = 0;
  for (int i = 0; i < k; ++i) {
    s = grover_operator(problem, s);
    ++invocations;
  }

  Xoshiro256 rng(seed);
  HybridRunReport r;
  r.algorithm = "grover";
  r.parameters = {{"n", n}, {"marked", good.members()}};
  r.classical_preprocessing = "marked set to phase oracle; iteration count from the good amplitude";
  r.oracle_invocations = invocations;
  r.classical_postprocessing = "verify samples against the marked set";
  r.seed = seed;
  r.shots = shots;
  r.iterations = k;
  std::uint64_t hits = 0;
  std::map<basis_index, std::uint64_t> best;
  for (const auto& [x, c] : sample_counts(s, shots, rng)) {
    r.counts[to_bitstring(x, n)] = c;
    if (good.contains(x)) {
      hits += c;
      best[x] = c;
    }
  }
  r.success_frequency = shots ? double(hits) / double(shots) : 0.0;
  if (!best.empty()) {
    const auto top = std::max_element(best.begin(), best.end(),
                                      [](const auto& a, const auto& b) { return a.second < b.second; });
    r.answer = to_bitstring(top->first, n);
    r.verified = true;
  }
  return r;
}

/// Grover with an unknown number of solutions: `shots` independent
/// verification searches.
inline HybridRunReport grover_search(int n, const std::function<bool(basis_index)>& verifier, std::uint64_t shots,
                                     std::uint64_t seed) {
  check_qubit_count(n);
  Xoshiro256 rng(seed);
  HybridRunReport r;
  r.algorithm = "grover-verify";
  r.parameters = {{"n", n}};
  r.classical_preprocessing = "verifier wrapped as a phase oracle";
  r.classical_postprocessing = "every sample re-checked by the verifier";
  r.seed = seed;
  r.shots = shots;
  std::uint64_t found = 0;
  for (std::uint64_t i = 0; i < shots; ++i) {
    const SearchOutcome out = search_by_verification(verifier, n, rng);
    r.oracle_invocations += out.oracle_invocations;
    if (out.solution) {
      ++found;
      ++r.counts[to_bitstring(*out.solution, n)];
      if (r.answer.empty()) r.answer = to_bitstring(*out.solution, n);
    } else {
      ++r.counts["not-found"];
    }
  }
  r.verified = found > 0;
  r.success_frequency = shots ? double(found) / double(shots) : 0.0;
  return r;
}

/// Circuit for H^n followed by `iterations` Grover steps. The phase
/// oracle is a diagonal op, so the result cannot be exported to QASM.
inline Circuit grover_circuit(int n, const std::vector<basis_index>& marked, std::optional<int> iterations = {}) {
  const AmplificationProblem problem(hadamard_preparation(n), GoodSet::of(dimension_of(n), marked));
  const int k = iterations.value_or(optimal_iterations(problem));
  Circuit c = problem.prepare();
  const Circuit step = emit_grover_operator(problem);
  for (int i = 0; i < k; ++i) c.append(step);
  return c;
}

// -------------------------------------------------------------------- Simon

/// Hidden period of a Simon function: f(x) = f(y) iff y is x or x ^ s, s != 0.
inline basis_index simon_period(const BooleanFunction& f) {
  const basis_index f0 = f(0);
  std::optional<basis_index> s;
  for (basis_index x = 1; x < f.table().size(); ++x) {
    if (f(x) == f0) {
      if (s) throw promise_error("more than two inputs share the value f(0)");
      s = x;
    }
  }
  if (!s) throw promise_error("f is injective: the hidden period would be 0");
  std::set<basis_index> values;
  for (basis_index x = 0; x < f.table().size(); ++x) {
    if (f(x) != f(x ^ *s)) throw promise_error("f(x) != f(x ^ s) for x = " + std::to_string(x));
    values.insert(f(x));
  }
  if (values.size() * 2 != f.table().size()) throw promise_error("f is not two-to-one");
  return *s;
}

inline int default_simon_rounds(int n) { return 20 * n; }

/// Quantum sampling of y with y . s = 0, then GF(2) elimination until a
/// single nonzero candidate remains; the candidate is checked by f(0) = f(s).
inline HybridRunReport simon(const BooleanFunction& f, std::uint64_t seed, std::optional<int> max_rounds = {}) {
  const basis_index hidden = simon_period(f);
  const int n = f.n();
  const int budget = max_rounds.value_or(default_simon_rounds(n));
  const auto layout = RegisterLayout::standard(n, f.m());
  const Oracle oracle = synthesize_oracle(f, "f");
  InstrumentedOracle counted(oracle);
  const auto input = layout.computational().qubits();
  Xoshiro256 rng(seed);

  HybridRunReport r;
  r.algorithm = "simon";
  r.parameters = {{"n", n}, {"m", f.m()}, {"table", f.table()}};
  r.classical_preprocessing = "promise check over the truth table";
  r.seed = seed;

  std::vector<basis_index> samples;
  for (int round = 0; round < budget; ++round) {
    StateVector s = initialize(layout, init::AllZeros{});
    s = uniform_superposition(s, layout.computational());
    s = counted.apply(s);
    s = uniform_superposition(s, layout.computational());
    const auto y = measure_subset(s, std::span<const int>(input), rng);
    ++r.counts[y.bits];
    ++r.shots;
    samples.push_back(y.outcome);

    const auto candidates = gf2_nullspace(Gf2System(n, samples));
    if (candidates.size() == 1) {
      const basis_index s_found = candidates.front();
      if (f(0) != f(s_found)) continue;
      r.oracle_invocations = counted.invocations();
      r.classical_postprocessing = "GF(2) null space of " + std::to_string(samples.size()) +
                                   " samples; checked f(0) = f(s)";
      r.answer = to_bitstring(s_found, n);
      r.verified = s_found == hidden;
      return r;
    }
  }
  throw no_solution_error("Simon: round budget of " + std::to_string(budget) + " exhausted");
}

inline basis_index simon_answer(const HybridRunReport& r) { return parse_bitstring(r.answer); }

// --------------------------------------------------------------------- misc

/// H then CNOT on two qubits.
inline Circuit bell_circuit() {
  Circuit c(2);
  c.h(0, tags::uniform_superposition);
  c.cnot(0, 1, "creating-entanglement");
  return c;
}

}  // namespace qpat
