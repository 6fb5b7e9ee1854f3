#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "qpat/circuit.hpp"
#include "qpat/errors.hpp"
#include "qpat/good_set.hpp"
#include "qpat/patterns.hpp"
#include "qpat/rng.hpp"
#include "qpat/simulator.hpp"
#include "qpat/state_vector.hpp"

namespace qpat {

/// U (a measurement-free circuit) together with the good set G.
class AmplificationProblem {
 public:
  AmplificationProblem(Circuit prepare, GoodSet good) : prepare_(std::move(prepare)), good_(std::move(good)) {
    if (!prepare_.measurement_free()) throw argument_error("the preparation circuit may not contain measurements");
    if (good_.universe() != dimension_of(prepare_.num_qubits())) {
      throw argument_error("good set universe does not match the preparation circuit's dimension");
    }
    const StateVector prepared = simulate(prepare_, StateVector::zero(prepare_.num_qubits()));
    double mass = 0.0;
    for (basis_index x = 0; x < prepared.dimension(); ++x) {
      if (good_.contains(x)) mass += prepared.probability(x);
    }
    good_amplitude_ = std::min(1.0, std::sqrt(mass));
  }

  const Circuit& prepare() const noexcept { return prepare_; }
  const GoodSet& good() const noexcept { return good_; }
  int num_qubits() const noexcept { return prepare_.num_qubits(); }

  /// |P_G U|0>|.
  double good_amplitude() const noexcept { return good_amplitude_; }
  /// t = |P_G U|0>|^2, the single-shot success probability of U alone.
  double success_probability() const noexcept { return good_amplitude_ * good_amplitude_; }
  /// Rotation angle per Grover step: arcsin |P_G U|0>|.
  double theta() const { return std::asin(good_amplitude_); }

 private:
  Circuit prepare_;
  GoodSet good_;
  double good_amplitude_ = 0.0;
};

inline double good_amplitude(const AmplificationProblem& problem) { return problem.good_amplitude(); }

/// Total probability that `state` lies in G.
inline double good_mass(const GoodSet& good, const StateVector& state) {
  double mass = 0.0;
  for (basis_index x = 0; x < state.dimension(); ++x) {
    if (good.contains(x)) mass += state.probability(x);
  }
  return mass;
}

/// Q = -U S_0^pi U^-1 S_G^pi applied to `state` (S_G^pi acts first).
inline StateVector grover_operator(const AmplificationProblem& problem, const StateVector& state) {
  if (state.num_qubits() != problem.num_qubits()) throw argument_error("state width does not match the problem");
  const basis_index universe = state.dimension();
  StateVector s = phase_shift(state, PhaseShiftSpec{problem.good(), std::numbers::pi});
  s = simulate(inverse(problem.prepare()), s);
  s = phase_shift(s, PhaseShiftSpec{GoodSet::of(universe, {0}), std::numbers::pi});
  s = simulate(problem.prepare(), s);
  std::vector<amplitude> amps = std::move(s).release();
  for (auto& a : amps) a = -a;
  return StateVector(problem.num_qubits(), std::move(amps), StateVector::Unchecked{});
}

/// Circuit fragment for one Q. S_G^pi and S_0^pi are diagonal ops; the
/// global -1 is a diagonal op with both phases pi on qubit 0.
inline Circuit emit_grover_operator(const AmplificationProblem& problem) {
  const int n = problem.num_qubits();
  Circuit c(n);
  c.append(emit_phase_shift(n, PhaseShiftSpec{problem.good(), std::numbers::pi}).tagged(tags::amplitude_amplification));
  c.append(inverse(problem.prepare()).tagged(tags::amplitude_amplification));
  c.append(emit_phase_shift(n, PhaseShiftSpec{GoodSet::of(dimension_of(n), {0}), std::numbers::pi}));
  c.append(problem.prepare().tagged(tags::amplitude_amplification));
  c.add(Gate::diagonal({0}, {std::numbers::pi, std::numbers::pi}), "global-phase");
  return c;
}

/// sin^2((2k+1) theta): probability of G after k Grover steps.
inline double amplified_success(double theta, int k) {
  const double s = std::sin((2.0 * k + 1.0) * theta);
  return s * s;
}

/// Integer k closest to pi/(4 theta) - 1/2, which maximizes sin^2((2k+1) theta)
/// over the first rise of the curve; ties go to the smaller k.
inline int optimal_iterations_for_amplitude(double amplitude) {
  if (!(amplitude > 0.0)) {
    throw no_solution_error("no good state has non-zero amplitude after preparation; amplification cannot help");
  }
  const double theta = std::asin(std::min(amplitude, 1.0));
  const double estimate = std::numbers::pi / (4.0 * theta) - 0.5;
  const int lo = std::max(0, static_cast<int>(std::floor(estimate)));
  const int hi = std::max(0, static_cast<int>(std::ceil(estimate)));
  if (lo == hi) return lo;
  const double p_lo = amplified_success(theta, lo);
  const double p_hi = amplified_success(theta, hi);
  return p_hi > p_lo + 1e-12 ? hi : lo;
}

inline int optimal_iterations(const AmplificationProblem& problem) {
  return optimal_iterations_for_amplitude(problem.good_amplitude());
}

namespace detail {
inline StateVector grover_iterate(const AmplificationProblem& problem, int iterations) {
  if (iterations < 0) throw argument_error("iteration count must be non-negative");
  StateVector s = simulate(problem.prepare(), StateVector::zero(problem.num_qubits()));
  for (int k = 0; k < iterations; ++k) s = grover_operator(problem, s);
  return s;
}
}  // namespace detail

/// Q^k U|0>.
inline StateVector amplitude_amplify(const AmplificationProblem& problem, int iterations) {
  if (problem.good().empty()) throw no_solution_error("amplification needs a non-empty good set");
  return detail::grover_iterate(problem, iterations);
}

/// Q^k U|0> with k = optimal_iterations(problem).
inline StateVector amplitude_amplify(const AmplificationProblem& problem) {
  return detail::grover_iterate(problem, optimal_iterations(problem));
}

// ------------------------------------------------------- search by verifying

struct SearchOutcome {
  std::optional<basis_index> solution;   ///< always satisfies the verifier
  std::uint64_t oracle_invocations = 0;  ///< Grover steps, summed over rounds
  std::uint64_t verifications = 0;       ///< classical verifier calls on samples
  int rounds = 0;
  std::vector<int> iterations_per_round;
};

inline int default_search_rounds(int n) { return n + 10; }

/// Grover search over {0, ..., 2^n - 1} for an input the classical `verifier`
/// accepts, without knowing how many there are.
///
/// Round 0 samples U|0> = H^n|0> directly. Round j >= 1 draws k uniformly
/// from [0, min(ceil(1.28^j), ceil(pi/4 sqrt(N)))], runs k Grover steps,
/// measures, and checks the sample with the verifier. A sample is returned
/// only once verified, so a miss reports no solution, never a wrong one.
inline SearchOutcome search_by_verification(const std::function<bool(basis_index)>& verifier, int n,
                                            Xoshiro256& rng, std::optional<int> max_rounds = std::nullopt) {
  check_qubit_count(n);
  const int rounds = max_rounds.value_or(default_search_rounds(n));
  if (rounds < 1) throw argument_error("search needs at least one round");
  const basis_index universe = dimension_of(n);

  std::vector<bool> marks(universe);
  for (basis_index x = 0; x < universe; ++x) marks[x] = verifier(x);
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
  const AmplificationProblem problem(emit_uniform_superposition(n, std::span<const int>(all)),
                                     GoodSet::where(universe, [&marks](basis_index x) { return bool(marks[x]); }));

  const auto cap = static_cast<std::uint64_t>(std::ceil(std::numbers::pi / 4.0 * std::sqrt(double(universe))));
  SearchOutcome out;
  for (int j = 0; j < rounds; ++j) {
    std::uint64_t k = 0;
    if (j > 0) {
      const auto growth = static_cast<std::uint64_t>(std::ceil(std::pow(1.28, j)));
      k = rng.uniform_int(std::min(growth, cap));
    }
    const StateVector s = detail::grover_iterate(problem, static_cast<int>(k));
    const basis_index sample = measure_all(s, rng).outcome;
    out.oracle_invocations += k;
    out.iterations_per_round.push_back(static_cast<int>(k));
    ++out.rounds;
    ++out.verifications;
    if (verifier(sample)) {
      out.solution = sample;
      return out;
    }
  }
  return out;
}

}  // namespace qpat
