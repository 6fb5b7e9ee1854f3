#pragma once

// State-level pattern operations. Each operation has a twin emit_* that
// records the same transformation as a circuit fragment.

#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qpat/boolean_function.hpp"
#include "qpat/circuit.hpp"
#include "qpat/errors.hpp"
#include "qpat/good_set.hpp"
#include "qpat/layout.hpp"
#include "qpat/oracle.hpp"
#include "qpat/simulator.hpp"
#include "qpat/state_vector.hpp"

namespace qpat {

namespace tags {
inline const std::string initialization = "initialization";
inline const std::string uniform_superposition = "uniform-superposition";
inline const std::string phase_shift = "phase-shift";
inline const std::string uncompute = "uncompute";
inline const std::string amplitude_amplification = "amplitude-amplification";
}  // namespace tags

// ---------------------------------------------------------------- initialize

namespace init {
struct AllZeros {};
/// |0>^n |1>; the workspace must be a single qubit.
struct IndicatorAncilla {};
/// Full-register basis state, highest qubit leftmost.
struct Bitstring {
  std::string bits;
};
/// Vector over the computational register, normalized on load.
struct Amplitudes {
  std::vector<amplitude> values;
};
}  // namespace init

using InitMode = std::variant<init::AllZeros, init::IndicatorAncilla, init::Bitstring, init::Amplitudes>;

namespace detail {

inline basis_index bitstring_index(const RegisterLayout& layout, const init::Bitstring& mode) {
  if (static_cast<int>(mode.bits.size()) != layout.total_qubits()) {
    throw argument_error("bitstring has " + std::to_string(mode.bits.size()) + " bits, register has " +
                         std::to_string(layout.total_qubits()));
  }
  return parse_bitstring(mode.bits);
}

inline void check_indicator_layout(const RegisterLayout& layout) {
  if (layout.m() != 1) {
    throw argument_error("indicator-ancilla initialization needs a one-qubit workspace, got m = " +
                         std::to_string(layout.m()));
  }
}

inline std::vector<amplitude> normalized_values(const RegisterLayout& layout, const init::Amplitudes& mode) {
  if (mode.values.size() != dimension_of(layout.n())) {
    throw argument_error("amplitude vector has " + std::to_string(mode.values.size()) + " entries, expected 2^n = " +
                         std::to_string(dimension_of(layout.n())));
  }
  double sum = 0.0;
  for (const auto& a : mode.values) sum += std::norm(a);
  if (!(sum > 0.0) || !std::isfinite(sum)) throw argument_error("cannot load a zero-norm amplitude vector");
  std::vector<amplitude> v = mode.values;
  for (auto& a : v) a /= std::sqrt(sum);
  return v;
}

/// Unitary with first column `v` (unit norm): a Householder reflection
/// sending |0> to conj(phase) v, rescaled by the phase of v[0].
inline std::vector<amplitude> unitary_with_first_column(const std::vector<amplitude>& v) {
  const std::size_t d = v.size();
  const double r0 = std::abs(v[0]);
  const amplitude phase = r0 > 0.0 ? v[0] / r0 : amplitude{1.0};
  std::vector<amplitude> w(d);
  double w_norm2 = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    w[i] = (i == 0 ? amplitude{1.0} : amplitude{}) - std::conj(phase) * v[i];
    w_norm2 += std::norm(w[i]);
  }
  std::vector<amplitude> u(d * d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      amplitude h = r == c ? amplitude{1.0} : amplitude{};
      if (w_norm2 > 1e-30) h -= 2.0 * w[r] * std::conj(w[c]) / w_norm2;
      u[r * d + c] = phase * h;
    }
  }
  return u;
}

}  // namespace detail

/// Prepares the register described by `layout` in one of the start states.
inline StateVector initialize(const RegisterLayout& layout, const InitMode& mode) {
  const int total = layout.total_qubits();
  check_qubit_count(total);
  return std::visit(
      [&](const auto& m) -> StateVector {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, init::AllZeros>) {
          return StateVector::zero(total);
        } else if constexpr (std::is_same_v<M, init::IndicatorAncilla>) {
          detail::check_indicator_layout(layout);
          return StateVector::basis(total, layout.workspace().place(1));
        } else if constexpr (std::is_same_v<M, init::Bitstring>) {
          return StateVector::basis(total, detail::bitstring_index(layout, m));
        } else {
          const auto v = detail::normalized_values(layout, m);
          std::vector<amplitude> amps(dimension_of(total));
          for (basis_index x = 0; x < v.size(); ++x) amps[layout.computational().place(x)] = v[x];
          return StateVector::normalized(total, std::move(amps));
        }
      },
      mode);
}

/// Gates taking |0...0> to initialize(layout, mode).
inline Circuit emit_initialize(const RegisterLayout& layout, const InitMode& mode) {
  const int total = layout.total_qubits();
  Circuit c(total);
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, init::IndicatorAncilla>) {
          detail::check_indicator_layout(layout);
          c.x(layout.workspace().first, tags::initialization);
        } else if constexpr (std::is_same_v<M, init::Bitstring>) {
          const basis_index index = detail::bitstring_index(layout, m);
          for (int q = 0; q < total; ++q) {
            if ((index >> q) & 1U) c.x(q, tags::initialization);
          }
        } else if constexpr (std::is_same_v<M, init::Amplitudes>) {
          const auto v = detail::normalized_values(layout, m);
          c.add(Gate::generic(layout.computational().qubits(), detail::unitary_with_first_column(v)),
                tags::initialization);
        }
      },
      mode);
  return c;
}

// ----------------------------------------------------- uniform superposition

/// H on every listed qubit.
inline StateVector uniform_superposition(const StateVector& state, std::span<const int> qubits) {
  detail::validate_qubit_set(qubits, state.num_qubits(), "uniform_superposition");
  std::vector<amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (int q : qubits) detail::apply_in_place(amps, Gate::h(q));
  return StateVector(state.num_qubits(), std::move(amps), StateVector::Unchecked{});
}

inline StateVector uniform_superposition(const StateVector& state, std::initializer_list<int> qubits) {
  const std::vector<int> q(qubits);
  return uniform_superposition(state, std::span<const int>(q));
}

inline StateVector uniform_superposition(const StateVector& state, const QubitRange& range) {
  const auto qubits = range.qubits();
  return uniform_superposition(state, std::span<const int>(qubits));
}

inline Circuit emit_uniform_superposition(int num_qubits, std::span<const int> qubits) {
  detail::validate_qubit_set(qubits, num_qubits, "uniform_superposition");
  Circuit c(num_qubits);
  for (int q : qubits) c.h(q, tags::uniform_superposition);
  return c;
}

inline Circuit emit_uniform_superposition(int num_qubits, const QubitRange& range) {
  const auto qubits = range.qubits();
  return emit_uniform_superposition(num_qubits, std::span<const int>(qubits));
}

// ------------------------------------------------------------ function table

/// (1/sqrt(2^n)) sum_x |x>|f(x)>.
inline StateVector function_table(const BooleanFunction& f) {
  const auto layout = RegisterLayout::standard(f.n(), f.m());
  const Oracle oracle = synthesize_oracle(f);
  StateVector s = initialize(layout, init::AllZeros{});
  s = uniform_superposition(s, layout.computational());
  return oracle.apply(s);
}

inline Circuit emit_function_table(const BooleanFunction& f) {
  const auto layout = RegisterLayout::standard(f.n(), f.m());
  Circuit c = emit_initialize(layout, init::AllZeros{});
  c.append(emit_uniform_superposition(layout.total_qubits(), layout.computational()));
  c.append(synthesize_oracle(f).action());
  return c;
}

/// ((1/sqrt(2^n)) sum_x (-1)^f(x) |x>) |->, from |0>^n|1> with one oracle call.
inline StateVector phase_kickback_table(const BooleanFunction& f) {
  if (!f.is_indicator()) throw argument_error("phase kickback needs an indicator function (m = 1)");
  const auto layout = RegisterLayout::standard(f.n(), 1);
  const Oracle oracle = synthesize_oracle(f);
  StateVector s = initialize(layout, init::IndicatorAncilla{});
  s = uniform_superposition(s, QubitRange{0, layout.total_qubits()});
  return oracle.apply(s);
}

inline Circuit emit_phase_kickback_table(const BooleanFunction& f) {
  if (!f.is_indicator()) throw argument_error("phase kickback needs an indicator function (m = 1)");
  const auto layout = RegisterLayout::standard(f.n(), 1);
  Circuit c = emit_initialize(layout, init::IndicatorAncilla{});
  c.append(emit_uniform_superposition(layout.total_qubits(), QubitRange{0, layout.total_qubits()}));
  c.append(synthesize_oracle(f).action());
  return c;
}

// ------------------------------------------------------- creating entanglement

struct EntanglementResult {
  StateVector state;
  /// False when f is constant: the state is then a product across the cut.
  bool entangled = false;
};

/// U_f (H^n x I^m) |0>|0>, flagged by whether the input and workspace
/// registers actually came out entangled.
inline EntanglementResult create_entanglement(const BooleanFunction& f) {
  StateVector s = function_table(f);
  const auto workspace = RegisterLayout::standard(f.n(), f.m()).workspace().qubits();
  const bool entangled = !is_separable(s, std::span<const int>(workspace));
  return {std::move(s), entangled};
}

inline Circuit emit_create_entanglement(const BooleanFunction& f) { return emit_function_table(f); }

// --------------------------------------------------------------- phase shift

/// S_G^phi: exp(i phi) or exp(i phi(x)) on every x in G.
struct PhaseShiftSpec {
  GoodSet good;
  std::variant<double, std::function<double(basis_index)>> phase = std::numbers::pi;

  double angle_at(basis_index x) const {
    if (const double* c = std::get_if<double>(&phase)) return *c;
    return std::get<1>(phase)(x);
  }
};

namespace detail {
inline std::vector<double> phase_diagonal(const PhaseShiftSpec& spec, std::size_t dimension) {
  if (spec.good.universe() != dimension) {
    throw argument_error("phase shift over a universe of " + std::to_string(spec.good.universe()) +
                         " indices applied to a state of dimension " + std::to_string(dimension));
  }
  std::vector<double> phases(dimension, 0.0);
  for (basis_index x = 0; x < dimension; ++x) {
    if (spec.good.contains(x)) {
      phases[x] = spec.angle_at(x);
      if (!std::isfinite(phases[x])) throw argument_error("phase shift angle must be finite");
    }
  }
  return phases;
}
}  // namespace detail

inline StateVector phase_shift(const StateVector& state, const PhaseShiftSpec& spec) {
  const auto phases = detail::phase_diagonal(spec, state.dimension());
  std::vector<amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
  for (basis_index x = 0; x < amps.size(); ++x) {
    if (phases[x] != 0.0) amps[x] *= std::polar(1.0, phases[x]);
  }
  return StateVector(state.num_qubits(), std::move(amps), StateVector::Unchecked{});
}

/// One diagonal op over the whole register.
inline Circuit emit_phase_shift(int num_qubits, const PhaseShiftSpec& spec) {
  Circuit c(num_qubits);
  std::vector<int> all(static_cast<std::size_t>(num_qubits));
  for (int q = 0; q < num_qubits; ++q) all[static_cast<std::size_t>(q)] = q;
  c.add(Gate::diagonal(std::move(all), detail::phase_diagonal(spec, dimension_of(num_qubits))), tags::phase_shift);
  return c;
}

// ----------------------------------------------------------------- uncompute

namespace detail {
inline const QubitRange& uncompute_result_register(const Circuit& f_impl, const RegisterLayout& layout) {
  if (!f_impl.measurement_free()) throw argument_error("uncompute: the computation may not contain measurements");
  if (f_impl.num_qubits() != layout.total_qubits()) {
    throw argument_error("uncompute: circuit acts on " + std::to_string(f_impl.num_qubits()) +
                         " qubits but the layout has " + std::to_string(layout.total_qubits()));
  }
  const QubitRange& result = layout.auxiliary("result");
  if (result.empty()) throw argument_error("uncompute: result register is empty");
  return result;
}
}  // namespace detail

/// Unitary part of copy-uncompute on layout.total_qubits() + |result| qubits:
/// the copy register sits below everything else at qubits [0, |result|).
inline Circuit emit_uncompute(const Circuit& f_impl, const RegisterLayout& layout) {
  const QubitRange& result = detail::uncompute_result_register(f_impl, layout);
  const int copy = result.size;
  const int width = layout.total_qubits() + copy;
  Circuit c(width);
  c.append(f_impl.shifted(copy, width).tagged(tags::uncompute));
  for (int i = 0; i < copy; ++i) c.cnot(result.first + copy + i, i, tags::uncompute);
  c.append(inverse(f_impl).shifted(copy, width).tagged(tags::uncompute));
  for (int i = 0; i < copy; ++i) c.swap(result.first + copy + i, i, tags::uncompute);
  return c;
}

/// Copy-uncompute around `f_impl`.
///
/// `layout` must carry an auxiliary register named "result"; the workspace
/// holds the garbage. The steps are: run f_impl, append a zeroed copy
/// register, CNOT result into copy, run f_impl^-1, swap result and copy,
/// discard the copy register. A computation that does not leave the result
/// register in a classical function of the input makes the final discard
/// fail with entangled_discard_error.
inline StateVector uncompute(const Circuit& f_impl, const RegisterLayout& layout, const StateVector& input) {
  const QubitRange& result = detail::uncompute_result_register(f_impl, layout);
  if (input.num_qubits() != layout.total_qubits()) {
    throw argument_error("uncompute: input state width does not match the layout");
  }
  const int copy = result.size;
  const int width = layout.total_qubits() + copy;

  StateVector s = simulate(f_impl, input);
  s = tensor(s, StateVector::zero(copy));
  for (int i = 0; i < copy; ++i) s = apply_gate(s, Gate::cnot(result.first + copy + i, i));
  s = simulate(inverse(f_impl).shifted(copy, width), s);
  for (int i = 0; i < copy; ++i) s = apply_gate(s, Gate::swap(result.first + copy + i, i));

  std::vector<int> copy_qubits(static_cast<std::size_t>(copy));
  for (int i = 0; i < copy; ++i) copy_qubits[static_cast<std::size_t>(i)] = i;
  return discard_register(s, std::span<const int>(copy_qubits));
}

}  // namespace qpat
