#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qpat/config.hpp"
#include "qpat/errors.hpp"
#include "qpat/gate.hpp"
#include "qpat/rng.hpp"
#include "qpat/state_vector.hpp"

namespace qpat {

namespace detail {

/// Offset of each local index of `targets` inside a full basis index.
inline std::vector<basis_index> local_offsets(std::span<const int> targets) {
  std::vector<basis_index> offsets(dimension_of(static_cast<int>(targets.size())));
  for (std::size_t b = 0; b < offsets.size(); ++b) {
    basis_index off = 0;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if ((b >> j) & 1U) off |= basis_index{1} << targets[j];
    }
    offsets[b] = off;
  }
  return offsets;
}

inline basis_index target_mask(std::span<const int> targets) {
  basis_index mask = 0;
  for (int t : targets) mask |= basis_index{1} << t;
  return mask;
}

/// Local index of `index` restricted to `qubits` (qubits[j] -> bit j).
inline basis_index gather_bits(basis_index index, std::span<const int> qubits) {
  basis_index local = 0;
  for (std::size_t j = 0; j < qubits.size(); ++j) local |= ((index >> qubits[j]) & 1U) << j;
  return local;
}

inline void validate_qubit_set(std::span<const int> qubits, int num_qubits, const char* what) {
  if (qubits.empty()) throw argument_error(std::string(what) + ": qubit set is empty");
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 0 || qubits[i] >= num_qubits) {
      throw argument_error(std::string(what) + ": qubit " + std::to_string(qubits[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[i] == qubits[j]) throw argument_error(std::string(what) + ": duplicate qubit");
    }
  }
}

inline void apply_single(std::vector<amplitude>& amps, int q, amplitude m00, amplitude m01, amplitude m10,
                         amplitude m11) {
  const basis_index bit = basis_index{1} << q;
  for (basis_index i = 0; i < amps.size(); ++i) {
    if (i & bit) continue;
    const amplitude a0 = amps[i];
    const amplitude a1 = amps[i | bit];
    amps[i] = m00 * a0 + m01 * a1;
    amps[i | bit] = m10 * a0 + m11 * a1;
  }
}

/// Applies a unitary gate in place. The gate must already be validated.
inline void apply_in_place(std::vector<amplitude>& amps, const Gate& gate) {
  const auto& t = gate.targets;
  switch (gate.kind) {
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      apply_single(amps, t[0], r, r, r, -r);
      return;
    }
    case GateKind::X: {
      const basis_index bit = basis_index{1} << t[0];
      for (basis_index i = 0; i < amps.size(); ++i) {
        if (!(i & bit)) std::swap(amps[i], amps[i | bit]);
      }
      return;
    }
    case GateKind::Z: {
      const basis_index bit = basis_index{1} << t[0];
      for (basis_index i = 0; i < amps.size(); ++i) {
        if (i & bit) amps[i] = -amps[i];
      }
      return;
    }
    case GateKind::Phase: {
      const basis_index bit = basis_index{1} << t[0];
      const amplitude factor = std::polar(1.0, gate.angle);
      for (basis_index i = 0; i < amps.size(); ++i) {
        if (i & bit) amps[i] *= factor;
      }
      return;
    }
    case GateKind::CNOT: {
      const basis_index control = basis_index{1} << t[0];
      const basis_index target = basis_index{1} << t[1];
      for (basis_index i = 0; i < amps.size(); ++i) {
        if ((i & control) && !(i & target)) std::swap(amps[i], amps[i | target]);
      }
      return;
    }
    case GateKind::SWAP: {
      const basis_index a = basis_index{1} << t[0];
      const basis_index b = basis_index{1} << t[1];
      for (basis_index i = 0; i < amps.size(); ++i) {
        if ((i & a) && !(i & b)) std::swap(amps[i], amps[(i & ~a) | b]);
      }
      return;
    }
    case GateKind::Generic:
    case GateKind::Permutation:
    case GateKind::Diagonal: {
      const auto offsets = local_offsets(t);
      const basis_index mask = target_mask(t);
      const std::size_t dim = offsets.size();
      std::vector<amplitude> local(dim);
      std::vector<amplitude> diag;
      if (gate.kind == GateKind::Diagonal) {
        diag.resize(dim);
        for (std::size_t b = 0; b < dim; ++b) diag[b] = std::polar(1.0, gate.phases[b]);
      }
      for (basis_index base = 0; base < amps.size(); ++base) {
        if (base & mask) continue;
        for (std::size_t b = 0; b < dim; ++b) local[b] = amps[base | offsets[b]];
        for (std::size_t r = 0; r < dim; ++r) {
          switch (gate.kind) {
            case GateKind::Generic: {
              amplitude sum{};
              for (std::size_t c = 0; c < dim; ++c) sum += gate.matrix[r * dim + c] * local[c];
              amps[base | offsets[r]] = sum;
              break;
            }
            case GateKind::Permutation:
              amps[base | offsets[gate.permutation[r]]] = local[r];
              break;
            default:
              amps[base | offsets[r]] = diag[r] * local[r];
              break;
          }
        }
      }
      return;
    }
    case GateKind::Measure:
      throw argument_error("measurement is not a unitary gate; simulate it with a generator");
  }
}

}  // namespace detail

/// Applies `gate` to its targets and the identity elsewhere.
inline StateVector apply_gate(const StateVector& state, const Gate& gate) {
  gate.validate(state.num_qubits());
  if (!gate.is_unitary()) throw argument_error("apply_gate: measurement is not a unitary gate");
  const int n = state.num_qubits();
  std::vector<amplitude> amps(state.amplitudes().begin(), state.amplitudes().end());
  detail::apply_in_place(amps, gate);
  return StateVector(n, std::move(amps), StateVector::Unchecked{});
}

/// Reindexes amplitudes: local basis index b on `targets` moves to perm[b].
inline StateVector apply_permutation(const StateVector& state, std::vector<basis_index> perm,
                                     std::vector<int> targets) {
  return apply_gate(state, Gate::permutation_of(std::move(targets), std::move(perm)));
}

struct MeasurementResult {
  basis_index outcome = 0;  ///< local index over the measured qubits
  std::string bits;         ///< outcome, last listed qubit leftmost
  StateVector collapsed;
};

namespace detail {
inline std::size_t sample_index(std::span<const double> weights, double total, Xoshiro256& rng) {
  const double u = rng.uniform() * total;
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_nonzero = i;
    if (u < cumulative) return i;
  }
  return last_nonzero;
}
}  // namespace detail

/// Born-rule measurement of every qubit.
inline MeasurementResult measure_all(const StateVector& state, Xoshiro256& rng) {
  const auto probs = state.probabilities();
  double total = 0.0;
  for (double p : probs) total += p;
  const basis_index outcome = detail::sample_index(probs, total, rng);
  return {outcome, to_bitstring(outcome, state.num_qubits()), StateVector::basis(state.num_qubits(), outcome)};
}

/// Marginal distribution over the local index of `qubits`.
inline std::vector<double> marginal_probabilities(const StateVector& state, std::span<const int> qubits) {
  detail::validate_qubit_set(qubits, state.num_qubits(), "marginal_probabilities");
  std::vector<double> marginal(dimension_of(static_cast<int>(qubits.size())), 0.0);
  for (basis_index i = 0; i < state.dimension(); ++i) marginal[detail::gather_bits(i, qubits)] += state.probability(i);
  return marginal;
}

/// Measures `qubits` only and renormalizes what remains.
inline MeasurementResult measure_subset(const StateVector& state, std::span<const int> qubits, Xoshiro256& rng) {
  const auto marginal = marginal_probabilities(state, qubits);
  double total = 0.0;
  for (double p : marginal) total += p;
  const basis_index outcome = detail::sample_index(marginal, total, rng);
  const double scale = 1.0 / std::sqrt(marginal[outcome]);
  std::vector<amplitude> amps(state.dimension());
  for (basis_index i = 0; i < state.dimension(); ++i) {
    if (detail::gather_bits(i, qubits) == outcome) amps[i] = state[i] * scale;
  }
  return {outcome, to_bitstring(outcome, static_cast<int>(qubits.size())),
          StateVector(state.num_qubits(), std::move(amps), StateVector::Unchecked{})};
}

inline MeasurementResult measure_subset(const StateVector& state, std::initializer_list<int> qubits,
                                        Xoshiro256& rng) {
  const std::vector<int> q(qubits);
  return measure_subset(state, std::span<const int>(q), rng);
}

/// Histogram of `shots` independent full-register measurements.
inline std::map<basis_index, std::uint64_t> sample_counts(const StateVector& state, std::uint64_t shots,
                                                          Xoshiro256& rng) {
  const auto probs = state.probabilities();
  double total = 0.0;
  for (double p : probs) total += p;
  std::map<basis_index, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < shots; ++s) ++counts[detail::sample_index(probs, total, rng)];
  return counts;
}

namespace detail {

/// Amplitudes reshaped to a (2^|cut| x 2^|rest|) matrix; rows indexed by the
/// local index over `cut`, columns by the local index over the remaining
/// qubits in ascending order.
inline Eigen::MatrixXcd bipartite_matrix(const StateVector& state, std::span<const int> cut,
                                         std::vector<int>* rest_out = nullptr) {
  const int n = state.num_qubits();
  validate_qubit_set(cut, n, "bipartition");
  if (static_cast<int>(cut.size()) >= n) throw argument_error("bipartition: both sides must be non-empty");
  std::vector<int> rest;
  for (int q = 0; q < n; ++q) {
    if (std::find(cut.begin(), cut.end(), q) == cut.end()) rest.push_back(q);
  }
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dimension_of(static_cast<int>(cut.size()))),
                     static_cast<Eigen::Index>(dimension_of(static_cast<int>(rest.size()))));
  for (basis_index i = 0; i < state.dimension(); ++i) {
    m(static_cast<Eigen::Index>(gather_bits(i, cut)), static_cast<Eigen::Index>(gather_bits(i, rest))) = state[i];
  }
  if (rest_out) *rest_out = std::move(rest);
  return m;
}

}  // namespace detail

/// Singular values of the amplitude matrix across the cut, descending.
inline std::vector<double> schmidt_coefficients(const StateVector& state, std::span<const int> cut) {
  const Eigen::MatrixXcd m = detail::bipartite_matrix(state, cut);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

/// True iff the Schmidt rank across `cut` | rest is one.
inline bool is_separable(const StateVector& state, std::span<const int> cut) {
  const auto coefficients = schmidt_coefficients(state, cut);
  const auto above = std::count_if(coefficients.begin(), coefficients.end(),
                                   [](double s) { return s > kSchmidtCutoff; });
  return above == 1;
}

inline bool is_separable(const StateVector& state, std::initializer_list<int> cut) {
  const std::vector<int> c(cut);
  return is_separable(state, std::span<const int>(c));
}

/// Drops `qubits`, which must be unentangled with the rest.
///
/// The survivors keep their relative order and are renumbered from 0. The
/// returned factor is the slice of the state at the discarded register's
/// most probable value, renormalized, so its global phase is the one the
/// caller would read off the product form directly.
inline StateVector discard_register(const StateVector& state, std::span<const int> qubits) {
  if (!is_separable(state, qubits)) {
    throw entangled_discard_error("refusing to discard a register that is entangled with the rest of the state");
  }
  std::vector<int> rest;
  const Eigen::MatrixXcd m = detail::bipartite_matrix(state, qubits, &rest);
  Eigen::Index best_row = 0;
  m.rowwise().squaredNorm().maxCoeff(&best_row);
  const Eigen::VectorXcd kept = m.row(best_row).transpose().normalized();
  std::vector<amplitude> amps(kept.data(), kept.data() + kept.size());
  return StateVector::normalized(static_cast<int>(rest.size()), std::move(amps));
}

inline StateVector discard_register(const StateVector& state, std::initializer_list<int> qubits) {
  const std::vector<int> q(qubits);
  return discard_register(state, std::span<const int>(q));
}

}  // namespace qpat
