#pragma once

// Basis convention used everywhere in qpat:
//   qubit i contributes 2^i to a basis index (qubit 0 is least significant),
//   bitstrings print the highest qubit leftmost, and a ket product |a>|b>
//   places register b on the low qubits. A register written first in ket
//   notation therefore occupies the high end of the index.

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpat/config.hpp"
#include "qpat/errors.hpp"

namespace qpat {

using amplitude = std::complex<double>;

/// Number of basis states spanned by `num_qubits` qubits.
constexpr std::size_t dimension_of(int num_qubits) noexcept {
  return std::size_t{1} << num_qubits;
}

inline void check_qubit_count(int num_qubits) {
  if (num_qubits < 1) {
    throw capacity_error("a register needs at least one qubit, got " + std::to_string(num_qubits));
  }
  if (num_qubits > qubit_cap()) {
    throw capacity_error("register of " + std::to_string(num_qubits) +
                         " qubits exceeds the configured cap of " + std::to_string(qubit_cap()));
  }
}

/// Renders `index` as `width` bits, highest qubit leftmost.
inline std::string to_bitstring(basis_index index, int width) {
  std::string bits(static_cast<std::size_t>(width), '0');
  for (int q = 0; q < width; ++q) {
    if ((index >> q) & 1U) bits[static_cast<std::size_t>(width - 1 - q)] = '1';
  }
  return bits;
}

inline basis_index parse_bitstring(std::string_view bits) {
  if (bits.empty() || bits.size() > 62) throw argument_error("bitstring length must be in [1, 62]");
  basis_index index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw argument_error("bitstring may only contain 0 and 1");
    index = (index << 1) | static_cast<basis_index>(c == '1');
  }
  return index;
}

/// Dense pure state over `num_qubits` qubits.
///
/// Values are immutable from the outside: every operation in the library
/// takes a state by const reference and returns a new one. The constructor
/// checks length, finiteness and normalization.
class StateVector {
 public:
  StateVector(int num_qubits, std::vector<amplitude> amplitudes)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(num_qubits_);
    if (amplitudes_.size() != dimension_of(num_qubits_)) {
      throw argument_error("amplitude vector has length " + std::to_string(amplitudes_.size()) +
                           ", expected " + std::to_string(dimension_of(num_qubits_)));
    }
    for (const auto& a : amplitudes_) {
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw argument_error("amplitudes must be finite");
      }
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
      throw argument_error("amplitudes are not normalized (norm " + std::to_string(norm()) + ")");
    }
  }

  /// |0...0>.
  static StateVector zero(int num_qubits) { return basis(num_qubits, 0); }

  static StateVector basis(int num_qubits, basis_index index) {
    check_qubit_count(num_qubits);
    if (index >= dimension_of(num_qubits)) {
      throw argument_error("basis index " + std::to_string(index) + " out of range for " +
                           std::to_string(num_qubits) + " qubits");
    }
    std::vector<amplitude> amps(dimension_of(num_qubits));
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps), Unchecked{});
  }

  /// Scales an arbitrary nonzero vector to unit norm.
  static StateVector normalized(int num_qubits, std::vector<amplitude> amplitudes) {
    check_qubit_count(num_qubits);
    if (amplitudes.size() != dimension_of(num_qubits)) {
      throw argument_error("amplitude vector has length " + std::to_string(amplitudes.size()) +
                           ", expected " + std::to_string(dimension_of(num_qubits)));
    }
    double sum = 0.0;
    for (const auto& a : amplitudes) sum += std::norm(a);
    if (!(sum > 0.0) || !std::isfinite(sum)) throw argument_error("cannot normalize a zero-norm vector");
    const double scale = 1.0 / std::sqrt(sum);
    for (auto& a : amplitudes) a *= scale;
    return StateVector(num_qubits, std::move(amplitudes));
  }

  int num_qubits() const noexcept { return num_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const amplitude> amplitudes() const noexcept { return amplitudes_; }
  const amplitude& operator[](basis_index i) const { return amplitudes_[i]; }

  double probability(basis_index i) const { return std::norm(amplitudes_[i]); }

  double norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
  }

  std::vector<double> probabilities() const {
    std::vector<double> p(amplitudes_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(amplitudes_[i]);
    return p;
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

  // Kernel entry points: take ownership of a buffer that the caller has kept
  // normalized by construction (unitary evolution, explicit renormalization).
  struct Unchecked {};
  StateVector(int num_qubits, std::vector<amplitude> amplitudes, Unchecked)
      : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}
  std::vector<amplitude> release() && { return std::move(amplitudes_); }

 private:
  int num_qubits_;
  std::vector<amplitude> amplitudes_;
};

inline StateVector state_zero(int total_qubits) { return StateVector::zero(total_qubits); }

/// |high>|low>: `low` occupies qubits [0, low.num_qubits()).
inline StateVector tensor(const StateVector& high, const StateVector& low) {
  const int total = high.num_qubits() + low.num_qubits();
  check_qubit_count(total);
  std::vector<amplitude> amps(dimension_of(total));
  const std::size_t low_dim = low.dimension();
  for (std::size_t h = 0; h < high.dimension(); ++h) {
    if (high[h] == amplitude{}) continue;
    for (std::size_t l = 0; l < low_dim; ++l) amps[(h * low_dim) + l] = high[h] * low[l];
  }
  return StateVector(total, std::move(amps), StateVector::Unchecked{});
}

/// <a|b>.
inline amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw argument_error("inner product of states with different widths");
  amplitude sum{};
  for (std::size_t i = 0; i < a.dimension(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

/// Largest element-wise |a_i - b_i|.
inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw argument_error("comparing states with different widths");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

/// True iff a = c*b for some unit scalar c, decided by |<a|b>| >= 1 - tol.
inline bool states_equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

}  // namespace qpat
