#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qpat/config.hpp"
#include "qpat/errors.hpp"
#include "qpat/state_vector.hpp"

namespace qpat {

enum class GateKind { H, X, Z, Phase, CNOT, SWAP, Generic, Permutation, Diagonal, Measure };

inline std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::Phase: return "phase";
    case GateKind::CNOT: return "cnot";
    case GateKind::SWAP: return "swap";
    case GateKind::Generic: return "generic";
    case GateKind::Permutation: return "permutation";
    case GateKind::Diagonal: return "diagonal";
    case GateKind::Measure: return "measure";
  }
  return "?";
}

inline GateKind gate_kind_from_string(const std::string& name) {
  for (GateKind k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::Phase, GateKind::CNOT, GateKind::SWAP,
                     GateKind::Generic, GateKind::Permutation, GateKind::Diagonal, GateKind::Measure}) {
    if (to_string(k) == name) return k;
  }
  throw argument_error("unknown gate kind '" + name + "'");
}

/// A gate and the qubits it acts on.
///
/// Targets are ordered: targets[j] supplies bit j of the gate's local basis
/// index. CNOT takes {control, target}. Generic matrices are row-major
/// 2^k x 2^k; a permutation maps local index b to permutation[b]; a diagonal
/// multiplies local index b by exp(i * phases[b]). Measure is not unitary and
/// only appears inside circuits.
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> targets;
  double angle = 0.0;
  std::vector<amplitude> matrix;
  std::vector<basis_index> permutation;
  std::vector<double> phases;

  static Gate h(int q) { return {GateKind::H, {q}}; }
  static Gate x(int q) { return {GateKind::X, {q}}; }
  static Gate z(int q) { return {GateKind::Z, {q}}; }
  static Gate phase(int q, double angle) { return {GateKind::Phase, {q}, angle}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, {control, target}}; }
  static Gate swap(int a, int b) { return {GateKind::SWAP, {a, b}}; }

  static Gate generic(std::vector<int> targets, std::vector<amplitude> matrix) {
    Gate g{GateKind::Generic, std::move(targets)};
    g.matrix = std::move(matrix);
    return g;
  }
  static Gate permutation_of(std::vector<int> targets, std::vector<basis_index> perm) {
    Gate g{GateKind::Permutation, std::move(targets)};
    g.permutation = std::move(perm);
    return g;
  }
  static Gate diagonal(std::vector<int> targets, std::vector<double> phases) {
    Gate g{GateKind::Diagonal, std::move(targets)};
    g.phases = std::move(phases);
    return g;
  }
  static Gate measure(std::vector<int> qubits) { return {GateKind::Measure, std::move(qubits)}; }

  int arity() const noexcept { return static_cast<int>(targets.size()); }
  bool is_unitary() const noexcept { return kind != GateKind::Measure; }

  friend bool operator==(const Gate&, const Gate&) = default;

  /// Throws argument_error unless the gate is well formed on `num_qubits`.
  void validate(int num_qubits) const {
    if (targets.empty()) throw argument_error(to_string(kind) + " gate has no targets");
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (targets[i] < 0 || targets[i] >= num_qubits) {
        throw argument_error(to_string(kind) + " target " + std::to_string(targets[i]) + " out of range for " +
                             std::to_string(num_qubits) + " qubits");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (targets[i] == targets[j]) throw argument_error(to_string(kind) + " has duplicate target qubits");
      }
    }
    const auto expect_arity = [&](int k) {
      if (arity() != k) {
        throw argument_error(to_string(kind) + " expects " + std::to_string(k) + " target(s), got " +
                             std::to_string(arity()));
      }
    };
    const std::size_t dim = dimension_of(arity());
    switch (kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Z:
        expect_arity(1);
        break;
      case GateKind::Phase:
        expect_arity(1);
        if (!std::isfinite(angle)) throw argument_error("phase angle must be finite");
        break;
      case GateKind::CNOT:
      case GateKind::SWAP:
        expect_arity(2);
        break;
      case GateKind::Generic: {
        if (matrix.size() != dim * dim) throw argument_error("generic matrix dimension does not match target count");
        for (std::size_t r = 0; r < dim; ++r) {
          for (std::size_t c = 0; c < dim; ++c) {
            amplitude dot{};
            for (std::size_t k = 0; k < dim; ++k) dot += std::conj(matrix[k * dim + r]) * matrix[k * dim + c];
            const amplitude expected = r == c ? 1.0 : 0.0;
            if (std::abs(dot - expected) > kUnitaryTolerance) throw argument_error("generic matrix is not unitary");
          }
        }
        break;
      }
      case GateKind::Permutation: {
        if (permutation.size() != dim) throw argument_error("permutation length does not match target count");
        std::vector<bool> seen(dim, false);
        for (basis_index p : permutation) {
          if (p >= dim || seen[p]) throw argument_error("permutation is not a bijection");
          seen[p] = true;
        }
        break;
      }
      case GateKind::Diagonal:
        if (phases.size() != dim) throw argument_error("diagonal length does not match target count");
        for (double p : phases) {
          if (!std::isfinite(p)) throw argument_error("diagonal phases must be finite");
        }
        break;
      case GateKind::Measure:
        break;
    }
  }

  /// Hermitian adjoint. Measurement has none.
  Gate adjoint() const {
    Gate g = *this;
    switch (kind) {
      case GateKind::H:
      case GateKind::X:
      case GateKind::Z:
      case GateKind::CNOT:
      case GateKind::SWAP:
        break;
      case GateKind::Phase:
        g.angle = -angle;
        break;
      case GateKind::Generic: {
        const std::size_t dim = dimension_of(arity());
        for (std::size_t r = 0; r < dim; ++r) {
          for (std::size_t c = 0; c < dim; ++c) g.matrix[r * dim + c] = std::conj(matrix[c * dim + r]);
        }
        break;
      }
      case GateKind::Permutation:
        for (std::size_t b = 0; b < permutation.size(); ++b) g.permutation[permutation[b]] = b;
        break;
      case GateKind::Diagonal:
        for (auto& p : g.phases) p = -p;
        break;
      case GateKind::Measure:
        throw argument_error("measurement has no inverse");
    }
    return g;
  }
};

}  // namespace qpat
