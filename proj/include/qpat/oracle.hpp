#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpat/boolean_function.hpp"
#include "qpat/circuit.hpp"
#include "qpat/errors.hpp"
#include "qpat/layout.hpp"
#include "qpat/state_vector.hpp"

namespace qpat {

/// Black-box unitary on an n-qubit input register and an m-qubit workspace.
///
/// The workspace takes the low qubits (RegisterLayout::standard), so basis
/// index (x << m) | y is the ket |x>|y>.
class Oracle {
 public:
  Oracle(int n, int m, Circuit action, std::string label)
      : n_(n), m_(m), action_(std::move(action)), label_(std::move(label)) {
    if (n < 1 || m < 1) throw argument_error("an oracle needs non-empty input and workspace registers");
    if (action_.num_qubits() != n + m) {
      throw argument_error("oracle action acts on " + std::to_string(action_.num_qubits()) + " qubits, expected " +
                           std::to_string(n + m));
    }
    if (!action_.measurement_free()) throw argument_error("an oracle action may not measure");
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const Circuit& action() const noexcept { return action_; }
  const std::string& label() const noexcept { return label_; }
  RegisterLayout layout() const { return RegisterLayout::standard(n_, m_); }

  StateVector apply(const StateVector& state) const { return simulate(action_, state); }

 private:
  int n_;
  int m_;
  Circuit action_;
  std::string label_;
};

/// Wraps an oracle and counts every application.
class InstrumentedOracle {
 public:
  explicit InstrumentedOracle(const Oracle& oracle) : oracle_(&oracle) {}

  StateVector apply(const StateVector& state) {
    ++invocations_;
    return oracle_->apply(state);
  }

  const Oracle& oracle() const noexcept { return *oracle_; }
  std::uint64_t invocations() const noexcept { return invocations_; }

 private:
  const Oracle* oracle_;
  std::uint64_t invocations_ = 0;
};

/// U_f |x, y> = |x, y XOR f(x)>.
///
/// GF(2)-affine functions lower to X and CNOT gates; anything else becomes a
/// single permutation op, which simulates exactly but cannot be exported.
inline Oracle synthesize_oracle(const BooleanFunction& f, std::string label = "U_f") {
  const int n = f.n();
  const int m = f.m();
  check_qubit_count(n + m);
  Circuit action(n + m);
  const std::string tag = "oracle:" + label;
  if (const auto affine = f.affine_form()) {
    for (int j = 0; j < m; ++j) {
      if ((affine->offset >> j) & 1U) action.x(j, tag);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        if ((affine->columns[static_cast<std::size_t>(i)] >> j) & 1U) action.cnot(m + i, j, tag);
      }
    }
  } else {
    std::vector<basis_index> perm(dimension_of(n + m));
    const basis_index y_mask = (basis_index{1} << m) - 1;
    for (basis_index b = 0; b < perm.size(); ++b) {
      const basis_index x = b >> m;
      perm[b] = (x << m) | ((b & y_mask) ^ f(x));
    }
    std::vector<int> targets(static_cast<std::size_t>(n + m));
    for (int q = 0; q < n + m; ++q) targets[static_cast<std::size_t>(q)] = q;
    action.add(Gate::permutation_of(std::move(targets), std::move(perm)), tag);
  }
  return Oracle(n, m, std::move(action), std::move(label));
}

}  // namespace qpat
