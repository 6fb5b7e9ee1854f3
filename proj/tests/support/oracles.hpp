#pragma once

// Test-only reference constructions. Nothing here calls the simulator
// kernels: operators are built as explicit dense matrices from the textbook
// definitions and applied by plain matrix-vector products.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "qpat/qpat.hpp"

namespace qpat::testing {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Local 2^k x 2^k matrix of a gate, from the definition of each kind.
inline Matrix local_matrix(const Gate& g) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::size_t dim = std::size_t{1} << g.targets.size();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  switch (g.kind) {
    case GateKind::H: m << r, r, r, -r; break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    case GateKind::Z: m << 1, 0, 0, -1; break;
    case GateKind::Phase: m << 1, 0, 0, std::polar(1.0, g.angle); break;
    case GateKind::CNOT:
      // local bit 0 = control, bit 1 = target
      m(0, 0) = 1; m(3, 1) = 1; m(2, 2) = 1; m(1, 3) = 1;
      break;
    case GateKind::SWAP:
      m(0, 0) = 1; m(2, 1) = 1; m(1, 2) = 1; m(3, 3) = 1;
      break;
    case GateKind::Generic:
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(Eigen::Index(i), Eigen::Index(j)) = g.matrix[i * dim + j];
      break;
    case GateKind::Permutation:
      for (std::size_t b = 0; b < dim; ++b) m(Eigen::Index(g.permutation[b]), Eigen::Index(b)) = 1;
      break;
    case GateKind::Diagonal:
      for (std::size_t b = 0; b < dim; ++b) m(Eigen::Index(b), Eigen::Index(b)) = std::polar(1.0, g.phases[b]);
      break;
    case GateKind::Measure: break;
  }
  return m;
}

/// Full 2^n operator: (local matrix) on the targets, identity elsewhere,
/// wired by index arithmetic over every (row, column) pair.
inline Matrix full_operator(const Gate& g, int n) {
  const Matrix local = local_matrix(g);
  const std::size_t dim = std::size_t{1} << n;
  basis_index mask = 0;
  for (int t : g.targets) mask |= basis_index{1} << t;
  const auto local_of = [&](basis_index i) {
    basis_index l = 0;
    for (std::size_t j = 0; j < g.targets.size(); ++j) l |= ((i >> g.targets[j]) & 1U) << j;
    return l;
  };
  Matrix full = Matrix::Zero(Eigen::Index(dim), Eigen::Index(dim));
  for (basis_index row = 0; row < dim; ++row)
    for (basis_index col = 0; col < dim; ++col)
      if ((row & ~mask) == (col & ~mask)) full(Eigen::Index(row), Eigen::Index(col)) = local(Eigen::Index(local_of(row)), Eigen::Index(local_of(col)));
  return full;
}

inline Matrix full_operator(const Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  Matrix u = Matrix::Identity(Eigen::Index(dim), Eigen::Index(dim));
  for (const auto& op : c.ops()) u = full_operator(op.gate, c.num_qubits()) * u;
  return u;
}

inline Vector to_eigen(const StateVector& s) {
  Vector v(Eigen::Index(s.dimension()));
  for (std::size_t i = 0; i < s.dimension(); ++i) v(Eigen::Index(i)) = s[i];
  return v;
}

inline double max_diff(const StateVector& s, const Vector& v) {
  return (to_eigen(s) - v).cwiseAbs().maxCoeff();
}

inline StateVector random_state(int n, Xoshiro256& rng) {
  std::vector<amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
  return StateVector::normalized(n, std::move(amps));
}

/// Haar-ish random unitary from the QR factorization of a random matrix.
inline std::vector<amplitude> random_unitary(int k, Xoshiro256& rng) {
  const Eigen::Index dim = Eigen::Index(1) << k;
  Matrix a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = {rng.uniform() - 0.5, rng.uniform() - 0.5};
  const Matrix q = Eigen::HouseholderQR<Matrix>(a).householderQ();
  std::vector<amplitude> out(std::size_t(dim * dim));
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) out[std::size_t(i * dim + j)] = q(i, j);
  return out;
}

/// Distinct random qubits out of n.
inline std::vector<int> random_targets(int n, int k, Xoshiro256& rng) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[std::size_t(i)] = i;
  for (int i = n - 1; i > 0; --i) std::swap(pool[std::size_t(i)], pool[rng.uniform_int(std::uint64_t(i))]);
  pool.resize(std::size_t(k));
  return pool;
}

inline std::vector<basis_index> random_permutation(std::size_t dim, Xoshiro256& rng) {
  std::vector<basis_index> p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = i;
  for (std::size_t i = dim - 1; i > 0; --i) std::swap(p[i], p[rng.uniform_int(i)]);
  return p;
}

/// A random gate of any unitary kind on n >= 2 qubits.
inline Gate random_gate(int n, Xoshiro256& rng) {
  switch (rng.uniform_int(8)) {
    case 0: return Gate::h(random_targets(n, 1, rng)[0]);
    case 1: return Gate::x(random_targets(n, 1, rng)[0]);
    case 2: return Gate::z(random_targets(n, 1, rng)[0]);
    case 3: return Gate::phase(random_targets(n, 1, rng)[0], (rng.uniform() - 0.5) * 8.0);
    case 4: { auto t = random_targets(n, 2, rng); return Gate::cnot(t[0], t[1]); }
    case 5: { auto t = random_targets(n, 2, rng); return Gate::swap(t[0], t[1]); }
    case 6: {
      const int k = 1 + int(rng.uniform_int(std::uint64_t(std::min(n, 3) - 1)));
      return Gate::generic(random_targets(n, k, rng), random_unitary(k, rng));
    }
    case 7: {
      const int k = 1 + int(rng.uniform_int(std::uint64_t(std::min(n, 3) - 1)));
      return Gate::permutation_of(random_targets(n, k, rng), random_permutation(std::size_t{1} << k, rng));
    }
    default: {
      const int k = 1 + int(rng.uniform_int(std::uint64_t(std::min(n, 3) - 1)));
      std::vector<double> phases(std::size_t{1} << k);
      for (auto& p : phases) p = (rng.uniform() - 0.5) * 8.0;
      return Gate::diagonal(random_targets(n, k, rng), std::move(phases));
    }
  }
}

inline Circuit random_circuit(int n, int ops, Xoshiro256& rng) {
  Circuit c(n);
  for (int i = 0; i < ops; ++i) c.add(random_gate(n, rng));
  return c;
}

inline BooleanFunction random_function(int n, int m, Xoshiro256& rng) {
  std::vector<basis_index> table(std::size_t{1} << n);
  for (auto& v : table) v = rng.uniform_int((basis_index{1} << m) - 1);
  return BooleanFunction(n, m, std::move(table));
}

/// The state sum_x amps[x] |x>|0...>|f(x)> built directly from its formula.
inline StateVector direct_uncomputed_state(const std::vector<amplitude>& input_amps, const BooleanFunction& f,
                                           int garbage_qubits) {
  const int n = f.n(), g = garbage_qubits, m = f.m();
  std::vector<amplitude> out(std::size_t{1} << (n + g + m));
  for (basis_index x = 0; x < input_amps.size(); ++x) out[(x << (g + m)) | f(x)] = input_amps[x];
  return StateVector(n + g + m, std::move(out));
}

}  // namespace qpat::testing
