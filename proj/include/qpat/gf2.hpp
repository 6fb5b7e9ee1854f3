#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpat/config.hpp"
#include "qpat/errors.hpp"

namespace qpat {

/// Homogeneous linear system over GF(2): row . s = 0 for every row.
/// Each row is an n-bit mask; bit i is the coefficient of s_i.
struct Gf2System {
  int n = 0;
  std::vector<basis_index> rows;

  Gf2System(int width, std::vector<basis_index> r) : n(width), rows(std::move(r)) {
    if (n < 1 || n > 62) throw argument_error("GF(2) system width must lie in [1, 62]");
    for (basis_index row : rows) {
      if (row >> n) throw argument_error("GF(2) row " + std::to_string(row) + " wider than " + std::to_string(n) + " bits");
    }
  }
};

/// Parity of the bitwise AND, i.e. the GF(2) dot product.
constexpr int gf2_dot(basis_index a, basis_index b) noexcept { return __builtin_popcountll(a & b) & 1; }

/// Basis of the null space, via reduced row echelon form.
inline std::vector<basis_index> gf2_nullspace_basis(const Gf2System& system) {
  std::vector<basis_index> rows = system.rows;
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < system.n && rank < rows.size(); ++col) {
    const basis_index bit = basis_index{1} << col;
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] & bit)) rows[r] ^= rows[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(system.n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<basis_index> basis;
  for (int free = 0; free < system.n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis_index v = basis_index{1} << free;
    for (std::size_t r = 0; r < rank; ++r) {
      if ((rows[r] >> free) & 1U) v |= basis_index{1} << pivot_col[r];
    }
    basis.push_back(v);
  }
  return basis;
}

/// Every nonzero s with row . s = 0 for all rows, ascending.
inline std::vector<basis_index> gf2_nullspace(const Gf2System& system) {
  if (system.n > 20) throw argument_error("full null-space enumeration is limited to width 20");
  const auto basis = gf2_nullspace_basis(system);
  std::vector<basis_index> out;
  const basis_index combos = basis_index{1} << basis.size();
  for (basis_index mask = 1; mask < combos; ++mask) {
    basis_index v = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((mask >> i) & 1U) v ^= basis[i];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qpat
