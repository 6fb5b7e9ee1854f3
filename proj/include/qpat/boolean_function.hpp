#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpat/config.hpp"
#include "qpat/errors.hpp"
#include "qpat/state_vector.hpp"

namespace qpat {

/// f(x) = b XOR (XOR over set bits i of x of columns[i]).
struct AffineForm {
  std::vector<basis_index> columns;
  basis_index offset = 0;
};

/// Explicit truth table of f: {0,1}^n -> {0,1}^m.
class BooleanFunction {
 public:
  static constexpr int kMaxInputBits = 24;
  static constexpr int kMaxOutputBits = 32;

  BooleanFunction(int n, int m, std::vector<basis_index> table) : n_(n), m_(m), table_(std::move(table)) {
    if (n < 1 || n > kMaxInputBits) throw argument_error("input width n must lie in [1, 24]");
    if (m < 1 || m > kMaxOutputBits) throw argument_error("output width m must lie in [1, 32]");
    if (table_.size() != dimension_of(n)) {
      throw argument_error("truth table has " + std::to_string(table_.size()) + " entries, expected 2^" +
                           std::to_string(n) + " = " + std::to_string(dimension_of(n)));
    }
    const basis_index bound = basis_index{1} << m;
    for (basis_index v : table_) {
      if (v >= bound) throw argument_error("truth table entry " + std::to_string(v) + " does not fit in m bits");
    }
  }

  /// Evaluates `predicate` over all inputs into a one-bit table.
  static BooleanFunction from_predicate(int n, const std::function<bool(basis_index)>& predicate) {
    if (n < 1 || n > kMaxInputBits) throw argument_error("input width n must lie in [1, 24]");
    std::vector<basis_index> table(dimension_of(n));
    for (basis_index x = 0; x < table.size(); ++x) table[x] = predicate(x) ? 1 : 0;
    return BooleanFunction(n, 1, std::move(table));
  }

  static BooleanFunction from_map(int n, int m, const std::function<basis_index(basis_index)>& map) {
    if (n < 1 || n > kMaxInputBits) throw argument_error("input width n must lie in [1, 24]");
    std::vector<basis_index> table(dimension_of(n));
    for (basis_index x = 0; x < table.size(); ++x) table[x] = map(x);
    return BooleanFunction(n, m, std::move(table));
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const std::vector<basis_index>& table() const noexcept { return table_; }
  basis_index operator()(basis_index x) const { return table_.at(x); }

  bool is_indicator() const noexcept { return m_ == 1; }

  bool is_constant() const {
    return std::all_of(table_.begin(), table_.end(), [&](basis_index v) { return v == table_.front(); });
  }

  /// Indicator with exactly half of its inputs mapped to 1.
  bool is_balanced() const {
    if (m_ != 1) return false;
    const auto ones = std::count(table_.begin(), table_.end(), basis_index{1});
    return static_cast<std::size_t>(ones) * 2 == table_.size();
  }

  std::vector<basis_index> preimage(basis_index value) const {
    std::vector<basis_index> out;
    for (basis_index x = 0; x < table_.size(); ++x) {
      if (table_[x] == value) out.push_back(x);
    }
    return out;
  }

  /// The GF(2)-affine form of f, when it has one.
  std::optional<AffineForm> affine_form() const {
    AffineForm form;
    form.offset = table_[0];
    form.columns.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) form.columns[static_cast<std::size_t>(i)] = table_[basis_index{1} << i] ^ form.offset;
    for (basis_index x = 0; x < table_.size(); ++x) {
      basis_index value = form.offset;
      for (int i = 0; i < n_; ++i) {
        if ((x >> i) & 1U) value ^= form.columns[static_cast<std::size_t>(i)];
      }
      if (value != table_[x]) return std::nullopt;
    }
    return form;
  }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_;
  int m_;
  std::vector<basis_index> table_;
};

// File form: {"n": 2, "m": 1, "table": [0, 1, 1, 0]}.

inline nlohmann::json to_json(const BooleanFunction& f) {
  return {{"n", f.n()}, {"m", f.m()}, {"table", f.table()}};
}

inline BooleanFunction boolean_function_from_json(const nlohmann::json& j) {
  try {
    return BooleanFunction(j.at("n").get<int>(), j.at("m").get<int>(),
                           j.at("table").get<std::vector<basis_index>>());
  } catch (const nlohmann::json::exception& e) {
    throw argument_error(std::string("malformed truth table document: ") + e.what());
  }
}

inline BooleanFunction load_boolean_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw argument_error("cannot open truth table file '" + path + "'");
  try {
    return boolean_function_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw argument_error("truth table file '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace qpat
