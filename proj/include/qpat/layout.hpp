#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qpat/config.hpp"
#include "qpat/errors.hpp"

namespace qpat {

/// Contiguous qubits [first, first + size).
struct QubitRange {
  int first = 0;
  int size = 0;

  int end() const noexcept { return first + size; }
  bool empty() const noexcept { return size == 0; }

  std::vector<int> qubits() const {
    std::vector<int> out(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) out[static_cast<std::size_t>(i)] = first + i;
    return out;
  }

  basis_index mask() const noexcept {
    return size == 0 ? 0 : (((basis_index{1} << size) - 1) << first);
  }

  /// Value held by this register inside a full basis index.
  basis_index extract(basis_index index) const noexcept {
    return (index & mask()) >> first;
  }

  basis_index place(basis_index value) const noexcept { return (value << first) & mask(); }

  friend bool operator==(const QubitRange&, const QubitRange&) = default;
};

struct NamedRange {
  std::string name;
  QubitRange range;
  friend bool operator==(const NamedRange&, const NamedRange&) = default;
};

/// Partition of a register into computational (n), workspace (m) and
/// optional named auxiliary ranges.
class RegisterLayout {
 public:
  RegisterLayout(QubitRange computational, QubitRange workspace, std::vector<NamedRange> auxiliary = {})
      : computational_(computational), workspace_(workspace), auxiliary_(std::move(auxiliary)) {
    validate();
  }

  /// |x>|y> with x on n qubits and y on m qubits; y takes the low qubits.
  static RegisterLayout standard(int n, int m = 0) { return stacked(n, m, {}); }

  /// |x>|w>|a_1>...|a_k> in ket order: the last auxiliary register takes the
  /// low qubits and the computational register the high ones.
  static RegisterLayout stacked(int n, int m, const std::vector<std::pair<std::string, int>>& auxiliary) {
    int next = 0;
    std::vector<NamedRange> aux(auxiliary.size());
    for (std::size_t i = auxiliary.size(); i-- > 0;) {
      aux[i] = NamedRange{auxiliary[i].first, QubitRange{next, auxiliary[i].second}};
      next += auxiliary[i].second;
    }
    QubitRange workspace{next, m};
    next += m;
    return RegisterLayout(QubitRange{next, n}, workspace, std::move(aux));
  }

  int n() const noexcept { return computational_.size; }
  int m() const noexcept { return workspace_.size; }
  const QubitRange& computational() const noexcept { return computational_; }
  const QubitRange& workspace() const noexcept { return workspace_; }
  const std::vector<NamedRange>& auxiliary() const noexcept { return auxiliary_; }

  const QubitRange& auxiliary(const std::string& name) const {
    for (const auto& r : auxiliary_) {
      if (r.name == name) return r.range;
    }
    throw argument_error("layout has no auxiliary register named '" + name + "'");
  }

  bool has_auxiliary(const std::string& name) const {
    return std::any_of(auxiliary_.begin(), auxiliary_.end(), [&](const NamedRange& r) { return r.name == name; });
  }

  int total_qubits() const noexcept {
    int total = computational_.size + workspace_.size;
    for (const auto& r : auxiliary_) total += r.range.size;
    return total;
  }

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

 private:
  void validate() const {
    if (computational_.size < 1) throw argument_error("computational register needs at least one qubit");
    std::vector<QubitRange> ranges{computational_, workspace_};
    for (const auto& r : auxiliary_) ranges.push_back(r.range);
    const int total = total_qubits();
    std::vector<bool> covered(static_cast<std::size_t>(total), false);
    for (const auto& r : ranges) {
      if (r.first < 0 || r.size < 0 || r.end() > total) {
        throw argument_error("register range out of bounds");
      }
      for (int q = r.first; q < r.end(); ++q) {
        if (covered[static_cast<std::size_t>(q)]) throw argument_error("register ranges overlap");
        covered[static_cast<std::size_t>(q)] = true;
      }
    }
  }

  QubitRange computational_;
  QubitRange workspace_;
  std::vector<NamedRange> auxiliary_;
};

}  // namespace qpat
