#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpat/config.hpp"
#include "qpat/errors.hpp"

namespace qpat {

/// Subset G of the basis indices {0, ..., universe - 1}, held either as an
/// explicit member list or as a predicate. G may be empty.
class GoodSet {
 public:
  static GoodSet of(basis_index universe, std::vector<basis_index> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (basis_index x : members) {
      if (x >= universe) {
        throw argument_error("good-set member " + std::to_string(x) + " outside universe of size " +
                             std::to_string(universe));
      }
    }
    auto shared = std::make_shared<const std::vector<basis_index>>(std::move(members));
    GoodSet g(universe, [shared](basis_index x) { return std::binary_search(shared->begin(), shared->end(), x); });
    g.members_ = std::move(shared);
    return g;
  }

  static GoodSet where(basis_index universe, std::function<bool(basis_index)> predicate) {
    if (!predicate) throw argument_error("good-set predicate is empty");
    return GoodSet(universe, std::move(predicate));
  }

  /// Both forms at once; they must agree on every index.
  static GoodSet of_checked(basis_index universe, std::vector<basis_index> members,
                            const std::function<bool(basis_index)>& predicate) {
    GoodSet g = of(universe, std::move(members));
    for (basis_index x = 0; x < universe; ++x) {
      if (g.contains(x) != predicate(x)) {
        throw argument_error("explicit good set and predicate disagree at index " + std::to_string(x));
      }
    }
    return g;
  }

  basis_index universe() const noexcept { return universe_; }
  bool contains(basis_index x) const { return x < universe_ && predicate_(x); }
  bool is_explicit() const noexcept { return members_ != nullptr; }

  std::vector<basis_index> members() const {
    if (members_) return *members_;
    std::vector<basis_index> out;
    for (basis_index x = 0; x < universe_; ++x) {
      if (predicate_(x)) out.push_back(x);
    }
    return out;
  }

  std::size_t count() const { return members_ ? members_->size() : members().size(); }
  bool empty() const { return count() == 0; }

 private:
  GoodSet(basis_index universe, std::function<bool(basis_index)> predicate)
      : universe_(universe), predicate_(std::move(predicate)) {
    if (universe == 0) throw argument_error("good-set universe must be non-empty");
  }

  basis_index universe_;
  std::function<bool(basis_index)> predicate_;
  std::shared_ptr<const std::vector<basis_index>> members_;
};

}  // namespace qpat
