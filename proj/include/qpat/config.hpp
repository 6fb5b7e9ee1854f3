#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpat {

using basis_index = std::uint64_t;

inline constexpr int kDefaultQubitCap = 24;

// Tolerances shared by every module.
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kUnitaryTolerance = 1e-10;
inline constexpr double kSchmidtCutoff = 1e-9;
inline constexpr double kExactTolerance = 1e-12;

namespace detail {
inline std::atomic<int>& qubit_cap_storage() {
  static std::atomic<int> cap{kDefaultQubitCap};
  return cap;
}
}  // namespace detail

/// Largest register any StateVector may be allocated for.
inline int qubit_cap() { return detail::qubit_cap_storage().load(std::memory_order_relaxed); }

/// Overrides the register cap. Values outside [1, 62] are rejected.
inline void set_qubit_cap(int cap) {
  if (cap < 1 || cap > 62) {
    throw std::invalid_argument("qubit cap must lie in [1, 62], got " + std::to_string(cap));
  }
  detail::qubit_cap_storage().store(cap, std::memory_order_relaxed);
}

/// RAII override of the qubit cap, restored on scope exit.
class ScopedQubitCap {
 public:
  explicit ScopedQubitCap(int cap) : previous_(qubit_cap()) { set_qubit_cap(cap); }
  ~ScopedQubitCap() { set_qubit_cap(previous_); }
  ScopedQubitCap(const ScopedQubitCap&) = delete;
  ScopedQubitCap& operator=(const ScopedQubitCap&) = delete;

 private:
  int previous_;
};

}  // namespace qpat
