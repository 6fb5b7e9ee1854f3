#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpat {

/// Base of every domain error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Register larger than the configured qubit cap.
class capacity_error : public error {
 public:
  using error::error;
};

/// Malformed input: bad indices, non-unitary matrix, wrong lengths.
class argument_error : public error {
 public:
  using error::error;
};

/// Attempt to drop a register that is entangled with the rest.
class entangled_discard_error : public error {
 public:
  using error::error;
};

/// A function table violates the promise an algorithm relies on.
class promise_error : public error {
 public:
  using error::error;
};

/// Amplification requested on a problem with no good states, or a round budget ran out.
class no_solution_error : public error {
 public:
  using error::error;
};

/// Gate kind that has no OpenQASM 2.0 spelling.
class unsupported_gate_error : public error {
 public:
  unsupported_gate_error(std::size_t op_index, const std::string& what)
      : error(what), op_index_(op_index) {}
  std::size_t op_index() const noexcept { return op_index_; }

 private:
  std::size_t op_index_;
};

}  // namespace qpat
