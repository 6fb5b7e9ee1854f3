#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpat/errors.hpp"
#include "qpat/gate.hpp"
#include "qpat/rng.hpp"
#include "qpat/simulator.hpp"
#include "qpat/state_vector.hpp"

namespace qpat {

/// One recorded gate application. `tag` names the pattern that emitted it.
struct GateOp {
  Gate gate;
  std::string tag;
  friend bool operator==(const GateOp&, const GateOp&) = default;
};

/// Ordered gate list over a fixed number of qubits: ops[0] acts first.
class Circuit {
 public:
  explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw argument_error("a circuit needs at least one qubit");
  }

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<GateOp>& ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }

  Circuit& add(Gate gate, std::string tag = {}) {
    gate.validate(num_qubits_);
    ops_.push_back(GateOp{std::move(gate), std::move(tag)});
    return *this;
  }

  Circuit& h(int q, std::string tag = {}) { return add(Gate::h(q), std::move(tag)); }
  Circuit& x(int q, std::string tag = {}) { return add(Gate::x(q), std::move(tag)); }
  Circuit& z(int q, std::string tag = {}) { return add(Gate::z(q), std::move(tag)); }
  Circuit& phase(int q, double angle, std::string tag = {}) { return add(Gate::phase(q, angle), std::move(tag)); }
  Circuit& cnot(int control, int target, std::string tag = {}) {
    return add(Gate::cnot(control, target), std::move(tag));
  }
  Circuit& swap(int a, int b, std::string tag = {}) { return add(Gate::swap(a, b), std::move(tag)); }
  Circuit& measure(std::vector<int> qubits, std::string tag = {}) {
    return add(Gate::measure(std::move(qubits)), std::move(tag));
  }

  /// Appends `other`, which must have the same width.
  Circuit& append(const Circuit& other) {
    if (other.num_qubits_ != num_qubits_) throw argument_error("cannot append circuits of different widths");
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
    return *this;
  }

  /// Appends `other` with its qubit q relabelled to mapping[q].
  Circuit& append_mapped(const Circuit& other, std::span<const int> mapping) {
    for (const auto& op : other.remapped(num_qubits_, mapping).ops_) ops_.push_back(op);
    return *this;
  }

  /// Same ops on a `width`-qubit circuit with qubit q relabelled to mapping[q].
  Circuit remapped(int width, std::span<const int> mapping) const {
    if (static_cast<int>(mapping.size()) != num_qubits_) {
      throw argument_error("qubit mapping must name every qubit of the source circuit");
    }
    Circuit out(width);
    for (const auto& op : ops_) {
      Gate g = op.gate;
      for (auto& t : g.targets) t = mapping[static_cast<std::size_t>(t)];
      out.add(std::move(g), op.tag);
    }
    return out;
  }

  /// Same ops shifted up by `offset` qubits inside a `width`-qubit circuit.
  Circuit shifted(int offset, int width) const {
    std::vector<int> mapping(static_cast<std::size_t>(num_qubits_));
    for (int q = 0; q < num_qubits_; ++q) mapping[static_cast<std::size_t>(q)] = q + offset;
    return remapped(width, mapping);
  }

  /// Copy with every untagged op tagged `tag`.
  Circuit tagged(const std::string& tag) const {
    Circuit out = *this;
    for (auto& op : out.ops_) {
      if (op.tag.empty()) op.tag = tag;
    }
    return out;
  }

  bool measurement_free() const {
    return std::none_of(ops_.begin(), ops_.end(), [](const GateOp& op) { return op.gate.kind == GateKind::Measure; });
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_;
  std::vector<GateOp> ops_;
};

/// Reversed op list with every gate replaced by its adjoint.
inline Circuit inverse(const Circuit& circuit) {
  if (!circuit.measurement_free()) throw argument_error("cannot invert a circuit that contains measurements");
  Circuit out(circuit.num_qubits());
  for (auto it = circuit.ops().rbegin(); it != circuit.ops().rend(); ++it) out.add(it->gate.adjoint(), it->tag);
  return out;
}

/// Folds the ops over `input`. Measurement ops are rejected.
inline StateVector simulate(const Circuit& circuit, const StateVector& input) {
  if (circuit.num_qubits() != input.num_qubits()) {
    throw argument_error("circuit has " + std::to_string(circuit.num_qubits()) + " qubits, state has " +
                         std::to_string(input.num_qubits()));
  }
  if (!circuit.measurement_free()) throw argument_error("simulating measurements needs a random generator");
  std::vector<amplitude> amps(input.amplitudes().begin(), input.amplitudes().end());
  for (const auto& op : circuit.ops()) detail::apply_in_place(amps, op.gate);
  return StateVector(input.num_qubits(), std::move(amps), StateVector::Unchecked{});
}

/// Folds the ops over `input`, sampling measurement ops with `rng`.
inline StateVector simulate(const Circuit& circuit, const StateVector& input, Xoshiro256& rng) {
  if (circuit.num_qubits() != input.num_qubits()) throw argument_error("circuit and state widths differ");
  StateVector state = input;
  for (const auto& op : circuit.ops()) {
    if (op.gate.kind == GateKind::Measure) {
      state = measure_subset(state, op.gate.targets, rng).collapsed;
    } else {
      state = apply_gate(state, op.gate);
    }
  }
  return state;
}

// Structured text form: {"num_qubits": n, "ops": [{"kind", "targets", ...}]}.

inline nlohmann::json to_json(const Circuit& circuit) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : circuit.ops()) {
    const Gate& g = op.gate;
    nlohmann::json j{{"kind", to_string(g.kind)}, {"targets", g.targets}};
    if (g.kind == GateKind::Phase) j["angle"] = g.angle;
    if (g.kind == GateKind::Generic) {
      nlohmann::json m = nlohmann::json::array();
      for (const auto& a : g.matrix) m.push_back({a.real(), a.imag()});
      j["matrix"] = std::move(m);
    }
    if (g.kind == GateKind::Permutation) j["permutation"] = g.permutation;
    if (g.kind == GateKind::Diagonal) j["phases"] = g.phases;
    if (!op.tag.empty()) j["tag"] = op.tag;
    ops.push_back(std::move(j));
  }
  return {{"num_qubits", circuit.num_qubits()}, {"ops", std::move(ops)}};
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    Circuit circuit(j.at("num_qubits").get<int>());
    for (const auto& op : j.at("ops")) {
      Gate g;
      g.kind = gate_kind_from_string(op.at("kind").get<std::string>());
      g.targets = op.at("targets").get<std::vector<int>>();
      if (op.contains("angle")) g.angle = op.at("angle").get<double>();
      if (op.contains("matrix")) {
        for (const auto& a : op.at("matrix")) g.matrix.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
      }
      if (op.contains("permutation")) g.permutation = op.at("permutation").get<std::vector<basis_index>>();
      if (op.contains("phases")) g.phases = op.at("phases").get<std::vector<double>>();
      circuit.add(std::move(g), op.value("tag", std::string{}));
    }
    return circuit;
  } catch (const nlohmann::json::exception& e) {
    throw argument_error(std::string("malformed circuit document: ") + e.what());
  }
}

}  // namespace qpat
