#pragma once

#include <cstdio>
#include <string>

#include "qpat/circuit.hpp"
#include "qpat/errors.hpp"

namespace qpat {

/// Angle text with 12 significant digits; identical input gives identical text.
inline std::string format_angle(double angle) {
  if (angle == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", angle);
  return buf;
}

/// OpenQASM 2.0 text for `circuit`.
///
/// h/x/z/u1/cx/swap map one to one onto the core gate kinds; measurements
/// add a creg of the same width. Generic, permutation and diagonal ops have
/// no qelib1 spelling and raise unsupported_gate_error naming the op.
/// Provenance tags are written as a `//` comment whenever the tag changes.
inline std::string to_qasm(const Circuit& circuit) {
  std::string body;
  std::string current_tag;
  bool has_measure = false;
  const auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
  for (std::size_t i = 0; i < circuit.ops().size(); ++i) {
    const auto& op = circuit.ops()[i];
    const Gate& g = op.gate;
    if (op.tag != current_tag) {
      current_tag = op.tag;
      if (!current_tag.empty()) body += "// " + current_tag + "\n";
    }
    switch (g.kind) {
      case GateKind::H: body += "h " + q(g.targets[0]) + ";\n"; break;
      case GateKind::X: body += "x " + q(g.targets[0]) + ";\n"; break;
      case GateKind::Z: body += "z " + q(g.targets[0]) + ";\n"; break;
      case GateKind::Phase: body += "u1(" + format_angle(g.angle) + ") " + q(g.targets[0]) + ";\n"; break;
      case GateKind::CNOT: body += "cx " + q(g.targets[0]) + "," + q(g.targets[1]) + ";\n"; break;
      case GateKind::SWAP: body += "swap " + q(g.targets[0]) + "," + q(g.targets[1]) + ";\n"; break;
      case GateKind::Measure:
        has_measure = true;
        for (int t : g.targets) body += "measure " + q(t) + " -> c[" + std::to_string(t) + "];\n";
        break;
      case GateKind::Generic:
      case GateKind::Permutation:
      case GateKind::Diagonal: {
        std::string what = "op " + std::to_string(i) + " (" + to_string(g.kind);
        if (!op.tag.empty()) what += ", from " + op.tag;
        what += ") has no OpenQASM 2.0 form; lower it to h/x/z/u1/cx/swap before export";
        throw unsupported_gate_error(i, what);
      }
    }
  }
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.num_qubits()) + "];\n";
  if (has_measure) out += "creg c[" + std::to_string(circuit.num_qubits()) + "];\n";
  return out + body;
}

}  // namespace qpat
