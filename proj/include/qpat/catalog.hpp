#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpat {

/// One entry of the pattern language.
struct PatternDoc {
  std::string id;    ///< CamelCase key, also the DOT node name
  std::string name;  ///< display name
  std::vector<std::string> aliases;
  std::string intent;
  std::string icon;
  std::string problem;
  std::string context;
  std::string solution;
  std::string known_uses;
  std::vector<std::string> next;  ///< ids of related patterns
};

struct PatternEdge {
  std::string from;
  std::string to;
  std::string note;
};

/// "aka A aka B", or empty when the pattern has no aliases.
inline std::string alias_line(const PatternDoc& doc) {
  std::string out;
  for (const auto& a : doc.aliases) out += (out.empty() ? "aka " : " aka ") + a;
  return out;
}

namespace detail {

struct EdgeRow {
  const char* from;
  const char* to;
  const char* note;
};

// Next-links, one row per reference in each pattern's "Next" element.
inline constexpr EdgeRow kPatternEdges[] = {
    {"Initialization", "UniformSuperposition", "an initialized register is usually put into uniform superposition"},
    {"Initialization", "FunctionTable", "function tables start from these initial states"},
    {"Initialization", "Oracle", "an initialized register can feed an oracle"},
    {"UniformSuperposition", "Initialization", "superposition is built on an initialized register"},
    {"UniformSuperposition", "CreatingEntanglement", "a superposed register can be entangled"},
    {"UniformSuperposition", "Oracle", "a superposed register can feed an oracle"},
    {"CreatingEntanglement", "Initialization", "entangling follows initialization"},
    {"CreatingEntanglement", "FunctionTable", "entangling through U_f yields a function table"},
    {"FunctionTable", "Initialization", "needs an initialized register"},
    {"FunctionTable", "UniformSuperposition", "the input register is superposed first"},
    {"FunctionTable", "AmplitudeAmplification", "amplification generalizes the function table"},
    {"FunctionTable", "Oracle", "U_f is evaluated by an oracle"},
    {"FunctionTable", "Uncompute", "garbage may have to be uncomputed afterwards"},
    {"Oracle", "Uncompute", "oracle outputs often need uncomputing"},
    {"Oracle", "Initialization", "expects a prepared input register"},
    {"Uncompute", "Oracle", "oracles leave entangled scratch qubits behind"},
    {"Uncompute", "FunctionTable", "a function table is a special oracle"},
    {"PhaseShift", "FunctionTable", "an indicator function table is a phase shift on G"},
    {"PhaseShift", "AmplitudeAmplification", "amplification uses two phase shifts"},
    {"PhaseShift", "Oracle", "a phase shift can serve as an oracle"},
    {"AmplitudeAmplification", "FunctionTable", "S_G^pi inside Q is an indicator function table"},
    {"AmplitudeAmplification", "PhaseShift", "S_G^pi and S_0^pi are phase shifts"},
    {"AmplitudeAmplification", "Oracle", "an amplifier can itself be used as an oracle"},
    {"SpeedupViaVerifying", "Oracle", "the verifier runs as an oracle"},
    {"QuantumClassicSplit", "Initialization", "classical results enter the quantum part through initialization"},
};

inline std::vector<std::string> next_of(std::string_view id) {
  std::vector<std::string> out;
  for (const auto& e : kPatternEdges) {
    if (id == e.from) out.emplace_back(e.to);
  }
  return out;
}

inline std::string normalize_key(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace detail

/// The ten patterns, in catalog order.
inline const std::vector<PatternDoc>& pattern_catalog() {
  static const std::vector<PatternDoc> catalog = [] {
    std::vector<PatternDoc> docs = {
        {"Initialization", "Initialization", {"State Preparation"},
         "Put the register into a known start state that suits the steps that follow.",
         "icon:initialization",
         "Which start state should the register hold, and how is it prepared cheaply?",
         "Problem parameters are usually baked into the unitary itself, but the state it acts on still has to be fixed.",
         "Start from |0...0>, optionally split into computational and workspace qubits. |0>^n|1> prepares an "
         "indicator ancilla for phase kickback; classical bitstrings and amplitude vectors can also be loaded.",
         "Every quantum algorithm.",
         {}},
        {"UniformSuperposition", "Uniform Superposition", {},
         "Give every basis state of (part of) the register equal weight.",
         "icon:uniform-superposition",
         "How is an equally weighted superposition over all register values produced?",
         "Quantum parallelism needs the register to hold many values at once, usually with no value preferred.",
         "Apply H to each qubit of |0...0>: H^n|0>^n = 2^(-n/2) sum_x |x>. Workspace qubits get H or I as needed.",
         "Most algorithms.",
         {}},
        {"CreatingEntanglement", "Creating Entanglement", {},
         "Correlate qubits strongly enough to enable a quantum speedup.",
         "icon:entanglement",
         "How is an entangled state produced?",
         "Exponential speedups require entanglement, so a freshly initialized register is often entangled next.",
         "Apply U_f to (H^n x I^m)|0>|0> for a non-constant f; with f = id this is the Bell circuit H then CNOT.",
         "Many algorithms.",
         {}},
        {"FunctionTable", "Function Table", {},
         "Evaluate a Boolean function on all inputs at once for later analysis of its global properties.",
         "icon:function-table",
         "How is the whole table of a finite Boolean function computed in one step?",
         "Classically every input has to be evaluated separately; m = 1 typically encodes a decision problem.",
         "Superpose the n input qubits, leave the m workspace qubits at |0>, and apply U_f once to get "
         "2^(-n/2) sum_x |x>|f(x)>. For an indicator f start from |0>^n|1> and apply H to all qubits: U_f then "
         "marks each x with the sign (-1)^f(x) (phase kickback).",
         "Deutsch, Deutsch-Jozsa, Grover, Shor.",
         {}},
        {"Oracle", "Oracle", {"Black Box"},
         "Use the values of a function without depending on how they are computed.",
         "icon:oracle",
         "How can another quantum computation be reused as a component?",
         "Divide and conquer needs units of reuse whose internals stay hidden.",
         "Wrap the computation as a unitary with a declared register arity and treat it as opaque.",
         "Deutsch, Deutsch-Jozsa, Bernstein-Vazirani, Simon, Grover.",
         {}},
        {"Uncompute", "Uncompute", {"Unentangling", "Copy-Uncompute"},
         "Remove the entanglement between the computational register and scratch qubits.",
         "icon:uncompute",
         "How is entanglement left behind by a computation removed?",
         "Scratch qubits end up entangled with the result and cannot be dropped unless the two are separable.",
         "Given |x>|0>|0> -> sum_y a_y |x>|y>|f(x)>, append a zeroed fourth register, copy f(x) into it with "
         "CNOTs, run the inverse computation on the first three registers, swap the last two registers, and "
         "discard the fourth: |x>|0>|f(x)> remains.",
         "Deutsch-Jozsa, HHL, quantum walks, reversible embeddings of classical circuits.",
         {}},
        {"PhaseShift", "Phase Shift", {},
         "Mark selected basis states of a register.",
         "icon:phase-shift",
         "How are important parts of a state distinguished efficiently?",
         "Iterative algorithms need a way to tag the parts of a state that improved.",
         "S_G^phi multiplies the amplitude of each x in the good set G by e^(i phi) and leaves the rest alone; "
         "a variant uses a per-state angle phi(x).",
         "Grover, Deutsch-Jozsa.",
         {}},
        {"AmplitudeAmplification", "Amplitude Amplification", {},
         "Raise the probability of measuring a solution without measuring in between.",
         "icon:amplitude-amplification",
         "How is the probability of finding a solution increased?",
         "Measuring destroys the state, so repeated trial runs are costly; a measurement-free improvement is wanted.",
         "Iterate Q = -U S_0^pi U^-1 S_G^pi starting from U|0>, about pi/4 / |P_G U|0>| times; this needs "
         "O(sqrt(1/t)) steps instead of 1/t repetitions.",
         "Grover, Simon, HHL, black-box state preparation.",
         {}},
        {"SpeedupViaVerifying", "Speedup via Verifying", {},
         "Exploit cheap verification of candidate solutions to find a solution faster.",
         "icon:verifying",
         "How is a speedup obtained when checking a solution is easy?",
         "Finding solutions can be hard while checking a proposed one is simple.",
         "Enumerate all candidates in superposition, implement the checker as an oracle, and scan with Grover "
         "search using O(sqrt(N)) oracle calls.",
         "Key search, Hamiltonian cycles, 3-SAT, travelling salesman.",
         {}},
        {"QuantumClassicSplit", "Quantum-Classic Split", {},
         "Divide a solution between a classical and a quantum computer.",
         "icon:quantum-classic-split",
         "How is a solution split between quantum and classical hardware?",
         "Some algorithms need classical pre- or post-processing; small or noisy devices force a split as well.",
         "Choose a problem-specific split and pass data between the parts; classical data enters the quantum "
         "part through initialization.",
         "Shor and Simon (classical post-processing), QAOA (classical pre-processing), variational factoring.",
         {}},
    };
    for (auto& d : docs) d.next = detail::next_of(d.id);
    return docs;
  }();
  return catalog;
}

/// Directed Next-link edges.
inline std::vector<PatternEdge> pattern_graph() {
  std::vector<PatternEdge> edges;
  for (const auto& e : detail::kPatternEdges) edges.push_back({e.from, e.to, e.note});
  return edges;
}

/// Looks up by id or display name, ignoring case, spaces and punctuation.
inline std::optional<PatternDoc> find_pattern(std::string_view name) {
  const std::string key = detail::normalize_key(name);
  for (const auto& d : pattern_catalog()) {
    if (detail::normalize_key(d.id) == key || detail::normalize_key(d.name) == key) return d;
  }
  return std::nullopt;
}

/// Graphviz rendering of pattern_graph().
inline std::string pattern_graph_dot() {
  std::string out = "digraph patterns {\n";
  for (const auto& d : pattern_catalog()) out += "  \"" + d.id + "\" [label=\"" + d.name + "\"];\n";
  for (const auto& e : pattern_graph()) {
    out += "  \"" + e.from + "\" -> \"" + e.to + "\" [label=\"" + e.note + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace qpat
