#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cnotsynth {

class Graph;

enum class GateKind { CNOT, H, T, Tdg, S, Sdg, X, Y, Z };

inline constexpr GateKind kAllGateKinds[] = {
    GateKind::CNOT, GateKind::H, GateKind::T, GateKind::Tdg, GateKind::S,
    GateKind::Sdg,  GateKind::X, GateKind::Y, GateKind::Z};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

// Qubits are 1-indexed. control is 0 for single-qubit gates.
struct Gate {
  GateKind kind = GateKind::X;
  int control = 0;
  int target = 1;

  static Gate cnot(int c, int t) { return {GateKind::CNOT, c, t}; }
  static Gate single(GateKind k, int q) { return {k, 0, q}; }

  bool operator==(const Gate&) const = default;
};

struct Circuit {
  int num_qubits = 1;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int n) : num_qubits(n) {}

  void add(const Gate& g) { gates.push_back(g); }
  void append(const Circuit& other);
  std::size_t size() const { return gates.size(); }

  // Throws std::invalid_argument when a gate breaks the structural rules.
  void validate() const;

  bool operator==(const Circuit&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

Circuit parse_circuit(std::string_view text);
std::string write_circuit(const Circuit& c);
Circuit read_circuit_file(const std::string& path);

std::size_t count_gates(const Circuit& c, GateKind kind);

struct Violation {
  std::size_t index;
  int control;
  int target;
  bool operator==(const Violation&) const = default;
};

std::vector<Violation> connectivity_violations(const Circuit& c, const Graph& g);

}  // namespace cnotsynth
