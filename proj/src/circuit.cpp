#include "cnotsynth/circuit.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cnotsynth/topology.hpp"

namespace cnotsynth {

namespace {

struct NameEntry {
  GateKind kind;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {GateKind::CNOT, "CNOT"}, {GateKind::H, "H"},     {GateKind::T, "T"},
    {GateKind::Tdg, "TDG"},   {GateKind::S, "S"},     {GateKind::Sdg, "SDG"},
    {GateKind::X, "X"},       {GateKind::Y, "Y"},     {GateKind::Z, "Z"}};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
  return v;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& e : kNames)
    if (e.kind == kind) return e.name;
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& e : kNames)
    if (e.name == name) return e.kind;
  return std::nullopt;
}

void Circuit::append(const Circuit& other) {
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

void Circuit::validate() const {
  if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    auto bad = [&](const std::string& why) {
      throw std::invalid_argument("gate " + std::to_string(i) + ": " + why);
    };
    if (g.target < 1 || g.target > num_qubits) bad("target out of range");
    if (g.kind == GateKind::CNOT) {
      if (g.control < 1 || g.control > num_qubits) bad("control out of range");
      if (g.control == g.target) bad("control equals target");
    } else if (g.control != 0) {
      bad("single-qubit gate with a control");
    }
  }
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!have_header) {
      if (toks[0] != "qubits" || toks.size() != 2)
        throw ParseError(lineno, "expected 'qubits <n>' header");
      c.num_qubits = parse_int(toks[1], lineno);
      if (c.num_qubits < 1) throw ParseError(lineno, "qubit count must be positive");
      have_header = true;
      continue;
    }
    auto kind = gate_kind_from_name(toks[0]);
    if (!kind) throw ParseError(lineno, "unknown gate '" + std::string(toks[0]) + "'");
    Gate g;
    g.kind = *kind;
    if (*kind == GateKind::CNOT) {
      if (toks.size() != 3) throw ParseError(lineno, "CNOT takes control and target");
      g.control = parse_int(toks[1], lineno);
      g.target = parse_int(toks[2], lineno);
      if (g.control == g.target) throw ParseError(lineno, "control equals target");
    } else {
      if (toks.size() != 2) throw ParseError(lineno, "single-qubit gate takes one index");
      g.target = parse_int(toks[1], lineno);
    }
    for (int q : {g.control, g.target}) {
      if (q == 0 && g.kind != GateKind::CNOT) continue;
      if (q < 1 || q > c.num_qubits)
        throw ParseError(lineno, "qubit index " + std::to_string(q) + " out of range");
    }
    c.gates.push_back(g);
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(lineno, "missing 'qubits <n>' header");
  return c;
}

std::string write_circuit(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.num_qubits << '\n';
  for (const Gate& g : c.gates) {
    os << gate_name(g.kind);
    if (g.kind == GateKind::CNOT) os << ' ' << g.control;
    os << ' ' << g.target << '\n';
  }
  return os.str();
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_circuit(ss.str());
}

std::size_t count_gates(const Circuit& c, GateKind kind) {
  std::size_t n = 0;
  for (const Gate& g : c.gates) n += g.kind == kind;
  return n;
}

std::vector<Violation> connectivity_violations(const Circuit& c, const Graph& g) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& gate = c.gates[i];
    if (gate.kind != GateKind::CNOT) continue;
    if (!g.has_edge(gate.control, gate.target)) out.push_back({i, gate.control, gate.target});
  }
  return out;
}

}  // namespace cnotsynth
