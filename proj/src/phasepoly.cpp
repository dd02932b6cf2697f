#include "cnotsynth/phasepoly.hpp"

#include <algorithm>
#include <sstream>

namespace cnotsynth {

AffineParity AffineParity::variable(int num_vars, int k) {
  AffineParity f{Bits(num_vars), false};
  f.lin[k - 1] = true;
  return f;
}

void PhasePolySet::add(int coeff, const AffineParity& f) {
  coeff = ((coeff % 8) + 8) % 8;
  if (coeff == 0 || f.lin.none()) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (it->f == f) {
      it->coeff = (it->coeff + coeff) % 8;
      if (it->coeff == 0) terms_.erase(it);
      return;
    }
  terms_.push_back({coeff, f});
}

void PhasePolySet::remove_if_in(const PhasePolySet& other) {
  std::erase_if(terms_, [&](const PhaseTerm& t) {
    return std::find(other.terms_.begin(), other.terms_.end(), t) != other.terms_.end();
  });
}

bool PhasePolySet::same_terms(const PhasePolySet& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (const auto& t : terms_)
    if (other.coefficient_of(t.f) != t.coeff) return false;
  return true;
}

std::optional<int> PhasePolySet::coefficient_of(const AffineParity& f) const {
  for (const auto& t : terms_)
    if (t.f == f) return t.coeff;
  return std::nullopt;
}

QubitState identity_state(int n, int num_vars) {
  QubitState q;
  for (int i = 1; i <= n; ++i) q.push_back(AffineParity::variable(num_vars, i));
  return q;
}

int phase_coefficient(GateKind kind) {
  switch (kind) {
    case GateKind::T: return 1;
    case GateKind::Tdg: return 7;
    case GateKind::S: return 2;
    case GateKind::Sdg: return 6;
    case GateKind::Z: return 4;
    case GateKind::Y: return 4;
    default: return 0;
  }
}

void fold_gate(PhasePolySet& p, QubitState& q, const Gate& g) {
  AffineParity& t = q[g.target - 1];
  switch (g.kind) {
    case GateKind::CNOT:
      t ^= q[g.control - 1];
      break;
    case GateKind::X:
      t.c = !t.c;
      break;
    case GateKind::Y:
      p.add(4, t);
      t.c = !t.c;
      break;
    case GateKind::H:
      throw std::invalid_argument("fold_gate: H is not a phase-polynomial gate");
    default:
      p.add(phase_coefficient(g.kind), t);
  }
}

HFreeExtraction extract_hfree(const Circuit& c) {
  HFreeExtraction out;
  out.q = identity_state(c.num_qubits, c.num_qubits);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::H) throw std::invalid_argument("extract_hfree: circuit contains H");
    fold_gate(out.p, out.q, g);
  }
  return out;
}

SlicedExtraction extract_sliced(const Circuit& c) {
  SlicedExtraction out;
  out.num_vars = c.num_qubits + static_cast<int>(count_gates(c, GateKind::H));
  out.q = identity_state(c.num_qubits, out.num_vars);
  int next = c.num_qubits;
  for (const Gate& g : c.gates) {
    if (g.kind != GateKind::H) {
      fold_gate(out.p, out.q, g);
      continue;
    }
    HSliceRecord rec;
    rec.pos = g.target;
    rec.q_in = out.q;
    out.q[g.target - 1] = AffineParity::variable(out.num_vars, ++next);
    rec.q_out = out.q;
    out.h.push_back(std::move(rec));
  }
  return out;
}

SpanBasis::SpanBasis(const QubitState& basis) : n_(basis.size()) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Row r{basis[k].lin, Bits(n_), basis[k].c, 0};
    r.combo[k] = true;
    for (const Row& e : rows_)
      if (r.lin[e.pivot]) {
        r.lin ^= e.lin;
        r.combo ^= e.combo;
        r.c = r.c != e.c;
      }
    auto p = r.lin.find_first();
    if (p == Bits::npos) continue;  // dependent entry
    r.pivot = p;
    for (Row& e : rows_)
      if (e.lin[p]) {
        e.lin ^= r.lin;
        e.combo ^= r.combo;
        e.c = e.c != r.c;
      }
    rows_.push_back(std::move(r));
  }
}

std::optional<SpanBasis::Expression> SpanBasis::express(const AffineParity& f) const {
  Bits rest = f.lin;
  Expression e{Bits(n_), f.c};
  for (const Row& r : rows_)
    if (rest[r.pivot]) {
      rest ^= r.lin;
      e.rows ^= r.combo;
      e.offset = e.offset != r.c;
    }
  if (rest.any()) return std::nullopt;
  return e;
}

PhasePolySet uncomputable_terms(const PhasePolySet& p, const HSliceRecord& h) {
  SpanBasis in(h.q_in), out(h.q_out);
  PhasePolySet res;
  for (const auto& t : p.terms())
    if (in.contains(t.f) && !out.contains(t.f)) res.add(t.coeff, t.f);
  return res;
}

ParityMatrix rebase(const PhasePolySet& p, const QubitState& basis) {
  SpanBasis sb(basis);
  std::vector<ParityColumn> cols;
  for (const auto& t : p.terms()) {
    auto e = sb.express(t.f);
    if (!e) throw OutsideSpanError("rebase: parity " + format_parity(t.f) + " outside the basis span");
    cols.push_back({e->rows, e->offset, t.coeff});
  }
  return ParityMatrix::from_terms(static_cast<int>(basis.size()), cols);
}

std::string format_parity(const AffineParity& f) {
  std::string s;
  auto join = [&](const std::string& part) { s += (s.empty() ? "" : " ⊕ ") + part; };
  if (f.c) join("1");
  for (auto k = f.lin.find_first(); k != Bits::npos; k = f.lin.find_next(k))
    join("x" + std::to_string(k + 1));
  return s.empty() ? "0" : s;
}

std::string format_phasepoly(const PhasePolySet& p) {
  std::ostringstream os;
  for (const auto& t : p.terms()) os << t.coeff << " : " << format_parity(t.f) << '\n';
  return os.str();
}

}  // namespace cnotsynth
