#include "cnotsynth/verify.hpp"

#include <cmath>
#include <numbers>

#include "cnotsynth/phasepoly.hpp"

namespace cnotsynth {

namespace {

using cd = std::complex<double>;

void check_size(int n) {
  if (n > kMaxDenseQubits)
    throw TooManyQubitsError("dense simulation refuses " + std::to_string(n) + " qubits (limit " +
                             std::to_string(kMaxDenseQubits) + ")");
}

cd phase(double eighths) { return std::polar(1.0, eighths * std::numbers::pi / 4); }

}  // namespace

DenseState::DenseState(int n, std::size_t basis) : n_(n) {
  check_size(n);
  amp_.assign(std::size_t{1} << n, 0.0);
  amp_.at(basis) = 1.0;
}

void DenseState::apply(const Gate& g) {
  if (g.kind == GateKind::CNOT) {
    const std::size_t c = std::size_t{1} << (g.control - 1), t = std::size_t{1} << (g.target - 1);
    for (std::size_t i = 0; i < amp_.size(); ++i)
      if ((i & c) && !(i & t)) std::swap(amp_[i], amp_[i | t]);
    return;
  }
  apply_single(g, false);
}

void DenseState::apply_single(const Gate& g, bool adjoint) {
  const std::size_t t = std::size_t{1} << (g.target - 1);
  const double sign = adjoint ? -1.0 : 1.0;
  cd d1;  // diagonal phase on |1>
  switch (g.kind) {
    case GateKind::T: d1 = phase(sign); break;
    case GateKind::Tdg: d1 = phase(-sign); break;
    case GateKind::S: d1 = phase(2 * sign); break;
    case GateKind::Sdg: d1 = phase(-2 * sign); break;
    case GateKind::Z: d1 = -1.0; break;
    case GateKind::X:
      for (std::size_t i = 0; i < amp_.size(); ++i)
        if (!(i & t)) std::swap(amp_[i], amp_[i | t]);
      return;
    case GateKind::Y:
      // Y = [[0, -i], [i, 0]] is self-inverse.
      for (std::size_t i = 0; i < amp_.size(); ++i)
        if (!(i & t)) {
          cd a0 = amp_[i], a1 = amp_[i | t];
          amp_[i] = cd(0, -1) * a1;
          amp_[i | t] = cd(0, 1) * a0;
        }
      return;
    case GateKind::H: {
      const double s = std::numbers::sqrt2 / 2;
      for (std::size_t i = 0; i < amp_.size(); ++i)
        if (!(i & t)) {
          cd a0 = amp_[i], a1 = amp_[i | t];
          amp_[i] = s * (a0 + a1);
          amp_[i | t] = s * (a0 - a1);
        }
      return;
    }
    default:
      throw std::logic_error("unreachable gate kind");
  }
  for (std::size_t i = 0; i < amp_.size(); ++i)
    if (i & t) amp_[i] *= d1;
}

void DenseState::apply(const Circuit& c) {
  for (const Gate& g : c.gates) apply(g);
}

void DenseState::apply_inverse(const Circuit& c) {
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    if (it->kind == GateKind::CNOT) apply(*it);
    else apply_single(*it, true);
  }
}

double DenseState::norm() const {
  double s = 0;
  for (const cd& a : amp_) s += std::norm(a);
  return std::sqrt(s);
}

AugmentedLinearTransform linear_action(const Circuit& c) {
  auto a = AugmentedLinearTransform::identity(c.num_qubits);
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::H) throw std::invalid_argument("linear_action: H has no linear action");
    if (g.kind == GateKind::CNOT || g.kind == GateKind::X)
      a = apply_gate_to_transform(std::move(a), g);
    else if (g.kind == GateKind::Y)
      a = apply_gate_to_transform(std::move(a), Gate::single(GateKind::X, g.target));
  }
  return a;
}

bool equivalent_up_to_phase(const Circuit& c1, const Circuit& c2, double tol) {
  if (c1.num_qubits != c2.num_qubits) return false;
  check_size(c1.num_qubits);
  // Column b of U2^dagger U1 must equal e^{i theta} times the unit vector b.
  const std::size_t dim = std::size_t{1} << c1.num_qubits;
  cd global;
  for (std::size_t b = 0; b < dim; ++b) {
    DenseState s(c1.num_qubits, b);
    s.apply(c1);
    s.apply_inverse(c2);
    const auto& amp = s.amplitudes();
    if (b == 0) {
      global = amp[0];
      if (std::abs(std::abs(global) - 1.0) > tol) return false;
    }
    for (std::size_t i = 0; i < dim; ++i) {
      const cd want = i == b ? global : cd(0);
      if (std::abs(amp[i] - want) > tol) return false;
    }
  }
  return true;
}

bool phase_poly_equal(const Circuit& c1, const Circuit& c2) {
  if (c1.num_qubits != c2.num_qubits) return false;
  const auto a = extract_hfree(c1), b = extract_hfree(c2);
  return a.q == b.q && a.p.same_terms(b.p);
}

bool path_sum_equal(const Circuit& c1, const Circuit& c2) {
  if (c1.num_qubits != c2.num_qubits) return false;
  const auto a = extract_sliced(c1), b = extract_sliced(c2);
  if (a.h.size() != b.h.size()) return false;
  for (std::size_t k = 0; k < a.h.size(); ++k)
    if (a.h[k].pos != b.h[k].pos ||
        a.h[k].q_in[a.h[k].pos - 1] != b.h[k].q_in[b.h[k].pos - 1])
      return false;
  return a.q == b.q && a.p.same_terms(b.p);
}

}  // namespace cnotsynth
