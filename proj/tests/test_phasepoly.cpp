#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cnotsynth/phasepoly.hpp"

using namespace cnotsynth;

namespace {

AffineParity parity(std::string_view bits, bool c = false) { return {bits_from_string(bits), c}; }

Circuit circuit(std::string_view text) { return parse_circuit(text); }

}  // namespace

TEST_CASE("phase coefficients per gate") {
  CHECK(phase_coefficient(GateKind::T) == 1);
  CHECK(phase_coefficient(GateKind::S) == 2);
  CHECK(phase_coefficient(GateKind::Z) == 4);
  CHECK(phase_coefficient(GateKind::Sdg) == 6);
  CHECK(phase_coefficient(GateKind::Tdg) == 7);
  CHECK(phase_coefficient(GateKind::CNOT) == 0);
  CHECK(phase_coefficient(GateKind::X) == 0);
}

TEST_CASE("H-free extraction tracks affine wire states") {
  const auto ex = extract_hfree(circuit("qubits 2\nCNOT 1 2\nT 2\nX 1\nS 1\n"));
  REQUIRE(ex.p.size() == 2);
  CHECK(ex.p.terms()[0] == PhaseTerm{1, parity("11")});
  CHECK(ex.p.terms()[1] == PhaseTerm{2, parity("10", true)});
  CHECK(ex.q == QubitState{parity("10", true), parity("11")});
  CHECK(format_phasepoly(ex.p) == "1 : x1 ⊕ x2\n2 : 1 ⊕ x1\n");
}

TEST_CASE("equal parities merge mod 8") {
  CHECK(extract_hfree(circuit("qubits 1\nT 1\nT 1\n")).p.coefficient_of(parity("1")) == 2);
  CHECK(extract_hfree(circuit("qubits 1\nT 1\nTDG 1\n")).p.empty());
  CHECK(extract_hfree(circuit("qubits 1\nZ 1\nS 1\nS 1\n")).p.empty());
  // Same linear part, different constant: two separate terms.
  CHECK(extract_hfree(circuit("qubits 1\nT 1\nX 1\nT 1\n")).p.size() == 2);
}

TEST_CASE("Y contributes a Z phase and then flips") {
  const auto ex = extract_hfree(circuit("qubits 1\nY 1\nT 1\n"));
  CHECK(ex.p.coefficient_of(parity("1")) == 4);
  CHECK(ex.p.coefficient_of(parity("1", true)) == 1);
  CHECK(ex.q == QubitState{parity("1", true)});
}

TEST_CASE("H-free extraction rejects H") {
  CHECK_THROWS_AS(extract_hfree(circuit("qubits 1\nH 1\n")), std::invalid_argument);
}

TEST_CASE("sliced extraction introduces a fresh variable per H") {
  const auto ex = extract_sliced(circuit("qubits 2\nCNOT 1 2\nH 1\nT 1\nH 2\nCNOT 1 2\nS 2\n"));
  CHECK(ex.num_vars == 4);
  REQUIRE(ex.h.size() == 2);
  CHECK(ex.h[0].pos == 1);
  CHECK(ex.h[0].q_in == QubitState{parity("1000"), parity("1100")});
  CHECK(ex.h[0].q_out == QubitState{parity("0010"), parity("1100")});
  CHECK(ex.h[1].q_out == QubitState{parity("0010"), parity("0001")});
  CHECK(ex.q == QubitState{parity("0010"), parity("0011")});
  CHECK(format_phasepoly(ex.p) == "1 : x3\n2 : x3 ⊕ x4\n");
}

TEST_CASE("format_parity") {
  CHECK(format_parity(parity("100100", true)) == "1 ⊕ x1 ⊕ x4");
  CHECK(format_parity(parity("000")) == "0");
  CHECK(format_parity(parity("000", true)) == "1");
}

TEST_CASE("span membership agrees with exhaustive subset sums") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int vars = 2 + static_cast<int>(rng() % 5);
    const int entries = 1 + static_cast<int>(rng() % 5);
    QubitState basis;
    for (int k = 0; k < entries; ++k) {
      AffineParity f{Bits(vars), static_cast<bool>(rng() & 1)};
      for (int v = 0; v < vars; ++v) f.lin[v] = rng() & 1;
      basis.push_back(f);
    }
    const SpanBasis sb(basis);
    for (unsigned target = 0; target < (1u << vars); ++target) {
      AffineParity f{Bits(vars, target), static_cast<bool>(rng() & 1)};
      bool reachable = false;
      for (unsigned subset = 0; subset < (1u << entries) && !reachable; ++subset) {
        Bits acc(vars);
        for (int k = 0; k < entries; ++k)
          if ((subset >> k) & 1) acc ^= basis[k].lin;
        reachable = acc == f.lin;
      }
      const auto e = sb.express(f);
      REQUIRE(e.has_value() == reachable);
      if (!e) continue;
      AffineParity sum{Bits(vars), e->offset};
      for (int k = 0; k < entries; ++k)
        if (e->rows[k]) sum ^= basis[k];
      CHECK(sum == f);
    }
  }
}

TEST_CASE("uncomputable terms leave the span at the H") {
  PhasePolySet p;
  p.add(1, parity("110"));
  p.add(2, parity("010"));
  p.add(3, parity("001"));
  p.add(5, parity("100", true));
  HSliceRecord h{1, {parity("100"), parity("010")}, {parity("001"), parity("010")}};
  const auto u = uncomputable_terms(p, h);
  REQUIRE(u.size() == 2);
  CHECK(u.coefficient_of(parity("110")) == 1);
  CHECK(u.coefficient_of(parity("100", true)) == 5);
}

TEST_CASE("rebase expresses terms over the current wires") {
  PhasePolySet p;
  p.add(1, parity("110"));
  p.add(6, parity("011", true));
  // Wires hold x1, x1 + x2, 1 + x3.
  const QubitState basis{parity("100"), parity("110"), parity("001", true)};
  const ParityMatrix m = rebase(p, basis);
  REQUIRE(m.columns.size() == 2);
  CHECK(m.columns[0] == ParityColumn{bits_from_string("010"), false, 1});
  // x2 + x3 + 1 = w1 + w2 + w3, whose constant already supplies the 1.
  CHECK(m.columns[1] == ParityColumn{bits_from_string("111"), false, 6});

  PhasePolySet outside;
  outside.add(1, parity("001"));
  CHECK_THROWS_AS(rebase(outside, {parity("100"), parity("010"), parity("110")}), OutsideSpanError);
}

TEST_CASE("rebase round trip on random bases") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    QubitState basis;
    while (true) {
      basis.clear();
      for (int k = 0; k < n; ++k) {
        AffineParity f{Bits(n), static_cast<bool>(rng() & 1)};
        for (int v = 0; v < n; ++v) f.lin[v] = rng() & 1;
        basis.push_back(f);
      }
      BoolMatrix m(n, n);
      for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) m.set(r, c, basis[r - 1].lin[c - 1]);
      if (is_invertible(m)) break;
    }
    PhasePolySet p;
    for (int k = 0; k < 4; ++k) {
      AffineParity f{Bits(n, rng() % (1u << n)), static_cast<bool>(rng() & 1)};
      p.add(1 + static_cast<int>(rng() % 7), f);
    }
    const ParityMatrix m = rebase(p, basis);
    PhasePolySet back;
    for (const auto& col : m.columns) {
      AffineParity f{Bits(n), col.flip};
      for (int k = 0; k < n; ++k)
        if (col.bits[k]) f ^= basis[k];
      back.add(col.coeff, f);
    }
    CHECK(back.same_terms(p));
  }
}
