#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cnotsynth/circuit.hpp"
#include "cnotsynth/linalg.hpp"

namespace cnotsynth {

// Linear part over the path variables x1..xN plus a constant bit.
struct AffineParity {
  Bits lin;
  bool c = false;

  static AffineParity variable(int num_vars, int k);
  AffineParity& operator^=(const AffineParity& o) {
    lin ^= o.lin;
    c = c != o.c;
    return *this;
  }
  bool operator==(const AffineParity&) const = default;
  bool operator<(const AffineParity& o) const {
    return lin != o.lin ? lin < o.lin : c < o.c;
  }
};

struct PhaseTerm {
  int coeff = 0;  // 1..7
  AffineParity f;
  bool operator==(const PhaseTerm&) const = default;
};

// Terms in first-appearance order; equal parities merge mod 8 and terms that
// reach 0 disappear.
class PhasePolySet {
 public:
  void add(int coeff, const AffineParity& f);
  const std::vector<PhaseTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  void remove_if_in(const PhasePolySet& other);
  // Order-independent comparison.
  bool same_terms(const PhasePolySet& other) const;
  std::optional<int> coefficient_of(const AffineParity& f) const;

 private:
  std::vector<PhaseTerm> terms_;
};

using QubitState = std::vector<AffineParity>;  // entry q - 1 belongs to qubit q

QubitState identity_state(int n, int num_vars);

struct HSliceRecord {
  int pos = 0;
  QubitState q_in;
  QubitState q_out;
};

// Coefficient contributed by a phase gate, 0 for the rest.
int phase_coefficient(GateKind kind);

// Folds one H-free gate into (P, Q).
void fold_gate(PhasePolySet& p, QubitState& q, const Gate& g);

struct HFreeExtraction {
  PhasePolySet p;
  QubitState q;
};
HFreeExtraction extract_hfree(const Circuit& c);

struct SlicedExtraction {
  int num_vars = 0;  // n plus the number of H gates
  PhasePolySet p;
  QubitState q;
  std::vector<HSliceRecord> h;
};
SlicedExtraction extract_sliced(const Circuit& c);

// Reduced row echelon view of a state, used to express parities in it.
class SpanBasis {
 public:
  explicit SpanBasis(const QubitState& basis);
  struct Expression {
    Bits rows;  // which basis entries are combined
    bool offset = false;  // constant left over after combining
  };
  // Linear-part membership; the constant is reported as the offset.
  std::optional<Expression> express(const AffineParity& f) const;
  bool contains(const AffineParity& f) const { return express(f).has_value(); }

 private:
  struct Row {
    Bits lin;
    Bits combo;
    bool c;
    std::size_t pivot;
  };
  std::size_t n_;
  std::vector<Row> rows_;
};

PhasePolySet uncomputable_terms(const PhasePolySet& p, const HSliceRecord& h);

class OutsideSpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
ParityMatrix rebase(const PhasePolySet& p, const QubitState& basis);

// "<c> : 1 ⊕ x1 ⊕ x4" per line.
std::string format_phasepoly(const PhasePolySet& p);
std::string format_parity(const AffineParity& f);

}  // namespace cnotsynth
