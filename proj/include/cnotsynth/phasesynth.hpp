#pragma once

#include <vector>

#include "cnotsynth/circuit.hpp"
#include "cnotsynth/linalg.hpp"
#include "cnotsynth/topology.hpp"

namespace cnotsynth {

inline constexpr int kNoTarget = 0;  // the epsilon target; qubits start at 1

struct CofactorFrame {
  std::vector<int> columns;  // indices into the parity matrix, ascending
  std::vector<int> rows;     // unexpanded rows, ascending
  int target = kNoTarget;
};

enum class PivotRule {
  // Prefer rows that split the columns both ways, then the most ones; falls
  // back to the most ones when nothing splits. Ties go to the smaller row.
  kSplitMostOnes,
  // argmax over rows of the larger cofactor, ties to the smaller row.
  kLargestCofactor,
};

int select_pivot(const CofactorFrame& frame, const BoolMatrix& parities, PivotRule rule);

struct PhasePlacement {
  int column = 0;  // 1-based column of the input matrix
  int wire = 0;
  bool with_x = false;
  std::vector<GateKind> gates;  // one gate except for coefficients 3 and 5
  bool operator==(const PhasePlacement&) const = default;
};

struct PhaseIteration {
  CofactorFrame popped;
  int pivot = 0;  // 0 when no split happened
  std::vector<Gate> cnots;
  std::vector<PhasePlacement> placements;
  BoolMatrix after;  // all columns, realized ones included
};

struct PhaseSynthResult {
  Circuit circuit;
  // Output wire parities over the input wires, with bit flips.
  AugmentedLinearTransform action;
  std::vector<PhasePlacement> upfront;
  std::vector<PhaseIteration> iterations;
  std::vector<PhasePlacement> completion;  // columns left over after the stack drained
};

std::vector<GateKind> phase_gates_for(int coeff);

PhaseSynthResult phase_nw_synth(const ParityMatrix& p, const Graph& g,
                                PivotRule rule = PivotRule::kSplitMostOnes);

}  // namespace cnotsynth
