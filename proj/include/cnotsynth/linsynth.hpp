#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cnotsynth/circuit.hpp"
#include "cnotsynth/linalg.hpp"
#include "cnotsynth/topology.hpp"

namespace cnotsynth {

struct SubTree {
  int root = 0;
  std::vector<int> leaves;                   // discovery order
  std::map<int, std::vector<int>> children;  // ascending per parent

  const std::vector<int>& children_of(int v) const;
  bool has_children(int v) const { return !children_of(v).empty(); }
  // layers()[d] lists the nodes at depth d in ascending order.
  std::vector<std::vector<int>> layers() const;
  std::vector<std::pair<int, int>> edges() const;  // (parent, child)
};

// Cuts the tree at every non-leaf terminal. With alg == 4 every piece is
// further split into root-to-leaf paths, each stored with the leaf as root.
std::vector<SubTree> separate(const SteinerTree& tree, int alg);

struct RootLeaves {
  int root;
  std::vector<int> leaves;
  bool operator==(const RootLeaves&) const = default;
};

struct RowOpResult {
  std::vector<Gate> cnots;
  BoolMatrix matrix;
  std::vector<RootLeaves> t1;  // filled for alg == 2
};

// Pivot and terminals are taken from the tree (its root and terminal set).
RowOpResult row_op(BoolMatrix m, const SteinerTree& tree, int alg);

struct LinSynthStep {
  int phase = 1;  // 1: upper triangularisation, 2: after the transpose
  int column = 0;
  std::vector<Gate> diagonal_fix;
  std::vector<Gate> cnots;
  std::vector<Gate> correction;
  bool fallback = false;  // routed through already fixed vertices
  BoolMatrix after;
};

struct LinSynthTrace {
  std::vector<LinSynthStep> steps;
  BoolMatrix upper;       // after the first phase
  BoolMatrix transposed;  // working matrix at the start of the second phase
};

class SingularTransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Circuit linear_tf_synth(const AugmentedLinearTransform& a, const Graph& g,
                        LinSynthTrace* trace = nullptr);

}  // namespace cnotsynth
