#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "cnotsynth/circuit.hpp"
#include "cnotsynth/linalg.hpp"

namespace cnotsynth {

inline constexpr int kMaxDenseQubits = 12;

class TooManyQubitsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Qubit q is bit q - 1 of the basis index.
class DenseState {
 public:
  explicit DenseState(int n, std::size_t basis = 0);
  int num_qubits() const { return n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }
  void apply(const Gate& g);
  void apply(const Circuit& c);
  void apply_inverse(const Circuit& c);
  double norm() const;

 private:
  void apply_single(const Gate& g, bool adjoint);
  int n_;
  std::vector<std::complex<double>> amp_;
};

// Diagonal phase gates are ignored and Y counts as X; H throws.
AugmentedLinearTransform linear_action(const Circuit& c);

bool equivalent_up_to_phase(const Circuit& c1, const Circuit& c2, double tol = 1e-7);

bool phase_poly_equal(const Circuit& c1, const Circuit& c2);

// Same H wires in the same order, same parity entering every H, same final
// wire states and same phase terms. Sufficient for equivalence at any qubit
// count, since the two path sums are then identical.
bool path_sum_equal(const Circuit& c1, const Circuit& c2);

}  // namespace cnotsynth
