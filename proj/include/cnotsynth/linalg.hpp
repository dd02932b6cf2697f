#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cnotsynth/circuit.hpp"

namespace cnotsynth {

// Bit k-1 holds entry k; everything user-facing is 1-based.
using Bits = boost::dynamic_bitset<>;

class BoolMatrix {
 public:
  BoolMatrix() = default;
  BoolMatrix(int rows, int cols);
  static BoolMatrix identity(int n);
  static BoolMatrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return rows_[r - 1][c - 1]; }
  void set(int r, int c, bool v) { rows_[r - 1][c - 1] = v; }
  const Bits& row(int r) const { return rows_[r - 1]; }
  Bits& row(int r) { return rows_[r - 1]; }

  // Row dst becomes row dst XOR row src.
  void row_add(int src, int dst);
  BoolMatrix transposed() const;
  BoolMatrix block(int rows, int cols) const;

  bool operator==(const BoolMatrix&) const = default;

 private:
  int cols_ = 0;
  std::vector<Bits> rows_;
};

BoolMatrix row_add(BoolMatrix m, int src, int dst);
BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b);
std::optional<BoolMatrix> inverse(const BoolMatrix& square);
bool is_invertible(const BoolMatrix& square);
bool is_upper_triangular(const BoolMatrix& square);

std::string dump_matrix(const BoolMatrix& m);
BoolMatrix parse_matrix(std::string_view text);

// A = [A' | b]: n rows, n + 1 columns, the last one the bit flip.
struct AugmentedLinearTransform {
  int n = 0;
  BoolMatrix m;

  AugmentedLinearTransform() = default;
  explicit AugmentedLinearTransform(BoolMatrix full);
  static AugmentedLinearTransform identity(int n);

  bool flip(int i) const { return m.get(i, n + 1); }
  BoolMatrix left() const { return m.block(n, n); }
  bool invertible() const { return is_invertible(left()); }

  bool operator==(const AugmentedLinearTransform&) const = default;
};

AugmentedLinearTransform apply_gate_to_transform(AugmentedLinearTransform a, const Gate& g);

// File format: "n <k>" then k rows of k + 1 entries.
std::string dump_transform(const AugmentedLinearTransform& a);
AugmentedLinearTransform parse_transform(std::string_view text);

struct ParityColumn {
  Bits bits;  // n parity bits
  bool flip = false;
  int coeff = 0;  // in 1..7

  bool operator==(const ParityColumn&) const = default;
};

struct ParityMatrix {
  int n = 0;
  std::vector<ParityColumn> columns;

  // Merges duplicate (bits, flip) pairs mod 8 in first-appearance order and
  // drops zero parities and zero coefficients.
  static ParityMatrix from_terms(int n, const std::vector<ParityColumn>& terms);

  bool operator==(const ParityMatrix&) const = default;
};

// Terms file: "<c> <bitflip> <parity bits>" per line, parity bits as a 0/1 string.
std::string dump_terms(const ParityMatrix& p);
ParityMatrix parse_terms(std::string_view text);

Bits bits_from_string(std::string_view s);
std::string bits_to_string(const Bits& b);

}  // namespace cnotsynth
