#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cnotsynth/linalg.hpp"

using namespace cnotsynth;

TEST_CASE("row_add xors src into dst") {
  BoolMatrix m = BoolMatrix::from_rows({"110", "011", "001"});
  m.row_add(1, 2);
  CHECK(m == BoolMatrix::from_rows({"110", "101", "001"}));
  CHECK_THROWS_AS(m.row_add(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(m.row_add(0, 1), std::out_of_range);
}

TEST_CASE("transpose, multiply, inverse") {
  const BoolMatrix a = BoolMatrix::from_rows({"110", "011", "001"});
  CHECK(a.transposed() == BoolMatrix::from_rows({"100", "110", "011"}));
  const auto inv = inverse(a);
  REQUIRE(inv);
  // Hand-computed inverse over GF(2).
  CHECK(*inv == BoolMatrix::from_rows({"111", "011", "001"}));
  CHECK(multiply(a, *inv) == BoolMatrix::identity(3));
  CHECK_FALSE(is_invertible(BoolMatrix::from_rows({"110", "011", "101"})));
}

TEST_CASE("inverse agrees with brute force on random 4x4 matrices") {
  std::mt19937 rng(11);
  int invertible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    BoolMatrix m(4, 4);
    for (int r = 1; r <= 4; ++r)
      for (int c = 1; c <= 4; ++c) m.set(r, c, rng() & 1);
    // Brute force: the map is injective iff no nonzero vector maps to zero.
    bool injective = true;
    for (unsigned x = 1; x < 16; ++x) {
      bool zero = true;
      for (int r = 1; r <= 4; ++r) {
        bool bit = false;
        for (int c = 1; c <= 4; ++c) bit ^= m.get(r, c) && ((x >> (c - 1)) & 1);
        zero = zero && !bit;
      }
      if (zero) injective = false;
    }
    CHECK(is_invertible(m) == injective);
    if (injective) {
      ++invertible;
      CHECK(multiply(*inverse(m), m) == BoolMatrix::identity(4));
    }
  }
  CHECK(invertible > 0);
}

TEST_CASE("upper triangular check") {
  CHECK(is_upper_triangular(BoolMatrix::from_rows({"111", "011", "001"})));
  CHECK_FALSE(is_upper_triangular(BoolMatrix::from_rows({"111", "011", "101"})));
}

TEST_CASE("transform file format") {
  const auto a = parse_transform("n 2\n1 1 0\n0 1 1\n");
  CHECK(a.n == 2);
  CHECK(a.flip(2));
  CHECK_FALSE(a.flip(1));
  CHECK(dump_transform(a) == "n 2\n1 1 0\n0 1 1\n");
  // A square body is augmented with a zero flip column.
  const auto b = parse_transform("n 2\n11\n01\n");
  CHECK(b.m == BoolMatrix::from_rows({"110", "010"}));
  CHECK_THROWS_AS(parse_transform("1 0\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_transform("n 3\n1 0\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_transform("n 2\n1 2\n0 1\n"), std::invalid_argument);
}

TEST_CASE("gate replay on augmented transforms") {
  auto a = AugmentedLinearTransform::identity(3);
  a = apply_gate_to_transform(a, Gate::single(GateKind::X, 1));
  a = apply_gate_to_transform(a, Gate::cnot(1, 3));
  // Wire 3 now holds 1 + x1 + x3.
  CHECK(a.m == BoolMatrix::from_rows({"1001", "0100", "1011"}));
  CHECK_THROWS_AS(apply_gate_to_transform(a, Gate::single(GateKind::T, 1)), std::invalid_argument);
}

TEST_CASE("parity matrix merges equal terms mod 8") {
  const auto p = parse_terms("1 0 110\n3 1 110\n7 0 110\n2 0 001\n6 0 001\n5 0 000\n");
  REQUIRE(p.columns.size() == 1);
  CHECK(p.n == 3);
  CHECK(p.columns[0].coeff == 3);
  CHECK(p.columns[0].flip);
  CHECK(bits_to_string(p.columns[0].bits) == "110");
  CHECK(dump_terms(p) == "3 1 110\n");
  CHECK_THROWS_AS(parse_terms("1 0 11\n1 0 111\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_terms("1 2 11\n"), std::invalid_argument);
}
