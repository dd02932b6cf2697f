#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cnotsynth/circuit.hpp"
#include "cnotsynth/linalg.hpp"
#include "cnotsynth/topology.hpp"

namespace cnotsynth {

struct ResynthesisReport {
  std::string algorithm;
  std::size_t input_cnots = 0;
  std::size_t output_cnots = 0;
  double overhead_pct = 0;  // (output - input) / input * 100, 0 when input is 0
  std::vector<std::size_t> slice_cnots;
  double seconds = 0;
};

double overhead_percent(std::size_t input, std::size_t output);

struct ResynthesisResult {
  Circuit circuit;
  ResynthesisReport report;
};

// Routes each distant CNOT by swapping its control next to the target and back.
Circuit swap_template(const Circuit& c, const Graph& g);

ResynthesisResult run_swap_template(const Circuit& c, const Graph& g);
ResynthesisResult cnot_opt_a(const Circuit& c, const Graph& g);
ResynthesisResult cnot_opt_b(const Circuit& c, const Graph& g);

enum class Algorithm { Swap, OptA, OptB };
Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);
ResynthesisResult resynthesize(Algorithm a, const Circuit& c, const Graph& g);

// Transform whose circuit, applied after a state whose wires hold `from`,
// leaves the wires holding `to`. Both are n x (n + 1) over one basis.
AugmentedLinearTransform transform_between(const BoolMatrix& from, const BoolMatrix& to);

// Uniform gate kinds until `cnots` CNOTs have been drawn.
Circuit random_circuit(int n, int cnots, std::mt19937_64& rng);

struct BenchConfig {
  std::string architecture;  // preset name or graph file
  int qubits = 0;            // 0: all vertices of the graph
  std::vector<int> cnot_counts;
  int trials = 10;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct BenchRow {
  std::string architecture;
  int qubits = 0;
  int initial_count = 0;
  double swap_overhead_pct = 0;
  double opt_a_overhead_pct = 0;
  double opt_a_seconds = 0;
  double opt_b_overhead_pct = 0;
  double opt_b_seconds = 0;
};

std::vector<int> default_cnot_counts(const std::string& architecture);
std::vector<BenchRow> run_bench(const BenchConfig& config);
std::string bench_tsv_header();
std::string format_bench_tsv(const std::vector<BenchRow>& rows);

}  // namespace cnotsynth
