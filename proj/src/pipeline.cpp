#include "cnotsynth/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "cnotsynth/linsynth.hpp"
#include "cnotsynth/phasepoly.hpp"
#include "cnotsynth/phasesynth.hpp"

namespace cnotsynth {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t cnot_count(const Circuit& c) { return count_gates(c, GateKind::CNOT); }

void check_graph(const Circuit& c, const Graph& g) {
  if (c.num_qubits > g.num_vertices())
    throw std::invalid_argument("circuit has more qubits than the graph has vertices");
  if (!g.connected(vertex_range(g, 1, c.num_qubits)))
    throw std::invalid_argument("graph restricted to the circuit's qubits is disconnected");
}

void finish(ResynthesisResult& r, const Circuit& in, const std::string& name, Clock::time_point t0) {
  r.report.algorithm = name;
  r.report.input_cnots = cnot_count(in);
  r.report.output_cnots = cnot_count(r.circuit);
  r.report.overhead_pct = overhead_percent(r.report.input_cnots, r.report.output_cnots);
  r.report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
}

BoolMatrix state_matrix(const QubitState& q, int width) {
  BoolMatrix m(static_cast<int>(q.size()), width + 1);
  for (int k = 1; k <= m.rows(); ++k) {
    for (int j = 1; j <= width; ++j) m.set(k, j, q[k - 1].lin[j - 1]);
    m.set(k, width + 1, q[k - 1].c);
  }
  return m;
}

ParityMatrix parity_matrix(const PhasePolySet& p, int n) {
  std::vector<ParityColumn> cols;
  for (const auto& t : p.terms()) cols.push_back({t.f.lin, t.f.c, t.coeff});
  return ParityMatrix::from_terms(n, cols);
}

// Phase network for p followed by the linear circuit that lands on `target`.
Circuit synthesize_block(const ParityMatrix& p, const BoolMatrix& target, const Graph& g) {
  auto ph = phase_nw_synth(p, g);
  Circuit out = ph.circuit;
  out.append(linear_tf_synth(transform_between(ph.action.m, target), g));
  return out;
}

}  // namespace

double overhead_percent(std::size_t input, std::size_t output) {
  if (input == 0) return 0.0;
  return (static_cast<double>(output) - static_cast<double>(input)) / static_cast<double>(input) * 100.0;
}

AugmentedLinearTransform transform_between(const BoolMatrix& from, const BoolMatrix& to) {
  const int n = from.rows();
  auto inv = inverse(from.block(n, n));
  if (!inv) throw SingularTransformError("transform_between: source state is not invertible");
  BoolMatrix l = multiply(to.block(n, n), *inv);
  BoolMatrix full(n, n + 1);
  for (int r = 1; r <= n; ++r) {
    bool b = to.get(r, n + 1);
    for (int j = 1; j <= n; ++j) {
      full.set(r, j, l.get(r, j));
      if (l.get(r, j) && from.get(j, n + 1)) b = !b;
    }
    full.set(r, n + 1, b);
  }
  return AugmentedLinearTransform(std::move(full));
}

Circuit swap_template(const Circuit& c, const Graph& g) {
  check_graph(c, g);
  const VertexMask active = vertex_range(g, 1, c.num_qubits);
  Circuit out(c.num_qubits);
  auto swap = [&](int a, int b) {
    out.add(Gate::cnot(a, b));
    out.add(Gate::cnot(b, a));
    out.add(Gate::cnot(a, b));
  };
  for (const Gate& gate : c.gates) {
    if (gate.kind != GateKind::CNOT || g.has_edge(gate.control, gate.target)) {
      out.add(gate);
      continue;
    }
    const auto path = shortest_path(g, gate.control, gate.target, active);
    const std::size_t l = path.size() - 1;
    for (std::size_t k = 0; k + 1 < l; ++k) swap(path[k], path[k + 1]);
    out.add(Gate::cnot(path[l - 1], gate.target));
    for (std::size_t k = l - 1; k-- > 0;) swap(path[k], path[k + 1]);
  }
  return out;
}

ResynthesisResult run_swap_template(const Circuit& c, const Graph& g) {
  const auto t0 = Clock::now();
  ResynthesisResult r{swap_template(c, g), {}};
  r.report.slice_cnots.push_back(cnot_count(r.circuit));
  finish(r, c, "swap", t0);
  return r;
}

ResynthesisResult cnot_opt_a(const Circuit& c, const Graph& g) {
  check_graph(c, g);
  const auto t0 = Clock::now();
  const int n = c.num_qubits;
  ResynthesisResult r{Circuit(n), {}};
  Circuit slice(n);
  auto flush = [&] {
    const auto ex = extract_hfree(slice);
    Circuit block = synthesize_block(parity_matrix(ex.p, n), state_matrix(ex.q, n), g);
    r.report.slice_cnots.push_back(cnot_count(block));
    r.circuit.append(block);
    slice.gates.clear();
  };
  for (const Gate& gate : c.gates) {
    if (gate.kind != GateKind::H) {
      slice.add(gate);
      continue;
    }
    flush();
    r.circuit.add(gate);
  }
  flush();
  finish(r, c, "opt-a", t0);
  return r;
}

ResynthesisResult cnot_opt_b(const Circuit& c, const Graph& g) {
  check_graph(c, g);
  const auto t0 = Clock::now();
  const int n = c.num_qubits;
  ResynthesisResult r{Circuit(n), {}};
  const auto ex = extract_sliced(c);
  PhasePolySet remaining = ex.p;
  QubitState init = identity_state(n, ex.num_vars);

  // Wires of `goal` written over the basis `init`.
  auto target_in = [&](const QubitState& basis, const QubitState& goal) {
    SpanBasis sb(basis);
    BoolMatrix m(n, n + 1);
    for (int k = 1; k <= n; ++k) {
      auto e = sb.express(goal[k - 1]);
      if (!e) throw OutsideSpanError("cnot_opt_b: slice state leaves the basis span");
      for (int j = 1; j <= n; ++j) m.set(k, j, e->rows[j - 1]);
      m.set(k, n + 1, e->offset);
    }
    return m;
  };
  auto emit_block = [&](const PhasePolySet& part, const QubitState& goal) {
    Circuit block = synthesize_block(rebase(part, init), target_in(init, goal), g);
    r.report.slice_cnots.push_back(cnot_count(block));
    r.circuit.append(block);
  };

  for (const HSliceRecord& h : ex.h) {
    const PhasePolySet part = uncomputable_terms(remaining, h);
    remaining.remove_if_in(part);
    emit_block(part, h.q_in);
    r.circuit.add(Gate::single(GateKind::H, h.pos));
    init = h.q_out;
  }
  emit_block(remaining, ex.q);
  finish(r, c, "opt-b", t0);
  return r;
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "swap") return Algorithm::Swap;
  if (name == "opt-a") return Algorithm::OptA;
  if (name == "opt-b") return Algorithm::OptB;
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected swap, opt-a or opt-b)");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Swap: return "swap";
    case Algorithm::OptA: return "opt-a";
    case Algorithm::OptB: return "opt-b";
  }
  return "?";
}

ResynthesisResult resynthesize(Algorithm a, const Circuit& c, const Graph& g) {
  switch (a) {
    case Algorithm::Swap: return run_swap_template(c, g);
    case Algorithm::OptA: return cnot_opt_a(c, g);
    case Algorithm::OptB: return cnot_opt_b(c, g);
  }
  throw std::logic_error("unknown algorithm");
}

Circuit random_circuit(int n, int cnots, std::mt19937_64& rng) {
  if (n < 2 && cnots > 0) throw std::invalid_argument("random_circuit: CNOTs need two qubits");
  Circuit c(n);
  std::uniform_int_distribution<int> kind(0, static_cast<int>(std::size(kAllGateKinds)) - 1);
  std::uniform_int_distribution<int> qubit(1, n);
  int placed = 0;
  while (placed < cnots) {
    const GateKind k = kAllGateKinds[kind(rng)];
    const int t = qubit(rng);
    if (k != GateKind::CNOT) {
      c.add(Gate::single(k, t));
      continue;
    }
    int ctl = qubit(rng);
    while (ctl == t) ctl = qubit(rng);
    c.add(Gate::cnot(ctl, t));
    ++placed;
  }
  return c;
}

std::vector<int> default_cnot_counts(const std::string& architecture) {
  if (architecture == "9q-square") return {3, 5, 10, 20, 30};
  return {4, 8, 16, 32, 64, 128, 256};
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  const Graph g = load_graph(config.architecture);
  const int n = config.qubits > 0 ? config.qubits : g.num_vertices();
  if (config.trials < 1) throw std::invalid_argument("bench: trials must be positive");
  const auto counts = config.cnot_counts.empty() ? default_cnot_counts(config.architecture)
                                                 : config.cnot_counts;

  struct Trial {
    double swap, a, a_s, b, b_s;
  };
  const std::size_t total = counts.size() * static_cast<std::size_t>(config.trials);
  std::vector<Trial> results(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;

  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        const int count = counts[i / config.trials];
        std::seed_seq seq{config.seed, static_cast<std::uint64_t>(count),
                          static_cast<std::uint64_t>(i % config.trials)};
        std::mt19937_64 rng(seq);
        const Circuit c = random_circuit(n, count, rng);
        const auto s = run_swap_template(c, g);
        const auto a = cnot_opt_a(c, g);
        const auto b = cnot_opt_b(c, g);
        results[i] = {s.report.overhead_pct, a.report.overhead_pct, a.report.seconds,
                      b.report.overhead_pct, b.report.seconds};
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(total));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  std::vector<BenchRow> rows;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    BenchRow row{config.architecture, n, counts[k]};
    for (int t = 0; t < config.trials; ++t) {
      const Trial& r = results[k * config.trials + t];
      row.swap_overhead_pct += r.swap;
      row.opt_a_overhead_pct += r.a;
      row.opt_a_seconds += r.a_s;
      row.opt_b_overhead_pct += r.b;
      row.opt_b_seconds += r.b_s;
    }
    for (double* v : {&row.swap_overhead_pct, &row.opt_a_overhead_pct, &row.opt_a_seconds,
                      &row.opt_b_overhead_pct, &row.opt_b_seconds})
      *v /= config.trials;
    rows.push_back(row);
  }
  return rows;
}

std::string bench_tsv_header() {
  return "architecture\tqubits\tinitial_count\tswap_overhead_pct\topt_a_overhead_pct\topt_a_time_s\t"
         "opt_b_overhead_pct\topt_b_time_s\n";
}

std::string format_bench_tsv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << bench_tsv_header() << std::fixed;
  for (const auto& r : rows)
    os << r.architecture << '\t' << r.qubits << '\t' << r.initial_count << '\t' << std::setprecision(2)
       << r.swap_overhead_pct << '\t' << r.opt_a_overhead_pct << '\t' << std::setprecision(4)
       << r.opt_a_seconds << '\t' << std::setprecision(2) << r.opt_b_overhead_pct << '\t'
       << std::setprecision(4) << r.opt_b_seconds << '\n';
  return os.str();
}

}  // namespace cnotsynth
