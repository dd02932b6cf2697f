#include "cnotsynth/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "cnotsynth/circuit.hpp"
#include "cnotsynth/linalg.hpp"
#include "cnotsynth/linsynth.hpp"
#include "cnotsynth/phasepoly.hpp"
#include "cnotsynth/phasesynth.hpp"
#include "cnotsynth/pipeline.hpp"
#include "cnotsynth/topology.hpp"
#include "cnotsynth/verify.hpp"

namespace cnotsynth {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

Graph graph_for(const std::string& selector) {
  try {
    return load_graph(selector);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Checks a resynthesized circuit against its input. Dense simulation up to
// the qubit limit, path-sum comparison beyond it.
bool verify_output(const Circuit& in, const Circuit& out, const Graph& g, std::string& how) {
  if (!connectivity_violations(out, g).empty()) {
    how = "connectivity";
    return false;
  }
  if (in.num_qubits <= kMaxDenseQubits) {
    how = "unitary";
    return equivalent_up_to_phase(in, out);
  }
  how = "pathsum";
  return path_sum_equal(in, out);
}

nlohmann::json report_json(const ResynthesisReport& r) {
  return {{"algorithm", r.algorithm},       {"input_cnots", r.input_cnots},
          {"output_cnots", r.output_cnots}, {"overhead_pct", r.overhead_pct},
          {"slice_cnots", r.slice_cnots},   {"seconds", r.seconds}};
}

std::string report_tsv(const ResynthesisReport& r, const std::string& arch, const std::string& verified) {
  std::ostringstream os;
  os << "architecture\talgorithm\tinput_cnots\toutput_cnots\toverhead_pct\ttime_s";
  if (!verified.empty()) os << "\tverified";
  os << '\n' << arch << '\t' << r.algorithm << '\t' << r.input_cnots << '\t' << r.output_cnots << '\t'
     << std::fixed << std::setprecision(2) << r.overhead_pct << '\t' << std::setprecision(4) << r.seconds;
  if (!verified.empty()) os << '\t' << verified;
  os << '\n';
  return os.str();
}

// "n=9 cnots=10,20 trials=5" tokens for bench --random.
void apply_random_spec(const std::vector<std::string>& tokens, BenchConfig& cfg) {
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw UsageError("--random expects key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    try {
      if (key == "n") {
        cfg.qubits = std::stoi(val);
      } else if (key == "trials") {
        cfg.trials = std::stoi(val);
      } else if (key == "cnots") {
        cfg.cnot_counts.clear();
        std::stringstream ss(val);
        for (std::string part; std::getline(ss, part, ',');) cfg.cnot_counts.push_back(std::stoi(part));
      } else {
        throw UsageError("--random: unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw UsageError("--random: bad value in '" + tok + "'");
    }
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity-aware CNOT resynthesis"};
  app.set_config("--config", "", "TOML/INI file with option values");
  app.require_subcommand(1);

  std::string algo = "opt-a", circuit_path, graph_sel, report_fmt = "tsv", output_path;
  bool do_verify = false;
  auto* resynth = app.add_subcommand("resynth", "Map a circuit onto a connectivity graph");
  resynth->add_option("--algo", algo, "swap, opt-a or opt-b")
      ->check(CLI::IsMember({"swap", "opt-a", "opt-b"}));
  resynth->add_option("--circuit", circuit_path, "Input circuit file")->required();
  resynth->add_option("--graph", graph_sel, "Preset name or graph file")->required();
  resynth->add_option("--report", report_fmt, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  resynth->add_option("--output,-o", output_path, "Where to write the resynthesized circuit");
  resynth->add_flag("--verify", do_verify, "Check equivalence and connectivity of the output");

  std::string matrix_path;
  auto* synth_linear = app.add_subcommand("synth-linear", "Synthesize a linear reversible transform");
  synth_linear->add_option("--matrix", matrix_path, "Transform file ('n <k>' then rows)")->required();
  synth_linear->add_option("--graph", graph_sel, "Preset name or graph file")->required();
  synth_linear->add_option("--output,-o", output_path, "Output circuit file");

  std::string terms_path, action_path;
  auto* synth_phase = app.add_subcommand("synth-phase", "Synthesize a phase polynomial network");
  synth_phase->add_option("--terms", terms_path, "Terms file ('<c> <bitflip> <bits>' per line)")->required();
  synth_phase->add_option("--graph", graph_sel, "Preset name or graph file")->required();
  synth_phase->add_option("--output,-o", output_path, "Output circuit file");
  synth_phase->add_option("--action", action_path, "Also write the output's linear action here");

  std::string a_path, b_path, mode = "unitary";
  auto* verify = app.add_subcommand("verify", "Compare two circuits");
  verify->add_option("--a", a_path, "First circuit")->required();
  verify->add_option("--b", b_path, "Second circuit")->required();
  verify->add_option("--mode", mode, "unitary, phasepoly, linear or pathsum")
      ->check(CLI::IsMember({"unitary", "phasepoly", "linear", "pathsum"}));

  std::vector<std::string> random_spec, bench_graphs;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  auto* bench = app.add_subcommand("bench", "Random-circuit overhead table");
  bench->add_option("--random", random_spec, "n=<n> cnots=<k>[,<k>...] trials=<t>")->expected(1, -1);
  bench->add_option("--graph", bench_graphs, "Preset names or graph files (default: all presets)");
  bench->add_option("--seed", seed, "RNG seed");
  bench->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  bench->add_option("--output,-o", output_path, "Output TSV file");

  auto* dump = app.add_subcommand("dump-phasepoly", "Print the phase polynomial of a circuit");
  dump->add_option("--circuit", circuit_path, "Input circuit file")->required();

  std::string preset_name, preset_dir;
  auto* presets = app.add_subcommand("presets", "Print the built-in architectures as graph files");
  presets->add_option("--name", preset_name, "Only this preset");
  presets->add_option("--dir", preset_dir, "Write <name>.graph files into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*resynth) {
      const Circuit c = read_circuit_file(circuit_path);
      const Graph g = graph_for(graph_sel);
      const auto res = resynthesize(algorithm_from_name(algo), c, g);
      std::string verified;
      int code = 0;
      if (do_verify) {
        std::string how;
        const bool ok = verify_output(c, res.circuit, g, how);
        verified = ok ? "pass" : "fail";
        if (!ok) {
          err << "verification failed (" << how << ")\n";
          code = 1;
        }
      }
      if (!output_path.empty()) write_output(output_path, write_circuit(res.circuit), out);
      if (report_fmt == "json") {
        auto j = report_json(res.report);
        j["architecture"] = graph_sel;
        if (do_verify) j["verified"] = code == 0;
        out << j.dump(2) << '\n';
      } else {
        out << report_tsv(res.report, graph_sel, verified);
      }
      return code;
    }
    if (*synth_linear) {
      const auto a = parse_transform(read_file(matrix_path));
      const Graph g = graph_for(graph_sel);
      write_output(output_path, write_circuit(linear_tf_synth(a, g)), out);
      return 0;
    }
    if (*synth_phase) {
      const auto p = parse_terms(read_file(terms_path));
      const Graph g = graph_for(graph_sel);
      const auto res = phase_nw_synth(p, g);
      write_output(output_path, write_circuit(res.circuit), out);
      if (!action_path.empty()) write_output(action_path, dump_transform(res.action), out);
      return 0;
    }
    if (*verify) {
      const Circuit a = read_circuit_file(a_path), b = read_circuit_file(b_path);
      bool same;
      if (mode == "unitary") same = equivalent_up_to_phase(a, b);
      else if (mode == "phasepoly") same = phase_poly_equal(a, b);
      else if (mode == "pathsum") same = path_sum_equal(a, b);
      else same = a.num_qubits == b.num_qubits && linear_action(a) == linear_action(b);
      out << (same ? "equivalent" : "not equivalent") << '\n';
      return same ? 0 : 1;
    }
    if (*bench) {
      if (bench_graphs.empty())
        bench_graphs = {"9q-square", "16q-square", "rigetti-16q-aspen", "ibm-qx5", "ibm-q20-tokyo"};
      std::vector<BenchRow> rows;
      for (const auto& arch : bench_graphs) {
        graph_for(arch);
        BenchConfig cfg;
        cfg.architecture = arch;
        cfg.seed = seed;
        cfg.threads = threads;
        apply_random_spec(random_spec, cfg);
        auto part = run_bench(cfg);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      write_output(output_path, format_bench_tsv(rows), out);
      return 0;
    }
    if (*dump) {
      const Circuit c = read_circuit_file(circuit_path);
      out << format_phasepoly(extract_sliced(c).p);
      return 0;
    }
    if (*presets) {
      std::vector<std::string> names = preset_name.empty() ? preset_names() : std::vector{preset_name};
      for (const auto& name : names) {
        const Graph g = graph_for(name);
        if (!preset_dir.empty()) {
          write_output(preset_dir + "/" + name + ".graph", write_graph(g), out);
        } else {
          out << "# " << name << '\n' << write_graph(g);
        }
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace cnotsynth
