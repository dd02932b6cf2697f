#include "cnotsynth/phasesynth.hpp"

#include <algorithm>

#include "cnotsynth/linsynth.hpp"

namespace cnotsynth {

std::vector<GateKind> phase_gates_for(int coeff) {
  switch (((coeff % 8) + 8) % 8) {
    case 1: return {GateKind::T};
    case 2: return {GateKind::S};
    case 3: return {GateKind::S, GateKind::T};
    case 4: return {GateKind::Z};
    case 5: return {GateKind::Z, GateKind::T};
    case 6: return {GateKind::Sdg};
    case 7: return {GateKind::Tdg};
    default: return {};
  }
}

int select_pivot(const CofactorFrame& frame, const BoolMatrix& parities, PivotRule rule) {
  if (frame.rows.empty() || frame.columns.empty())
    throw std::invalid_argument("select_pivot: empty frame");
  const int total = static_cast<int>(frame.columns.size());
  int best = 0;
  long best_score = -1;
  for (int j : frame.rows) {
    int ones = 0;
    for (int c : frame.columns) ones += parities.get(j, c);
    long score;
    if (rule == PivotRule::kLargestCofactor) {
      score = std::max(ones, total - ones);
    } else {
      const bool splits = ones > 0 && ones < total;
      score = (splits ? 1L << 32 : 0) + ones;
    }
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

namespace {

class Synthesizer {
 public:
  Synthesizer(const ParityMatrix& p, const Graph& g)
      : p_(p), g_(g), active_(vertex_range(g, 1, p.n)), a_(p.n, static_cast<int>(p.columns.size())),
        done_(p.columns.size(), 0) {
    res_.circuit = Circuit(p.n);
    res_.action = AugmentedLinearTransform::identity(p.n);
    for (int c = 1; c <= a_.cols(); ++c)
      for (int r = 1; r <= p.n; ++r) a_.set(r, c, p.columns[c - 1].bits[r - 1]);
  }

  PhaseSynthResult run(PivotRule rule) {
    res_.upfront = realize_all();

    std::vector<CofactorFrame> stack;
    CofactorFrame first;
    first.columns = pending();
    for (int r = 1; r <= p_.n; ++r) first.rows.push_back(r);
    if (!first.columns.empty()) stack.push_back(std::move(first));

    while (!stack.empty()) {
      CofactorFrame f = std::move(stack.back());
      stack.pop_back();
      PhaseIteration it;
      it.popped = f;
      prune(f.columns);

      if (f.target != kNoTarget && !f.columns.empty()) {
        std::vector<int> terminals{f.target};
        for (int k = 1; k <= p_.n; ++k) {
          if (k == f.target) continue;
          bool all = true;
          for (int c : f.columns) all = all && a_.get(k, c);
          if (all) terminals.push_back(k);
        }
        if (terminals.size() > 1) {
          it.cnots = accumulate(terminals);
          it.placements = realize_all();
          prune(f.columns);
        }
      }

      if (!f.columns.empty() && !f.rows.empty()) {
        const int j = select_pivot(f, a_, rule);
        it.pivot = j;
        CofactorFrame b0, b1;
        for (int c : f.columns) (a_.get(j, c) ? b1 : b0).columns.push_back(c);
        for (int r : f.rows)
          if (r != j) b0.rows.push_back(r);
        b1.rows = b0.rows;
        b0.target = f.target;
        b1.target = f.target == kNoTarget ? j : f.target;
        if (!b1.columns.empty()) stack.push_back(std::move(b1));
        if (!b0.columns.empty()) stack.push_back(std::move(b0));
      }
      it.after = a_;
      res_.iterations.push_back(std::move(it));
    }

    // Columns the stack could not finish: gather each one on its first row.
    for (auto rest = pending(); !rest.empty(); rest = pending()) {
      const int c = rest.front();
      std::vector<int> terminals;
      for (int r = 1; r <= p_.n; ++r)
        if (a_.get(r, c)) terminals.push_back(r);
      accumulate(terminals);
      auto placed = realize_all();
      if (done_[c - 1] == 0) throw std::logic_error("phase_nw_synth: completion step failed");
      res_.completion.insert(res_.completion.end(), placed.begin(), placed.end());
    }
    return std::move(res_);
  }

 private:
  void emit(const Gate& g) {
    res_.circuit.add(g);
    if (g.kind == GateKind::CNOT || g.kind == GateKind::X)
      res_.action = apply_gate_to_transform(std::move(res_.action), g);
  }

  std::vector<Gate> accumulate(const std::vector<int>& terminals) {
    auto r = row_op(a_, steiner_tree(g_, active_, terminals, terminals.front()), 4);
    for (const Gate& g : r.cnots) emit(g);
    a_ = std::move(r.matrix);
    return r.cnots;
  }

  int single_row(int c) const {
    int row = 0;
    for (int r = 1; r <= p_.n; ++r)
      if (a_.get(r, c)) {
        if (row) return 0;
        row = r;
      }
    return row;
  }

  std::vector<PhasePlacement> realize_all() {
    std::vector<PhasePlacement> out;
    for (int c = 1; c <= a_.cols(); ++c) {
      if (done_[c - 1]) continue;
      const int w = single_row(c);
      if (!w) continue;
      const ParityColumn& col = p_.columns[c - 1];
      PhasePlacement pl{c, w, col.flip != res_.action.flip(w), phase_gates_for(col.coeff)};
      if (pl.with_x) emit(Gate::single(GateKind::X, w));
      for (GateKind k : pl.gates) emit(Gate::single(k, w));
      done_[c - 1] = 1;
      out.push_back(std::move(pl));
    }
    return out;
  }

  std::vector<int> pending() const {
    std::vector<int> out;
    for (int c = 1; c <= a_.cols(); ++c)
      if (!done_[c - 1]) out.push_back(c);
    return out;
  }

  void prune(std::vector<int>& cols) const {
    std::erase_if(cols, [&](int c) { return done_[c - 1] != 0; });
  }

  const ParityMatrix& p_;
  const Graph& g_;
  VertexMask active_;
  BoolMatrix a_;
  std::vector<char> done_;
  PhaseSynthResult res_;
};

}  // namespace

PhaseSynthResult phase_nw_synth(const ParityMatrix& p, const Graph& g, PivotRule rule) {
  if (g.num_vertices() == 0) throw std::invalid_argument("phase_nw_synth: empty graph");
  if (p.n < 1 || p.n > g.num_vertices())
    throw std::invalid_argument("phase_nw_synth: qubit count does not fit the graph");
  if (!g.connected(vertex_range(g, 1, p.n)))
    throw std::invalid_argument("phase_nw_synth: graph restricted to the qubits is disconnected");
  for (const auto& c : p.columns)
    if (static_cast<int>(c.bits.size()) != p.n)
      throw std::invalid_argument("phase_nw_synth: parity width does not match n");
  return Synthesizer(p, g).run(rule);
}

}  // namespace cnotsynth
