#include "cnotsynth/linsynth.hpp"

#include <algorithm>
#include <deque>

namespace cnotsynth {

const std::vector<int>& SubTree::children_of(int v) const {
  static const std::vector<int> kNone;
  auto it = children.find(v);
  return it == children.end() ? kNone : it->second;
}

std::vector<std::vector<int>> SubTree::layers() const {
  std::vector<std::vector<int>> out{{root}};
  while (true) {
    std::vector<int> next;
    for (int u : out.back())
      for (int v : children_of(u)) next.push_back(v);
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<std::pair<int, int>> SubTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [u, cs] : children)
    for (int v : cs) out.emplace_back(u, v);
  return out;
}

std::vector<SubTree> separate(const SteinerTree& tree, int alg) {
  std::vector<SubTree> out;
  std::deque<int> roots{tree.root};
  while (!roots.empty()) {
    SubTree st;
    st.root = roots.front();
    roots.pop_front();
    std::deque<int> q{st.root};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : tree.children(u)) {
        st.children[u].push_back(v);
        if (tree.is_terminal(v)) {
          st.leaves.push_back(v);
          if (!tree.children(v).empty()) roots.push_back(v);
        } else {
          q.push_back(v);
        }
      }
    }
    out.push_back(std::move(st));
  }
  if (alg != 4) return out;

  std::vector<SubTree> paths;
  for (const SubTree& st : out) {
    std::map<int, int> parent;
    for (auto [u, v] : st.edges()) parent[v] = u;
    for (int leaf : st.leaves) {
      SubTree p;
      p.root = leaf;
      int cur = leaf;
      while (cur != st.root) {
        int up = parent.at(cur);
        p.children[cur].push_back(up);
        cur = up;
      }
      p.leaves.push_back(st.root);
      paths.push_back(std::move(p));
    }
  }
  return paths;
}

RowOpResult row_op(BoolMatrix m, const SteinerTree& tree, int alg) {
  if (alg < 1 || alg > 4) throw std::invalid_argument("row_op: alg must be 1..4");
  const auto subs = separate(tree, alg);
  RowOpResult res;
  auto emit = [&](int u, int v) {
    res.cnots.push_back(Gate::cnot(u, v));
    if (alg != 4) m.row_add(u, v);
  };
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
    const SubTree& st = *it;
    const auto layers = st.layers();
    const int last = static_cast<int>(layers.size()) - 2;  // deepest layer with children
    if (alg != 1)
      for (int d = last; d >= 1; --d)
        for (int u : layers[d])
          for (int v : st.children_of(u)) emit(u, v);
    for (int d = 0; d <= last; ++d)
      for (int u : layers[d])
        for (int v : st.children_of(u)) emit(u, v);
    for (int d = last; d >= 0; --d)
      for (int u : layers[d])
        for (int v : st.children_of(u))
          if (st.has_children(v)) emit(u, v);
    if (alg != 1)
      for (int d = 1; d <= last; ++d)
        for (int u : layers[d])
          for (int v : st.children_of(u))
            if (st.has_children(v)) emit(u, v);
    if (alg == 4 && !st.leaves.empty()) m.row_add(st.leaves.front(), st.root);
  }
  if (alg == 2)
    for (const SubTree& st : subs) res.t1.push_back({st.root, st.leaves});
  res.matrix = std::move(m);
  return res;
}

namespace {

void append(std::vector<Gate>& dst, const std::vector<Gate>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// Runs the Steiner elimination for one column on the shrunken graph, or on
// the full graph with the row-preserving traversal when the shrunken graph no
// longer connects the terminals.
RowOpResult eliminate(const Graph& g, const VertexMask& shrunk, const VertexMask& full,
                      const BoolMatrix& m, const std::vector<int>& terminals, int pivot,
                      int alg, bool& fallback) {
  try {
    return row_op(m, steiner_tree(g, shrunk, terminals, pivot), alg);
  } catch (const NoPathError&) {
    fallback = true;
    return row_op(m, steiner_tree(g, full, terminals, pivot), alg == 1 ? 3 : alg);
  }
}

}  // namespace

Circuit linear_tf_synth(const AugmentedLinearTransform& a, const Graph& g, LinSynthTrace* trace) {
  const int n = a.n;
  if (n > g.num_vertices())
    throw std::invalid_argument("linear_tf_synth: more qubits than graph vertices");
  const VertexMask full = vertex_range(g, 1, n);
  if (!g.connected(full))
    throw std::invalid_argument("linear_tf_synth: graph restricted to the qubits is disconnected");
  if (!a.invertible()) throw SingularTransformError("linear_tf_synth: singular transform");

  std::vector<Gate> xs, y1, y2;
  for (int i = 1; i <= n; ++i)
    if (a.flip(i)) xs.push_back(Gate::single(GateKind::X, i));

  BoolMatrix w = a.left();
  for (int i = 1; i <= n; ++i) {
    LinSynthStep step;
    step.phase = 1;
    step.column = i;
    const VertexMask shrunk = vertex_range(g, i, n);

    if (!w.get(i, i)) {
      const auto d = bfs_distances(g, i, shrunk);
      int best = 0;
      for (int j = i + 1; j <= n; ++j)
        if (w.get(j, i) && d[j] >= 0 && (!best || d[j] < d[best])) best = j;
      if (best) {
        const auto path = shortest_path(g, i, best, shrunk);
        for (int k = static_cast<int>(path.size()) - 2; k >= 0; --k) {
          step.diagonal_fix.push_back(Gate::cnot(path[k + 1], path[k]));
          w.row_add(path[k + 1], path[k]);
        }
      } else {
        const auto df = bfs_distances(g, i, full);
        for (int j = i + 1; j <= n; ++j)
          if (w.get(j, i) && (!best || df[j] < df[best])) best = j;
        if (!best) throw SingularTransformError("linear_tf_synth: singular transform");
        step.fallback = true;
        auto r = row_op(w, tree_from_path(g, shortest_path(g, best, i, full)), 3);
        step.diagonal_fix = r.cnots;
        w = std::move(r.matrix);
      }
    }

    std::vector<int> terminals{i};
    for (int j = i + 1; j <= n; ++j)
      if (w.get(j, i)) terminals.push_back(j);
    if (terminals.size() > 1) {
      auto r = eliminate(g, shrunk, full, w, terminals, i, 1, step.fallback);
      step.cnots = r.cnots;
      w = std::move(r.matrix);
    }
    append(y1, step.diagonal_fix);
    append(y1, step.cnots);
    step.after = w;
    if (trace) trace->steps.push_back(std::move(step));
  }
  if (!is_upper_triangular(w)) throw std::logic_error("linear_tf_synth: upper phase failed");
  if (trace) trace->upper = w;

  BoolMatrix m = w.transposed();
  if (trace) trace->transposed = m;
  for (int i = 1; i <= n; ++i) {
    LinSynthStep step;
    step.phase = 2;
    step.column = i;
    const VertexMask shrunk = vertex_range(g, i, n);
    if (!m.get(i, i)) throw std::logic_error("linear_tf_synth: zero pivot after transpose");

    std::vector<int> terminals{i};
    for (int j = i + 1; j <= n; ++j)
      if (m.get(j, i)) terminals.push_back(j);
    if (terminals.size() > 1) {
      auto r = eliminate(g, shrunk, full, m, terminals, i, 2, step.fallback);
      step.cnots = r.cnots;
      m = std::move(r.matrix);

      std::vector<int> b(n + 1, 0);
      for (const auto& rl : r.t1)
        for (int leaf : rl.leaves) b[leaf] = rl.root;
      for (const auto& rl : r.t1) {
        auto leaves = rl.leaves;
        std::sort(leaves.begin(), leaves.end());
        for (int leaf : leaves) {
          int root = rl.root;
          while (root > leaf) {
            std::vector<int> path;
            try {
              path = shortest_path(g, root, leaf, shrunk);
            } catch (const NoPathError&) {
              step.fallback = true;
              path = shortest_path(g, root, leaf, full);
            }
            auto c = row_op(m, tree_from_path(g, path), 3);
            append(step.correction, c.cnots);
            m = std::move(c.matrix);
            b[leaf] = b[root];
            root = b[root];
          }
        }
      }
    }
    append(y2, step.cnots);
    append(y2, step.correction);
    step.after = m;
    if (trace) trace->steps.push_back(std::move(step));
  }
  if (!(m == BoolMatrix::identity(n))) throw std::logic_error("linear_tf_synth: lower phase failed");

  Circuit out(n);
  for (const Gate& gate : y2) out.add(Gate::cnot(gate.target, gate.control));
  for (auto it = y1.rbegin(); it != y1.rend(); ++it) out.add(*it);
  for (const Gate& gate : xs) out.add(gate);
  return out;
}

}  // namespace cnotsynth
