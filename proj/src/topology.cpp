#include "cnotsynth/topology.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace cnotsynth {

Graph::Graph(int num_vertices) : n_(num_vertices), adj_(num_vertices + 1) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || v < 1 || u > n_ || v > n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++num_edges_;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::connected(const VertexMask& active) const {
  int start = 0, count = 0;
  for (int v = 1; v <= n_; ++v)
    if (active[v]) {
      if (!start) start = v;
      ++count;
    }
  if (count == 0) return true;
  auto d = bfs_distances(*this, start, active);
  int reached = 0;
  for (int v = 1; v <= n_; ++v) reached += active[v] && d[v] >= 0;
  return reached == count;
}

bool Graph::connected() const { return connected(all_vertices(*this)); }

VertexMask all_vertices(const Graph& g) {
  VertexMask m(g.num_vertices() + 1, 1);
  m[0] = 0;
  return m;
}

VertexMask vertex_range(const Graph& g, int lo, int hi) {
  VertexMask m(g.num_vertices() + 1, 0);
  for (int v = std::max(lo, 1); v <= std::min(hi, g.num_vertices()); ++v) m[v] = 1;
  return m;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

Graph from_edges(int n, const EdgeList& edges, int offset) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u + offset, v + offset);
  return g;
}

Graph grid(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c + 1;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  return g;
}

// Two octagonal rings joined by two links.
Graph rigetti_aspen16() {
  EdgeList e;
  for (int base : {0, 8})
    for (int i = 0; i < 8; ++i) e.emplace_back(base + i, base + (i + 1) % 8);
  e.emplace_back(1, 14);
  e.emplace_back(2, 13);
  return from_edges(16, e, 1);
}

Graph ibm_qx5() {
  const EdgeList e = {{1, 0},  {1, 2},   {2, 3},   {3, 14},  {3, 4},   {5, 4},
                      {6, 5},  {6, 11},  {6, 7},   {7, 10},  {8, 7},   {9, 8},
                      {9, 10}, {11, 10}, {12, 5},  {12, 11}, {12, 13}, {13, 4},
                      {13, 14}, {15, 0}, {15, 14}, {15, 2}};
  return from_edges(16, e, 1);
}

Graph ibm_tokyo() {
  const EdgeList e = {
      {0, 1},   {1, 2},   {2, 3},   {3, 4},   {0, 5},   {1, 6},   {1, 7},   {2, 6},
      {2, 7},   {3, 8},   {3, 9},   {4, 8},   {4, 9},   {5, 6},   {5, 10},  {5, 11},
      {6, 10},  {6, 11},  {6, 7},   {7, 12},  {7, 13},  {7, 8},   {8, 12},  {8, 13},
      {8, 9},   {10, 11}, {11, 16}, {11, 17}, {11, 12}, {12, 16}, {12, 17}, {12, 13},
      {13, 18}, {13, 19}, {13, 14}, {14, 18}, {14, 19}, {15, 16}, {16, 17}, {17, 18},
      {18, 19}, {9, 14},  {10, 15}};
  return from_edges(20, e, 1);
}

Graph appendix_2x3() {
  return from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}, {2, 5}}, 0);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view s, int line) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::invalid_argument("graph line " + std::to_string(line) + ": bad integer");
  return v;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"9q-square", "16q-square", "rigetti-16q-aspen", "ibm-qx5", "ibm-q20-tokyo",
          "appendix-2x3"};
}

Graph preset_graph(std::string_view name) {
  if (name == "9q-square") return grid(3, 3);
  if (name == "16q-square") return grid(4, 4);
  if (name == "rigetti-16q-aspen") return rigetti_aspen16();
  if (name == "ibm-qx5") return ibm_qx5();
  if (name == "ibm-q20-tokyo") return ibm_tokyo();
  if (name == "appendix-2x3") return appendix_2x3();
  std::string msg = "unknown preset '" + std::string(name) + "'; valid presets:";
  for (const auto& n : preset_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

Graph parse_graph(std::string_view text) {
  std::optional<Graph> g;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    auto t = split_ws(line);
    if (t.empty()) continue;
    if (!g) {
      if (t[0] != "vertices" || t.size() != 2)
        throw std::invalid_argument("graph line " + std::to_string(lineno) +
                                    ": expected 'vertices <n>'");
      g.emplace(to_int(t[1], lineno));
      continue;
    }
    if (t[0] != "edge" || t.size() != 3)
      throw std::invalid_argument("graph line " + std::to_string(lineno) +
                                  ": expected 'edge <u> <v>'");
    g->add_edge(to_int(t[1], lineno), to_int(t[2], lineno));
  }
  if (!g) throw std::invalid_argument("graph: missing 'vertices <n>' header");
  return *g;
}

std::string write_graph(const Graph& g) {
  std::ostringstream os;
  os << "vertices " << g.num_vertices() << '\n';
  for (auto [u, v] : g.edges()) os << "edge " << u << ' ' << v << '\n';
  return os.str();
}

Graph load_graph(const std::string& selector) {
  for (const auto& n : preset_names())
    if (n == selector) return preset_graph(n);
  if (std::filesystem::is_regular_file(selector)) {
    std::ifstream in(selector);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
  }
  return preset_graph(selector);  // throws with the list of presets
}

std::vector<int> bfs_distances(const Graph& g, int src, const VertexMask& active) {
  std::vector<int> d(g.num_vertices() + 1, -1);
  if (!active[src]) return d;
  std::deque<int> q{src};
  d[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.neighbors(u))
      if (active[w] && d[w] < 0) {
        d[w] = d[u] + 1;
        q.push_back(w);
      }
  }
  return d;
}

std::vector<int> shortest_path(const Graph& g, int u, int v, const VertexMask& active) {
  if (!active[u] || !active[v]) throw NoPathError("path endpoint outside the active set");
  std::vector<int> par(g.num_vertices() + 1, -1);
  std::deque<int> q{u};
  par[u] = u;
  while (!q.empty() && par[v] < 0) {
    int x = q.front();
    q.pop_front();
    for (int w : g.neighbors(x))
      if (active[w] && par[w] < 0) {
        par[w] = x;
        q.push_back(w);
      }
  }
  if (par[v] < 0)
    throw NoPathError("no path from " + std::to_string(u) + " to " + std::to_string(v));
  std::vector<int> path{v};
  while (path.back() != u) path.push_back(par[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> SteinerTree::children(int v) const {
  std::vector<int> out;
  for (int c : nodes)
    if (c != root && parent[c] == v) out.push_back(c);
  return out;
}

std::vector<std::pair<int, int>> SteinerTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int c : nodes)
    if (c != root) out.emplace_back(parent[c], c);
  return out;
}

namespace {

SteinerTree root_tree(const Graph& g, const std::set<std::pair<int, int>>& edges,
                      const std::vector<int>& terminals, int root) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  SteinerTree t;
  t.root = root;
  t.parent.assign(n + 1, 0);
  t.terminal.assign(n + 1, 0);
  t.depth.assign(n + 1, -1);
  for (int v : terminals) t.terminal[v] = 1;
  std::deque<int> q{root};
  t.depth[root] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    t.nodes.push_back(u);
    for (int w : adj[u])
      if (t.depth[w] < 0) {
        t.depth[w] = t.depth[u] + 1;
        t.parent[w] = u;
        q.push_back(w);
      }
  }
  std::sort(t.nodes.begin(), t.nodes.end());
  return t;
}

}  // namespace

SteinerTree steiner_tree(const Graph& g, const VertexMask& active,
                         const std::vector<int>& terminals_in, int root) {
  const int n = g.num_vertices();
  std::vector<int> terminals = terminals_in;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (!std::binary_search(terminals.begin(), terminals.end(), root))
    throw std::invalid_argument("steiner_tree: root must be a terminal");
  for (int v : terminals)
    if (v < 1 || v > n || !active[v])
      throw std::invalid_argument("steiner_tree: terminal outside the active set");

  // Distances between every pair of active vertices; graphs here are small.
  std::vector<std::vector<int>> dist(n + 1);
  auto dist_from = [&](int v) -> const std::vector<int>& {
    if (dist[v].empty()) dist[v] = bfs_distances(g, v, active);
    return dist[v];
  };

  std::vector<std::vector<int>> comps;
  for (int v : terminals) comps.push_back({v});
  std::set<std::pair<int, int>> union_edges;

  while (comps.size() > 1) {
    std::tuple<int, int, int> best{-1, 0, 0};
    std::size_t ba = 0, bb = 0;
    for (std::size_t a = 0; a < comps.size(); ++a)
      for (std::size_t b = a + 1; b < comps.size(); ++b)
        for (int u : comps[a]) {
          const auto& du = dist_from(u);
          for (int v : comps[b]) {
            if (du[v] < 0) continue;
            std::tuple<int, int, int> key{du[v], std::min(u, v), std::max(u, v)};
            if (std::get<0>(best) < 0 || key < best) {
              best = key;
              ba = a;
              bb = b;
            }
          }
        }
    if (std::get<0>(best) < 0) throw NoPathError("steiner_tree: terminals are disconnected");
    auto [d, s, t] = best;
    // Among equal-length paths the one visiting larger vertex ids first wins.
    const auto& dt = dist_from(t);
    std::vector<int> path{s};
    while (path.back() != t) {
      int cur = path.back(), next = 0;
      for (int w : g.neighbors(cur))
        if (active[w] && dt[w] == dt[cur] - 1) next = std::max(next, w);
      path.push_back(next);
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
      union_edges.insert({std::min(path[k], path[k + 1]), std::max(path[k], path[k + 1])});

    std::vector<int> merged = comps[ba];
    merged.insert(merged.end(), comps[bb].begin(), comps[bb].end());
    merged.insert(merged.end(), path.begin(), path.end());
    std::vector<std::vector<int>> rest;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c == ba || c == bb) continue;
      bool touches = false;
      for (int v : comps[c])
        if (std::find(path.begin(), path.end(), v) != path.end()) touches = true;
      if (touches)
        merged.insert(merged.end(), comps[c].begin(), comps[c].end());
      else
        rest.push_back(comps[c]);
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    rest.insert(rest.begin() + static_cast<std::ptrdiff_t>(std::min(ba, rest.size())), merged);
    comps = std::move(rest);
    (void)d;
  }

  // Minimum spanning tree over the merged edges (unit weights, lexicographic
  // order), then strip non-terminal leaves.
  std::vector<int> uf(n + 1);
  for (int v = 0; v <= n; ++v) uf[v] = v;
  auto find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  std::set<std::pair<int, int>> mst;
  for (auto [a, b] : union_edges) {
    int ra = find(a), rb = find(b);
    if (ra == rb) continue;
    uf[ra] = rb;
    mst.insert({a, b});
  }
  std::vector<char> is_term(n + 1, 0);
  for (int v : terminals) is_term[v] = 1;
  bool pruned = true;
  while (pruned) {
    pruned = false;
    std::vector<int> deg(n + 1, 0);
    for (auto [a, b] : mst) {
      ++deg[a];
      ++deg[b];
    }
    for (auto it = mst.begin(); it != mst.end();) {
      auto [a, b] = *it;
      if ((deg[a] == 1 && !is_term[a]) || (deg[b] == 1 && !is_term[b])) {
        it = mst.erase(it);
        pruned = true;
      } else {
        ++it;
      }
    }
  }
  return root_tree(g, mst, terminals, root);
}

SteinerTree tree_from_path(const Graph& g, const std::vector<int>& path) {
  std::set<std::pair<int, int>> edges;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    if (!g.has_edge(path[k], path[k + 1])) throw std::invalid_argument("path uses a non-edge");
    edges.insert({std::min(path[k], path[k + 1]), std::max(path[k], path[k + 1])});
  }
  return root_tree(g, edges, {path.front(), path.back()}, path.front());
}

}  // namespace cnotsynth
