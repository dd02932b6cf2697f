#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cnotsynth {

// Vertex subsets are masks indexed by vertex id (entry 0 unused).
using VertexMask = std::vector<char>;

class Graph {
 public:
  explicit Graph(int num_vertices = 0);

  // Rejects self-loops, duplicates and out-of-range endpoints.
  void add_edge(int u, int v);

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return num_edges_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Ascending vertex order.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  // Pairs (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool connected(const VertexMask& active) const;
  bool connected() const;

 private:
  int n_;
  std::size_t num_edges_ = 0;
  std::vector<std::vector<int>> adj_;
};

VertexMask all_vertices(const Graph& g);
// Mask with vertices lo..hi (inclusive) set.
VertexMask vertex_range(const Graph& g, int lo, int hi);

std::vector<std::string> preset_names();
Graph preset_graph(std::string_view name);
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);
// A preset name or a path to a graph file.
Graph load_graph(const std::string& selector);

class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// BFS hop counts from src inside active; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src, const VertexMask& active);

std::vector<int> shortest_path(const Graph& g, int u, int v, const VertexMask& active);

struct SteinerTree {
  int root = 0;
  std::vector<int> nodes;      // ascending
  std::vector<int> parent;     // by vertex; 0 for the root and for absent vertices
  std::vector<char> terminal;  // by vertex
  std::vector<int> depth;      // by vertex; -1 when absent

  bool contains(int v) const { return v >= 0 && v < static_cast<int>(depth.size()) && depth[v] >= 0; }
  bool is_terminal(int v) const { return contains(v) && terminal[v]; }
  std::vector<int> children(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // (parent, child)
  std::size_t weight() const { return nodes.empty() ? 0 : nodes.size() - 1; }
};

// Sequential closest-pair merge followed by a spanning tree and pruning of
// non-terminal leaves. Throws NoPathError when the terminals are not
// mutually reachable inside active.
SteinerTree steiner_tree(const Graph& g, const VertexMask& active,
                         const std::vector<int>& terminals, int root);

// Tree whose edges follow path, rooted at path.front(); the two endpoints are
// the terminals.
SteinerTree tree_from_path(const Graph& g, const std::vector<int>& path);

}  // namespace cnotsynth
