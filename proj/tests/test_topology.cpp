#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cnotsynth/topology.hpp"

using namespace cnotsynth;

namespace {

using Edges = std::vector<std::pair<int, int>>;

Edges sorted_edges(Edges e) {
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("preset sizes") {
  struct Want {
    const char* name;
    int vertices;
    std::size_t edges;
  };
  for (auto w : {Want{"9q-square", 9, 12}, Want{"16q-square", 16, 24}, Want{"rigetti-16q-aspen", 16, 18},
                 Want{"ibm-qx5", 16, 22}, Want{"ibm-q20-tokyo", 20, 43}, Want{"appendix-2x3", 6, 7}}) {
    CAPTURE(w.name);
    const Graph g = preset_graph(w.name);
    CHECK(g.num_vertices() == w.vertices);
    CHECK(g.num_edges() == w.edges);
    CHECK(g.connected());
  }
}

TEST_CASE("appendix graph edges are frozen") {
  CHECK(preset_graph("appendix-2x3").edges() ==
        Edges{{1, 2}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 6}});
}

TEST_CASE("9q-square is a row-major 3x3 grid") {
  CHECK(preset_graph("9q-square").edges() == Edges{{1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 5},
                                                   {4, 7}, {5, 6}, {5, 8}, {6, 9}, {7, 8}, {8, 9}});
}

TEST_CASE("rigetti aspen has two rings and two links") {
  const Graph g = preset_graph("rigetti-16q-aspen");
  for (int v = 1; v <= 16; ++v) CHECK(g.degree(v) >= 2);
  CHECK(g.has_edge(2, 15));
  CHECK(g.has_edge(3, 14));
  CHECK(g.has_edge(1, 8));
  CHECK(g.has_edge(9, 16));
  CHECK_FALSE(g.has_edge(8, 9));
}

TEST_CASE("unknown preset lists the valid names") {
  try {
    preset_graph("nope");
    FAIL("expected throw");
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    for (const auto& n : preset_names()) CHECK(msg.find(n) != std::string::npos);
  }
}

TEST_CASE("graph file round trip and parse errors") {
  const Graph g = preset_graph("ibm-qx5");
  const Graph back = parse_graph(write_graph(g));
  CHECK(back.edges() == g.edges());
  CHECK(parse_graph("# c\nvertices 3\nedge 1 2\nedge 3 2\n").edges() == Edges{{1, 2}, {2, 3}});
  CHECK_THROWS_AS(parse_graph("vertices 3\nedge 1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("vertices 3\nedge 1 2\nedge 2 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("vertices 3\nedge 1 4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph("edge 1 2\n"), std::invalid_argument);
}

TEST_CASE("shortest_path uses ascending-neighbour BFS") {
  const Graph g = preset_graph("appendix-2x3");
  const auto all = all_vertices(g);
  CHECK(shortest_path(g, 2, 4, all) == std::vector<int>{2, 3, 4});
  CHECK(shortest_path(g, 1, 4, all) == std::vector<int>{1, 2, 3, 4});
  CHECK(shortest_path(g, 6, 2, all) == std::vector<int>{6, 1, 2});
  CHECK(shortest_path(g, 3, 3, all) == std::vector<int>{3});
  const auto upper = vertex_range(g, 3, 6);
  CHECK(shortest_path(g, 3, 6, upper) == std::vector<int>{3, 4, 5, 6});
  CHECK_THROWS_AS(shortest_path(g, 1, 3, vertex_range(g, 3, 6)), NoPathError);
}

TEST_CASE("bfs distances respect the active mask") {
  const Graph g = preset_graph("appendix-2x3");
  const auto d = bfs_distances(g, 2, vertex_range(g, 2, 6));
  CHECK(d[1] == -1);
  CHECK(d[3] == 1);
  CHECK(d[4] == 2);
  CHECK(d[6] == 2);
}

TEST_CASE("steiner trees on the appendix graph") {
  const Graph g = preset_graph("appendix-2x3");
  SUBCASE("first column of the linear example") {
    const auto t = steiner_tree(g, all_vertices(g), {1, 3, 4, 5}, 1);
    CHECK(sorted_edges(t.edges()) == Edges{{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(t.weight() == 4);
    CHECK(t.children(1) == std::vector<int>{2});
  }
  SUBCASE("a tie between two length-2 routes goes through 5") {
    const auto t = steiner_tree(g, all_vertices(g), {2, 6}, 2);
    CHECK(sorted_edges(t.edges()) == Edges{{2, 5}, {5, 6}});
  }
  SUBCASE("shrunken graph") {
    const auto t = steiner_tree(g, vertex_range(g, 2, 6), {2, 3, 4, 6}, 2);
    CHECK(sorted_edges(t.edges()) == Edges{{2, 3}, {2, 5}, {3, 4}, {5, 6}});
    CHECK_FALSE(t.is_terminal(5));
    CHECK(t.is_terminal(6));
  }
  SUBCASE("single terminal") {
    const auto t = steiner_tree(g, all_vertices(g), {4}, 4);
    CHECK(t.weight() == 0);
    CHECK(t.nodes == std::vector<int>{4});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(steiner_tree(g, vertex_range(g, 3, 6), {3, 1}, 3), std::invalid_argument);
    Graph split(4);
    split.add_edge(1, 2);
    split.add_edge(3, 4);
    CHECK_THROWS_AS(steiner_tree(split, all_vertices(split), {1, 3}, 1), NoPathError);
  }
}

TEST_CASE("steiner tree is a pruned tree over the terminals") {
  const Graph g = preset_graph("16q-square");
  const std::vector<std::vector<int>> sets = {{1, 16}, {1, 4, 13, 16}, {6, 7, 10, 11}, {2, 8, 15}};
  for (const auto& terms : sets) {
    const auto t = steiner_tree(g, all_vertices(g), terms, terms.front());
    CHECK(t.root == terms.front());
    CHECK(t.edges().size() + 1 == t.nodes.size());
    for (auto [u, v] : t.edges()) CHECK(g.has_edge(u, v));
    for (int v : terms) CHECK(t.is_terminal(v));
    for (int v : t.nodes)
      if (!t.is_terminal(v)) CHECK(t.children(v).size() >= 1);
  }
  // Corner to corner on a 4x4 grid needs 6 edges.
  CHECK(steiner_tree(g, all_vertices(g), {1, 16}, 1).weight() == 6);
}

TEST_CASE("tree_from_path") {
  const Graph g = preset_graph("appendix-2x3");
  const auto t = tree_from_path(g, {4, 5, 6});
  CHECK(t.root == 4);
  CHECK(t.is_terminal(4));
  CHECK(t.is_terminal(6));
  CHECK_FALSE(t.is_terminal(5));
  CHECK(t.children(5) == std::vector<int>{6});
  CHECK_THROWS_AS(tree_from_path(g, {1, 3}), std::invalid_argument);
}
