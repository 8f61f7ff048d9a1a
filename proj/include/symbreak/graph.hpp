#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symbreak/error.hpp"

namespace symbreak {

struct Edge {
  int a = 0;  // smaller endpoint
  int b = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// adjacency lists are kept sorted so every traversal order is reproducible.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return n_; }
  int size() const { return m_; }
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int u, int v) const;

  // Edges sorted by (a, b); EdgeLabeling vectors are parallel to this list.
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_index(int u, int v) const;  // -1 when absent

  Graph relabeled(const std::vector<int>& img) const;

  friend bool operator==(const Graph&, const Graph&);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<uint8_t> mat_;
  std::vector<int> eidx_;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct VertexLabeling {
  std::vector<int> labels;  // labels[v] >= 1, one entry per vertex
  int label_count() const;
};

struct EdgeLabeling {
  std::vector<int> labels;  // parallel to Graph::edges()
  int label_count() const;
};

int max_degree(const Graph& g);

struct CliqueResult {
  int number = 0;
  std::vector<int> witness;  // lexicographically least maximum clique
};
CliqueResult clique_number(const Graph& g);

int chromatic_number(const Graph& g, int max_n = 20);

std::vector<int> open_neighborhood(const Graph& g, int v);

// True iff no two distinct vertices have identical open neighborhoods.
bool is_r_thin(const Graph& g);

// All Hamiltonian cycles, each starting at vertex 0 and listed in the
// lexicographically smaller direction, deduplicated.
std::vector<std::vector<int>> hamiltonian_cycles(const Graph& g, int max_n = 16);

bool has_hamiltonian_path(const Graph& g, int max_n = 16);

struct BfsTree {
  std::vector<int> parent;  // -1 at the root
  std::vector<int> level;
  std::vector<int> order;  // visit order
};

// BFS with neighbors explored in ascending id; throws Disconnected when the
// graph is not connected.
BfsTree bfs_tree(const Graph& g, int root);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
std::vector<int> degree_sequence(const Graph& g);  // descending

}  // namespace symbreak
