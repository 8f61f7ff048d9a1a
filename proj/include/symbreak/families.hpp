#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

enum class StandardFamily { Path, Cycle, Complete, CompleteBipartite, Wheel, Star };

StandardFamily standard_family_from_name(const std::string& name);

// Canonical numbering: paths and cycles in order, wheel hub = 0 with rim
// 1..k, star center = 0, K_{p,q} sides 0..p-1 and p..p+q-1.
Graph gen_standard(StandardFamily kind, int p1, int p2 = 0);

struct MycielskianMap {
  int base_n = 0;
  std::vector<int> v_ids;
  std::vector<int> u_ids;
  int w_id = 0;
};

// v_i = i, u_i = n + i, w = 2n; |V| = 2n+1, |E| = 3m+n.
std::pair<Graph, MycielskianMap> mycielskian(const Graph& g);

// M_2 = K_2, M_i = mu(M_{i-1}).
Graph mycielski_sequence(int i, int max_vertices = 95);

// All maximal outerplanar graphs of the given order up to isomorphism,
// generated as triangulations of the fixed outer polygon.
std::vector<Graph> enumerate_mops(int n, int cap = 12);

// Labeled triangulations of the n-gon as chord lists; exposed so tests can
// quotient them by the dihedral action independently of the dedup above.
std::vector<std::vector<Edge>> polygon_triangulations(int n);

struct PlaneTree {
  Graph tree;
  std::vector<std::vector<int>> neighbor_order;  // cyclic order at every vertex
  int root = 0;
};

struct HalinStructure {
  PlaneTree plane_tree;
  std::vector<int> leaf_cycle;
  Graph graph;
};

// Joins consecutive leaves of the embedded tree into a cycle. Rejects trees
// with fewer than four vertices or any vertex of degree two.
HalinStructure halin_from_plane_tree(const PlaneTree& t);

std::vector<HalinStructure> enumerate_halin_structures(int n, int cap = 11);
std::vector<Graph> enumerate_halin(int n, int cap = 11);

// Free trees of the given order up to isomorphism (AHU-canonical dedup).
std::vector<Graph> free_trees(int n, int cap = 13);

// Connected graphs of the given order up to isomorphism, by exhaustive
// edge-set generation and canonical-form dedup.
std::vector<Graph> enumerate_connected_graphs(int n, int cap = 7);

// Deterministic graphs with clique number 4 and max degree >= 5: K_4 cores
// with pendant trees, some with a second K_4 attached.
std::vector<Graph> clique4_instances(int count);

}  // namespace symbreak
