#pragma once

#include <string>
#include <vector>

#include "symbreak/distinguish.hpp"
#include "symbreak/families.hpp"
#include "symbreak/graph.hpp"

namespace symbreak {

// A labeling produced by one of the constructive procedures, together with
// the certificate that its stabilizer is trivial. `certified` is always true
// on return; procedures throw ConstructionFailed instead of handing back an
// uncertified labeling. `exception` tags the documented special cases.
struct CertifiedLabeling {
  LabelKind kind = LabelKind::Vertex;
  std::vector<int> labels;  // positional over vertices or sorted edges
  int labels_used = 0;
  std::string theorem;
  bool certified = false;
  std::string exception;

  VertexLabeling as_vertex_labeling() const { return VertexLabeling{labels}; }
  EdgeLabeling as_edge_labeling() const { return EdgeLabeling{labels}; }
};

// The 2-label asymmetric cycle pattern places label 2 at positions 0, 1 and
// 3; its circular gap sequence (1, 2, n-3) has no nontrivial symmetry for
// n >= 6. Shorter cycles get labels 1,2,3 on the first three positions.
std::vector<int> cycle_pattern(int n);

CertifiedLabeling cycle_vertex_labeling(int n);
CertifiedLabeling cycle_edge_labeling(int n);

// For connected graphs with clique number 4 and max degree >= 5: anchors the
// least maximum clique with labels {1,2,3,Delta-1}, spreads distinct labels
// over the rest of the root's neighborhood and down the BFS tree, then
// permutes sibling labels until no other 4-clique carries the anchor's label
// multiset. Uses at most Delta-1 labels.
CertifiedLabeling clique4_bfs_labeling(const Graph& g);

// For graphs of order >= 6 with exactly one Hamiltonian cycle: the 2-label
// cycle pattern along that cycle.
CertifiedLabeling unique_hamiltonian_labeling(const Graph& g);

CertifiedLabeling mop_vertex_labeling(const Graph& g);
CertifiedLabeling mop_edge_labeling(const Graph& g);

CertifiedLabeling halin_vertex_labeling(const HalinStructure& h);
CertifiedLabeling halin_edge_labeling(const HalinStructure& h);

CertifiedLabeling mycielskian_extend_vertex(const Graph& g, const VertexLabeling& base,
                                            const Graph& mu, const MycielskianMap& map);
CertifiedLabeling mycielskian_extend_edge(const Graph& g, const EdgeLabeling& base,
                                          const Graph& mu, const MycielskianMap& map);

// Witnesses for the iterated Mycielskians: exact search up to M_4, the copy
// construction (v and u layers repeat the previous labeling) from M_5 on.
CertifiedLabeling mycielski_iterate_labeling(int i, LabelKind kind,
                                             const SearchLimits& limits = {});

}  // namespace symbreak
