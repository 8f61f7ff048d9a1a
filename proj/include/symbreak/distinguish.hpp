#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"
#include "symbreak/group.hpp"

namespace symbreak {

struct SearchLimits {
  int max_n = 24;                      // exact vertex search cap
  int max_m = 40;                      // exact edge search cap
  long long node_budget = 200000000;   // labeling search nodes
  std::size_t group_cap = 1000000;     // element materialization cap
};

struct DistResult {
  int value = 0;
  std::vector<int> witness;  // positional labels over vertices or sorted edges
  double elapsed_ms = 0.0;
  bool pruned = false;  // true when the element-based pruned search ran

  VertexLabeling as_vertex_labeling() const { return VertexLabeling{witness}; }
  EdgeLabeling as_edge_labeling() const { return EdgeLabeling{witness}; }
};

// Least d <= max_d admitting a distinguishing vertex labeling, with the
// lexicographically least witness at that d. Throws Budget when D > max_d.
DistResult distinguishing_number(const Graph& g, int max_d,
                                 const SearchLimits& limits = {});

// Edge analogue; undefined when some connected component is K_2.
DistResult distinguishing_index(const Graph& g, int max_d,
                                const SearchLimits& limits = {});

// Exact lower bounds from swappable twin classes; used to skip search rounds
// that cannot succeed.
int vertex_twin_lower_bound(const Graph& g);
int edge_twin_lower_bound(const Graph& g);

enum class LabelKind { Vertex, Edge };

struct BoundReport {
  std::string graph6;
  LabelKind kind = LabelKind::Vertex;
  int exact = 0;
  int bound = 0;
  bool holds = false;
};

BoundReport verify_bound(const Graph& g, int theorem_bound, LabelKind kind,
                         const SearchLimits& limits = {});

}  // namespace symbreak
