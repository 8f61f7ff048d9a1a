#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symbreak/graph.hpp"

namespace symbreak {

struct Permutation {
  std::vector<int> img;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(img.size()); }
  int operator()(int v) const { return img[v]; }
  bool is_identity() const;
  bool is_valid() const;  // bijection on 0..n-1
  Permutation compose(const Permutation& other) const;  // this after other
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
};

using BigCount = unsigned __int128;
std::string to_decimal(BigCount v);

struct AutGroup {
  int n = 0;
  std::vector<Permutation> generators;
  BigCount order = 1;
  std::vector<std::vector<int>> orbits;  // sorted, ordered by least element

  std::string order_string() const { return to_decimal(order); }
};

bool is_automorphism(const Graph& g, const Permutation& p);
bool preserves_vertex_labeling(const Permutation& p, const VertexLabeling& l);
bool preserves_edge_labeling(const Graph& g, const Permutation& p,
                             const EdgeLabeling& l);

// Exact automorphism group via equitable refinement plus individualization
// backtracking. Deterministic generator list for a fixed input.
AutGroup automorphisms(const Graph& g);

// Same search with vertex classes and/or edge classes folded into the
// initial partition. Empty vectors mean uniform colors.
AutGroup automorphisms_colored(const Graph& g,
                               const std::vector<int>& vertex_colors,
                               const std::vector<int>& edge_colors);

// First non-identity automorphism respecting the given classes, if any.
std::optional<Permutation> nontrivial_preserving_automorphism(
    const Graph& g, const std::vector<int>& vertex_colors,
    const std::vector<int>& edge_colors);

// Definitional check "is this labeling distinguishing".
bool labeled_stabilizer_is_trivial(const Graph& g, const VertexLabeling& l);
bool labeled_stabilizer_is_trivial(const Graph& g, const EdgeLabeling& l);

std::vector<std::vector<int>> orbits(const AutGroup& a);

// Materializes the full element list by closure; throws SizeLimit past cap.
std::vector<Permutation> group_elements(const AutGroup& a,
                                        std::size_t cap = 1000000);

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);
bool isomorphic(const Graph& a, const Graph& b);

// Canonical isomorph for small instances; equal keys iff isomorphic.
Graph canonical_form(const Graph& g);
std::string canonical_key(const Graph& g);

}  // namespace symbreak
