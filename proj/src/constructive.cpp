#include "symbreak/constructive.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace symbreak {

namespace {

int distinct(const std::vector<int>& labels) {
  std::vector<int> v = labels;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return static_cast<int>(v.size());
}

CertifiedLabeling certify(const Graph& g, LabelKind kind, std::vector<int> labels,
                          std::string theorem, std::string exception = "") {
  CertifiedLabeling cl;
  cl.kind = kind;
  cl.labels = std::move(labels);
  cl.labels_used = distinct(cl.labels);
  cl.theorem = std::move(theorem);
  cl.exception = std::move(exception);
  bool ok = kind == LabelKind::Vertex
                ? labeled_stabilizer_is_trivial(g, VertexLabeling{cl.labels})
                : labeled_stabilizer_is_trivial(g, EdgeLabeling{cl.labels});
  if (!ok)
    fail(Err::ConstructionFailed,
         cl.theorem + ": labeling admits a nontrivial automorphism (potential counterexample)");
  cl.certified = true;
  return cl;
}

Graph cycle_graph(int n) { return gen_standard(StandardFamily::Cycle, n); }

}  // namespace

std::vector<int> cycle_pattern(int n) {
  if (n < 3) fail(Err::TooSmall, "cycle pattern needs n >= 3");
  std::vector<int> labels(n, 1);
  if (n <= 5) {
    labels[1] = 2;
    labels[2] = 3;
  } else {
    labels[0] = labels[1] = labels[3] = 2;
  }
  return labels;
}

CertifiedLabeling cycle_vertex_labeling(int n) {
  if (n < 3) fail(Err::TooSmall, "cycle needs n >= 3");
  return certify(cycle_graph(n), LabelKind::Vertex, cycle_pattern(n), "cycle-pattern-vertex");
}

CertifiedLabeling cycle_edge_labeling(int n) {
  if (n < 3) fail(Err::TooSmall, "cycle needs n >= 3");
  Graph g = cycle_graph(n);
  std::vector<int> pattern = cycle_pattern(n);
  std::vector<int> labels(n, 0);
  for (int i = 0; i < n; ++i) labels[g.edge_index(i, (i + 1) % n)] = pattern[i];
  return certify(g, LabelKind::Edge, labels, "cycle-pattern-edge");
}

CertifiedLabeling clique4_bfs_labeling(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) fail(Err::Precondition, "clique4 labeling needs a connected graph");
  CliqueResult cl = clique_number(g);
  if (cl.number != 4)
    fail(Err::Precondition, "clique number is " + std::to_string(cl.number) + ", need 4");
  const int delta = max_degree(g);
  if (delta < 5)
    fail(Err::Precondition, "max degree is " + std::to_string(delta) + ", need >= 5");

  const std::vector<int>& anchor = cl.witness;  // lexicographically least K_4
  const int v0 = anchor[0];
  std::vector<int> labels(n, 0);
  labels[v0] = delta - 1;
  labels[anchor[1]] = 1;
  labels[anchor[2]] = 2;
  labels[anchor[3]] = 3;

  std::vector<int> pool;
  for (int x = 1; x <= delta - 2; ++x)
    if (x != 3) pool.push_back(x);
  size_t pi = 0;
  for (int u : g.neighbors(v0))
    if (!labels[u]) labels[u] = pool[pi++];

  BfsTree bfs = bfs_tree(g, v0);
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (bfs.parent[v] >= 0) children[bfs.parent[v]].push_back(v);
  for (int x : bfs.order) {
    int next = 1;
    for (int c : children[x])
      if (!labels[c]) labels[c] = next++;
  }

  // repair pass: no other 4-clique may carry the anchor's label multiset
  std::vector<std::array<int, 4>> cliques4;
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        for (int d : g.neighbors(c)) {
          if (d <= c || !g.adjacent(a, d) || !g.adjacent(b, d)) continue;
          cliques4.push_back({a, b, c, d});
        }
      }
    }
  std::array<int, 4> anchor_sorted{anchor[0], anchor[1], anchor[2], anchor[3]};
  std::multiset<int> target{1, 2, 3, delta - 1};
  std::set<int> anchor_set(anchor.begin(), anchor.end());

  long long max_attempts = n;
  for (int f = 2; f <= std::min(delta, 8); ++f) max_attempts *= f;
  long long attempts = 0;
  for (;;) {
    const std::array<int, 4>* offender = nullptr;
    for (const auto& q : cliques4) {
      if (q == anchor_sorted) continue;
      std::multiset<int> ms{labels[q[0]], labels[q[1]], labels[q[2]], labels[q[3]]};
      if (ms == target) {
        offender = &q;
        break;
      }
    }
    if (!offender) break;
    bool advanced = false;
    for (int x : *offender) {
      std::vector<int> kids;
      for (int c : children[x])
        if (!anchor_set.count(c)) kids.push_back(c);
      if (kids.size() < 2) continue;
      std::vector<int> vals;
      for (int c : kids) vals.push_back(labels[c]);
      std::next_permutation(vals.begin(), vals.end());
      for (size_t i = 0; i < kids.size(); ++i) labels[kids[i]] = vals[i];
      advanced = true;
      break;
    }
    if (!advanced || ++attempts > max_attempts)
      fail(Err::ConstructionFailed,
           "clique4-bfs: repair pass exhausted without isolating the anchor clique");
  }

  CertifiedLabeling out = certify(g, LabelKind::Vertex, labels, "clique4-bfs");
  if (out.labels_used > delta - 1)
    fail(Err::ConstructionFailed, "clique4-bfs: used more than Delta-1 labels");
  return out;
}

CertifiedLabeling unique_hamiltonian_labeling(const Graph& g) {
  const int n = g.order();
  if (n < 6) fail(Err::Precondition, "unique hamiltonian labeling needs n >= 6");
  auto cycles = hamiltonian_cycles(g);
  if (cycles.size() != 1)
    fail(Err::Precondition,
         "graph has " + std::to_string(cycles.size()) + " hamiltonian cycles, need exactly 1");
  const std::vector<int>& cyc = cycles[0];
  std::vector<int> pattern = cycle_pattern(n);
  std::vector<int> labels(n, 0);
  for (int p = 0; p < n; ++p) labels[cyc[p]] = pattern[p];
  return certify(g, LabelKind::Vertex, labels, "unique-hamiltonian");
}

namespace {

void check_mop_shape(const Graph& g) {
  const int n = g.order();
  if (g.size() != 2 * n - 3 || !is_connected(g))
    fail(Err::Precondition, "not a generated maximal outerplanar graph");
}

}  // namespace

CertifiedLabeling mop_vertex_labeling(const Graph& g) {
  const int n = g.order();
  if (n < 3) fail(Err::Precondition, "maximal outerplanar graphs need n >= 3");
  check_mop_shape(g);
  if (n == 3) {
    CertifiedLabeling out = certify(g, LabelKind::Vertex, {1, 2, 3}, "mop-vertex", "K3");
    return out;
  }
  if (n <= 5) {
    DistResult r = distinguishing_number(g, 2);
    CertifiedLabeling out = certify(g, LabelKind::Vertex, r.witness, "mop-vertex");
    return out;
  }
  CertifiedLabeling out = unique_hamiltonian_labeling(g);
  out.theorem = "mop-vertex";
  return out;
}

CertifiedLabeling mop_edge_labeling(const Graph& g) {
  const int n = g.order();
  if (n < 3) fail(Err::Precondition, "maximal outerplanar graphs need n >= 3");
  check_mop_shape(g);
  if (n == 3) return certify(g, LabelKind::Edge, {1, 2, 3}, "mop-edge", "K3");

  // seed along the Hamiltonian path cut from the unique cycle, block of 2s
  // up front so the path is direction-asymmetric; fall back to exact search
  auto cycles = hamiltonian_cycles(g);
  if (cycles.size() == 1) {
    const std::vector<int>& cyc = cycles[0];
    std::vector<int> labels(g.size(), 1);
    for (int p = 0; p + 1 < n; ++p) {
      int idx = g.edge_index(cyc[p], cyc[p + 1]);
      if (p == 0 || p == 1 || p == 3) labels[idx] = 2;
    }
    std::vector<int> seed = labels;
    if (labeled_stabilizer_is_trivial(g, EdgeLabeling{seed}))
      return certify(g, LabelKind::Edge, seed, "mop-edge");
  }
  DistResult r = [&] {
    try {
      return distinguishing_index(g, 2);
    } catch (const Error& e) {
      if (e.code() == Err::Budget)
        fail(Err::ConstructionFailed, "mop-edge: no 2-label edge labeling found");
      throw;
    }
  }();
  return certify(g, LabelKind::Edge, r.witness, "mop-edge");
}

CertifiedLabeling halin_vertex_labeling(const HalinStructure& h) {
  const Graph& tree = h.plane_tree.tree;
  const Graph& g = h.graph;
  const int n = g.order();
  if (n < 4) fail(Err::Precondition, "halin graph needs n >= 4");
  const int cyclen = static_cast<int>(h.leaf_cycle.size());
  bool has_deg3_internal = false;
  for (int v = 0; v < tree.order(); ++v) {
    if (tree.degree(v) == 2) fail(Err::Precondition, "tree has a vertex of degree two");
    if (tree.degree(v) == 3) has_deg3_internal = true;
  }

  std::vector<int> pattern;
  int internal_label;
  std::string theorem;
  if (!has_deg3_internal && cyclen >= 6) {
    pattern = cycle_pattern(cyclen);  // 2 labels
    internal_label = 1;
    theorem = "halin-vertex-2";
  } else if (!has_deg3_internal) {
    pattern = cycle_pattern(cyclen);  // 3 labels
    internal_label = 1;
    theorem = "halin-vertex-3";
  } else {
    pattern = cycle_pattern(cyclen);
    internal_label = 4;
    theorem = "halin-vertex-4";
  }

  std::vector<int> labels(n, internal_label);
  for (int p = 0; p < cyclen; ++p) labels[h.leaf_cycle[p]] = pattern[p];
  return certify(g, LabelKind::Vertex, labels, theorem);
}

CertifiedLabeling halin_edge_labeling(const HalinStructure& h) {
  const Graph& g = h.graph;
  const int n = g.order();
  if (n == 4) {
    DistResult r = distinguishing_index(g, 3);
    return certify(g, LabelKind::Edge, r.witness, "halin-edge", "K4");
  }
  // seed the 2-label cycle pattern along a Hamiltonian cycle
  auto cycles = hamiltonian_cycles(g);
  if (cycles.empty()) fail(Err::Precondition, "halin graph must be Hamiltonian");
  if (n >= 6) {
    const std::vector<int>& cyc = cycles[0];
    std::vector<int> pattern = cycle_pattern(n);
    std::vector<int> labels(g.size(), 1);
    for (int p = 0; p < n; ++p)
      if (pattern[p] == 2) labels[g.edge_index(cyc[p], cyc[(p + 1) % n])] = 2;
    if (labeled_stabilizer_is_trivial(g, EdgeLabeling{labels}))
      return certify(g, LabelKind::Edge, labels, "halin-edge");
  }
  DistResult r = [&] {
    try {
      return distinguishing_index(g, 2);
    } catch (const Error& e) {
      if (e.code() == Err::Budget)
        fail(Err::ConstructionFailed, "halin-edge: no 2-label edge labeling found");
      throw;
    }
  }();
  return certify(g, LabelKind::Edge, r.witness, "halin-edge");
}

namespace {

void check_mycielskian_inputs(const Graph& g, const Graph& mu, const MycielskianMap& map) {
  if (map.base_n != g.order() || static_cast<int>(map.v_ids.size()) != g.order() ||
      static_cast<int>(map.u_ids.size()) != g.order())
    fail(Err::LengthMismatch, "mycielskian map does not match the base graph");
  if (mu.order() != 2 * g.order() + 1 || mu.size() != 3 * g.size() + g.order())
    fail(Err::Precondition, "graph is not the mycielskian of the base");
}

}  // namespace

CertifiedLabeling mycielskian_extend_vertex(const Graph& g, const VertexLabeling& base,
                                            const Graph& mu, const MycielskianMap& map) {
  if (g.order() < 2) fail(Err::Precondition, "extension needs base order >= 2");
  check_mycielskian_inputs(g, mu, map);
  if (!is_r_thin(g)) fail(Err::NotRThin, "base graph has twin vertices");
  if (static_cast<int>(base.labels.size()) != g.order())
    fail(Err::LengthMismatch, "base labeling size");
  if (!labeled_stabilizer_is_trivial(g, base))
    fail(Err::BaseNotDistinguishing, "base vertex labeling is not distinguishing");

  const int fresh = *std::max_element(base.labels.begin(), base.labels.end()) + 1;
  std::vector<int> labels(mu.order(), 0);
  for (int i = 0; i < g.order(); ++i) {
    labels[map.v_ids[i]] = base.labels[i];
    labels[map.u_ids[i]] = base.labels[i];
  }
  labels[map.w_id] = fresh;
  CertifiedLabeling out = certify(mu, LabelKind::Vertex, labels, "mycielskian-extend-vertex");
  if (out.labels_used > base.label_count() + 1)
    fail(Err::ConstructionFailed, "extension used more than base+1 labels");
  return out;
}

CertifiedLabeling mycielskian_extend_edge(const Graph& g, const EdgeLabeling& base,
                                          const Graph& mu, const MycielskianMap& map) {
  if (g.order() < 3) fail(Err::Precondition, "extension needs base order >= 3");
  check_mycielskian_inputs(g, mu, map);
  for (const auto& comp : connected_components(g))
    if (comp.size() == 2 && g.adjacent(comp[0], comp[1]))
      fail(Err::K2Component, "edge extension undefined with a K_2 component");
  if (!is_r_thin(g)) fail(Err::NotRThin, "base graph has twin vertices");
  if (static_cast<int>(base.labels.size()) != g.size())
    fail(Err::LengthMismatch, "base labeling size");
  if (!labeled_stabilizer_is_trivial(g, base))
    fail(Err::BaseNotDistinguishing, "base edge labeling is not distinguishing");

  const int fresh = *std::max_element(base.labels.begin(), base.labels.end()) + 1;
  std::vector<int> labels(mu.size(), 0);
  const auto& es = g.edges();
  for (int i = 0; i < g.size(); ++i) {
    const int a = es[i].a, b = es[i].b, lab = base.labels[i];
    labels[mu.edge_index(map.v_ids[a], map.v_ids[b])] = lab;
    labels[mu.edge_index(map.u_ids[a], map.v_ids[b])] = lab;
    labels[mu.edge_index(map.v_ids[a], map.u_ids[b])] = lab;
  }
  for (int i = 0; i < g.order(); ++i)
    labels[mu.edge_index(map.u_ids[i], map.w_id)] = fresh;
  CertifiedLabeling out = certify(mu, LabelKind::Edge, labels, "mycielskian-extend-edge");
  if (out.labels_used > base.label_count() + 1)
    fail(Err::ConstructionFailed, "extension used more than base+1 labels");
  return out;
}

CertifiedLabeling mycielski_iterate_labeling(int i, LabelKind kind, const SearchLimits& limits) {
  if (i < 2) fail(Err::BadParams, "mycielski iterate starts at i = 2");
  if (kind == LabelKind::Edge && i == 2)
    fail(Err::K2Component, "edge labeling undefined on M_2 = K_2");
  Graph g = mycielski_sequence(i);

  const char* name = kind == LabelKind::Vertex ? "mycielski-iterate-vertex"
                                               : "mycielski-iterate-edge";
  if (i <= 4) {
    DistResult r = kind == LabelKind::Vertex ? distinguishing_number(g, 4, limits)
                                             : distinguishing_index(g, 4, limits);
    return certify(g, kind, r.witness, name);
  }

  CertifiedLabeling prev = mycielski_iterate_labeling(i - 1, kind, limits);
  Graph base = mycielski_sequence(i - 1);
  auto [mu, map] = mycielskian(base);
  if (kind == LabelKind::Vertex) {
    std::vector<int> labels(mu.order(), 0);
    for (int k = 0; k < base.order(); ++k) {
      labels[map.v_ids[k]] = prev.labels[k];
      labels[map.u_ids[k]] = prev.labels[k];
    }
    labels[map.w_id] = 1;  // any existing label keeps the count at D(M_{i-1})
    CertifiedLabeling out = certify(mu, kind, labels, name);
    if (out.labels_used > prev.labels_used)
      fail(Err::ConstructionFailed, "iterate used more labels than the previous level");
    return out;
  }
  std::vector<int> labels(mu.size(), 0);
  const auto& es = base.edges();
  for (int k = 0; k < base.size(); ++k) {
    const int a = es[k].a, b = es[k].b, lab = prev.labels[k];
    labels[mu.edge_index(map.v_ids[a], map.v_ids[b])] = lab;
    labels[mu.edge_index(map.u_ids[a], map.v_ids[b])] = lab;
    labels[mu.edge_index(map.v_ids[a], map.u_ids[b])] = lab;
  }
  for (int k = 0; k < base.order(); ++k)
    labels[mu.edge_index(map.u_ids[k], map.w_id)] = 1;
  CertifiedLabeling out = certify(mu, kind, labels, name);
  if (out.labels_used > prev.labels_used)
    fail(Err::ConstructionFailed, "iterate used more labels than the previous level");
  return out;
}

}  // namespace symbreak
