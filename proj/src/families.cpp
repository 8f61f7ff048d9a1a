#include "symbreak/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "symbreak/group.hpp"

namespace symbreak {

StandardFamily standard_family_from_name(const std::string& name) {
  if (name == "path") return StandardFamily::Path;
  if (name == "cycle") return StandardFamily::Cycle;
  if (name == "complete") return StandardFamily::Complete;
  if (name == "complete_bipartite") return StandardFamily::CompleteBipartite;
  if (name == "wheel") return StandardFamily::Wheel;
  if (name == "star") return StandardFamily::Star;
  fail(Err::BadParams, "unknown family '" + name + "'");
}

Graph gen_standard(StandardFamily kind, int p1, int p2) {
  std::vector<std::pair<int, int>> es;
  switch (kind) {
    case StandardFamily::Path:
      if (p1 < 1) fail(Err::BadParams, "path needs n >= 1");
      for (int i = 0; i + 1 < p1; ++i) es.emplace_back(i, i + 1);
      return Graph(p1, es);
    case StandardFamily::Cycle:
      if (p1 < 3) fail(Err::BadParams, "cycle needs n >= 3");
      for (int i = 0; i < p1; ++i) es.emplace_back(i, (i + 1) % p1);
      return Graph(p1, es);
    case StandardFamily::Complete:
      if (p1 < 1) fail(Err::BadParams, "complete graph needs n >= 1");
      for (int i = 0; i < p1; ++i)
        for (int j = i + 1; j < p1; ++j) es.emplace_back(i, j);
      return Graph(p1, es);
    case StandardFamily::CompleteBipartite:
      if (p1 < 1 || p2 < 1) fail(Err::BadParams, "K_{p,q} needs p,q >= 1");
      for (int i = 0; i < p1; ++i)
        for (int j = 0; j < p2; ++j) es.emplace_back(i, p1 + j);
      return Graph(p1 + p2, es);
    case StandardFamily::Wheel:
      if (p1 < 3) fail(Err::BadParams, "wheel needs rim length k >= 3");
      for (int i = 1; i <= p1; ++i) {
        es.emplace_back(0, i);
        es.emplace_back(i, i == p1 ? 1 : i + 1);
      }
      return Graph(p1 + 1, es);
    case StandardFamily::Star:
      if (p1 < 1) fail(Err::BadParams, "star needs k >= 1 leaves");
      for (int i = 1; i <= p1; ++i) es.emplace_back(0, i);
      return Graph(p1 + 1, es);
  }
  fail(Err::BadParams, "unknown standard family");
}

std::pair<Graph, MycielskianMap> mycielskian(const Graph& g) {
  const int n = g.order();
  MycielskianMap map;
  map.base_n = n;
  map.v_ids.resize(n);
  map.u_ids.resize(n);
  for (int i = 0; i < n; ++i) {
    map.v_ids[i] = i;
    map.u_ids[i] = n + i;
  }
  map.w_id = 2 * n;
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges()) {
    es.emplace_back(e.a, e.b);
    es.emplace_back(n + e.a, e.b);
    es.emplace_back(e.a, n + e.b);
  }
  for (int i = 0; i < n; ++i) es.emplace_back(n + i, 2 * n);
  return {Graph(2 * n + 1, es), map};
}

Graph mycielski_sequence(int i, int max_vertices) {
  if (i < 2) fail(Err::BadParams, "mycielski sequence starts at i = 2");
  Graph g = gen_standard(StandardFamily::Path, 2);  // K_2
  for (int k = 3; k <= i; ++k) {
    if (2 * g.order() + 1 > max_vertices)
      fail(Err::SizeLimit, "mycielski iterate exceeds " + std::to_string(max_vertices) +
                               " vertices");
    g = mycielskian(g).first;
  }
  return g;
}

namespace {

// Triangulations of the polygon lo..hi (consecutive vertices, boundary edge
// lo-hi), returned as chord sets.
std::vector<std::vector<Edge>> tri_rec(int lo, int hi) {
  std::vector<std::vector<Edge>> out;
  if (hi - lo < 2) {
    out.push_back({});
    return out;
  }
  for (int k = lo + 1; k < hi; ++k) {
    auto left = tri_rec(lo, k);
    auto right = tri_rec(k, hi);
    for (const auto& a : left)
      for (const auto& b : right) {
        std::vector<Edge> chords = a;
        chords.insert(chords.end(), b.begin(), b.end());
        if (k > lo + 1) chords.push_back({lo, k});
        if (hi > k + 1) chords.push_back({k, hi});
        std::sort(chords.begin(), chords.end());
        out.push_back(std::move(chords));
      }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Edge>> polygon_triangulations(int n) {
  if (n < 3) fail(Err::BadParams, "polygon needs n >= 3");
  return tri_rec(0, n - 1);
}

std::vector<Graph> enumerate_mops(int n, int cap) {
  if (n < 3) fail(Err::BadParams, "maximal outerplanar graphs need n >= 3");
  if (n > cap) fail(Err::SizeLimit, "mop enumeration capped at n <= " + std::to_string(cap));
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const auto& chords : polygon_triangulations(n)) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    for (const Edge& c : chords) es.emplace_back(c.a, c.b);
    Graph g(n, es);
    if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
  }
  return out;
}

HalinStructure halin_from_plane_tree(const PlaneTree& t) {
  const Graph& tree = t.tree;
  const int n = tree.order();
  if (n < 4) fail(Err::Precondition, "halin tree needs at least four vertices");
  if (tree.size() != n - 1 || !is_connected(tree))
    fail(Err::Precondition, "plane tree must be a tree");
  for (int v = 0; v < n; ++v)
    if (tree.degree(v) == 2)
      fail(Err::Precondition, "halin tree has a vertex of degree two");
  if (static_cast<int>(t.neighbor_order.size()) != n)
    fail(Err::LengthMismatch, "neighbor_order size vs tree order");
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = t.neighbor_order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != tree.neighbors(v))
      fail(Err::Precondition, "neighbor_order is not a permutation of the neighbors");
  }
  if (t.root < 0 || t.root >= n || tree.degree(t.root) < 2)
    fail(Err::Precondition, "root must be an internal vertex");

  std::vector<int> leaves;
  std::function<void(int, int)> visit = [&](int v, int parent) {
    const auto& ord = t.neighbor_order[v];
    const int deg = static_cast<int>(ord.size());
    if (deg == 1 && v != t.root) {
      leaves.push_back(v);
      return;
    }
    int pidx = 0;
    if (parent >= 0) {
      for (int i = 0; i < deg; ++i)
        if (ord[i] == parent) pidx = i;
      for (int s = 1; s <= deg - 1; ++s) visit(ord[(pidx + s) % deg], v);
    } else {
      for (int s = 0; s < deg; ++s) visit(ord[s], v);
    }
  };
  visit(t.root, -1);
  if (leaves.size() < 3) fail(Err::Precondition, "halin tree needs at least three leaves");

  std::vector<std::pair<int, int>> es;
  for (const Edge& e : tree.edges()) es.emplace_back(e.a, e.b);
  for (size_t i = 0; i < leaves.size(); ++i)
    es.emplace_back(leaves[i], leaves[(i + 1) % leaves.size()]);
  HalinStructure h;
  h.plane_tree = t;
  h.leaf_cycle = leaves;
  h.graph = Graph(n, es);
  return h;
}

namespace {

// AHU canonical string of a free tree, rooted at its center (or centers).
std::string tree_canonical_string(const Graph& t) {
  const int n = t.order();
  if (n == 1) return "()";
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  std::vector<char> removed(n, 0);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = 1;
      --remaining;
      for (int u : t.neighbors(v))
        if (!removed[u] && --deg[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);

  std::function<std::string(int, int)> enc = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int u : t.neighbors(v))
      if (u != parent) kids.push_back(enc(u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ")";
    return s;
  };
  if (centers.size() == 1) return enc(centers[0], -1);
  std::string a = enc(centers[0], centers[1]);
  std::string b = enc(centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

}  // namespace

std::vector<Graph> free_trees(int n, int cap) {
  if (n < 1) fail(Err::BadParams, "free_trees needs n >= 1");
  if (n > cap) fail(Err::SizeLimit, "tree enumeration capped at n <= " + std::to_string(cap));
  std::vector<Graph> cur{Graph(1, {})};
  for (int k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& t : cur) {
      for (int v = 0; v < t.order(); ++v) {
        std::vector<std::pair<int, int>> es;
        for (const Edge& e : t.edges()) es.emplace_back(e.a, e.b);
        es.emplace_back(v, k - 1);
        Graph grown(k, es);
        if (seen.insert(tree_canonical_string(grown)).second) next.push_back(std::move(grown));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<HalinStructure> enumerate_halin_structures(int n, int cap) {
  if (n < 4) fail(Err::BadParams, "halin graphs need n >= 4");
  if (n > cap) fail(Err::SizeLimit, "halin enumeration capped at n <= " + std::to_string(cap));
  std::vector<HalinStructure> out;
  std::unordered_set<std::string> seen;

  for (const Graph& tree : free_trees(n, cap)) {
    bool ok = true;
    std::vector<int> internal;
    for (int v = 0; v < n && ok; ++v) {
      if (tree.degree(v) == 2) ok = false;
      if (tree.degree(v) >= 3) internal.push_back(v);
    }
    if (!ok || internal.empty()) continue;

    // one linear order per internal vertex, first neighbor pinned, encodes
    // the cyclic order; the root's reflection is cut since mirrored
    // embeddings give isomorphic graphs
    const int root = internal[0];
    std::vector<std::vector<std::vector<int>>> choices(n);
    for (int v = 0; v < n; ++v) {
      const auto& nb = tree.neighbors(v);
      if (tree.degree(v) <= 2) {
        choices[v].push_back(nb);
        continue;
      }
      std::vector<int> rest(nb.begin() + 1, nb.end());
      std::sort(rest.begin(), rest.end());
      do {
        if (v == root && rest.size() >= 2 && rest.front() > rest.back()) continue;
        std::vector<int> ord{nb[0]};
        ord.insert(ord.end(), rest.begin(), rest.end());
        choices[v].push_back(ord);
      } while (std::next_permutation(rest.begin(), rest.end()));
    }

    PlaneTree pt;
    pt.tree = tree;
    pt.root = root;
    pt.neighbor_order.assign(n, {});
    std::function<void(int)> assign = [&](int v) {
      if (v == n) {
        HalinStructure h = halin_from_plane_tree(pt);
        if (seen.insert(canonical_key(h.graph)).second) out.push_back(std::move(h));
        return;
      }
      for (const auto& ord : choices[v]) {
        pt.neighbor_order[v] = ord;
        assign(v + 1);
      }
    };
    assign(0);
  }
  return out;
}

std::vector<Graph> enumerate_halin(int n, int cap) {
  std::vector<Graph> out;
  for (auto& h : enumerate_halin_structures(n, cap)) out.push_back(std::move(h.graph));
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n, int cap) {
  if (n < 1) fail(Err::BadParams, "enumerate_connected_graphs needs n >= 1");
  if (n > cap)
    fail(Err::SizeLimit, "connected graph enumeration capped at n <= " + std::to_string(cap));
  std::vector<std::pair<int, int>> all_pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
  const int pc = static_cast<int>(all_pairs.size());

  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  std::vector<int> parent(n);
  for (uint64_t mask = 0; mask < (1ull << pc); ++mask) {
    // union-find connectivity before building anything
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = n;
    for (int b = 0; b < pc; ++b)
      if ((mask >> b) & 1) {
        int ra = find(all_pairs[b].first), rb = find(all_pairs[b].second);
        if (ra != rb) {
          parent[std::max(ra, rb)] = std::min(ra, rb);
          --comps;
        }
      }
    if (comps != 1) continue;
    std::vector<std::pair<int, int>> es;
    for (int b = 0; b < pc; ++b)
      if ((mask >> b) & 1) es.push_back(all_pairs[b]);
    Graph g(n, es);
    if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> clique4_instances(int count) {
  if (count < 1) fail(Err::BadParams, "clique4_instances needs count >= 1");
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    std::vector<std::pair<int, int>> es = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    int next = 4;
    auto pendant = [&](int at) {
      es.emplace_back(at, next);
      return next++;
    };
    auto path_from = [&](int at, int len) {
      int cur = at;
      for (int s = 0; s < len; ++s) cur = pendant(cur);
    };
    // pendant leaves at vertex 0 push the maximum degree to 5..7
    const int leaves0 = 2 + i % 3;
    for (int s = 0; s < leaves0; ++s) pendant(0);
    path_from(1, i % 4);
    if (i % 2) pendant(2);
    if (i >= 10) path_from(3, 1 + i % 3);
    if (i >= 15) {
      // second K_4 bridged to the core, exercising the label repair pass
      int a = next++, b = next++, c = next++, d = next++;
      es.emplace_back(a, b);
      es.emplace_back(a, c);
      es.emplace_back(a, d);
      es.emplace_back(b, c);
      es.emplace_back(b, d);
      es.emplace_back(c, d);
      int hook = 3;
      for (int s = 0; s < i - 15; ++s) hook = pendant(hook);
      es.emplace_back(hook, a);
    }
    out.emplace_back(next, es);
  }
  return out;
}

}  // namespace symbreak
