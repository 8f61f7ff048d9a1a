#include "symbreak/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

namespace symbreak {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
  if (n < 0) fail(Err::BadParams, "negative vertex count");
  adj_.assign(n_, {});
  mat_.assign(static_cast<size_t>(n_) * n_, 0);
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      fail(Err::OutOfRange, "edge endpoint " + std::to_string(u >= n_ || u < 0 ? u : v) +
                                " outside 0.." + std::to_string(n_ - 1));
    if (u == v) fail(Err::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (!mat_[static_cast<size_t>(u) * n_ + v]) {
      mat_[static_cast<size_t>(u) * n_ + v] = 1;
      mat_[static_cast<size_t>(v) * n_ + u] = 1;
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (v > u) edges_.push_back({u, v});
  m_ = static_cast<int>(edges_.size());
  eidx_.assign(static_cast<size_t>(n_) * n_, -1);
  for (int i = 0; i < m_; ++i) {
    eidx_[static_cast<size_t>(edges_[i].a) * n_ + edges_[i].b] = i;
    eidx_[static_cast<size_t>(edges_[i].b) * n_ + edges_[i].a] = i;
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(Err::OutOfRange, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return mat_[static_cast<size_t>(u) * n_ + v] != 0;
}

int Graph::edge_index(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return eidx_[static_cast<size_t>(u) * n_ + v];
}

Graph Graph::relabeled(const std::vector<int>& img) const {
  if (static_cast<int>(img.size()) != n_) fail(Err::LengthMismatch, "relabel image size");
  std::vector<std::pair<int, int>> es;
  es.reserve(edges_.size());
  for (const Edge& e : edges_) es.emplace_back(img[e.a], img[e.b]);
  return Graph(n_, es);
}

bool operator==(const Graph& x, const Graph& y) {
  return x.n_ == y.n_ && x.edges_ == y.edges_;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph(n, edges);
}

namespace {

int distinct_count(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return static_cast<int>(v.size());
}

}  // namespace

int VertexLabeling::label_count() const { return distinct_count(labels); }
int EdgeLabeling::label_count() const { return distinct_count(labels); }

int max_degree(const Graph& g) {
  if (g.order() == 0) fail(Err::BadParams, "max_degree of empty graph");
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

namespace {

// Exact maximum clique by DFS over ascending vertex ids; prune on remaining
// candidate count.
void clique_size_rec(const Graph& g, std::vector<int>& cur, const std::vector<int>& cands,
                     int& best) {
  best = std::max(best, static_cast<int>(cur.size()));
  for (size_t i = 0; i < cands.size(); ++i) {
    if (static_cast<int>(cur.size() + cands.size() - i) <= best) return;
    int v = cands[i];
    std::vector<int> next;
    for (size_t j = i + 1; j < cands.size(); ++j)
      if (g.adjacent(v, cands[j])) next.push_back(cands[j]);
    cur.push_back(v);
    clique_size_rec(g, cur, next, best);
    cur.pop_back();
  }
}

bool clique_witness_rec(const Graph& g, std::vector<int>& cur, const std::vector<int>& cands,
                        int want, std::vector<int>& out) {
  if (static_cast<int>(cur.size()) == want) {
    out = cur;
    return true;
  }
  for (size_t i = 0; i < cands.size(); ++i) {
    if (static_cast<int>(cur.size() + cands.size() - i) < want) return false;
    int v = cands[i];
    std::vector<int> next;
    for (size_t j = i + 1; j < cands.size(); ++j)
      if (g.adjacent(v, cands[j])) next.push_back(cands[j]);
    cur.push_back(v);
    if (clique_witness_rec(g, cur, next, want, out)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

CliqueResult clique_number(const Graph& g) {
  if (g.order() == 0) fail(Err::BadParams, "clique_number of empty graph");
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  int best = 0;
  std::vector<int> cur;
  clique_size_rec(g, cur, all, best);
  CliqueResult res;
  res.number = best;
  cur.clear();
  clique_witness_rec(g, cur, all, best, res.witness);
  return res;
}

namespace {

bool k_colorable(const Graph& g, int k, const std::vector<int>& seed_clique) {
  const int n = g.order();
  std::vector<int> color(n, 0);
  int seeded = 0;
  for (int v : seed_clique) {
    if (seeded >= k) break;
    color[v] = ++seeded;
  }

  // DSATUR-style branching: most saturated uncolored vertex first.
  auto pick = [&]() {
    int bestv = -1, bestsat = -1, bestdeg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v]) continue;
      uint32_t mask = 0;
      for (int u : g.neighbors(v))
        if (color[u]) mask |= 1u << (color[u] - 1);
      int sat = __builtin_popcount(mask);
      int deg = g.degree(v);
      if (sat > bestsat || (sat == bestsat && deg > bestdeg)) {
        bestv = v;
        bestsat = sat;
        bestdeg = deg;
      }
    }
    return bestv;
  };

  int max_used = seeded;
  std::vector<std::pair<int, int>> stack;  // (vertex, color tried) for undo
  std::function<bool()> rec = [&]() -> bool {
    int v = pick();
    if (v < 0) return true;
    uint32_t forbidden = 0;
    for (int u : g.neighbors(v))
      if (color[u]) forbidden |= 1u << (color[u] - 1);
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (forbidden & (1u << (c - 1))) continue;
      color[v] = c;
      int save = max_used;
      max_used = std::max(max_used, c);
      if (rec()) return true;
      max_used = save;
      color[v] = 0;
    }
    return false;
  };
  return rec();
}

}  // namespace

int chromatic_number(const Graph& g, int max_n) {
  const int n = g.order();
  if (n == 0) fail(Err::BadParams, "chromatic_number of empty graph");
  if (n > max_n)
    fail(Err::SizeLimit, "chromatic_number capped at n <= " + std::to_string(max_n));
  if (g.size() == 0) return 1;
  CliqueResult cl = clique_number(g);
  int lo = cl.number;
  // greedy upper bound on vertices sorted by degree descending
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::sort(vs.begin(), vs.end(),
            [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
  std::vector<int> col(n, 0);
  int hi = 0;
  for (int v : vs) {
    uint64_t used = 0;
    for (int u : g.neighbors(v))
      if (col[u]) used |= 1ull << col[u];
    int c = 1;
    while (used & (1ull << c)) ++c;
    col[v] = c;
    hi = std::max(hi, c);
  }
  for (int k = lo; k < hi; ++k)
    if (k_colorable(g, k, cl.witness)) return k;
  return hi;
}

std::vector<int> open_neighborhood(const Graph& g, int v) { return g.neighbors(v); }

bool is_r_thin(const Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.neighbors(u) == g.neighbors(v)) return false;
  return true;
}

namespace {

bool ham_prune(const Graph& g, const std::vector<char>& visited, int current, int n) {
  // every unvisited vertex still needs two usable ends
  for (int w = 0; w < n; ++w) {
    if (visited[w]) continue;
    int avail = 0;
    for (int u : g.neighbors(w))
      if (!visited[u] || u == 0 || u == current) ++avail;
    if (avail < 2) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> hamiltonian_cycles(const Graph& g, int max_n) {
  const int n = g.order();
  if (n > max_n)
    fail(Err::SizeLimit, "hamiltonian_cycles capped at n <= " + std::to_string(max_n));
  std::vector<std::vector<int>> out;
  if (n < 3) return out;
  std::vector<int> path{0};
  std::vector<char> visited(n, 0);
  visited[0] = 1;

  std::function<void()> rec = [&]() {
    int cur = path.back();
    if (static_cast<int>(path.size()) == n) {
      if (g.adjacent(cur, 0) && path[1] < path.back()) out.push_back(path);
      return;
    }
    if (!ham_prune(g, visited, cur, n)) return;
    for (int u : g.neighbors(cur)) {
      if (visited[u]) continue;
      visited[u] = 1;
      path.push_back(u);
      rec();
      path.pop_back();
      visited[u] = 0;
    }
  };
  rec();
  return out;
}

bool has_hamiltonian_path(const Graph& g, int max_n) {
  const int n = g.order();
  if (n > max_n)
    fail(Err::SizeLimit, "has_hamiltonian_path capped at n <= " + std::to_string(max_n));
  if (n == 0) return false;
  if (n == 1) return true;
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) nbr[v] |= 1u << u;
  std::vector<uint32_t> dp(1u << n, 0);
  for (int v = 0; v < n; ++v) dp[1u << v] = 1u << v;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    uint32_t ends = dp[mask];
    if (!ends) continue;
    uint32_t es = ends;
    while (es) {
      int v = __builtin_ctz(es);
      es &= es - 1;
      uint32_t ext = nbr[v] & ~mask;
      while (ext) {
        int u = __builtin_ctz(ext);
        ext &= ext - 1;
        dp[mask | (1u << u)] |= 1u << u;
      }
    }
  }
  return dp[(1u << n) - 1] != 0;
}

BfsTree bfs_tree(const Graph& g, int root) {
  const int n = g.order();
  if (root < 0 || root >= n) fail(Err::OutOfRange, "bfs root " + std::to_string(root));
  BfsTree t;
  t.parent.assign(n, -2);
  t.level.assign(n, -1);
  t.parent[root] = -1;
  t.level[root] = 0;
  std::vector<int> queue{root};
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    t.order.push_back(v);
    for (int u : g.neighbors(v)) {
      if (t.level[u] >= 0) continue;
      t.level[u] = t.level[v] + 1;
      t.parent[u] = v;
      queue.push_back(u);
    }
  }
  if (static_cast<int>(queue.size()) != n)
    fail(Err::Disconnected, "bfs_tree requires a connected graph");
  return t;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> queue{s};
    comp[s] = id;
    for (size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      out[id].push_back(v);
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = id;
          queue.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> map(g.order(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.order()) fail(Err::OutOfRange, "induced_subgraph vertex");
    if (map[v] >= 0) fail(Err::BadParams, "induced_subgraph duplicate vertex");
    map[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges())
    if (map[e.a] >= 0 && map[e.b] >= 0) es.emplace_back(map[e.a], map[e.b]);
  return Graph(static_cast<int>(vertices.size()), es);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace symbreak
