// Exact automorphism and isomorphism search for small graphs: equitable
// (1-WL) partition refinement over vertex and edge colors, followed by
// individualization backtracking. Group orders come from the orbit counts of
// a stabilizer chain, so large groups are never materialized unless asked.

#include "symbreak/group.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <limits>
#include <unordered_set>

#include "symbreak/graph6.hpp"

namespace symbreak {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img[i] != i) return false;
  return true;
}

bool Permutation::is_valid() const {
  std::vector<char> seen(img.size(), 0);
  for (int v : img) {
    if (v < 0 || v >= size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation r;
  r.img.resize(img.size());
  for (int i = 0; i < size(); ++i) r.img[i] = img[other.img[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img.resize(img.size());
  for (int i = 0; i < size(); ++i) r.img[img[i]] = i;
  return r;
}

std::string to_decimal(BigCount v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.order()) fail(Err::LengthMismatch, "permutation length vs graph order");
  if (!p.is_valid()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) return false;
  return true;
}

bool preserves_vertex_labeling(const Permutation& p, const VertexLabeling& l) {
  if (p.size() != static_cast<int>(l.labels.size()))
    fail(Err::LengthMismatch, "permutation length vs labeling size");
  for (int v = 0; v < p.size(); ++v)
    if (l.labels[p(v)] != l.labels[v]) return false;
  return true;
}

bool preserves_edge_labeling(const Graph& g, const Permutation& p, const EdgeLabeling& l) {
  if (p.size() != g.order()) fail(Err::LengthMismatch, "permutation length vs graph order");
  if (static_cast<int>(l.labels.size()) != g.size())
    fail(Err::LengthMismatch, "edge labeling size vs edge count");
  const auto& es = g.edges();
  for (int i = 0; i < g.size(); ++i) {
    int j = g.edge_index(p(es[i].a), p(es[i].b));
    if (j < 0 || l.labels[j] != l.labels[i]) return false;
  }
  return true;
}

namespace {

std::vector<int> edge_color_matrix(const Graph& g, const std::vector<int>& edge_colors) {
  const int n = g.order();
  if (!edge_colors.empty() && static_cast<int>(edge_colors.size()) != g.size())
    fail(Err::LengthMismatch, "edge colors vs edge count");
  std::vector<int> m(static_cast<size_t>(n) * n, 0);
  const auto& es = g.edges();
  for (size_t i = 0; i < es.size(); ++i) {
    int c = edge_colors.empty() ? 1 : edge_colors[i];
    if (c <= 0) fail(Err::BadParams, "edge colors must be positive");
    m[static_cast<size_t>(es[i].a) * n + es[i].b] = c;
    m[static_cast<size_t>(es[i].b) * n + es[i].a] = c;
  }
  return m;
}

struct Side {
  const Graph* g;
  const std::vector<int>* emat;
  std::vector<int> col;
};

using Sig = std::pair<int, std::vector<std::pair<int, int>>>;

void build_sigs(const Side& s, std::vector<Sig>& sigs) {
  const int n = s.g->order();
  sigs.resize(n);
  for (int v = 0; v < n; ++v) {
    const auto& ns = s.g->neighbors(v);
    std::vector<std::pair<int, int>> nb;
    nb.reserve(ns.size());
    for (int u : ns) nb.emplace_back(s.col[u], (*s.emat)[static_cast<size_t>(v) * n + u]);
    std::sort(nb.begin(), nb.end());
    sigs[v] = {s.col[v], std::move(nb)};
  }
}

// Equitable refinement to a fixed point. With two sides, the color ranking is
// shared; returns false as soon as the class-size profiles diverge.
bool refine(Side& s1, Side* s2) {
  const int n = s1.g->order();
  int prev_classes = -1;
  for (;;) {
    std::vector<Sig> a, b;
    build_sigs(s1, a);
    if (s2) build_sigs(*s2, b);

    std::vector<Sig> pool = a;
    if (s2) pool.insert(pool.end(), b.begin(), b.end());
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    auto rank = [&](const Sig& s) {
      return static_cast<int>(std::lower_bound(pool.begin(), pool.end(), s) - pool.begin());
    };
    for (int v = 0; v < n; ++v) s1.col[v] = rank(a[v]);
    if (s2) {
      for (int v = 0; v < n; ++v) s2->col[v] = rank(b[v]);
      std::vector<int> c1(pool.size(), 0), c2(pool.size(), 0);
      for (int v = 0; v < n; ++v) {
        ++c1[s1.col[v]];
        ++c2[s2->col[v]];
      }
      if (c1 != c2) return false;
    }
    int classes = static_cast<int>(pool.size());
    if (classes == prev_classes) return true;
    prev_classes = classes;
  }
}

constexpr long long kDefaultSearchBudget = 50000000;

// Individualization-refinement search for a color-respecting isomorphism
// between two equally sized graphs. Leaves are verified exactly, so
// refinement only ever prunes.
struct IsoSearch {
  const Graph* g1;
  const std::vector<int>* e1;
  const Graph* g2;
  const std::vector<int>* e2;
  long long budget = kDefaultSearchBudget;

  std::optional<Permutation> run(std::vector<int> c1, std::vector<int> c2) {
    return rec(std::move(c1), std::move(c2));
  }

  std::optional<Permutation> rec(std::vector<int> c1, std::vector<int> c2) {
    if (--budget < 0) fail(Err::SizeLimit, "isomorphism search budget exhausted");
    const int n = g1->order();
    Side s1{g1, e1, std::move(c1)};
    Side s2{g2, e2, std::move(c2)};
    if (!refine(s1, &s2)) return std::nullopt;

    // target class: smallest of size >= 2, ties by color id
    std::vector<int> cnt(n + 1, 0);
    for (int v = 0; v < n; ++v) ++cnt[s1.col[v]];
    int target = -1, bestsz = std::numeric_limits<int>::max();
    for (int c = 0; c <= n; ++c)
      if (cnt[c] >= 2 && cnt[c] < bestsz) {
        target = c;
        bestsz = cnt[c];
      }

    if (target < 0) {
      Permutation p;
      p.img.assign(n, -1);
      std::vector<int> at(n + 1, -1);
      for (int v = 0; v < n; ++v) at[s2.col[v]] = v;
      for (int v = 0; v < n; ++v) p.img[v] = at[s1.col[v]];
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if ((*e1)[static_cast<size_t>(u) * n + v] !=
              (*e2)[static_cast<size_t>(p(u)) * n + p(v)])
            return std::nullopt;
      return p;
    }

    int v = -1;
    for (int x = 0; x < n; ++x)
      if (s1.col[x] == target) {
        v = x;
        break;
      }
    for (int u = 0; u < n; ++u) {
      if (s2.col[u] != target) continue;
      std::vector<int> nc1 = s1.col;
      std::vector<int> nc2 = s2.col;
      nc1[v] = n;  // fresh color, re-ranked on the next refine
      nc2[u] = n;
      auto r = rec(std::move(nc1), std::move(nc2));
      if (r) return r;
    }
    return std::nullopt;
  }
};

int individualize_value(const std::vector<int>& col) {
  int m = 0;
  for (int c : col) m = std::max(m, c);
  return m + 1;
}

std::vector<int> normalized_colors(const Graph& g, const std::vector<int>& vcols) {
  if (vcols.empty()) return std::vector<int>(g.order(), 0);
  if (static_cast<int>(vcols.size()) != g.order())
    fail(Err::LengthMismatch, "vertex colors vs order");
  return vcols;
}

std::vector<std::vector<int>> orbit_partition(int n, const std::vector<Permutation>& gens) {
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : gens)
    for (int v = 0; v < n; ++v) {
      int a = find(v), b = find(p(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> by_root(n);
  for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& o : by_root)
    if (!o.empty()) out.push_back(std::move(o));
  return out;
}

}  // namespace

AutGroup automorphisms_colored(const Graph& g, const std::vector<int>& vertex_colors,
                               const std::vector<int>& edge_colors) {
  const int n = g.order();
  auto emat = edge_color_matrix(g, edge_colors);
  std::vector<int> base = normalized_colors(g, vertex_colors);

  AutGroup res;
  res.n = n;
  res.order = 1;
  for (;;) {
    Side s{&g, &emat, base};
    refine(s, nullptr);
    int target = -1;
    {
      std::vector<int> cnt(n + 1, 0);
      for (int v = 0; v < n; ++v) ++cnt[s.col[v]];
      for (int c = 0; c <= n; ++c)
        if (cnt[c] >= 2) {
          target = c;
          break;
        }
    }
    if (target < 0) break;
    int v = -1;
    std::vector<int> cands;
    for (int x = 0; x < n; ++x)
      if (s.col[x] == target) {
        if (v < 0)
          v = x;
        else
          cands.push_back(x);
      }
    BigCount orbit = 1;
    int fresh = individualize_value(base);
    for (int u : cands) {
      std::vector<int> c1 = base, c2 = base;
      c1[v] = fresh;
      c2[u] = fresh;
      IsoSearch is{&g, &emat, &g, &emat};
      auto p = is.run(std::move(c1), std::move(c2));
      if (p) {
        res.generators.push_back(*p);
        ++orbit;
      }
    }
    res.order *= orbit;
    base[v] = fresh;
  }
  res.orbits = orbit_partition(n, res.generators);
  return res;
}

AutGroup automorphisms(const Graph& g) { return automorphisms_colored(g, {}, {}); }

std::optional<Permutation> nontrivial_preserving_automorphism(
    const Graph& g, const std::vector<int>& vertex_colors,
    const std::vector<int>& edge_colors) {
  const int n = g.order();
  auto emat = edge_color_matrix(g, edge_colors);
  std::vector<int> base = normalized_colors(g, vertex_colors);
  for (;;) {
    Side s{&g, &emat, base};
    refine(s, nullptr);
    int target = -1;
    {
      std::vector<int> cnt(n + 1, 0);
      for (int v = 0; v < n; ++v) ++cnt[s.col[v]];
      for (int c = 0; c <= n; ++c)
        if (cnt[c] >= 2) {
          target = c;
          break;
        }
    }
    if (target < 0) return std::nullopt;
    int v = -1;
    int fresh = individualize_value(base);
    for (int x = 0; x < n; ++x) {
      if (s.col[x] != target) continue;
      if (v < 0) {
        v = x;
        continue;
      }
      std::vector<int> c1 = base, c2 = base;
      c1[v] = fresh;
      c2[x] = fresh;
      IsoSearch is{&g, &emat, &g, &emat};
      auto p = is.run(std::move(c1), std::move(c2));
      if (p) return p;
    }
    // no automorphism in this class moves v, so v is fixed by all of them
    base[v] = fresh;
  }
}

bool labeled_stabilizer_is_trivial(const Graph& g, const VertexLabeling& l) {
  if (static_cast<int>(l.labels.size()) != g.order())
    fail(Err::LengthMismatch, "vertex labeling size vs order");
  for (int x : l.labels)
    if (x <= 0) fail(Err::BadParams, "labels must be positive");
  return !nontrivial_preserving_automorphism(g, l.labels, {}).has_value();
}

bool labeled_stabilizer_is_trivial(const Graph& g, const EdgeLabeling& l) {
  if (static_cast<int>(l.labels.size()) != g.size())
    fail(Err::LengthMismatch, "edge labeling size vs edge count");
  for (int x : l.labels)
    if (x <= 0) fail(Err::BadParams, "labels must be positive");
  return !nontrivial_preserving_automorphism(g, {}, l.labels).has_value();
}

std::vector<std::vector<int>> orbits(const AutGroup& a) { return a.orbits; }

std::vector<Permutation> group_elements(const AutGroup& a, std::size_t cap) {
  struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
      size_t h = 1469598103934665603ull;
      for (int x : v) {
        h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::vector<Permutation> out{Permutation::identity(a.n)};
  std::unordered_set<std::vector<int>, VecHash> seen{out[0].img};
  for (size_t head = 0; head < out.size(); ++head) {
    Permutation cur = out[head];
    for (const auto& gen : a.generators) {
      Permutation next = gen.compose(cur);
      if (seen.insert(next.img).second) {
        if (seen.size() > cap)
          fail(Err::SizeLimit, "group closure exceeds cap " + std::to_string(cap));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  auto ea = edge_color_matrix(a, {});
  auto eb = edge_color_matrix(b, {});
  IsoSearch is{&a, &ea, &b, &eb};
  return is.run(std::vector<int>(a.order(), 0), std::vector<int>(b.order(), 0));
}

bool isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

namespace {

struct CanonSearch {
  const Graph* g = nullptr;
  const std::vector<int>* emat = nullptr;
  int n = 0;
  std::vector<uint8_t> best;
  bool has_best = false;
  long long budget = 2000000;

  void rec(std::vector<int> col) {
    if (--budget < 0) fail(Err::SizeLimit, "canonical form budget exhausted");
    Side s{g, emat, std::move(col)};
    refine(s, nullptr);
    int target = -1;
    std::vector<int> cnt(n + 1, 0);
    for (int v = 0; v < n; ++v) ++cnt[s.col[v]];
    for (int c = 0; c <= n; ++c)
      if (cnt[c] >= 2) {
        target = c;
        break;
      }
    if (target < 0) {
      std::vector<int> at(n, -1);
      for (int v = 0; v < n; ++v) at[s.col[v]] = v;
      std::vector<uint8_t> enc((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
      size_t bit = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
          if (g->adjacent(at[i], at[j])) enc[bit / 8] |= static_cast<uint8_t>(1u << (bit % 8));
      if (!has_best || enc < best) {
        best = std::move(enc);
        has_best = true;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (s.col[v] != target) continue;
      std::vector<int> nc = s.col;
      nc[v] = n;
      rec(std::move(nc));
    }
  }
};

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  // complete and edgeless graphs read the same under every vertex order
  if (g.size() == 0 || 2 * g.size() == n * (n - 1)) return g;
  auto emat = edge_color_matrix(g, {});
  CanonSearch cs{&g, &emat, n};
  cs.rec(std::vector<int>(n, 0));
  std::vector<std::pair<int, int>> es;
  size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (n > 1 && (cs.best[bit / 8] >> (bit % 8)) & 1) es.emplace_back(i, j);
  return Graph(n, es);
}

std::string canonical_key(const Graph& g) { return to_graph6(canonical_form(g)); }

}  // namespace symbreak
