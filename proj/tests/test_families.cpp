#include <doctest.h>

#include <algorithm>
#include <set>

#include "symbreak/families.hpp"
#include "symbreak/graph6.hpp"
#include "symbreak/group.hpp"

using namespace symbreak;

TEST_CASE("standard generators") {
  Graph c5 = gen_standard(StandardFamily::Cycle, 5);
  CHECK(c5.size() == 5);
  Graph w4 = gen_standard(StandardFamily::Wheel, 4);
  CHECK(w4.order() == 5);
  CHECK(w4.size() == 8);
  CHECK(w4.degree(0) == 4);
  Graph k33 = gen_standard(StandardFamily::CompleteBipartite, 3, 3);
  CHECK(k33.size() == 9);
  CHECK_THROWS_AS(gen_standard(StandardFamily::Cycle, 2), Error);
  CHECK_THROWS_AS(gen_standard(StandardFamily::Wheel, 2), Error);
}

TEST_CASE("mycielskian construction") {
  Graph c5 = gen_standard(StandardFamily::Cycle, 5);
  auto [mu, map] = mycielskian(c5);
  CHECK(mu.order() == 11);
  CHECK(mu.size() == 20);
  CHECK(map.w_id == 10);
  for (int i = 0; i < 5; ++i) CHECK(mu.adjacent(map.u_ids[i], map.w_id));

  // mu(K_2) is the 5-cycle
  Graph k2 = gen_standard(StandardFamily::Path, 2);
  CHECK(isomorphic(mycielskian(k2).first, c5));

  // mu(K_1): one edge u0-w plus the isolated v0
  Graph k1 = gen_standard(StandardFamily::Complete, 1);
  Graph mk1 = mycielskian(k1).first;
  CHECK(mk1.order() == 3);
  CHECK(mk1.size() == 1);
  CHECK(mk1.degree(0) == 0);
}

TEST_CASE("mycielskian size law on assorted inputs") {
  for (const Graph& g : {gen_standard(StandardFamily::Path, 4),
                         gen_standard(StandardFamily::Wheel, 5),
                         gen_standard(StandardFamily::Complete, 4),
                         enumerate_mops(6)[2]}) {
    Graph mu = mycielskian(g).first;
    CHECK(mu.order() == 2 * g.order() + 1);
    CHECK(mu.size() == 3 * g.size() + g.order());
  }
}

TEST_CASE("mycielskian preserves triangle freeness") {
  for (const Graph& g : {gen_standard(StandardFamily::Cycle, 5),
                         gen_standard(StandardFamily::Path, 4),
                         gen_standard(StandardFamily::Cycle, 7),
                         gen_standard(StandardFamily::Star, 4)}) {
    REQUIRE(clique_number(g).number <= 2);
    CHECK(clique_number(mycielskian(g).first).number <= 2);
  }
}

TEST_CASE("mycielski sequence") {
  CHECK(isomorphic(mycielski_sequence(3), gen_standard(StandardFamily::Cycle, 5)));
  Graph m4 = mycielski_sequence(4);
  CHECK(m4.order() == 11);
  CHECK(m4.size() == 20);
  Graph m5 = mycielski_sequence(5);
  CHECK(m5.order() == 23);
  CHECK(m5.size() == 71);
  CHECK_THROWS_AS(mycielski_sequence(1), Error);
  CHECK_THROWS_AS(mycielski_sequence(9), Error);

  // every iterate is R-thin
  for (int i = 2; i <= 5; ++i) CHECK(is_r_thin(mycielski_sequence(i)));
}

TEST_CASE("mop enumeration counts") {
  CHECK(enumerate_mops(3).size() == 1);
  CHECK(enumerate_mops(4).size() == 1);
  CHECK(enumerate_mops(5).size() == 1);
  CHECK(enumerate_mops(6).size() == 3);
  CHECK(enumerate_mops(7).size() == 4);
  CHECK(enumerate_mops(8).size() == 12);
  CHECK_THROWS_AS(enumerate_mops(13), Error);
}

TEST_CASE("mop counts match the dihedral quotient oracle") {
  for (int n = 4; n <= 8; ++n) {
    auto labeled = polygon_triangulations(n);
    // Catalan numbers 1,2,5,14,42,132 for n=3..8 polygons
    static const size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
    CHECK(labeled.size() == catalan[n - 2]);

    // orbit count of chord sets under the 2n dihedral maps
    std::set<std::vector<Edge>> canon;
    for (const auto& chords : labeled) {
      std::vector<Edge> best;
      for (int r = 0; r < n; ++r) {
        for (int refl = 0; refl < 2; ++refl) {
          std::vector<Edge> img;
          for (const Edge& c : chords) {
            int a = refl ? (n - c.a + r) % n : (c.a + r) % n;
            int b = refl ? (n - c.b + r) % n : (c.b + r) % n;
            img.push_back({std::min(a, b), std::max(a, b)});
          }
          std::sort(img.begin(), img.end());
          if (best.empty() || img < best) best = img;
        }
      }
      canon.insert(best);
    }
    CHECK(canon.size() == enumerate_mops(n).size());
  }
}

TEST_CASE("mop invariants: edge count and unique hamiltonian cycle") {
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : enumerate_mops(n)) {
      CHECK(g.size() == 2 * n - 3);
      CHECK(hamiltonian_cycles(g).size() == 1);
    }
}

TEST_CASE("enumerations contain no isomorphic pair and are deterministic") {
  auto a = enumerate_mops(7);
  auto b = enumerate_mops(7);
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(isomorphic(a[i], a[j]));

  auto h1 = enumerate_halin(8);
  auto h2 = enumerate_halin(8);
  for (size_t i = 0; i < h1.size(); ++i) CHECK(h1[i] == h2[i]);
  for (size_t i = 0; i < h1.size(); ++i)
    for (size_t j = i + 1; j < h1.size(); ++j) CHECK_FALSE(isomorphic(h1[i], h1[j]));
}

TEST_CASE("halin from plane tree") {
  // star K_{1,3} gives K_4
  Graph star3 = gen_standard(StandardFamily::Star, 3);
  PlaneTree pt{star3, {{1, 2, 3}, {0}, {0}, {0}}, 0};
  HalinStructure h = halin_from_plane_tree(pt);
  CHECK(isomorphic(h.graph, gen_standard(StandardFamily::Complete, 4)));

  // K_{1,k} gives the wheel W_k
  for (int k = 4; k <= 6; ++k) {
    Graph star = gen_standard(StandardFamily::Star, k);
    PlaneTree ptk;
    ptk.tree = star;
    ptk.root = 0;
    ptk.neighbor_order.assign(k + 1, {});
    ptk.neighbor_order[0] = star.neighbors(0);
    for (int v = 1; v <= k; ++v) ptk.neighbor_order[v] = {0};
    CHECK(isomorphic(halin_from_plane_tree(ptk).graph, gen_standard(StandardFamily::Wheel, k)));
  }

  // a tree with a degree-2 vertex is rejected
  Graph spider = build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  PlaneTree bad;
  bad.tree = spider;
  bad.root = 0;
  bad.neighbor_order.assign(7, {});
  for (int v = 0; v < 7; ++v) bad.neighbor_order[v] = spider.neighbors(v);
  CHECK_THROWS_AS(halin_from_plane_tree(bad), Error);

  // too small
  Graph p3 = gen_standard(StandardFamily::Path, 3);
  PlaneTree small{p3, {{1}, {0, 2}, {1}}, 1};
  CHECK_THROWS_AS(halin_from_plane_tree(small), Error);
}

TEST_CASE("halin enumeration") {
  auto h4 = enumerate_halin(4);
  REQUIRE(h4.size() == 1);
  CHECK(isomorphic(h4[0], gen_standard(StandardFamily::Complete, 4)));

  auto h5 = enumerate_halin(5);
  REQUIRE(h5.size() == 1);
  CHECK(isomorphic(h5[0], gen_standard(StandardFamily::Wheel, 4)));

  auto h6 = enumerate_halin(6);
  CHECK(h6.size() == 2);

  // order 7 contains the wheel W_6 and one non-wheel
  auto h7 = enumerate_halin(7);
  bool has_w6 = false;
  for (const Graph& g : h7)
    if (isomorphic(g, gen_standard(StandardFamily::Wheel, 6))) has_w6 = true;
  CHECK(has_w6);
  CHECK(h7.size() == 2);
}

TEST_CASE("halin graphs are hamiltonian and stay hamiltonian after deletion") {
  for (int n = 4; n <= 8; ++n)
    for (const Graph& g : enumerate_halin(n)) {
      CHECK_FALSE(hamiltonian_cycles(g).empty());
      for (int v = 0; v < g.order(); ++v) {
        std::vector<int> keep;
        for (int u = 0; u < g.order(); ++u)
          if (u != v) keep.push_back(u);
        Graph sub = induced_subgraph(g, keep);
        CHECK_FALSE(hamiltonian_cycles(sub).empty());
      }
    }
}

TEST_CASE("free trees") {
  static const size_t counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};  // orders 1..9
  for (int n = 1; n <= 9; ++n) CHECK(free_trees(n).size() == counts[n - 1]);
}

TEST_CASE("connected graph enumeration") {
  CHECK(enumerate_connected_graphs(1).size() == 1);
  CHECK(enumerate_connected_graphs(2).size() == 1);
  CHECK(enumerate_connected_graphs(3).size() == 2);
  CHECK(enumerate_connected_graphs(4).size() == 6);
  CHECK(enumerate_connected_graphs(5).size() == 21);
  CHECK(enumerate_connected_graphs(6).size() == 112);
  CHECK_THROWS_AS(enumerate_connected_graphs(9), Error);
}

TEST_CASE("clique4 instances satisfy the construction preconditions") {
  auto gs = clique4_instances(20);
  CHECK(gs.size() == 20);
  for (const Graph& g : gs) {
    CHECK(is_connected(g));
    CHECK(clique_number(g).number == 4);
    CHECK(max_degree(g) >= 5);
  }
}
