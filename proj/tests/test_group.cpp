#include <doctest.h>

#include <numeric>
#include <random>

#include "oracle.hpp"
#include "symbreak/families.hpp"
#include "symbreak/group.hpp"

using namespace symbreak;

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(gen_standard(StandardFamily::Cycle, 6)).order == 12);
  CHECK(automorphisms(gen_standard(StandardFamily::Complete, 4)).order == 24);
  Graph grotzsch = mycielskian(gen_standard(StandardFamily::Cycle, 5)).first;
  AutGroup ag = automorphisms(grotzsch);
  CHECK(ag.order == 10);
  CHECK(ag.order_string() == "10");
}

TEST_CASE("generators are automorphisms and orbit sizes divide the order") {
  for (const Graph& g : {gen_standard(StandardFamily::Wheel, 5),
                         gen_standard(StandardFamily::CompleteBipartite, 3, 4),
                         mycielskian(gen_standard(StandardFamily::Path, 4)).first}) {
    AutGroup a = automorphisms(g);
    for (const Permutation& p : a.generators) CHECK(is_automorphism(g, p));
    for (const auto& orbit : a.orbits) CHECK(a.order % orbit.size() == 0);
  }
}

TEST_CASE("brute force order agreement on small graphs") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : enumerate_connected_graphs(n))
      CHECK(automorphisms(g).order == static_cast<BigCount>(oracle::brute_aut_count(g)));
}

TEST_CASE("order is isomorphism invariant") {
  std::mt19937 rng(20240817);
  for (const Graph& g : {gen_standard(StandardFamily::Wheel, 6),
                         mycielskian(gen_standard(StandardFamily::Cycle, 5)).first,
                         enumerate_mops(7)[2]}) {
    BigCount base = automorphisms(g).order;
    for (int rep = 0; rep < 3; ++rep) {
      std::vector<int> img(g.order());
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      CHECK(automorphisms(g.relabeled(img)).order == base);
    }
  }
}

TEST_CASE("is_automorphism") {
  Graph c4 = gen_standard(StandardFamily::Cycle, 4);
  CHECK(is_automorphism(c4, Permutation{{1, 2, 3, 0}}));
  Graph p3 = gen_standard(StandardFamily::Path, 3);
  CHECK(is_automorphism(p3, Permutation{{2, 1, 0}}));
  CHECK_FALSE(is_automorphism(p3, Permutation{{1, 2, 0}}));
  CHECK_THROWS_AS(is_automorphism(p3, Permutation{{0, 1}}), Error);
}

TEST_CASE("label preservation") {
  Graph c3 = gen_standard(StandardFamily::Cycle, 3);
  Permutation rot{{1, 2, 0}};
  CHECK(preserves_vertex_labeling(Permutation::identity(3), VertexLabeling{{1, 2, 3}}));
  CHECK_FALSE(preserves_vertex_labeling(rot, VertexLabeling{{1, 2, 3}}));
  CHECK(preserves_vertex_labeling(rot, VertexLabeling{{1, 1, 1}}));

  Graph p3 = gen_standard(StandardFamily::Path, 3);
  Permutation swap{{2, 1, 0}};
  CHECK(preserves_edge_labeling(p3, Permutation::identity(3), EdgeLabeling{{1, 2}}));
  CHECK_FALSE(preserves_edge_labeling(p3, swap, EdgeLabeling{{1, 2}}));
  CHECK_FALSE(preserves_edge_labeling(c3, rot, EdgeLabeling{{1, 2, 3}}));
  CHECK(preserves_edge_labeling(c3, rot, EdgeLabeling{{1, 1, 1}}));
}

TEST_CASE("labeled stabilizer triviality") {
  Graph c6 = gen_standard(StandardFamily::Cycle, 6);
  CHECK(labeled_stabilizer_is_trivial(c6, VertexLabeling{{2, 2, 1, 2, 1, 1}}));
  CHECK_FALSE(labeled_stabilizer_is_trivial(c6, VertexLabeling{{1, 1, 1, 1, 1, 1}}));

  // asymmetric tree (legs of lengths 1, 2, 3): constant labeling works
  Graph t = build_graph(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
  REQUIRE(automorphisms(t).order == 1);
  CHECK(labeled_stabilizer_is_trivial(t, VertexLabeling{{1, 1, 1, 1, 1, 1, 1}}));
}

TEST_CASE("stabilizer check agrees with explicit element filtering") {
  std::mt19937 rng(7);
  for (const Graph& g : enumerate_connected_graphs(5)) {
    AutGroup a = automorphisms(g);
    auto elems = group_elements(a);
    CHECK(elems.size() == static_cast<size_t>(a.order));
    std::uniform_int_distribution<int> lab(1, 2);
    for (int rep = 0; rep < 4; ++rep) {
      std::vector<int> labels(g.order());
      for (int& x : labels) x = lab(rng);
      bool filtered = true;
      for (const auto& p : elems)
        if (!p.is_identity() && preserves_vertex_labeling(p, VertexLabeling{labels}))
          filtered = false;
      CHECK(labeled_stabilizer_is_trivial(g, VertexLabeling{labels}) == filtered);
    }
  }
}

TEST_CASE("orbits") {
  AutGroup c5 = automorphisms(gen_standard(StandardFamily::Cycle, 5));
  REQUIRE(orbits(c5).size() == 1);
  CHECK(orbits(c5)[0].size() == 5);

  AutGroup p3 = automorphisms(gen_standard(StandardFamily::Path, 3));
  CHECK(orbits(p3) == std::vector<std::vector<int>>{{0, 2}, {1}});

  AutGroup star = automorphisms(gen_standard(StandardFamily::Star, 3));
  CHECK(orbits(star) == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
}

TEST_CASE("group order as decimal string for large groups") {
  AutGroup k10 = automorphisms(gen_standard(StandardFamily::Complete, 10));
  CHECK(k10.order_string() == "3628800");
  AutGroup k22 = automorphisms(gen_standard(StandardFamily::Complete, 22));
  CHECK(k22.order_string() == "1124000727777607680000");  // 22!
}

TEST_CASE("isomorphism and canonical forms") {
  Graph a = gen_standard(StandardFamily::Cycle, 6);
  Graph b = a.relabeled({3, 1, 5, 0, 4, 2});
  CHECK(isomorphic(a, b));
  CHECK(canonical_key(a) == canonical_key(b));
  Graph c = gen_standard(StandardFamily::Path, 6);
  CHECK_FALSE(isomorphic(a, c));
  CHECK(canonical_key(a) != canonical_key(c));

  auto iso = find_isomorphism(a, b);
  REQUIRE(iso.has_value());
  CHECK(a.relabeled(iso->img) == b);
}
