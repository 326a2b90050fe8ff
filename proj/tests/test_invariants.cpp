#include <doctest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "sqenergy/enumerate.hpp"
#include "sqenergy/family.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/invariants.hpp"

using namespace sqenergy;

TEST_CASE("connectivity basics") {
  const Graph p4 = build(FamilySpec::path(4));
  CHECK(is_connected(p4));
  CHECK(is_tree(p4));
  CHECK(is_bipartite(p4));
  CHECK(!is_unicyclic(p4));
  CHECK(count_components(p4) == 1);

  const Graph c5 = build(FamilySpec::cycle(5));
  CHECK(is_unicyclic(c5));
  CHECK(!is_bipartite(c5));
  CHECK(!is_tree(c5));

  const Graph two = disjoint_union(p4, c5);
  CHECK(!is_connected(two));
  CHECK(count_components(two) == 2);
  const auto comps = components_of(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(comps[1].size() == 5);
  CHECK(!diameter(two).has_value());
}

TEST_CASE("exhaustive agreement with brute-force invariants") {
  for (int n = 1; n <= 6; ++n) {
    enumerate_connected(n, [](const Graph& g) {
      CHECK(clique_number(g) == oracle::brute_clique_number(g));
      CHECK(independence_number(g) == oracle::brute_independence_number(g));
      CHECK(domination_number(g) == oracle::brute_domination_number(g));
      CHECK(matching_number(g) == oracle::brute_matching_number(g));
      CHECK(is_claw_free(g) == oracle::brute_claw_free(g));
      CHECK(triangle_count(g) == oracle::brute_triangles(g));
      CHECK(count_components(g) == oracle::brute_components(g));
      CHECK(diameter(g) == oracle::brute_diameter(g));
      CHECK(girth(g) == oracle::brute_girth(g));
    });
  }
}

TEST_CASE("brute-force agreement on disconnected samples") {
  const Graph a = disjoint_union(build(FamilySpec::cycle(4)),
                                 build(FamilySpec::path(3)));
  CHECK(count_components(a) == oracle::brute_components(a));
  CHECK(girth(a) == oracle::brute_girth(a));
  CHECK(!diameter(a).has_value());
  CHECK(matching_number(a) == oracle::brute_matching_number(a));
  CHECK(domination_number(a) == oracle::brute_domination_number(a));

  const Graph forest = disjoint_union(build(FamilySpec::path(2)),
                                      build(FamilySpec::path(3)));
  CHECK(!girth(forest).has_value());
  CHECK(!oracle::brute_girth(forest).has_value());
}

TEST_CASE("matching number on crowns of odd components") {
  // Blossom-requiring case: two triangles sharing no vertex, matching 2.
  const Graph g = disjoint_union(build(FamilySpec::cycle(3)),
                                 build(FamilySpec::cycle(3)));
  CHECK(matching_number(g) == 2);
  // Petersen graph has a perfect matching.
  const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  CHECK(matching_number(petersen) == 5);
  CHECK(girth(petersen) == 5);
  CHECK(diameter(petersen) == 2);
  CHECK(clique_number(petersen) == 2);
  CHECK(independence_number(petersen) == 4);
  CHECK(domination_number(petersen) == 3);
}

TEST_CASE("codegree and degree square sum") {
  const Graph c4 = build(FamilySpec::cycle(4));
  CHECK(codegree(c4, 0, 2) == 2);
  CHECK(codegree(c4, 0, 1) == 0);
  CHECK(sum_deg_sq(c4) == 16);
  CHECK(sum_deg_sq(build(FamilySpec::complete(4))) == 36);
}

TEST_CASE("induced four-cycle count") {
  CHECK(induced_c4_count(build(FamilySpec::cycle(4))) == 1);
  CHECK(induced_c4_count(build(FamilySpec::cycle(5))) == 0);
  CHECK(induced_c4_count(build(FamilySpec::complete(4))) == 0);
  CHECK(induced_c4_count(build(FamilySpec::complete_bipartite(2, 3))) == 3);
  CHECK(induced_c4_count(build(FamilySpec::complete_bipartite(3, 3))) == 9);
}

TEST_CASE("cut vertices") {
  CHECK(cut_vertices(build(FamilySpec::path(4))) == std::vector<int>{1, 2});
  CHECK(cut_vertices(build(FamilySpec::cycle(5))).empty());
  CHECK(cut_vertices(build(FamilySpec::star(5))) == std::vector<int>{0});
  CHECK(cut_vertices(build(FamilySpec::triangle_paths(1, 0, 0))) ==
        std::vector<int>{0});
}

TEST_CASE("minimum-cut induced path on three vertices") {
  const auto p3 = find_induced_p3_min_cut(build(FamilySpec::path(3)));
  REQUIRE(p3.has_value());
  CHECK(p3->center == 1);
  CHECK(p3->end1 == 0);
  CHECK(p3->end2 == 2);
  CHECK(p3->cut_count == 1);

  const auto c4 = find_induced_p3_min_cut(build(FamilySpec::cycle(4)));
  REQUIRE(c4.has_value());
  CHECK(c4->cut_count == 0);

  CHECK(!find_induced_p3_min_cut(build(FamilySpec::complete(4))).has_value());
  CHECK(!find_induced_p3_min_cut(build(FamilySpec::empty(3))).has_value());

  // pentagon(1,1): every induced P3 goes through a cut vertex.
  const auto h11 = find_induced_p3_min_cut(build(FamilySpec::pentagon(1, 1)));
  REQUIRE(h11.has_value());
  CHECK(h11->cut_count >= 1);
  // pentagon(2,0): two leaves on one vertex give a cut-free induced P3.
  const auto h20 = find_induced_p3_min_cut(build(FamilySpec::pentagon(2, 0)));
  REQUIRE(h20.has_value());
  CHECK(h20->cut_count == 0);
}

TEST_CASE("invariant set assembles the pieces") {
  const InvariantSet inv = compute_invariants(build(FamilySpec::pentagon(1, 1)));
  CHECK(inv.n == 7);
  CHECK(inv.m == 7);
  CHECK(inv.connected);
  CHECK(!inv.tree);
  CHECK(!inv.bipartite);
  CHECK(inv.unicyclic);  // connected with m = n
  CHECK(inv.min_degree == 1);
  CHECK(inv.max_degree == 3);
  CHECK(inv.girth == 5);
  CHECK(inv.triangles == 0);
  REQUIRE(inv.clique_number.has_value());
  CHECK(*inv.clique_number == 2);
  REQUIRE(inv.claw_free.has_value());
  CHECK(!*inv.claw_free);
  CHECK(inv.cut_vertices == std::vector<int>{0, 2});
}
