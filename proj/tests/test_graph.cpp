#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "sqenergy/graph.hpp"

using sqenergy::Graph;

TEST_CASE("graph construction and accessors") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(0) == 2);
  CHECK(g.neighbors(0) == std::vector<int>{1, 3});
  CHECK(g.neighbors(2) == std::vector<int>{1, 3});
}

TEST_CASE("duplicate and reversed edges collapse") {
  const Graph g(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.degree(1) == 2);
}

TEST_CASE("empty and default graphs") {
  const Graph none;
  CHECK(none.order() == 0);
  CHECK(none.size() == 0);
  const Graph isolated(3, {});
  CHECK(isolated.order() == 3);
  CHECK(isolated.size() == 0);
  CHECK(isolated.neighbors(1).empty());
}

TEST_CASE("invalid edges are rejected") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(sqenergy::kMaxVertices + 1, {}), std::length_error);
}

TEST_CASE("edge list is sorted with u < v") {
  const Graph g(4, {{3, 2}, {1, 0}, {2, 0}});
  const std::vector<std::pair<int, int>> expected{{0, 1}, {0, 2}, {2, 3}};
  CHECK(g.edges() == expected);
}

TEST_CASE("adjacency matrix matches has_edge") {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
  const Eigen::MatrixXd a = g.adjacency_matrix();
  REQUIRE(a.rows() == 5);
  REQUIRE(a.cols() == 5);
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) {
      CHECK(a(u, v) == (g.has_edge(u, v) ? 1.0 : 0.0));
      CHECK(a(u, v) == a(v, u));
    }
    CHECK(a(u, u) == 0.0);
  }
}

TEST_CASE("row_mask32 packs low neighbors") {
  const Graph g(6, {{0, 1}, {0, 4}, {2, 5}});
  CHECK(g.row_mask32(0) == ((1u << 1) | (1u << 4)));
  CHECK(g.row_mask32(1) == (1u << 0));
  CHECK(g.row_mask32(3) == 0u);
  CHECK(g.row_mask32(5) == (1u << 2));
}

TEST_CASE("induced subgraph relabels by keep order") {
  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const Graph p3 = induced_subgraph(c5, {0, 1, 2});
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));
  CHECK(!p3.has_edge(0, 2));

  // keep = {4, 0, 1} maps old 4 -> 0, old 0 -> 1, old 1 -> 2.
  const Graph q = induced_subgraph(c5, {4, 0, 1});
  CHECK(q.has_edge(0, 1));
  CHECK(q.has_edge(1, 2));
  CHECK(!q.has_edge(0, 2));
}

TEST_CASE("delete_vertices removes the complementary set") {
  const Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const Graph h = delete_vertices(c5, {2});
  CHECK(h.order() == 4);
  CHECK(h.size() == 3);  // path 1-0-4-3 after relabeling
}

TEST_CASE("disjoint union keeps sides apart") {
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  const Graph p2(2, {{0, 1}});
  const Graph u = disjoint_union(k3, p2);
  CHECK(u.order() == 5);
  CHECK(u.size() == 4);
  CHECK(u.has_edge(3, 4));
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 5; ++b) CHECK(!u.has_edge(a, b));
  }
}

TEST_CASE("complement") {
  // P4 is self-complementary.
  const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph cp = complement(p4);
  CHECK(cp.size() == 3);
  CHECK(cp.has_edge(0, 2));
  CHECK(cp.has_edge(0, 3));
  CHECK(cp.has_edge(1, 3));
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(complement(k3).size() == 0);
}

TEST_CASE("join adds all cross edges") {
  const Graph k1(1, {});
  const Graph e3(3, {});
  const Graph star = join(k1, e3);
  CHECK(star.order() == 4);
  CHECK(star.size() == 3);
  CHECK(star.degree(0) == 3);

  const Graph p3(3, {{0, 1}, {1, 2}});
  const Graph j = join(p3, p3);
  CHECK(j.order() == 6);
  CHECK(j.size() == 2 + 2 + 9);
}

TEST_CASE("graph equality is labeled equality") {
  const Graph a(3, {{0, 1}});
  const Graph b(3, {{1, 0}});
  const Graph c(3, {{1, 2}});
  CHECK(a == b);
  CHECK(!(a == c));
}
