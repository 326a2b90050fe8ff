#pragma once

// Classical graph invariants used by the conjecture and theorem checks:
// connectivity structure, distance parameters, subgraph counts, and the
// NP-hard parameters (clique, independence, domination, matching) computed
// by exact search at small orders.  Functions guarded by an order cap
// return through std::optional in InvariantSet; calling the direct
// function beyond its cap throws std::length_error.

#include <optional>
#include <string>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqenergy {

// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<int>> components_of(const Graph& g);
int count_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);       // connected with m = n - 1
bool is_unicyclic(const Graph& g);  // connected with m = n

// Largest eccentricity; nullopt when g is disconnected or has no vertices.
std::optional<int> diameter(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

long long triangle_count(const Graph& g);

// Number of induced 4-cycles (both diagonals absent).
long long induced_c4_count(const Graph& g);

// Number of common neighbors of u and v.
int codegree(const Graph& g, int u, int v);

// Exact searches; order caps keep worst cases tractable.
inline constexpr int kCliqueCap = 64;
inline constexpr int kDominationCap = 64;
inline constexpr int kMatchingCap = 1024;
inline constexpr int kInducedC4Cap = 512;
inline constexpr int kDiameterCap = 4096;
inline constexpr int kClawFreeCap = 4096;

int clique_number(const Graph& g);        // order cap kCliqueCap
int independence_number(const Graph& g);  // order cap kCliqueCap
int domination_number(const Graph& g);    // order cap kDominationCap
int matching_number(const Graph& g);      // order cap kMatchingCap

// True when no vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);  // order cap kClawFreeCap

// Cut vertices (articulation points), ascending.
std::vector<int> cut_vertices(const Graph& g);

// An induced path a-b-c (center b, ends non-adjacent) chosen to contain as
// few cut vertices of g as possible; ties broken lexicographically by
// (center, smaller end, larger end).  nullopt when g has no induced path
// on three vertices.
struct InducedP3 {
  int center = -1;
  int end1 = -1;  // end1 < end2
  int end2 = -1;
  int cut_count = 0;  // cut vertices of g among the three
};
std::optional<InducedP3> find_induced_p3_min_cut(const Graph& g);

// Sum of squared degrees.
long long sum_deg_sq(const Graph& g);

struct InvariantSet {
  int n = 0;
  int m = 0;
  int components = 0;
  bool connected = false;
  bool bipartite = false;
  bool tree = false;
  bool unicyclic = false;
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> diameter;
  std::optional<int> girth;
  long long triangles = 0;
  std::optional<long long> induced_c4;
  std::optional<int> clique_number;
  std::optional<int> independence_number;
  std::optional<int> domination_number;
  std::optional<int> matching_number;
  std::optional<bool> claw_free;
  std::vector<int> cut_vertices;
};

// Computes every invariant whose cap admits g; capped fields are nullopt.
InvariantSet compute_invariants(const Graph& g);

}  // namespace sqenergy
