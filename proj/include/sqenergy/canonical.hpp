#pragma once

// Canonical labeling for small graphs (order <= 16) by equitable partition
// refinement with individualization, pruned by automorphism orbits.  Two
// graphs on the same vertex count are isomorphic iff their certificates are
// equal, and the returned labeling is a checkable witness: applying it
// produces the same literal graph for any two isomorphic inputs.

#include <array>
#include <cstdint>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqenergy {

inline constexpr int kCanonicalCap = 16;

// Packed upper triangle of the canonically relabeled adjacency matrix
// (lexicographic array order is the certificate order).
using CanonicalCert = std::array<uint64_t, 2>;

struct CanonicalForm {
  CanonicalCert cert{};
  std::vector<int> labeling;  // labeling[old_vertex] = canonical label
};

CanonicalForm canonical_form(const Graph& g);  // order cap kCanonicalCap
CanonicalCert canonical_cert(const Graph& g);

// Relabels g: vertex v becomes labeling[v].  labeling must be a permutation.
Graph apply_labeling(const Graph& g, const std::vector<int>& labeling);

// The canonical representative itself: apply_labeling with the canonical
// labeling.  Equal (operator==) across isomorphic inputs.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace sqenergy
