#pragma once

// Isomorph-free exhaustive generation of connected graphs by canonical
// deletion: a child on k+1 vertices is kept only when removing its
// canonically chosen deletable vertex recovers (up to isomorphism) the
// parent it was built from, so every isomorphism class arrives exactly
// once.  Deterministic visit order.

#include <functional>

#include "sqenergy/graph.hpp"

namespace sqenergy {

// Generation is exhaustive search; beyond 9 vertices the class counts make
// it impractical on one core, so the toolkit refuses.
inline constexpr int kEnumerateCap = 9;

// Calls visit exactly once per isomorphism class of connected graphs on n
// vertices (1 <= n <= kEnumerateCap).
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit);

// Number of isomorphism classes of connected graphs on n vertices.
long long count_connected(int n);

}  // namespace sqenergy
