#include "sqenergy/enumerate.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "sqenergy/canonical.hpp"
#include "sqenergy/invariants.hpp"

namespace sqenergy {

namespace {

struct Generator {
  int target = 0;
  const std::function<void(const Graph&)>* visit = nullptr;

  // parent is connected with parent_cert = canonical_cert(parent).
  void extend(const Graph& parent, const CanonicalCert& parent_cert) {
    if (parent.order() == target) {
      (*visit)(parent);
      return;
    }
    const int k = parent.order();
    std::set<CanonicalCert> seen;  // candidate classes from this parent
    std::vector<std::pair<int, int>> edges = parent.edges();
    const size_t base_edges = edges.size();
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
      edges.resize(base_edges);
      for (int v = 0; v < k; ++v) {
        if (mask & (1u << v)) edges.emplace_back(v, k);
      }
      Graph child(k + 1, edges);
      CanonicalForm form = canonical_form(child);
      if (!seen.insert(form.cert).second) continue;

      // Canonical deletion vertex: the non-cut vertex with the largest
      // canonical label.  Accept iff deleting it recovers the parent class.
      std::vector<char> is_cut(k + 1, 0);
      for (int v : cut_vertices(child)) is_cut[v] = 1;
      int d = -1, d_label = -1;
      for (int v = 0; v <= k; ++v) {
        if (!is_cut[v] && form.labeling[v] > d_label) {
          d = v;
          d_label = form.labeling[v];
        }
      }
      Graph reduced = delete_vertices(child, {d});
      if (canonical_cert(reduced) != parent_cert) continue;
      extend(child, form.cert);
    }
  }
};

}  // namespace

void enumerate_connected(int n,
                         const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kEnumerateCap) {
    throw std::invalid_argument("enumerate_connected: n must be in 1.." +
                                std::to_string(kEnumerateCap));
  }
  Graph k1(1, {});
  if (n == 1) {
    visit(k1);
    return;
  }
  Generator gen;
  gen.target = n;
  gen.visit = &visit;
  gen.extend(k1, canonical_cert(k1));
}

long long count_connected(int n) {
  long long count = 0;
  enumerate_connected(n, [&](const Graph&) { ++count; });
  return count;
}

}  // namespace sqenergy
