#include "sqenergy/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sqenergy {

namespace {

using Cells = std::vector<std::vector<int>>;

struct CanonSearch {
  int n = 0;
  std::array<uint32_t, kCanonicalCap> adj{};

  bool have_best = false;
  CanonicalCert best_cert{};
  std::vector<int> best_leaf;            // position -> vertex
  std::vector<std::array<int, kCanonicalCap>> autos;  // vertex maps

  uint32_t cell_mask(const std::vector<int>& cell) const {
    uint32_t m = 0;
    for (int v : cell) m |= 1u << v;
    return m;
  }

  // Refines to an equitable ordered partition: within every cell, all
  // vertices have the same neighbor count into every cell.  Subcells are
  // ordered by ascending count, which keeps the procedure
  // relabeling-covariant (counts are label-independent).
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t s = 0; s < cells.size() && !changed; ++s) {
        const uint32_t splitter = cell_mask(cells[s]);
        for (size_t t = 0; t < cells.size() && !changed; ++t) {
          if (cells[t].size() < 2) continue;
          std::map<int, std::vector<int>> by_count;
          for (int v : cells[t]) {
            by_count[std::popcount(adj[v] & splitter)].push_back(v);
          }
          if (by_count.size() < 2) continue;
          Cells replacement;
          replacement.reserve(by_count.size());
          for (auto& [cnt, members] : by_count) {
            replacement.push_back(std::move(members));
          }
          cells.erase(cells.begin() + static_cast<long>(t));
          cells.insert(cells.begin() + static_cast<long>(t),
                       std::make_move_iterator(replacement.begin()),
                       std::make_move_iterator(replacement.end()));
          changed = true;
        }
      }
    }
  }

  CanonicalCert cert_of_leaf(const std::vector<int>& leaf) const {
    // position of each vertex
    std::array<int, kCanonicalCap> pos{};
    for (int i = 0; i < n; ++i) pos[leaf[i]] = i;
    CanonicalCert cert{};
    for (int v = 0; v < n; ++v) {
      uint32_t row = adj[v];
      while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        if (u <= v) continue;
        int i = std::min(pos[v], pos[u]);
        int j = std::max(pos[v], pos[u]);
        int bit = j * (j - 1) / 2 + i;
        cert[bit >> 6] |= 1ull << (bit & 63);
      }
    }
    return cert;
  }

  bool is_automorphism(const std::array<int, kCanonicalCap>& pi) const {
    for (int v = 0; v < n; ++v) {
      uint32_t mapped = 0;
      uint32_t row = adj[v];
      while (row) {
        int u = std::countr_zero(row);
        row &= row - 1;
        mapped |= 1u << pi[u];
      }
      if (mapped != adj[pi[v]]) return false;
    }
    return true;
  }

  void record_leaf(const std::vector<int>& leaf) {
    CanonicalCert cert = cert_of_leaf(leaf);
    if (!have_best) {
      have_best = true;
      best_cert = cert;
      best_leaf = leaf;
      return;
    }
    if (cert == best_cert) {
      // Equal certificates expose an automorphism: the map sending the
      // vertex at each canonical position of the stored leaf to the vertex
      // at the same position here.
      std::array<int, kCanonicalCap> pi{};
      for (int i = 0; i < n; ++i) pi[best_leaf[i]] = leaf[i];
      if (is_automorphism(pi)) autos.push_back(pi);
      return;
    }
    if (cert < best_cert) {
      best_cert = cert;
      best_leaf = leaf;
    }
  }

  void recurse(Cells cells, std::vector<int>& prefix) {
    refine(cells);
    size_t target = cells.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() >= 2) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      std::vector<int> leaf;
      leaf.reserve(n);
      for (const auto& cell : cells) leaf.push_back(cell[0]);
      record_leaf(leaf);
      return;
    }

    // Orbit pruning: candidates equivalent under an automorphism fixing the
    // individualized prefix pointwise lead to identical subtrees.
    std::vector<int> orbit(n);
    std::iota(orbit.begin(), orbit.end(), 0);
    auto find = [&](int v) {
      while (orbit[v] != v) v = orbit[v] = orbit[orbit[v]];
      return v;
    };
    for (const auto& pi : autos) {
      bool fixes_prefix = true;
      for (int p : prefix) {
        if (pi[p] != p) {
          fixes_prefix = false;
          break;
        }
      }
      if (!fixes_prefix) continue;
      for (int v = 0; v < n; ++v) {
        int a = find(v), b = find(pi[v]);
        if (a != b) orbit[a] = b;
      }
    }

    std::vector<int> tried;
    for (int v : cells[target]) {
      bool redundant = false;
      for (int t : tried) {
        if (find(t) == find(v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);

      Cells child = cells;
      std::vector<int> rest;
      for (int u : child[target]) {
        if (u != v) rest.push_back(u);
      }
      child[target] = {v};
      child.insert(child.begin() + static_cast<long>(target) + 1,
                   std::move(rest));
      prefix.push_back(v);
      recurse(std::move(child), prefix);
      prefix.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kCanonicalCap) {
    throw std::length_error("canonical_form: order " + std::to_string(n) +
                            " exceeds cap " + std::to_string(kCanonicalCap));
  }
  CanonicalForm out;
  if (n == 0) return out;
  CanonSearch search;
  search.n = n;
  for (int v = 0; v < n; ++v) {
    search.adj[v] = static_cast<uint32_t>(g.row(v)[0]);
  }
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> prefix;
  search.recurse({all}, prefix);
  out.cert = search.best_cert;
  out.labeling.resize(n);
  for (int i = 0; i < n; ++i) out.labeling[search.best_leaf[i]] = i;
  return out;
}

CanonicalCert canonical_cert(const Graph& g) { return canonical_form(g).cert; }

Graph apply_labeling(const Graph& g, const std::vector<int>& labeling) {
  if (static_cast<int>(labeling.size()) != g.order()) {
    throw std::invalid_argument("apply_labeling: size mismatch");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.size());
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(labeling[u], labeling[v]);
  }
  return Graph(g.order(), edges);
}

Graph canonical_graph(const Graph& g) {
  return apply_labeling(g, canonical_form(g).labeling);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_cert(a) == canonical_cert(b);
}

}  // namespace sqenergy
