#include "sqenergy/invariants.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace sqenergy {

namespace {

void require_cap(const Graph& g, int cap, const char* what) {
  if (g.order() > cap) {
    throw std::length_error(std::string(what) + ": order " +
                            std::to_string(g.order()) + " exceeds cap " +
                            std::to_string(cap));
  }
}

template <typename F>
void for_each_bit(const uint64_t* row, int words, F f) {
  for (int w = 0; w < words; ++w) {
    uint64_t x = row[w];
    while (x) {
      f(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
}

int popcount_and(const uint64_t* a, const uint64_t* b, int words) {
  int c = 0;
  for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

// Breadth-first level sweep from `start`; returns (visited mask, eccentricity).
std::pair<std::vector<uint64_t>, int> bfs_levels(const Graph& g, int start) {
  const int words = g.words_per_row();
  std::vector<uint64_t> visited(words, 0), frontier(words, 0), next(words);
  visited[start >> 6] |= 1ull << (start & 63);
  frontier = visited;
  int ecc = 0;
  for (;;) {
    std::fill(next.begin(), next.end(), 0);
    bool any = false;
    for_each_bit(frontier.data(), words, [&](int v) {
      const uint64_t* row = g.row(v);
      for (int w = 0; w < words; ++w) next[w] |= row[w];
    });
    for (int w = 0; w < words; ++w) {
      next[w] &= ~visited[w];
      if (next[w]) any = true;
    }
    if (!any) break;
    ++ecc;
    for (int w = 0; w < words; ++w) visited[w] |= next[w];
    frontier = next;
  }
  return {std::move(visited), ecc};
}

}  // namespace

std::vector<std::vector<int>> components_of(const Graph& g) {
  const int n = g.order();
  const int words = g.words_per_row();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    auto [visited, ecc] = bfs_levels(g, s);
    (void)ecc;
    std::vector<int> comp;
    for_each_bit(visited.data(), words, [&](int v) {
      seen[v] = 1;
      comp.push_back(v);
    });
    out.push_back(std::move(comp));
  }
  return out;
}

int count_components(const Graph& g) {
  return static_cast<int>(components_of(g).size());
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto [visited, ecc] = bfs_levels(g, 0);
  (void)ecc;
  int total = 0;
  for (uint64_t w : visited) total += std::popcount(w);
  return total == g.order();
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (color[u] == -1) {
          color[u] = color[v] ^ 1;
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_unicyclic(const Graph& g) {
  return g.size() == g.order() && is_connected(g);
}

std::optional<int> diameter(const Graph& g) {
  require_cap(g, kDiameterCap, "diameter");
  const int n = g.order();
  if (n == 0 || !is_connected(g)) return std::nullopt;
  int diam = 0;
  for (int v = 0; v < n; ++v) {
    auto [visited, ecc] = bfs_levels(g, v);
    (void)visited;
    diam = std::max(diam, ecc);
  }
  return diam;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n), parent(n);
  std::vector<int> order;
  order.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    order.clear();
    dist[s] = 0;
    order.push_back(s);
    for (size_t head = 0; head < order.size(); ++head) {
      int v = order[head];
      if (2 * dist[v] >= best) break;  // no shorter cycle reachable via s
      for (int u : g.neighbors(v)) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          order.push_back(u);
        } else if (u != parent[v] && parent[u] != v) {
          // Non-tree edge closes a cycle through s of this length; the
          // minimum over all roots s is exactly the girth.
          best = std::min(best, dist[v] + dist[u] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

long long triangle_count(const Graph& g) {
  const int words = g.words_per_row();
  long long total = 0;
  for (const auto& [u, v] : g.edges()) {
    total += popcount_and(g.row(u), g.row(v), words);
  }
  return total / 3;  // each triangle seen once per edge
}

long long induced_c4_count(const Graph& g) {
  require_cap(g, kInducedC4Cap, "induced_c4_count");
  const int n = g.order();
  const int words = g.words_per_row();
  std::vector<uint64_t> common(words);
  long long diag_pairs = 0;
  // For every non-adjacent diagonal pair {u, v}: count non-adjacent pairs
  // among their common neighbors.  Every induced 4-cycle has exactly two
  // diagonal pairs, hence the final halving.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const uint64_t* ru = g.row(u);
      const uint64_t* rv = g.row(v);
      int s = 0;
      for (int w = 0; w < words; ++w) {
        common[w] = ru[w] & rv[w];
        s += std::popcount(common[w]);
      }
      if (s < 2) continue;
      long long inside_edges = 0;
      for_each_bit(common.data(), words, [&](int x) {
        // Count common-neighbor edges once: partner above x only.
        const uint64_t* rx = g.row(x);
        for (int w = x >> 6; w < words; ++w) {
          uint64_t word = rx[w] & common[w];
          if (w == (x >> 6)) word &= ~((2ull << (x & 63)) - 1);
          inside_edges += std::popcount(word);
        }
      });
      diag_pairs += static_cast<long long>(s) * (s - 1) / 2 - inside_edges;
    }
  }
  return diag_pairs / 2;
}

int codegree(const Graph& g, int u, int v) {
  return popcount_and(g.row(u), g.row(v), g.words_per_row());
}

namespace {

// Branch-and-bound maximum clique with greedy coloring bound (orders <= 64).
struct CliqueSearch {
  int n = 0;
  std::vector<uint64_t> adj;
  int best = 0;

  void expand(uint64_t cand, int depth) {
    if (!cand) {
      best = std::max(best, depth);
      return;
    }
    // Greedy coloring of the candidate set; color = upper bound on the
    // clique extension using that vertex and earlier-colored ones.
    std::vector<std::pair<int, int>> colored;  // (vertex, color)
    uint64_t rem = cand;
    int color = 0;
    while (rem) {
      ++color;
      uint64_t avail = rem;
      while (avail) {
        int v = std::countr_zero(avail);
        avail &= ~adj[v];
        avail &= ~(1ull << v);
        rem &= ~(1ull << v);
        colored.emplace_back(v, color);
      }
    }
    uint64_t cur = cand;
    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      auto [v, c] = *it;
      if (depth + c <= best) return;  // later vertices have smaller colors
      expand(cur & adj[v], depth + 1);
      cur &= ~(1ull << v);
    }
  }
};

}  // namespace

int clique_number(const Graph& g) {
  require_cap(g, kCliqueCap, "clique_number");
  const int n = g.order();
  if (n == 0) return 0;
  CliqueSearch search;
  search.n = n;
  search.adj.assign(n, 0);
  for (int v = 0; v < n; ++v) search.adj[v] = g.row(v)[0];
  uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  search.expand(all, 0);
  return search.best;
}

int independence_number(const Graph& g) {
  require_cap(g, kCliqueCap, "independence_number");
  return clique_number(complement(g));
}

namespace {

struct DominationSearch {
  int n = 0;
  uint64_t full = 0;
  std::vector<uint64_t> closed;  // N[v]
  int max_cover = 1;
  int best = 0;

  void search(uint64_t covered, int size) {
    if (covered == full) {
      best = std::min(best, size);
      return;
    }
    uint64_t uncovered = full & ~covered;
    int need = (std::popcount(uncovered) + max_cover - 1) / max_cover;
    if (size + need >= best) return;
    int v = std::countr_zero(uncovered);
    // Some chosen vertex must cover v, i.e. lie in N[v].
    uint64_t choices = closed[v];
    while (choices) {
      int u = std::countr_zero(choices);
      choices &= choices - 1;
      search(covered | closed[u], size + 1);
    }
  }
};

}  // namespace

int domination_number(const Graph& g) {
  require_cap(g, kDominationCap, "domination_number");
  const int n = g.order();
  if (n == 0) return 0;
  DominationSearch s;
  s.n = n;
  s.full = n == 64 ? ~0ull : (1ull << n) - 1;
  s.closed.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    s.closed[v] = g.row(v)[0] | (1ull << v);
    s.max_cover = std::max(s.max_cover, std::popcount(s.closed[v]));
  }
  s.best = n;  // the whole vertex set always dominates
  s.search(0, 0);
  return s.best;
}

namespace {

// Maximum matching in a general graph via blossom contraction, O(n^3).
struct BlossomMatcher {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<int> match, p, base;
  std::vector<char> used, in_blossom;

  explicit BlossomMatcher(const Graph& g) : n(g.order()), adj(n) {
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    match.assign(n, -1);
    p.assign(n, -1);
    base.resize(n);
    used.resize(n);
    in_blossom.resize(n);
  }

  int lca(int a, int b) {
    std::vector<char> mark(n, 0);
    for (;;) {
      a = base[a];
      mark[a] = 1;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (mark[b]) return b;
      b = p[match[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = 1;
      in_blossom[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  }

  int find_path(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(p.begin(), p.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj[v]) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
          int curbase = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, curbase, to);
          mark_path(to, curbase, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = curbase;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
          }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  }

  int solve() {
    int size = 0;
    for (int v = 0; v < n; ++v) {
      if (match[v] != -1) continue;
      int u = find_path(v);
      if (u == -1) continue;
      ++size;
      while (u != -1) {  // flip the augmenting path
        int pv = p[u], ppv = match[pv];
        match[u] = pv;
        match[pv] = u;
        u = ppv;
      }
    }
    return size;
  }
};

}  // namespace

int matching_number(const Graph& g) {
  require_cap(g, kMatchingCap, "matching_number");
  if (g.order() == 0) return 0;
  return BlossomMatcher(g).solve();
}

bool is_claw_free(const Graph& g) {
  require_cap(g, kClawFreeCap, "is_claw_free");
  const int n = g.order();
  const int words = g.words_per_row();
  for (int v = 0; v < n; ++v) {
    std::vector<int> nbrs = g.neighbors(v);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        int a = nbrs[i], b = nbrs[j];
        if (g.has_edge(a, b)) continue;
        // A third neighbor of v non-adjacent to both a and b makes a claw.
        const uint64_t* rv = g.row(v);
        const uint64_t* ra = g.row(a);
        const uint64_t* rb = g.row(b);
        for (int w = 0; w < words; ++w) {
          uint64_t cand = rv[w] & ~ra[w] & ~rb[w];
          if (w == (a >> 6)) cand &= ~(1ull << (a & 63));
          if (w == (b >> 6)) cand &= ~(1ull << (b & 63));
          if (cand) return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> cut_vertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> is_cut(n, 0);
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<std::pair<int, size_t>> stack = {{root, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < nbrs[v].size()) {
        int u = nbrs[v][idx++];
        if (disc[u] == -1) {
          parent[u] = v;
          if (v == root) ++root_children;
          disc[u] = low[u] = timer++;
          stack.emplace_back(u, 0);
        } else if (u != parent[v]) {
          low[v] = std::min(low[v], disc[u]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int par = stack.back().first;
          low[par] = std::min(low[par], low[v]);
          if (par != root && low[v] >= disc[par]) is_cut[par] = 1;
        }
      }
    }
    if (root_children >= 2) is_cut[root] = 1;
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

std::optional<InducedP3> find_induced_p3_min_cut(const Graph& g) {
  const int n = g.order();
  std::vector<char> cut(n, 0);
  for (int v : cut_vertices(g)) cut[v] = 1;
  std::optional<InducedP3> best;
  for (int b = 0; b < n; ++b) {
    std::vector<int> nbrs = g.neighbors(b);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      for (size_t j = i + 1; j < nbrs.size(); ++j) {
        int a = nbrs[i], c = nbrs[j];
        if (g.has_edge(a, c)) continue;
        InducedP3 cand{b, a, c, cut[a] + cut[b] + cut[c]};
        auto key = [](const InducedP3& p) {
          return std::make_tuple(p.cut_count, p.center, p.end1, p.end2);
        };
        if (!best || key(cand) < key(*best)) best = cand;
      }
    }
  }
  return best;
}

long long sum_deg_sq(const Graph& g) {
  long long total = 0;
  for (int v = 0; v < g.order(); ++v) {
    long long d = g.degree(v);
    total += d * d;
  }
  return total;
}

InvariantSet compute_invariants(const Graph& g) {
  InvariantSet inv;
  inv.n = g.order();
  inv.m = g.size();
  inv.components = count_components(g);
  inv.connected = inv.components == 1;
  inv.bipartite = is_bipartite(g);
  inv.tree = inv.connected && inv.m == inv.n - 1;
  inv.unicyclic = inv.connected && inv.m == inv.n;
  if (inv.n > 0) {
    inv.min_degree = std::numeric_limits<int>::max();
    for (int v = 0; v < inv.n; ++v) {
      int d = g.degree(v);
      inv.min_degree = std::min(inv.min_degree, d);
      inv.max_degree = std::max(inv.max_degree, d);
    }
  }
  if (inv.n <= kDiameterCap) inv.diameter = diameter(g);
  inv.girth = girth(g);
  inv.triangles = triangle_count(g);
  if (inv.n <= kInducedC4Cap) inv.induced_c4 = induced_c4_count(g);
  if (inv.n <= kCliqueCap) {
    inv.clique_number = clique_number(g);
    inv.independence_number = independence_number(g);
  }
  if (inv.n > 0 && inv.n <= kDominationCap) {
    inv.domination_number = domination_number(g);
  }
  if (inv.n <= kMatchingCap) inv.matching_number = matching_number(g);
  if (inv.n <= kClawFreeCap) inv.claw_free = is_claw_free(g);
  inv.cut_vertices = cut_vertices(g);
  return inv;
}

}  // namespace sqenergy
