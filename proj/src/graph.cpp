#include "sqenergy/graph.hpp"

#include <bit>
#include <stdexcept>

namespace sqenergy {

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range for order " +
                                std::to_string(n_));
  }
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative graph order");
  if (n > kMaxVertices) {
    throw std::length_error("graph order " + std::to_string(n) +
                            " exceeds capacity " +
                            std::to_string(kMaxVertices));
  }
  n_ = n;
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<size_t>(n) * words_, 0);
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    bits_[static_cast<size_t>(u) * words_ + (v >> 6)] |= uint64_t{1}
                                                        << (v & 63);
    bits_[static_cast<size_t>(v) * words_ + (u >> 6)] |= uint64_t{1}
                                                        << (u & 63);
  }
  m_ = 0;
  for (int v = 0; v < n_; ++v) m_ += degree(v);
  m_ /= 2;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  const uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (int v = 0; v < n_; ++v) {
    for (int u : neighbors(v)) a(v, u) = 1.0;
  }
  return a;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> to_new(g.order(), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    int v = keep[i];
    if (v < 0 || v >= g.order()) {
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    }
    if (to_new[v] != -1) {
      throw std::invalid_argument("induced_subgraph: duplicate vertex");
    }
    to_new[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int v : keep) {
    for (int u : g.neighbors(v)) {
      if (to_new[u] != -1 && to_new[v] < to_new[u]) {
        edges.emplace_back(to_new[v], to_new[u]);
      }
    }
  }
  return Graph(static_cast<int>(keep.size()), edges);
}

Graph delete_vertices(const Graph& g, const std::vector<int>& drop) {
  std::vector<bool> gone(g.order(), false);
  for (int v : drop) {
    if (v < 0 || v >= g.order()) {
      throw std::invalid_argument("delete_vertices: vertex out of range");
    }
    gone[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxVertices) {
    throw std::length_error("disjoint_union: capacity exceeded");
  }
  std::vector<std::pair<int, int>> edges = a.edges();
  for (const auto& [u, v] : b.edges()) {
    edges.emplace_back(u + a.order(), v + a.order());
  }
  return Graph(a.order() + b.order(), edges);
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxVertices) {
    throw std::length_error("join: capacity exceeded");
  }
  std::vector<std::pair<int, int>> edges = a.edges();
  for (const auto& [u, v] : b.edges()) {
    edges.emplace_back(u + a.order(), v + a.order());
  }
  for (int u = 0; u < a.order(); ++u) {
    for (int v = 0; v < b.order(); ++v) {
      edges.emplace_back(u, a.order() + v);
    }
  }
  return Graph(a.order() + b.order(), edges);
}

}  // namespace sqenergy
