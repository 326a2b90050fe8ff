#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sqenergy {

// Hard capacity for every constructor; beyond this the toolkit refuses to
// build rather than thrash.
inline constexpr int kMaxVertices = 10000;

// Simple undirected graph on vertices 0..n-1, loop-free, immutable after
// construction.  Adjacency is stored as packed bit rows so neighbourhood
// intersections stay cheap inside the exact-search invariants, and a dense
// matrix view is provided for the spectral side.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list.  Throws std::invalid_argument on out-of-range
  // endpoints or self-loops, std::length_error above kMaxVertices.
  // Duplicate edges are collapsed.
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int size() const { return m_; }  // edge count

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;

  // Raw bit row (words_per_row() little-endian 64-bit words).
  const uint64_t* row(int v) const {
    return bits_.data() + static_cast<size_t>(v) * words_;
  }
  int words_per_row() const { return words_; }

  // Fast path for n <= 32 (canonical labeling, enumeration).
  uint32_t row_mask32(int v) const {
    check_vertex(v);
    return static_cast<uint32_t>(bits_[static_cast<size_t>(v) * words_]);
  }

  Eigen::MatrixXd adjacency_matrix() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

// Induced subgraph on `keep` (order defines the new labels; entries must be
// distinct and in range).
Graph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Complement of induced_subgraph: drops the listed vertices, relabels the
// survivors in increasing original order.
Graph delete_vertices(const Graph& g, const std::vector<int>& drop);

Graph disjoint_union(const Graph& a, const Graph& b);

// Complement graph: same vertices, edges flipped (no loops).
Graph complement(const Graph& g);

// Join: disjoint union plus all edges between the two sides.
Graph join(const Graph& a, const Graph& b);

}  // namespace sqenergy
