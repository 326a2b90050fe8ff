#pragma once

// Gluing construction and the associated lower bound on the positive square
// energy.  A composite graph G is formed from a base graph G0 by picking
// distinct glue points u_1, ..., u_k in G0 and identifying each u_i with a
// distinguished vertex v_i of a branch graph G_i.  Writing d_i for the
// (v_i, v_i) entry of the negative semidefinite part A_neg(G_i), and Gamma
// for the adjacency matrix of G0 with diagonal entry -d_i placed at u_i,
//
//   s_plus(G) >= sum_i s_plus(G_i) + s_plus(Gamma).
//
// Replacing d_i by any larger value keeps the bound valid (the diagonal of
// Gamma only moves further down, so s_plus(Gamma) only shrinks); glue()
// therefore accepts a user-supplied shift per attachment as long as it is at
// least the default d_i.
//
// The strengthened form tracked by strengthened_check adds two nonnegative
// residuals to the right-hand side: for every PSD matrix M indexed by V(G),
//
//   ||A(G) + M||_F^2 >= sum_i s_plus(G_i) + s_plus(Gamma) + R1(M) + R2(M)
//
// where R1 sums |A_neg(G_i)_{u,u'} - M_{u,u'}|^2 over all entry positions of
// each branch except the single (v_i, v_i) slot, and R2 sums 2 * M_{u,u'}^2
// over pairs of a non-distinguished branch vertex u and a base vertex
// u' != u_i.  Minimizing the left side over PSD M recovers s_plus(G).

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sqenergy/graph.hpp"

namespace sqenergy {

// One branch graph, glued onto the base at its distinguished vertex.
struct Attachment {
  Graph graph;
  int vertex = 0;  // distinguished vertex inside `graph`
  // Diagonal compensation used in Gamma.  Defaults to the (vertex, vertex)
  // entry of A_neg(graph); a supplied value must be >= that default.
  std::optional<double> shift;
};

struct GluingSpec {
  Graph base;
  std::vector<int> glue_points;  // distinct vertices of `base`, one per attachment
  std::vector<Attachment> attachments;
};

struct GluedResult {
  Graph glued;
  Eigen::MatrixXd gamma;        // base adjacency with -shift diagonal entries
  std::vector<double> shifts;   // resolved shift per attachment
  // attachment_vertex_map[i][v] is the glued-graph label of vertex v of
  // attachment i; the distinguished vertex maps to its glue point.  Base
  // vertices keep their labels (0..base.order()-1).
  std::vector<std::vector<int>> attachment_vertex_map;
};

// Builds the glued graph and Gamma.  Throws std::invalid_argument on
// mismatched spec sizes, repeated or out-of-range glue points, an invalid
// distinguished vertex, or a supplied shift below the default.
GluedResult glue(const GluingSpec& spec);

struct GluingBound {
  double attachment_sum = 0.0;  // sum_i s_plus(G_i)
  double gamma_splus = 0.0;     // s_plus(Gamma)
  double bound = 0.0;           // attachment_sum + gamma_splus
  double true_splus = 0.0;      // s_plus of the glued graph
  double margin = 0.0;          // true_splus - bound (>= 0 when the bound holds)
};

GluingBound gluing_lower_bound(const GluingSpec& spec);

struct StrengthenedResult {
  double lhs = 0.0;  // ||A(glued) + M||_F^2
  double r1 = 0.0;
  double r2 = 0.0;
  double rhs = 0.0;  // bound + r1 + r2
  double slack = 0.0;  // lhs - rhs
  bool holds = false;  // lhs >= rhs - tol
};

// Evaluates the strengthened inequality for a PSD matrix M indexed by the
// glued graph's vertices.  M is symmetrized before use.
StrengthenedResult strengthened_check(const GluingSpec& spec,
                                      const Eigen::MatrixXd& m,
                                      double tol = 1e-7);

// Named demonstration instances:
//   fig1  triangle plus pendant base, paths of order t and t+1 glued on,
//         shift 0.5 at both glue points (result: TrianglePaths(t, t, 0))
//   ga    9-vertex base, paths of order t-2 and t-1, shifts 0.5 (t >= 3;
//         result: TrianglePaths(t, t, 1))
//   gb    5-vertex base, one path of order t+1, shift 0.5 (result:
//         TrianglePaths(t, 1, 1))
//   gt2   TrianglePaths(t, t, t) base, paths of order t+1 on two arm tips,
//         shifts 0.5 (result: TrianglePaths(2t, 2t, t))
//   gt3   same base, paths of order t+1 on all three arm tips, shifts 0.44
//         (valid for t >= 9, where the path-end entry drops below 0.44;
//         result: TrianglePaths(2t, 2t, 2t))
// Throws std::invalid_argument for an unknown name or out-of-range t.
GluingSpec preset_spec(const std::string& name, int t);

// Adjacency matrix of TrianglePaths(t, t, t) with diagonal entry -0.5 at the
// two shifted arm tips (variant 2) or -0.44 at all three (variant 3).
Eigen::MatrixXd tri_base_gamma(int t, int variant);

struct GammaSweepRow {
  int t = 0;
  int order = 0;        // 3t + 3
  double s_plus = 0.0;  // s_plus of the shifted matrix
  double bound = 0.0;   // 3(t+1) for variant 2, 3(t+1) - 0.2 for variant 3
  double margin = 0.0;  // s_plus - bound
};

// Evaluates s_plus(tri_base_gamma(t, variant)) against the stated lower
// bound for each t in [t_min, t_max].
std::vector<GammaSweepRow> gamma_sweep(int variant, int t_min, int t_max);

}  // namespace sqenergy
