#pragma once

// Exact spectral data for paths and cycles, the trigonometric closed forms
// for entries of the negative part of a path's adjacency matrix, the cycle
// square-energy formula by residue of n mod 4, the join-spectrum formula
// for regular graphs, and grid checks of the elementary trigonometric
// estimates those derivations rest on.

#include <Eigen/Dense>

#include "sqenergy/graph.hpp"
#include "sqenergy/spectral.hpp"

namespace sqenergy {

// Path P_l: eigenvalues 2 cos(pi i/(l+1)), i = 1..l; returned ascending.
Eigen::VectorXd path_eigenvalues(int l);

// Orthonormal eigenvectors of P_l as columns, matching path_eigenvalues:
// entry (a, i) = sqrt(2/(l+1)) sin(pi (a+1) k_i/(l+1)).
Eigen::MatrixXd path_eigenvector_matrix(int l);

// Cycle C_n: eigenvalues 2 cos(2 pi j/n), j = 0..n-1; returned ascending.
Eigen::VectorXd cycle_eigenvalues(int n);

// Entry (1,1) (1-indexed) of the negative part of A(P_l):
//   (cot x + cot 3x)/(2l+2)  for odd l,
//   (csc x + csc 3x)/(2l+2)  for even l,  with x = pi/(2l+2).
double path_neg_endpoint(int l);

// Entry (j, j+2) (1-indexed, 1 <= j <= l-2) of the negative part of
// A(P_l): with x = pi/(2l+2), the csc form for even l and the cot form for
// odd l, each with oscillating term signed by -(-1)^j.
double path_neg_offdiag(int l, int j);

// Smallest L in [lo, hi] with path_neg_endpoint(l) <= threshold for every
// l in [L, hi]; -1 if the property fails even at hi.
int path_endpoint_crossover(double threshold, int lo, int hi);

// Square energies of C_n in closed form:
//   n even:        (n, n)
//   n = 3 (mod 4): (n - 1 + sec(pi/n), n + 1 - sec(pi/n))
//   n = 1 (mod 4): (n + 1 - sec(pi/n), n - 1 + sec(pi/n))
SquareEnergies cycle_square_energy(int n);

// Spectrum of the join of two regular graphs: both spectra each lose one
// copy of the regularity degree, replaced by the two roots of
//   z^2 - (r1 + r2) z + (r1 r2 - n1 n2) = 0.
// Throws std::invalid_argument if either graph is not regular.
Eigen::VectorXd regular_join_spectrum(const Graph& a, const Graph& b);

// Grid checks for the trig estimates.  `worst` is the smallest inequality
// margin (lhs - rhs >= 0 when ok) or, for the identity check, the largest
// absolute deviation; `worst_at` reports where it occurred.
struct GridCheckResult {
  bool ok = false;
  double worst = 0.0;
  double worst_at = 0.0;
};

// x - x^3/6 <= sin x <= x on (0, 1], sampled at multiples of step.
GridCheckResult check_sin_bounds(double step);

// |sin x| >= 2 * dist(x/pi, Z) on [0, xmax].
GridCheckResult check_sin_integer_distance(double step, double xmax);

// 1 - x <= cos x <= 1 on [0, xmax].
GridCheckResult check_cos_bounds(double step, double xmax);

// sum_{i=1..k} cos(i x) = sin((2k+1)x/2)/(2 sin(x/2)) - 1/2, compared with
// direct summation for k = 1..k_max over an x grid; `worst` is the largest
// absolute difference.
GridCheckResult check_cos_sum_identity(int k_max);

}  // namespace sqenergy
