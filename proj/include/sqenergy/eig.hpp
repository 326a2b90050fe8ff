#pragma once

// Dense symmetric eigensolver: Householder reduction to tridiagonal form
// followed by the implicit-shift QL iteration, with eigenvector
// accumulation.  Deterministic, dependency-free, and accurate to a small
// multiple of machine epsilon times the matrix norm; unit tests compare it
// against an independent solver and against characteristic-polynomial roots
// for small orders.

#include <Eigen/Dense>

namespace sqenergy {

struct EigResult {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, vectors.col(i) <-> values[i]
};

// Full eigendecomposition of a symmetric matrix.  The input must be square
// and symmetric to within round-off (the lower triangle is trusted).
// Throws std::runtime_error if the QL iteration fails to converge.
EigResult eig_sym(const Eigen::MatrixXd& a);

// Eigenvalues only, ascending.
Eigen::VectorXd eig_sym_values(const Eigen::MatrixXd& a);

}  // namespace sqenergy
