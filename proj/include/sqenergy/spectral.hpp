#pragma once

// Spectral decomposition utilities built on eig_sym: eigenvalue
// classification with a relative zero tolerance, the positive/negative
// semidefinite split A = A_pos - A_neg, square energies and p-energies,
// and the projected-gradient form of the variational characterization
//   s_plus(A) = min { ||A + M||_F^2 : M PSD }.

#include <Eigen/Dense>

#include "sqenergy/eig.hpp"
#include "sqenergy/graph.hpp"

namespace sqenergy {

// Scale factor for the zero classification threshold.  Defaults to 1e-9 and
// can be overridden through the SQENERGY_EIG_TOL environment variable.
double zero_tol_scale();

// Threshold below which an eigenvalue counts as zero, relative to the
// spectral radius: zero_tol_scale() * max(1, lambda_max_abs).
double zero_tolerance(double lambda_max_abs);

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
};

// Classifies an ascending eigenvalue vector using zero_tolerance.
Inertia inertia_of(const Eigen::VectorXd& values);

struct SpectralSplit {
  Eigen::VectorXd values;        // ascending
  Eigen::MatrixXd vectors;       // orthonormal columns matching values
  Inertia inertia;
  Eigen::MatrixXd positive_part;  // PSD; eigenvalues <= tol zeroed
  Eigen::MatrixXd negative_part;  // PSD; A = positive_part - negative_part
};

SpectralSplit spectral_split(const Eigen::MatrixXd& a);
SpectralSplit spectral_split(const Graph& g);

struct SquareEnergies {
  double plus = 0.0;   // sum of squares of positive eigenvalues
  double minus = 0.0;  // sum of squares of negative eigenvalues
};

// Classification of an already-computed eigenvalue list, using the same
// relative zero tolerance as the matrix overloads.
SquareEnergies square_energies_of_values(const Eigen::VectorXd& values);

SquareEnergies square_energies(const Eigen::MatrixXd& a);
SquareEnergies square_energies(const Graph& g);

// Generalized energies: sum of lambda^p over positive eigenvalues and of
// |lambda|^p over negative ones (p > 0).
struct PEnergies {
  double plus = 0.0;
  double minus = 0.0;
};

PEnergies p_energies(const Eigen::MatrixXd& a, double p);

// Adjacency spectrum of a graph, ascending.
Eigen::VectorXd spectrum(const Graph& g);

// Euclidean projection onto the PSD cone (negative eigenvalues clamped).
Eigen::MatrixXd project_psd(const Eigen::MatrixXd& m);

// ||A + M||_F^2, the objective of the variational characterization.  For
// PSD M this is always >= s_plus(A), with equality at M = negative_part.
double splus_objective(const Eigen::MatrixXd& a, const Eigen::MatrixXd& m);

struct PgdResult {
  double value = 0.0;      // final objective value
  int iterations = 0;
  Eigen::MatrixXd m;       // final PSD iterate
};

// Projected gradient descent on splus_objective with step 1/4, started at
// M = 0.  The iteration contracts the distance to the minimizer by a factor
// of 1/2 per step, so ~60 iterations reach double precision.
PgdResult variational_splus(const Eigen::MatrixXd& a, int max_iter = 200,
                            double tol = 1e-13);

}  // namespace sqenergy
