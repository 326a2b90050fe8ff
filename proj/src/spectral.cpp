#include "sqenergy/spectral.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sqenergy {

double zero_tol_scale() {
  if (const char* env = std::getenv("SQENERGY_EIG_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && v > 0.0 && std::isfinite(v)) return v;
  }
  return 1e-9;
}

double zero_tolerance(double lambda_max_abs) {
  return zero_tol_scale() * std::max(1.0, lambda_max_abs);
}

Inertia inertia_of(const Eigen::VectorXd& values) {
  Inertia out;
  const double radius =
      values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  const double tol = zero_tolerance(radius);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > tol) {
      ++out.positive;
    } else if (values[i] < -tol) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

SpectralSplit spectral_split(const Eigen::MatrixXd& a) {
  EigResult eig = eig_sym(a);
  SpectralSplit out;
  out.values = std::move(eig.values);
  out.vectors = std::move(eig.vectors);
  out.inertia = inertia_of(out.values);
  const Eigen::Index n = out.values.size();
  const double radius = n ? out.values.cwiseAbs().maxCoeff() : 0.0;
  const double tol = zero_tolerance(radius);
  Eigen::VectorXd pos = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd neg = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (out.values[i] > tol) {
      pos[i] = out.values[i];
    } else if (out.values[i] < -tol) {
      neg[i] = -out.values[i];
    }
  }
  out.positive_part =
      out.vectors * pos.asDiagonal() * out.vectors.transpose();
  out.negative_part =
      out.vectors * neg.asDiagonal() * out.vectors.transpose();
  return out;
}

SpectralSplit spectral_split(const Graph& g) {
  return spectral_split(g.adjacency_matrix());
}

SquareEnergies square_energies_of_values(const Eigen::VectorXd& values) {
  const double radius = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  const double tol = zero_tolerance(radius);
  SquareEnergies out;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > tol) {
      out.plus += values[i] * values[i];
    } else if (values[i] < -tol) {
      out.minus += values[i] * values[i];
    }
  }
  return out;
}

SquareEnergies square_energies(const Eigen::MatrixXd& a) {
  return square_energies_of_values(eig_sym_values(a));
}

SquareEnergies square_energies(const Graph& g) {
  return square_energies(g.adjacency_matrix());
}

PEnergies p_energies(const Eigen::MatrixXd& a, double p) {
  if (!(p > 0.0)) throw std::invalid_argument("p_energies: p must be > 0");
  const Eigen::VectorXd values = eig_sym_values(a);
  const double radius = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  const double tol = zero_tolerance(radius);
  PEnergies out;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] > tol) {
      out.plus += std::pow(values[i], p);
    } else if (values[i] < -tol) {
      out.minus += std::pow(-values[i], p);
    }
  }
  return out;
}

Eigen::VectorXd spectrum(const Graph& g) {
  return eig_sym_values(g.adjacency_matrix());
}

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& m) {
  EigResult eig = eig_sym(m);
  Eigen::VectorXd clamped = eig.values.cwiseMax(0.0);
  return eig.vectors * clamped.asDiagonal() * eig.vectors.transpose();
}

double splus_objective(const Eigen::MatrixXd& a, const Eigen::MatrixXd& m) {
  return (a + m).squaredNorm();
}

PgdResult variational_splus(const Eigen::MatrixXd& a, int max_iter,
                            double tol) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("variational_splus: matrix must be square");
  }
  PgdResult out;
  out.m = Eigen::MatrixXd::Zero(a.rows(), a.cols());
  out.value = splus_objective(a, out.m);
  for (int it = 1; it <= max_iter; ++it) {
    // Gradient of ||A + M||^2 is 2(A + M); step 1/4 then project.
    Eigen::MatrixXd next = project_psd(out.m - 0.5 * (a + out.m));
    const double value = splus_objective(a, next);
    out.m = std::move(next);
    out.iterations = it;
    const bool converged =
        std::abs(out.value - value) <= tol * std::max(1.0, std::abs(value));
    out.value = value;
    if (converged) break;
  }
  return out;
}

}  // namespace sqenergy
