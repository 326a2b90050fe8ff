#include "sqenergy/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sqenergy {

namespace {

// Householder reduction of the symmetric matrix stored in z to tridiagonal
// form.  On return d holds the diagonal and e the subdiagonal (e[0] = 0).
// With accumulate set, z additionally holds the orthogonal transform Q with
// A = Q T Q^T; otherwise z is scratch afterwards.
void tridiagonalize(Eigen::MatrixXd& z, Eigen::VectorXd& d, Eigen::VectorXd& e,
                    bool accumulate) {
  const int n = static_cast<int>(z.rows());
  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = z.row(i).head(i).cwiseAbs().sum();
      if (scale == 0.0) {
        e[i] = z(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          z(i, k) /= scale;
          h += z(i, k) * z(i, k);
        }
        double f = z(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        z(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (accumulate) z(j, i) = z(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += z(j, k) * z(i, k);
          for (int k = j + 1; k <= l; ++k) g += z(k, j) * z(i, k);
          e[j] = g / h;
          f += e[j] * z(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = z(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) z(j, k) -= f * e[k] + g * z(i, k);
        }
      }
    } else {
      e[i] = z(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  if (!accumulate) {
    // The reduced tridiagonal's diagonal sits on the (untransformed) main
    // diagonal of the worked-over lower triangle.
    for (int i = 0; i < n; ++i) d[i] = z(i, i);
    return;
  }
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += z(i, k) * z(k, j);
        for (int k = 0; k <= l; ++k) z(k, j) -= g * z(k, i);
      }
    }
    d[i] = z(i, i);
    z(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) z(j, i) = z(i, j) = 0.0;
  }
}

// Implicit-shift QL iteration on a tridiagonal matrix (d, e).  When z is
// given its columns are rotated along, so they end up as the eigenvectors
// of the original matrix.
void ql_implicit(Eigen::VectorXd& d, Eigen::VectorXd& e, Eigen::MatrixXd* z) {
  const int n = static_cast<int>(d.size());
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 50) {
          throw std::runtime_error(
              "symmetric QL iteration failed to converge");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            for (int k = 0; k < n; ++k) {
              f = (*z)(k, i + 1);
              (*z)(k, i + 1) = s * (*z)(k, i) + c * f;
              (*z)(k, i) = c * (*z)(k, i) - s * f;
            }
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

EigResult eig_sym(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("eig_sym: matrix must be square");
  }
  const int n = static_cast<int>(a.rows());
  EigResult out;
  if (n == 0) {
    out.values.resize(0);
    out.vectors.resize(0, 0);
    return out;
  }
  // Work on the symmetrized copy so tiny asymmetries from matrix assembly
  // cannot bias the reduction.
  Eigen::MatrixXd z = 0.5 * (a + a.transpose());
  Eigen::VectorXd d(n), e(n);
  if (n == 1) {
    out.values = z.diagonal();
    out.vectors = Eigen::MatrixXd::Identity(1, 1);
    return out;
  }
  tridiagonalize(z, d, e, true);
  ql_implicit(d, e, &z);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return d[i] < d[j]; });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = d[order[i]];
    out.vectors.col(i) = z.col(order[i]);
  }
  return out;
}

Eigen::VectorXd eig_sym_values(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("eig_sym: matrix must be square");
  }
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Eigen::VectorXd();
  Eigen::MatrixXd z = 0.5 * (a + a.transpose());
  if (n == 1) return z.diagonal();
  Eigen::VectorXd d(n), e(n);
  tridiagonalize(z, d, e, false);
  ql_implicit(d, e, nullptr);
  std::sort(d.data(), d.data() + n);
  return d;
}

}  // namespace sqenergy
