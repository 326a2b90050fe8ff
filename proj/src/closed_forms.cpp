#include "sqenergy/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sqenergy {

namespace {

constexpr double kPi = std::numbers::pi;

double csc(double x) { return 1.0 / std::sin(x); }
double cot(double x) { return std::cos(x) / std::sin(x); }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Eigen::VectorXd path_eigenvalues(int l) {
  require(l >= 1, "path_eigenvalues: l >= 1");
  Eigen::VectorXd out(l);
  // 2 cos(pi i/(l+1)) decreases in i; reverse for ascending order.
  for (int i = 1; i <= l; ++i) {
    out[l - i] = 2.0 * std::cos(kPi * i / (l + 1));
  }
  return out;
}

Eigen::MatrixXd path_eigenvector_matrix(int l) {
  require(l >= 1, "path_eigenvector_matrix: l >= 1");
  Eigen::MatrixXd out(l, l);
  const double norm = std::sqrt(2.0 / (l + 1));
  for (int i = 1; i <= l; ++i) {    // eigenvalue index
    for (int a = 1; a <= l; ++a) {  // coordinate
      out(a - 1, l - i) = norm * std::sin(kPi * a * i / (l + 1));
    }
  }
  return out;
}

Eigen::VectorXd cycle_eigenvalues(int n) {
  require(n >= 3, "cycle_eigenvalues: n >= 3");
  Eigen::VectorXd out(n);
  for (int j = 0; j < n; ++j) out[j] = 2.0 * std::cos(2.0 * kPi * j / n);
  std::sort(out.data(), out.data() + n);
  return out;
}

double path_neg_endpoint(int l) {
  require(l >= 1, "path_neg_endpoint: l >= 1");
  const double x = kPi / (2.0 * (l + 1));
  const double scale = 1.0 / (2.0 * (l + 1));
  if (l % 2 == 1) return scale * (cot(x) + cot(3.0 * x));
  return scale * (csc(x) + csc(3.0 * x));
}

double path_neg_offdiag(int l, int j) {
  require(l >= 3, "path_neg_offdiag: l >= 3");
  require(j >= 1 && j <= l - 2, "path_neg_offdiag: need 1 <= j <= l-2");
  const double x = kPi / (2.0 * (l + 1));
  const double scale = 1.0 / (2.0 * (l + 1));
  const double sign = (j % 2 == 0) ? -1.0 : 1.0;  // -(-1)^j
  if (l % 2 == 0) {
    return scale * ((csc(x) - csc(3.0 * x)) +
                    sign * (csc((2 * j + 1) * x) - csc((2 * j + 3) * x)));
  }
  return scale * ((cot(x) - cot(3.0 * x)) +
                  sign * (cot((2 * j + 1) * x) - cot((2 * j + 3) * x)));
}

int path_endpoint_crossover(double threshold, int lo, int hi) {
  require(1 <= lo && lo <= hi, "path_endpoint_crossover: bad range");
  int first = -1;
  for (int l = hi; l >= lo; --l) {
    if (path_neg_endpoint(l) > threshold) break;
    first = l;
  }
  return first;
}

SquareEnergies cycle_square_energy(int n) {
  require(n >= 3, "cycle_square_energy: n >= 3");
  SquareEnergies out;
  if (n % 2 == 0) {
    out.plus = n;
    out.minus = n;
    return out;
  }
  const double sec = 1.0 / std::cos(kPi / n);
  if (n % 4 == 3) {
    out.plus = n - 1 + sec;
    out.minus = n + 1 - sec;
  } else {  // n = 1 (mod 4)
    out.plus = n + 1 - sec;
    out.minus = n - 1 + sec;
  }
  return out;
}

Eigen::VectorXd regular_join_spectrum(const Graph& a, const Graph& b) {
  auto regularity = [](const Graph& g) {
    require(g.order() >= 1, "regular_join_spectrum: empty side");
    int r = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
      if (g.degree(v) != r) {
        throw std::invalid_argument(
            "regular_join_spectrum: graph is not regular");
      }
    }
    return r;
  };
  const int r1 = regularity(a), r2 = regularity(b);
  const int n1 = a.order(), n2 = b.order();
  Eigen::VectorXd s1 = spectrum(a), s2 = spectrum(b);
  std::vector<double> out;
  out.reserve(n1 + n2);
  // Each side keeps its spectrum minus one copy of the regularity degree
  // (the all-ones eigenvector is replaced by the quotient pair).
  bool dropped = false;
  for (int i = n1 - 1; i >= 0; --i) {
    if (!dropped && std::abs(s1[i] - r1) < 1e-9) {
      dropped = true;
      continue;
    }
    out.push_back(s1[i]);
  }
  dropped = false;
  for (int i = n2 - 1; i >= 0; --i) {
    if (!dropped && std::abs(s2[i] - r2) < 1e-9) {
      dropped = true;
      continue;
    }
    out.push_back(s2[i]);
  }
  const double mean = 0.5 * (r1 + r2);
  const double disc =
      std::sqrt(0.25 * (r1 - r2) * (r1 - r2) +
                static_cast<double>(n1) * static_cast<double>(n2));
  out.push_back(mean + disc);
  out.push_back(mean - disc);
  std::sort(out.begin(), out.end());
  return Eigen::Map<Eigen::VectorXd>(out.data(),
                                     static_cast<Eigen::Index>(out.size()));
}

GridCheckResult check_sin_bounds(double step) {
  require(step > 0, "check_sin_bounds: step > 0");
  GridCheckResult res;
  res.ok = true;
  res.worst = std::numeric_limits<double>::infinity();
  for (double x = step; x <= 1.0 + 1e-15; x += step) {
    const double s = std::sin(x);
    const double lower = x - x * x * x / 6.0;
    const double margin = std::min(s - lower, x - s);
    if (margin < res.worst) {
      res.worst = margin;
      res.worst_at = x;
    }
  }
  res.ok = res.worst >= -1e-15;
  return res;
}

GridCheckResult check_sin_integer_distance(double step, double xmax) {
  require(step > 0 && xmax > 0, "check_sin_integer_distance: bad grid");
  GridCheckResult res;
  res.ok = true;
  res.worst = std::numeric_limits<double>::infinity();
  for (double x = 0.0; x <= xmax + 1e-15; x += step) {
    const double t = x / kPi;
    const double dist = std::abs(t - std::round(t));
    const double margin = std::abs(std::sin(x)) - 2.0 * dist;
    if (margin < res.worst) {
      res.worst = margin;
      res.worst_at = x;
    }
  }
  res.ok = res.worst >= -1e-12;
  return res;
}

GridCheckResult check_cos_bounds(double step, double xmax) {
  require(step > 0 && xmax > 0, "check_cos_bounds: bad grid");
  GridCheckResult res;
  res.ok = true;
  res.worst = std::numeric_limits<double>::infinity();
  for (double x = 0.0; x <= xmax + 1e-15; x += step) {
    const double c = std::cos(x);
    const double margin = std::min(c - (1.0 - x), 1.0 - c);
    if (margin < res.worst) {
      res.worst = margin;
      res.worst_at = x;
    }
  }
  res.ok = res.worst >= -1e-15;
  return res;
}

GridCheckResult check_cos_sum_identity(int k_max) {
  require(k_max >= 1, "check_cos_sum_identity: k_max >= 1");
  GridCheckResult res;
  res.ok = true;
  res.worst = 0.0;
  // x grid staying away from multiples of 2 pi where the closed form is
  // singular; the identity itself holds wherever sin(x/2) != 0.
  for (int k = 1; k <= k_max; ++k) {
    for (double x = 0.05; x < 6.2; x += 0.1) {
      double direct = 0.0;
      for (int i = 1; i <= k; ++i) direct += std::cos(i * x);
      const double closed =
          std::sin((2 * k + 1) * x / 2.0) / (2.0 * std::sin(x / 2.0)) - 0.5;
      const double err = std::abs(direct - closed);
      if (err > res.worst) {
        res.worst = err;
        res.worst_at = x;
      }
    }
  }
  res.ok = res.worst <= 1e-8 * std::max(1, k_max);
  return res;
}

}  // namespace sqenergy
