#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "sqenergy/enumerate.hpp"
#include "sqenergy/family.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/spectral.hpp"

using namespace sqenergy;

namespace {

Graph random_graph(int n, std::mt19937& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("zero tolerance scaling and env override") {
  CHECK(zero_tolerance(0.5) == doctest::Approx(1e-9));
  CHECK(zero_tolerance(10.0) == doctest::Approx(1e-8));
  setenv("SQENERGY_EIG_TOL", "1e-6", 1);
  CHECK(zero_tol_scale() == doctest::Approx(1e-6));
  unsetenv("SQENERGY_EIG_TOL");
  CHECK(zero_tol_scale() == doctest::Approx(1e-9));
  setenv("SQENERGY_EIG_TOL", "not-a-number", 1);
  CHECK(zero_tol_scale() == doctest::Approx(1e-9));
  unsetenv("SQENERGY_EIG_TOL");
}

TEST_CASE("inertia of known spectra") {
  const Inertia star = inertia_of(spectrum(build(FamilySpec::star(5))));
  CHECK(star.positive == 1);
  CHECK(star.zero == 3);
  CHECK(star.negative == 1);

  const Inertia p4 = inertia_of(spectrum(build(FamilySpec::path(4))));
  CHECK(p4.positive == 2);
  CHECK(p4.zero == 0);
  CHECK(p4.negative == 2);

  const Inertia k5 = inertia_of(spectrum(build(FamilySpec::complete(5))));
  CHECK(k5.positive == 1);
  CHECK(k5.zero == 0);
  CHECK(k5.negative == 4);
}

TEST_CASE("spectral split reconstructs the matrix") {
  std::mt19937 rng(4242u);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 9), rng);
    const Eigen::MatrixXd a = g.adjacency_matrix();
    const SpectralSplit split = spectral_split(a);
    CHECK((split.positive_part - split.negative_part - a).norm() <= 1e-9);
    // Both parts positive semidefinite.
    CHECK(oracle::reference_eigenvalues(split.positive_part).minCoeff() >=
          -1e-9);
    CHECK(oracle::reference_eigenvalues(split.negative_part).minCoeff() >=
          -1e-9);
    // The two parts act on orthogonal eigenspaces.
    CHECK((split.positive_part * split.negative_part).norm() <= 1e-8);
  }
}

TEST_CASE("square energies on closed-form cases") {
  const SquareEnergies k4 = square_energies(build(FamilySpec::complete(4)));
  CHECK(k4.plus == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(k4.minus == doctest::Approx(3.0).epsilon(1e-12));

  // Bipartite graphs split 2m evenly.
  const SquareEnergies kb = square_energies(build(FamilySpec::complete_bipartite(2, 5)));
  CHECK(kb.plus == doctest::Approx(10.0).epsilon(1e-10));
  CHECK(kb.minus == doctest::Approx(10.0).epsilon(1e-10));
}

TEST_CASE("square energies sum to twice the edge count") {
  for (int n = 2; n <= 6; ++n) {
    enumerate_connected(n, [](const Graph& g) {
      const SquareEnergies e = square_energies(g);
      CHECK(e.plus + e.minus == doctest::Approx(2.0 * g.size()).epsilon(1e-9));
      const oracle::RefEnergies ref = oracle::reference_square_energies(g);
      CHECK(e.plus == doctest::Approx(ref.plus).epsilon(1e-9));
      CHECK(e.minus == doctest::Approx(ref.minus).epsilon(1e-9));
    });
  }
}

TEST_CASE("square_energies_of_values matches the matrix route") {
  std::mt19937 rng(5u);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 8), rng);
    const SquareEnergies a = square_energies(g);
    const SquareEnergies b = square_energies_of_values(spectrum(g));
    CHECK(a.plus == doctest::Approx(b.plus).epsilon(1e-12));
    CHECK(a.minus == doctest::Approx(b.minus).epsilon(1e-12));
  }
}

TEST_CASE("p energies generalize") {
  const Graph g = build(FamilySpec::cycle(5));
  const PEnergies p2 = p_energies(g.adjacency_matrix(), 2.0);
  const SquareEnergies sq = square_energies(g);
  CHECK(p2.plus == doctest::Approx(sq.plus).epsilon(1e-10));
  CHECK(p2.minus == doctest::Approx(sq.minus).epsilon(1e-10));

  // p = 1: both sides equal half the ordinary graph energy (trace is zero).
  std::mt19937 rng(6u);
  for (int trial = 0; trial < 8; ++trial) {
    const Graph h = random_graph(2 + static_cast<int>(rng() % 8), rng);
    const PEnergies p1 = p_energies(h.adjacency_matrix(), 1.0);
    CHECK(p1.plus == doctest::Approx(p1.minus).epsilon(1e-8));
  }
}

TEST_CASE("psd projection") {
  std::mt19937 rng(77u);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 7), rng);
    const Eigen::MatrixXd a = g.adjacency_matrix();
    const SpectralSplit split = spectral_split(a);
    // Projecting -A keeps exactly the negative part of A.
    CHECK((project_psd(-a) - split.negative_part).norm() <= 1e-9);
    // Projection fixes PSD matrices.
    CHECK((project_psd(split.positive_part) - split.positive_part).norm() <=
          1e-9);
  }
}

TEST_CASE("variational characterization of s_plus") {
  std::mt19937 rng(88u);
  for (int trial = 0; trial < 12; ++trial) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 8), rng);
    const Eigen::MatrixXd a = g.adjacency_matrix();
    const SquareEnergies e = square_energies(g);
    const SpectralSplit split = spectral_split(a);
    // Equality at M = negative part.
    CHECK(splus_objective(a, split.negative_part) ==
          doctest::Approx(e.plus).epsilon(1e-10));
    // Any other PSD point is no better.
    CHECK(splus_objective(a, Eigen::MatrixXd::Zero(g.order(), g.order())) >=
          e.plus - 1e-10);
    // Projected gradient descent reaches the minimum.
    const PgdResult pgd = variational_splus(a);
    CHECK(pgd.value == doctest::Approx(e.plus).epsilon(1e-7));
    CHECK(oracle::reference_eigenvalues(pgd.m).minCoeff() >= -1e-8);
    CHECK((pgd.m - split.negative_part).norm() <= 1e-5);
  }
}
