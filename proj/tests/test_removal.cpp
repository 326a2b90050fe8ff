#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sqenergy/family.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/removal.hpp"
#include "sqenergy/spectral.hpp"

using namespace sqenergy;

TEST_CASE("per-step margin expression") {
  // At x = 1, eps = 1/16: 16 - 6 (17/16)^2.
  const double eps = 1.0 / 16.0;
  CHECK(p3_margin(1.0, eps) ==
        doctest::Approx(16.0 - 6.0 * (17.0 / 16.0) * (17.0 / 16.0))
            .epsilon(1e-12));
  // Large eps kills the inequality near x = 1.
  CHECK(p3_margin(1.0, 0.9) < 0.0);
}

TEST_CASE("margin grid minimum") {
  double argmin = 0.0;
  const double min_margin = p3_min_margin(1.0 / 16.0, 1e-4, &argmin);
  CHECK(min_margin > 0.0);
  CHECK(argmin >= (1.0 - 1.0 / 16.0) / 2.0 - 1e-12);
  CHECK(argmin <= 1.0 + 1.0 / 16.0 + 1e-12);
  CHECK(p3_min_margin(0.9, 1e-3) < 0.0);
}

TEST_CASE("epsilon grid certificate") {
  const EpsilonReport report = epsilon_inequality_check(1.0 / 16.0, 1e-4);
  CHECK(report.holds);
  CHECK(report.min_margin > 0.0);
  CHECK(report.x_min == doctest::Approx((1.0 - 1.0 / 16.0) / 2.0));
  CHECK(report.x_max == doctest::Approx(1.0 + 1.0 / 16.0));
  CHECK(report.points >= 5000);
  CHECK(report.largest_passing_epsilon >= 1.0 / 16.0);
  CHECK(report.largest_passing_epsilon < 1.0);

  CHECK_THROWS_AS(epsilon_inequality_check(0.0, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_inequality_check(1.5, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_inequality_check(1.0 / 16.0, 1e-3),
                  std::invalid_argument);
}

TEST_CASE("stripping a path on three vertices") {
  const RemovalTrace trace = p3_strip(build(FamilySpec::path(3)), EnergySign::kPlus);
  CHECK(trace.k == 1);
  REQUIRE(trace.steps.size() == 1);
  // Removing the center (vertex 1) drops s_plus from 2 to 0; the endpoints
  // only drop it to 1, so the center wins.
  CHECK(trace.steps[0].vertex == 1);
  CHECK(trace.steps[0].drop == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(trace.steps[0].valid);
  CHECK(trace.residual_cliques == std::vector<int>{1, 1});
  CHECK(trace.all_steps_valid);
  CHECK(trace.min_drop == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("stripping stops on cluster graphs") {
  const Graph clusters = disjoint_union(build(FamilySpec::complete(4)),
                                        build(FamilySpec::complete(2)));
  const RemovalTrace trace = p3_strip(clusters, EnergySign::kMinus);
  CHECK(trace.k == 0);
  CHECK(trace.steps.empty());
  CHECK(trace.residual_cliques == std::vector<int>{2, 4});
  CHECK(trace.all_steps_valid);
  REQUIRE(trace.residual_clique_vertices.size() == 2);
  CHECK(trace.residual_clique_vertices[0] == std::vector<int>{4, 5});
  CHECK(trace.residual_clique_vertices[1] == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("residual labels refer to the input graph") {
  const RemovalTrace trace = p3_strip(build(FamilySpec::cycle(6)), EnergySign::kPlus);
  int residual_total = 0;
  for (int c : trace.residual_cliques) residual_total += c;
  CHECK(trace.k + residual_total == 6);
  // Residual components really are cliques of the input graph.
  const Graph g = build(FamilySpec::cycle(6));
  for (const auto& comp : trace.residual_clique_vertices) {
    for (size_t i = 0; i < comp.size(); ++i) {
      for (size_t j = i + 1; j < comp.size(); ++j) {
        CHECK(g.has_edge(comp[i], comp[j]));
      }
    }
  }
}

TEST_CASE("telescoped bounds undercut the true energies") {
  const Graph samples[] = {
      build(FamilySpec::cycle(7)),
      build(FamilySpec::cycle_power(11, 2)),
      build(FamilySpec::complete_bipartite(3, 4)),
      build(FamilySpec::pentagon(2, 1)),
      build(FamilySpec::triangle_paths(2, 2, 2)),
  };
  for (const Graph& g : samples) {
    for (EnergySign sign : {EnergySign::kPlus, EnergySign::kMinus}) {
      const RemovalTrace trace = p3_strip(g, sign);
      const double bound = telescoped_bound(trace);
      const SquareEnergies e = square_energies(g);
      const double actual = sign == EnergySign::kPlus ? e.plus : e.minus;
      if (trace.all_steps_valid) {
        CHECK(bound <= actual + 1e-7);
      }
      // Residual contribution alone: cliques give (C-1)^2 resp. C-1.
      double residual = 0.0;
      for (int c : trace.residual_cliques) {
        residual += sign == EnergySign::kPlus ? double(c - 1) * (c - 1)
                                              : double(c - 1);
      }
      CHECK(bound == doctest::Approx(residual +
                                     (1.0 + kRemovalEpsilon) * trace.k));
    }
  }
}

TEST_CASE("every step of stripping a cycle power is valid") {
  for (int n : {33, 40}) {
    const RemovalTrace minus = p3_strip(build(FamilySpec::cycle_power(n, 16)),
                                        EnergySign::kMinus);
    CHECK(minus.all_steps_valid);
    CHECK(minus.min_drop >= 1.0 + kRemovalEpsilon - kRemovalSlack);
  }
}

TEST_CASE("hamiltonian power energies") {
  const HamiltonianPowerReport r16 = hamiltonian_power_check(40, 16);
  CHECK(r16.n == 40);
  CHECK(r16.power == 16);
  CHECK(r16.minus_claim_applies);
  CHECK(r16.minus_holds);
  CHECK(r16.s_minus >= 39.0 - 1e-7);

  const HamiltonianPowerReport r2 = hamiltonian_power_check(40, 2);
  CHECK(r2.plus_claim_applies);
  CHECK(r2.plus_holds);
  CHECK(r2.s_plus >= 4.0 * 40 / 3.0 - 1e-7);

  CHECK_THROWS_AS(hamiltonian_power_check(32, 16), std::invalid_argument);
}

TEST_CASE("clique-independence criterion report") {
  const CliqueIndependenceReport k5 =
      clique_independence_check(build(FamilySpec::complete(5)));
  CHECK(k5.alpha == 1);
  CHECK(k5.omega == 5);
  CHECK(k5.c == doctest::Approx(1.0 / 17.0));
  CHECK(!k5.hypothesis_holds);  // 17 * 5 > 5
  CHECK(k5.respected);          // vacuously

  const CliqueIndependenceReport cp =
      clique_independence_check(build(FamilySpec::cycle_power(40, 16)));
  CHECK(cp.omega == 17);
  CHECK(cp.n == 40);
  CHECK(cp.respected);

  CHECK_THROWS_AS(clique_independence_check(
                      disjoint_union(build(FamilySpec::path(2)),
                                     build(FamilySpec::path(2)))),
                  std::invalid_argument);
}

TEST_CASE("gap structure of stripped cycle powers") {
  for (int n : {33, 40, 51}) {
    const GapCheckReport report = cycle_power_gap_check(n);
    CHECK(report.n == n);
    CHECK(report.power == 16);
    CHECK(report.ok);
    CHECK(report.bad_u == -1);
    CHECK(report.bad_v == -1);
    if (n == 33) {
      // C_33^16 is the complete graph K_33: every cyclic distance is at most
      // 16, so there is no induced P3 and nothing gets stripped.
      CHECK(report.removed == 0);
      CHECK(report.clique_count == 1);
    } else {
      CHECK(report.removed >= 1);
      CHECK(report.removed < n);
      CHECK(report.clique_count >= 1);
    }
  }
  CHECK_THROWS_AS(cycle_power_gap_check(32), std::invalid_argument);
}
