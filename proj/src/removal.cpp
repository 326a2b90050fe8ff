#include "sqenergy/removal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sqenergy/family.hpp"
#include "sqenergy/invariants.hpp"
#include "sqenergy/spectral.hpp"

namespace sqenergy {

namespace {

double energy_of(const Graph& g, EnergySign sign) {
  SquareEnergies e = square_energies(g);
  return sign == EnergySign::kPlus ? e.plus : e.minus;
}

// First induced P3 in lexicographic (center, endpoint, endpoint) order, as
// {center, end1, end2}; empty when the graph is a disjoint union of cliques.
std::vector<int> first_induced_p3(const Graph& g) {
  const int n = g.order();
  for (int c = 0; c < n; ++c) {
    const std::vector<int> nb = g.neighbors(c);
    for (size_t a = 0; a < nb.size(); ++a) {
      for (size_t b = a + 1; b < nb.size(); ++b) {
        if (!g.has_edge(nb[a], nb[b])) return {c, nb[a], nb[b]};
      }
    }
  }
  return {};
}

}  // namespace

RemovalTrace p3_strip(const Graph& g, EnergySign sign) {
  RemovalTrace trace;
  trace.sign = sign;
  trace.min_drop = std::numeric_limits<double>::infinity();

  Graph cur = g;
  std::vector<int> labels(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) labels[static_cast<size_t>(v)] = v;

  double cur_energy = energy_of(cur, sign);
  while (true) {
    const std::vector<int> p3 = first_induced_p3(cur);
    if (p3.empty()) break;

    int best = -1;
    double best_drop = -std::numeric_limits<double>::infinity();
    Graph best_graph;
    double best_energy = 0.0;
    std::vector<int> cand = p3;
    std::sort(cand.begin(), cand.end());
    for (int u : cand) {
      Graph next = delete_vertices(cur, {u});
      const double next_energy = energy_of(next, sign);
      const double drop = cur_energy - next_energy;
      if (drop > best_drop) {
        best = u;
        best_drop = drop;
        best_graph = std::move(next);
        best_energy = next_energy;
      }
    }

    RemovalStep step;
    step.vertex = labels[static_cast<size_t>(best)];
    step.order_before = cur.order();
    step.order_after = cur.order() - 1;
    step.drop = best_drop;
    step.valid = best_drop >= 1.0 + trace.epsilon - kRemovalSlack;
    trace.steps.push_back(step);
    trace.min_drop = std::min(trace.min_drop, best_drop);
    trace.all_steps_valid = trace.all_steps_valid && step.valid;

    labels.erase(labels.begin() + best);
    cur = std::move(best_graph);
    cur_energy = best_energy;
  }

  trace.k = static_cast<int>(trace.steps.size());

  // The residual has no induced P3, so its components are cliques.
  std::vector<std::vector<int>> comps = components_of(cur);
  for (std::vector<int>& comp : comps) {
    for (int& v : comp) v = labels[static_cast<size_t>(v)];
  }
  std::sort(comps.begin(), comps.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (const std::vector<int>& comp : comps) {
    trace.residual_cliques.push_back(static_cast<int>(comp.size()));
  }
  trace.residual_clique_vertices = std::move(comps);
  return trace;
}

double telescoped_bound(const RemovalTrace& trace) {
  double residual = 0.0;
  for (int c : trace.residual_cliques) {
    const double cm1 = c - 1;
    residual += trace.sign == EnergySign::kPlus ? cm1 * cm1 : cm1;
  }
  return residual + (1.0 + trace.epsilon) * trace.k;
}

double p3_margin(double x, double epsilon) {
  const double om = 1.0 - x;
  const double lhs = 16.0 * x * x * x * x;
  const double rhs = 6.0 * (1.0 + epsilon - 4.0 * om * om) *
                     (1.0 + epsilon - 2.0 * om * om);
  return lhs - rhs;
}

namespace {

// Minimum margin over the closed grid; fills argmin/points when requested.
double grid_min_margin(double epsilon, double grid_step, double* argmin,
                       long* points) {
  const double x_min = (1.0 - epsilon) / 2.0;
  const double x_max = 1.0 + epsilon;
  double best = std::numeric_limits<double>::infinity();
  double best_x = x_min;
  long count = 0;
  for (double x = x_min;; x += grid_step) {
    if (x > x_max) x = x_max;
    const double m = p3_margin(x, epsilon);
    ++count;
    if (m < best) {
      best = m;
      best_x = x;
    }
    if (x >= x_max) break;
  }
  if (argmin) *argmin = best_x;
  if (points) *points = count;
  return best;
}

}  // namespace

double p3_min_margin(double epsilon, double grid_step, double* argmin_x) {
  if (!(epsilon > 0.0) || !(grid_step > 0.0)) {
    throw std::invalid_argument(
        "p3_min_margin: epsilon and grid_step must be positive");
  }
  return grid_min_margin(epsilon, grid_step, argmin_x, nullptr);
}

EpsilonReport epsilon_inequality_check(double epsilon, double grid_step) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument(
        "epsilon_inequality_check: epsilon must lie in (0, 1)");
  }
  if (!(grid_step > 0.0) || grid_step > 1e-4) {
    throw std::invalid_argument(
        "epsilon_inequality_check: grid_step must lie in (0, 1e-4]");
  }

  EpsilonReport report;
  report.epsilon = epsilon;
  report.grid_step = grid_step;
  report.x_min = (1.0 - epsilon) / 2.0;
  report.x_max = 1.0 + epsilon;
  report.min_margin =
      grid_min_margin(epsilon, grid_step, &report.argmin_x, &report.points);
  report.holds = report.min_margin > 0.0;

  // Bisect for the largest passing epsilon, anchored at the known-good 1/16.
  double lo = 1.0 / 16.0;
  double hi = 1.0;
  if (grid_min_margin(lo, grid_step, nullptr, nullptr) <= 0.0) {
    report.largest_passing_epsilon = 0.0;
    return report;
  }
  if (grid_min_margin(hi, grid_step, nullptr, nullptr) > 0.0) {
    report.largest_passing_epsilon = hi;
    return report;
  }
  while (hi - lo > 1e-4) {
    const double mid = 0.5 * (lo + hi);
    if (grid_min_margin(mid, grid_step, nullptr, nullptr) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  report.largest_passing_epsilon = lo;
  return report;
}

HamiltonianPowerReport hamiltonian_power_check(int n, int k) {
  if (n < 2 * k + 1) {
    throw std::invalid_argument("hamiltonian_power_check: need n >= 2k + 1");
  }
  HamiltonianPowerReport report;
  report.n = n;
  report.power = k;
  const SquareEnergies e = square_energies(build(FamilySpec::cycle_power(n, k)));
  report.s_plus = e.plus;
  report.s_minus = e.minus;
  report.minus_claim_applies = (k == 16);
  report.minus_holds = e.minus >= n - 1.0 - kRemovalSlack;
  report.plus_claim_applies = (k >= 2);
  report.plus_holds = e.plus >= 4.0 * n / 3.0 - kRemovalSlack;
  return report;
}

CliqueIndependenceReport clique_independence_check(const Graph& g) {
  if (!is_connected(g)) {
    throw std::invalid_argument(
        "clique_independence_check: graph must be connected");
  }
  CliqueIndependenceReport report;
  report.n = g.order();
  report.alpha = independence_number(g);
  report.omega = clique_number(g);
  report.c = kRemovalEpsilon / (1.0 + kRemovalEpsilon);
  report.hypothesis_holds = 17 * report.alpha * report.omega <= report.n;
  const SquareEnergies e = square_energies(g);
  report.s_plus = e.plus;
  report.s_minus = e.minus;
  report.conclusion_holds =
      std::min(e.plus, e.minus) >= report.n - kRemovalSlack;
  report.respected = !report.hypothesis_holds || report.conclusion_holds;
  return report;
}

GapCheckReport cycle_power_gap_check(int n, EnergySign sign) {
  constexpr int kPower = 16;
  if (n < 2 * kPower + 1) {
    throw std::invalid_argument("cycle_power_gap_check: need n >= 33");
  }
  GapCheckReport report;
  report.n = n;
  report.power = kPower;

  const RemovalTrace trace =
      p3_strip(build(FamilySpec::cycle_power(n, kPower)), sign);
  report.removed = trace.k;
  report.clique_count = static_cast<int>(trace.residual_cliques.size());
  report.ok = true;

  // Clique id per surviving vertex, then walk survivors in cycle order.
  std::vector<int> clique_of(static_cast<size_t>(n), -1);
  for (size_t c = 0; c < trace.residual_clique_vertices.size(); ++c) {
    for (int v : trace.residual_clique_vertices[c]) {
      clique_of[static_cast<size_t>(v)] = static_cast<int>(c);
    }
  }
  std::vector<int> survivors;
  for (int v = 0; v < n; ++v) {
    if (clique_of[static_cast<size_t>(v)] >= 0) survivors.push_back(v);
  }
  const size_t s = survivors.size();
  if (s < 2) return report;
  for (size_t i = 0; i < s; ++i) {
    const int u = survivors[i];
    const int v = survivors[(i + 1) % s];
    if (clique_of[static_cast<size_t>(u)] == clique_of[static_cast<size_t>(v)]) {
      continue;
    }
    const int dist = ((v - u) % n + n) % n;
    if (dist - 1 < kPower) {
      report.ok = false;
      report.bad_u = u;
      report.bad_v = v;
      break;
    }
  }
  return report;
}

}  // namespace sqenergy
