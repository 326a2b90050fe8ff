#pragma once

// Induced-P3 stripping and its telescoped energy bounds.  Removing a
// well-chosen vertex of an induced path on three vertices costs at least
// 1 + epsilon of either square energy (epsilon = 1/16), so repeatedly
// stripping until the graph is a disjoint union of cliques telescopes into
//   s(G) >= s(residual) + (1 + epsilon) * k
// where k is the number of removals.  The per-step guarantee reduces to the
// strict positivity of a quartic expression on a closed interval, which is
// verified here on a dense grid; powers of Hamiltonian cycles and the
// alpha*omega < n/17 criterion are the two downstream applications.

#include <string>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqenergy {

enum class EnergySign { kPlus, kMinus };

// Per-step energy gain guaranteed by the removal lemma.
inline constexpr double kRemovalEpsilon = 1.0 / 16.0;

// Slack used when checking guaranteed inequalities numerically.
inline constexpr double kRemovalSlack = 1e-7;

struct RemovalStep {
  int vertex = 0;        // label in the input graph
  int order_before = 0;
  int order_after = 0;
  double drop = 0.0;     // energy decrease achieved by this removal
  bool valid = false;    // drop >= 1 + epsilon - slack
};

struct RemovalTrace {
  EnergySign sign = EnergySign::kPlus;
  double epsilon = kRemovalEpsilon;
  int k = 0;                          // number of removals; k + sum(C_i) = n
  std::vector<RemovalStep> steps;
  std::vector<int> residual_cliques;  // component sizes C_1 <= ... <= C_l
  // Residual components in input-graph labels, parallel to residual_cliques.
  std::vector<std::vector<int>> residual_clique_vertices;
  double min_drop = 0.0;              // +infinity when no step was taken
  bool all_steps_valid = true;
};

// Strips induced P3s until none remain.  Each round locates the first
// induced P3 in lexicographic (center, endpoint, endpoint) order, evaluates
// the actual energy drop for each of its three vertices, and removes the
// vertex with the largest drop (smallest label on ties).  The residual is a
// disjoint union of cliques, recorded as its components.
RemovalTrace p3_strip(const Graph& g, EnergySign sign);

// s(residual) + (1 + epsilon) * k for the trace's sign, where a clique of
// order C contributes C - 1 to the negative square energy and (C - 1)^2 to
// the positive one.  A lower bound on the corresponding energy of the
// original graph whenever every step is valid.
double telescoped_bound(const RemovalTrace& trace);

// Margin of the per-step inequality at x: 16 x^4 minus
// 6 (1 + eps - 4(1-x)^2) (1 + eps - 2(1-x)^2).  The removal lemma needs this
// strictly positive for every x in [(1-eps)/2, 1+eps].
double p3_margin(double x, double epsilon);

// Minimum of p3_margin over the closed grid on [(1-eps)/2, 1+eps]; the
// minimizing x is stored through argmin_x when given.
double p3_min_margin(double epsilon, double grid_step,
                     double* argmin_x = nullptr);

struct EpsilonReport {
  double epsilon = 0.0;
  double grid_step = 0.0;
  double x_min = 0.0;  // (1 - epsilon) / 2
  double x_max = 0.0;  // 1 + epsilon
  long points = 0;
  double min_margin = 0.0;
  double argmin_x = 0.0;
  bool holds = false;  // min_margin > 0 strictly
  // Largest epsilon (to 1e-4, same grid) for which the check passes.
  double largest_passing_epsilon = 0.0;
};

// Grid verification of the margin over the closed interval.  Requires
// epsilon in (0, 1) and 0 < grid_step <= 1e-4.
EpsilonReport epsilon_inequality_check(double epsilon, double grid_step);

struct HamiltonianPowerReport {
  int n = 0;
  int power = 0;
  double s_plus = 0.0;
  double s_minus = 0.0;
  bool minus_claim_applies = false;  // power == 16: s_minus >= n - 1
  bool minus_holds = false;
  bool plus_claim_applies = false;   // power >= 2: s_plus >= 4n/3
  bool plus_holds = false;
};

// Energies of the k-th power of the cycle C_n (n >= 2k + 1), with the two
// guaranteed lower bounds evaluated at slack kRemovalSlack.
HamiltonianPowerReport hamiltonian_power_check(int n, int k);

struct CliqueIndependenceReport {
  int n = 0;
  int alpha = 0;
  int omega = 0;
  double c = 0.0;                 // epsilon / (1 + epsilon) = 1/17
  bool hypothesis_holds = false;  // alpha * omega <= c * n (exact: 17*a*w <= n)
  double s_plus = 0.0;
  double s_minus = 0.0;
  bool conclusion_holds = false;  // min(s_plus, s_minus) >= n - slack
  bool respected = false;         // hypothesis -> conclusion
};

// Evaluates the alpha*omega criterion on a connected graph.  Throws
// std::invalid_argument when g is disconnected; exact alpha/omega searches
// are subject to their own order caps.
CliqueIndependenceReport clique_independence_check(const Graph& g);

struct GapCheckReport {
  int n = 0;
  int power = 0;
  int removed = 0;       // strip length k
  int clique_count = 0;
  bool ok = false;       // every inter-clique cyclic gap >= power removals
  int bad_u = -1;        // witness pair of consecutive survivors on failure
  int bad_v = -1;
};

// Structural check on CyclePower(n, 16): strip the graph, then walk the
// surviving vertices in cycle order.  Consecutive survivors lying in
// different residual cliques are non-adjacent, hence more than 16 apart on
// the cycle, so at least 16 removed vertices separate them.
GapCheckReport cycle_power_gap_check(int n, EnergySign sign = EnergySign::kMinus);

}  // namespace sqenergy
