#include "sqenergy/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "sqenergy/enumerate.hpp"
#include "sqenergy/family.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/invariants.hpp"
#include "sqenergy/removal.hpp"
#include "sqenergy/spectral.hpp"

namespace sqenergy {

std::string Universe::description() const {
  if (!file.empty()) return "graph6 file " + file;
  return "connected graphs on 1.." + std::to_string(max_n) +
         " vertices, one per isomorphism class";
}

void for_each_universe_graph(const Universe& universe,
                             const std::function<void(const Graph&)>& visit) {
  if (!universe.file.empty()) {
    std::ifstream in(universe.file);
    if (!in) {
      throw std::runtime_error("cannot open graph6 file: " + universe.file);
    }
    while (std::optional<Graph> g = read_graph6_line(in)) visit(*g);
    return;
  }
  if (universe.max_n < 1 || universe.max_n > kEnumerateCap) {
    throw std::invalid_argument("universe max_n must lie in 1.." +
                                std::to_string(kEnumerateCap));
  }
  for (int n = 1; n <= universe.max_n; ++n) enumerate_connected(n, visit);
}

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();
constexpr int kNearMissKeep = 20;

// Everything a claim predicate may want about the current graph, computed
// once per graph.
struct GraphData {
  const Graph& g;
  std::string g6;
  int n = 0;
  int m = 0;
  bool connected = false;
  Eigen::VectorXd values;  // ascending adjacency spectrum
  Inertia inertia;
  double sp = 0.0;
  double sm = 0.0;
};

struct FindingOrder {
  bool operator()(const Finding& a, const Finding& b) const {
    return std::tie(a.margin, a.graph6, a.detail) <
           std::tie(b.margin, b.graph6, b.detail);
  }
};

class ReportBuilder {
 public:
  ReportBuilder(std::string id, const Universe& universe, double tolerance) {
    report_.id = std::move(id);
    report_.universe = universe.description();
    report_.tolerance = tolerance;
    report_.zero_tol = zero_tol_scale();
  }

  double tolerance() const { return report_.tolerance; }

  void count_graph() { ++report_.graphs_checked; }

  // Records one claim evaluation.  `margin` is the claim's slack (violations
  // have already folded in the tolerance); an infinite margin means the
  // claim cannot fail on this graph and is excluded from near-misses.
  void add(const GraphData& d, double margin, bool violated,
           const std::string& detail) {
    Finding f{d.g6, d.n, d.m, d.sp, d.sm, margin, detail};
    if (violated) {
      report_.violations.push_back(std::move(f));
    } else if (margin < kInfinity) {
      near_.insert(std::move(f));
      if (near_.size() > kNearMissKeep) near_.erase(std::prev(near_.end()));
    }
  }

  // Shorthand for a lower-bound claim value >= bound with the report's
  // asymmetric tolerance.
  void bound_claim(const GraphData& d, double value, double bound,
                   const std::string& detail) {
    const double margin = value - bound;
    add(d, margin, margin < -report_.tolerance, detail);
  }

  ConjectureReport finish(double wall_seconds) {
    report_.wall_seconds = wall_seconds;
    std::sort(report_.violations.begin(), report_.violations.end(),
              [](const Finding& a, const Finding& b) {
                return std::tie(a.graph6, a.detail) <
                       std::tie(b.graph6, b.detail);
              });
    report_.near_misses.assign(near_.begin(), near_.end());
    return std::move(report_);
  }

 private:
  ConjectureReport report_;
  std::set<Finding, FindingOrder> near_;
};

bool is_star_graph(const GraphData& d, int max_degree) {
  if (!d.connected) return false;
  if (d.n == 1) return true;  // the one-vertex degenerate star
  return d.m == d.n - 1 && max_degree == d.n - 1;
}

bool is_five_cycle(const GraphData& d) {
  if (!d.connected || d.n != 5 || d.m != 5) return false;
  for (int v = 0; v < 5; ++v) {
    if (d.g.degree(v) != 2) return false;
  }
  return true;
}

void check_c1_graph(const GraphData& d, ReportBuilder& b) {
  if (!d.connected) return;
  b.bound_claim(d, std::min(d.sp, d.sm), d.n - 1.0, "min-energy-vs-n-minus-1");
}

void check_c2_graph(const GraphData& d, ReportBuilder& b) {
  if (!d.connected || d.m < d.n + 1) return;
  b.bound_claim(d, d.sp, d.n, "splus-vs-n");
}

void check_unicyclic_graph(const GraphData& d, ReportBuilder& b) {
  if (!d.connected || d.m != d.n) return;  // connected unicyclic only
  const std::optional<int> k = girth(d.g);
  if (!k || *k % 2 == 0) return;
  if (*k % 4 == 3) {
    const double margin = std::min(d.sp - d.n, d.n - d.sm);
    b.add(d, margin, margin < -b.tolerance(), "odd-cycle-3mod4");
  } else {
    const double margin = std::min(d.n - d.sp, d.sm - d.n);
    b.add(d, margin, margin < -b.tolerance(), "odd-cycle-1mod4");
  }
}

// Equality claim: `holds` says whether this graph is supposed to satisfy the
// equality value = target.  Violated when the wrong side of the two-sided
// tolerance band shows up.
void equality_claim(const GraphData& d, ReportBuilder& b, double value,
                    double target, bool holds, const std::string& detail) {
  const double dist = std::abs(value - target);
  if (holds) {
    b.add(d, b.tolerance() - dist, dist > b.tolerance(), detail);
  } else {
    b.add(d, dist - b.tolerance(), dist <= b.tolerance(), detail);
  }
}

void check_omega3_graph(const GraphData& d, ReportBuilder& b) {
  if (!d.connected) return;
  if (clique_number(d.g) < 3) return;
  b.bound_claim(d, d.sp, d.n, "splus-omega3");
}

void check_tree_equality_graph(const GraphData& d, ReportBuilder& b) {
  if (!d.connected) return;
  const bool tree = d.m == d.n - 1;
  const bool complete = 2 * d.m == d.n * (d.n - 1);
  const bool bip_unicyclic = d.m == d.n && is_bipartite(d.g);
  equality_claim(d, b, d.sp, d.n - 1.0, tree, "splus-equality-tree");
  equality_claim(d, b, d.sm, d.n - 1.0, tree || complete,
                 "sminus-equality-tree-or-complete");
  equality_claim(d, b, d.sp, d.n, bip_unicyclic,
                 "splus-n-bipartite-unicyclic");
  check_omega3_graph(d, b);
}

// Induced-subgraph super-additivity for one two-part vertex partition.
void superadditivity_claim(const GraphData& d, ReportBuilder& b,
                           const std::vector<int>& part_a,
                           const std::vector<int>& part_b,
                           const std::string& tag) {
  const Graph ga = induced_subgraph(d.g, part_a);
  const Graph gb = induced_subgraph(d.g, part_b);
  const SquareEnergies ea = square_energies(ga);
  const SquareEnergies eb = square_energies(gb);
  const double slack_p = d.sp - (ea.plus + eb.plus);
  const double slack_m = d.sm - (ea.minus + eb.minus);
  b.bound_claim(d, d.sp, ea.plus + eb.plus, "superadditivity-splus-" + tag);
  b.bound_claim(d, d.sm, ea.minus + eb.minus, "superadditivity-sminus-" + tag);
  // slack_p + slack_m telescopes to exactly twice the crossing edges, which
  // also rules out simultaneous equality whenever the parts interact.
  const int cross = d.m - ga.size() - gb.size();
  const double dev = std::abs(slack_p + slack_m - 2.0 * cross);
  b.add(d, 1e-6 - dev, dev > 1e-6, "superadditivity-cross-identity-" + tag);
}

bool rows_equal(const Graph& g, int u, int v) {
  const uint64_t* ru = g.row(u);
  const uint64_t* rv = g.row(v);
  for (int w = 0; w < g.words_per_row(); ++w) {
    if (ru[w] != rv[w]) return false;
  }
  return true;
}

void twin_inertia_claim(const GraphData& d, ReportBuilder& b) {
  for (int u = 0; u < d.n; ++u) {
    for (int v = u + 1; v < d.n; ++v) {
      if (!rows_equal(d.g, u, v)) continue;
      const Inertia after = inertia_of(eig_sym_values(
          delete_vertices(d.g, {v}).adjacency_matrix()));
      const bool ok = after.positive == d.inertia.positive &&
                      after.negative == d.inertia.negative;
      b.add(d, ok ? kInfinity : -1.0, !ok, "twin-inertia");
    }
  }
}

void strip_claims(const GraphData& d, ReportBuilder& b) {
  for (EnergySign sign : {EnergySign::kPlus, EnergySign::kMinus}) {
    const bool plus = sign == EnergySign::kPlus;
    const RemovalTrace trace = p3_strip(d.g, sign);
    if (trace.k > 0) {
      const double margin = trace.min_drop - (1.0 + trace.epsilon);
      b.add(d, margin, !trace.all_steps_valid,
            plus ? "strip-step-gain-splus" : "strip-step-gain-sminus");
    }
    b.bound_claim(d, plus ? d.sp : d.sm, telescoped_bound(trace),
                  plus ? "strip-telescoped-splus" : "strip-telescoped-sminus");
  }
}

// All cliques of a claw-free graph, by subset scan over bit masks; removing
// a clique of order k must leave at most k + 1 components.
void clique_component_claim(const GraphData& d, ReportBuilder& b) {
  if (d.n > 16) return;  // subset scan kept to small orders
  std::vector<uint32_t> rows(static_cast<size_t>(d.n));
  for (int v = 0; v < d.n; ++v) rows[static_cast<size_t>(v)] = d.g.row_mask32(v);
  const uint32_t all = (1u << d.n) - 1u;

  int worst = 0;
  for (uint32_t s = 1; s <= all; ++s) {
    bool clique = true;
    for (uint32_t rest = s; rest && clique;) {
      const int v = __builtin_ctz(rest);
      rest &= rest - 1;
      clique = (rows[static_cast<size_t>(v)] & s) == (s & ~(1u << v));
    }
    if (!clique) continue;
    const int k = __builtin_popcount(s);

    uint32_t todo = all & ~s;
    int comps = 0;
    while (todo) {
      ++comps;
      uint32_t frontier = todo & (~todo + 1);  // lowest surviving vertex
      todo &= ~frontier;
      while (frontier) {
        const int v = __builtin_ctz(frontier);
        frontier &= frontier - 1;
        const uint32_t reach = rows[static_cast<size_t>(v)] & todo;
        frontier |= reach;
        todo &= ~reach;
      }
    }
    worst = std::max(worst, comps - (k + 1));
  }
  b.add(d, -static_cast<double>(worst), worst > 0, "clique-removal-components");
}

void check_theorems_graph(const GraphData& d, ReportBuilder& b) {
  // The n - gamma bounds hold for every graph, connected or not.
  const int gamma = domination_number(d.g);
  b.bound_claim(d, d.sp, d.n - static_cast<double>(gamma), "n-minus-gamma-splus");
  b.bound_claim(d, d.sm, d.n - static_cast<double>(gamma), "n-minus-gamma-sminus");
  if (!d.connected) return;

  int max_degree = 0;
  for (int v = 0; v < d.n; ++v) max_degree = std::max(max_degree, d.g.degree(v));
  const bool star = is_star_graph(d, max_degree);
  const bool claw_free = is_claw_free(d.g);

  if (claw_free && max_degree >= 3) {
    b.bound_claim(d, d.sp, d.n, "claw-free-splus");
  }
  const std::optional<int> diam = diameter(d.g);
  if (diam && *diam == 2 && !star && !is_five_cycle(d)) {
    b.bound_claim(d, d.sp, d.n, "diameter-two-splus");
  }
  if (max_degree == d.n - 1 && !star) {
    b.bound_claim(d, d.sp, d.n, "dominating-vertex-splus");
  }
  if (gamma <= 2) {
    b.bound_claim(d, d.sp, d.n - 1.0, "domination-two-splus");
  }
  if (d.inertia.positive == 2) {
    b.bound_claim(d, d.sp, d.m, "two-positive-eigenvalues-splus");
  }

  if (d.n >= 2) {
    std::vector<int> evens, odds, lo, hi;
    for (int v = 0; v < d.n; ++v) {
      (v % 2 == 0 ? evens : odds).push_back(v);
      (v < d.n / 2 ? lo : hi).push_back(v);
    }
    superadditivity_claim(d, b, evens, odds, "parity");
    superadditivity_claim(d, b, lo, hi, "halves");
  }

  twin_inertia_claim(d, b);
  strip_claims(d, b);
  if (claw_free) clique_component_claim(d, b);
}

using GraphCheck = void (*)(const GraphData&, ReportBuilder&);

GraphCheck checker_for(const std::string& id) {
  if (id == "c1") return &check_c1_graph;
  if (id == "c2") return &check_c2_graph;
  if (id == "unicyclic") return &check_unicyclic_graph;
  if (id == "tree-eq") return &check_tree_equality_graph;
  if (id == "omega3") return &check_omega3_graph;
  if (id == "theorems") return &check_theorems_graph;
  throw std::invalid_argument("unknown checker id: " + id);
}

}  // namespace

ConjectureReport check_conjecture(const std::string& id,
                                  const Universe& universe, double tolerance) {
  const GraphCheck check = checker_for(id);
  ReportBuilder builder(id, universe, tolerance);
  const auto start = std::chrono::steady_clock::now();
  for_each_universe_graph(universe, [&](const Graph& g) {
    builder.count_graph();
    GraphData d{g,
                to_graph6(g),
                g.order(),
                g.size(),
                is_connected(g),
                eig_sym_values(g.adjacency_matrix()),
                {},
                0.0,
                0.0};
    d.inertia = inertia_of(d.values);
    const SquareEnergies e = square_energies_of_values(d.values);
    d.sp = e.plus;
    d.sm = e.minus;
    check(d, builder);
  });
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return builder.finish(elapsed.count());
}

namespace {

SweepCell family_cell(const FamilySpec& spec, double bound) {
  SweepCell cell;
  cell.label = to_string(spec);
  cell.value = square_energies(build(spec)).plus;
  cell.bound = bound;
  cell.margin = cell.value - cell.bound;
  cell.holds = cell.margin >= -kCheckTolerance;
  return cell;
}

}  // namespace

std::vector<SweepCell> triangle_paths_grid(int limit) {
  if (limit < 0) throw std::invalid_argument("triangle_paths_grid: limit < 0");
  std::vector<SweepCell> cells;
  for (int j = 0; j <= limit; ++j) {
    for (int k = 0; k <= j; ++k) {
      for (int l = 0; l <= k; ++l) {
        cells.push_back(family_cell(FamilySpec::triangle_paths(j, k, l),
                                    3.0 + j + k + l));
      }
    }
  }
  return cells;
}

std::vector<SweepCell> pentagon_grid(int limit) {
  if (limit < 0) throw std::invalid_argument("pentagon_grid: limit < 0");
  std::vector<SweepCell> cells;
  for (int k = 0; k <= limit; ++k) {
    for (int l = 0; l <= k; ++l) {
      cells.push_back(family_cell(FamilySpec::pentagon(k, l), 4.0 + k + l));
    }
  }
  return cells;
}

std::vector<SweepCell> spot_checks() {
  std::vector<SweepCell> cells;
  cells.push_back(family_cell(FamilySpec::cycle_chord(4, 0), 6.5));
  cells.push_back(family_cell(FamilySpec::cycle_chord(5, 0), 6.63));
  cells.push_back(family_cell(FamilySpec::cycle_chord(6, 0), 7.6));

  auto eigen_cell = [](const FamilySpec& spec, const std::string& what,
                       double bound) {
    const Eigen::VectorXd values = spectrum(build(spec));
    SweepCell cell;
    cell.label = what + " of " + to_string(spec);
    if (what == "lambda1^2") {
      const double top = values[values.size() - 1];
      cell.value = top * top;
    } else {  // third-largest eigenvalue
      cell.value = values[values.size() - 3];
    }
    cell.bound = bound;
    cell.margin = cell.value - cell.bound;
    cell.holds = cell.margin >= -kCheckTolerance;
    return cell;
  };
  cells.push_back(eigen_cell(FamilySpec::triangle_paths(1, 2, 2), "lambda1^2", 6.0));
  cells.push_back(eigen_cell(FamilySpec::pentagon(1, 1), "lambda3", 0.71));
  cells.push_back(eigen_cell(FamilySpec::figure("fig4"), "lambda1^2", 7.2));
  return cells;
}

std::vector<TrendRow> join_trend(const std::string& which, int n_min, int n_max) {
  const bool star_path = which == "starjoinpath";
  if (!star_path && which != "cyclejoin2") {
    throw std::invalid_argument(
        "join_trend: which must be starjoinpath or cyclejoin2");
  }
  const int lo = star_path ? 2 : 5;
  if (n_min < lo || n_min > n_max) {
    throw std::invalid_argument("join_trend: need " + std::to_string(lo) +
                                " <= n_min <= n_max");
  }
  std::vector<TrendRow> rows;
  rows.reserve(static_cast<size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    const FamilySpec spec =
        star_path
            ? FamilySpec::join_of(FamilySpec::complete(1), FamilySpec::path(n - 1))
            : FamilySpec::join_of(FamilySpec::cycle(n - 2), FamilySpec::empty(2));
    const SquareEnergies e = square_energies(build(spec));
    TrendRow row;
    row.n = n;
    row.s_plus = e.plus;
    row.s_minus = e.minus;
    // The outerplanar family K_1 v P_{n-1} grows like 2n + O(sqrt n); the
    // planar family C_{n-2} v 2K_1 picks up an extra n from its join root
    // (1 + sqrt(2n-3))^2 and grows like 3n + O(sqrt n).
    row.baseline = (star_path ? 2.0 : 3.0) * n;
    row.excess = e.plus - row.baseline;
    row.scaled = row.excess / std::sqrt(static_cast<double>(n));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sqenergy
