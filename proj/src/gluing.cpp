#include "sqenergy/gluing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sqenergy/family.hpp"
#include "sqenergy/spectral.hpp"

namespace sqenergy {

namespace {

// Slack allowed when comparing a supplied shift against the default; shifts
// equal to the default up to roundoff must pass.
constexpr double kShiftTol = 1e-9;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("glue: " + what);
}

}  // namespace

GluedResult glue(const GluingSpec& spec) {
  const int n0 = spec.base.order();
  const size_t k = spec.attachments.size();
  if (k == 0) fail("at least one attachment is required");
  if (spec.glue_points.size() != k) {
    fail("glue_points and attachments must have the same length");
  }
  std::vector<char> used(static_cast<size_t>(n0), 0);
  for (int u : spec.glue_points) {
    if (u < 0 || u >= n0) fail("glue point out of range");
    if (used[static_cast<size_t>(u)]) fail("glue points must be distinct");
    used[static_cast<size_t>(u)] = 1;
  }

  GluedResult out;
  out.gamma = spec.base.adjacency_matrix();
  out.shifts.resize(k);
  out.attachment_vertex_map.resize(k);

  std::vector<std::pair<int, int>> edges = spec.base.edges();
  int next = n0;
  for (size_t i = 0; i < k; ++i) {
    const Attachment& att = spec.attachments[i];
    const Graph& gi = att.graph;
    if (gi.order() == 0) fail("attachment graph must be nonempty");
    if (att.vertex < 0 || att.vertex >= gi.order()) {
      fail("distinguished vertex out of range");
    }

    // Default shift: the (v_i, v_i) entry of the negative semidefinite part.
    double def = 0.0;
    if (gi.order() > 1) {
      def = spectral_split(gi).negative_part(att.vertex, att.vertex);
    }
    double shift = def;
    if (att.shift) {
      if (*att.shift < def - kShiftTol) {
        fail("supplied shift " + std::to_string(*att.shift) +
             " is below the default " + std::to_string(def) +
             " for attachment " + std::to_string(i));
      }
      shift = *att.shift;
    }
    out.shifts[i] = shift;
    out.gamma(spec.glue_points[i], spec.glue_points[i]) = -shift;

    // Map attachment vertices into the glued graph: the distinguished vertex
    // lands on its glue point, every other vertex gets a fresh label.
    std::vector<int>& map = out.attachment_vertex_map[i];
    map.resize(static_cast<size_t>(gi.order()));
    for (int v = 0; v < gi.order(); ++v) {
      map[static_cast<size_t>(v)] = (v == att.vertex) ? spec.glue_points[i] : next++;
    }
    for (auto [u, v] : gi.edges()) {
      edges.emplace_back(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
    }
  }

  out.glued = Graph(next, edges);
  return out;
}

GluingBound gluing_lower_bound(const GluingSpec& spec) {
  GluedResult res = glue(spec);
  GluingBound out;
  for (const Attachment& att : spec.attachments) {
    out.attachment_sum += square_energies(att.graph).plus;
  }
  out.gamma_splus = square_energies(res.gamma).plus;
  out.bound = out.attachment_sum + out.gamma_splus;
  out.true_splus = square_energies(res.glued).plus;
  out.margin = out.true_splus - out.bound;
  return out;
}

StrengthenedResult strengthened_check(const GluingSpec& spec,
                                      const Eigen::MatrixXd& m, double tol) {
  GluedResult res = glue(spec);
  const int n = res.glued.order();
  if (m.rows() != n || m.cols() != n) {
    fail("M must be indexed by the glued graph's vertices");
  }
  const Eigen::MatrixXd msym = 0.5 * (m + m.transpose());
  const Eigen::MatrixXd a = res.glued.adjacency_matrix();

  StrengthenedResult out;
  out.lhs = (a + msym).squaredNorm();

  double base_bound = square_energies(res.gamma).plus;
  const int n0 = spec.base.order();
  for (size_t i = 0; i < spec.attachments.size(); ++i) {
    const Attachment& att = spec.attachments[i];
    const Graph& gi = att.graph;
    base_bound += square_energies(gi).plus;

    Eigen::MatrixXd neg = Eigen::MatrixXd::Zero(gi.order(), gi.order());
    if (gi.order() > 1) neg = spectral_split(gi).negative_part;
    const std::vector<int>& map = res.attachment_vertex_map[i];

    // R1: every entry position of the branch except the distinguished
    // diagonal slot, compared against the matching block of M.
    for (int u = 0; u < gi.order(); ++u) {
      for (int v = 0; v < gi.order(); ++v) {
        if (u == att.vertex && v == att.vertex) continue;
        const double diff = neg(u, v) - msym(map[static_cast<size_t>(u)],
                                             map[static_cast<size_t>(v)]);
        out.r1 += diff * diff;
      }
    }

    // R2: twice the squared M entries pairing a non-distinguished branch
    // vertex with a base vertex other than this attachment's glue point.
    for (int u = 0; u < gi.order(); ++u) {
      if (u == att.vertex) continue;
      const int gu = map[static_cast<size_t>(u)];
      for (int w = 0; w < n0; ++w) {
        if (w == spec.glue_points[i]) continue;
        const double entry = msym(gu, w);
        out.r2 += 2.0 * entry * entry;
      }
    }
  }

  out.rhs = base_bound + out.r1 + out.r2;
  out.slack = out.lhs - out.rhs;
  out.holds = out.slack >= -tol;
  return out;
}

namespace {

Attachment path_attachment(int order, double shift) {
  Attachment att;
  att.graph = build(FamilySpec::path(order));
  att.vertex = 0;  // path endpoint
  att.shift = shift;
  return att;
}

}  // namespace

GluingSpec preset_spec(const std::string& name, int t) {
  GluingSpec spec;
  if (name == "fig1") {
    if (t < 1) fail("preset fig1 requires t >= 1");
    spec.base = build(FamilySpec::figure("fig1"));
    spec.glue_points = {3, 1};
    spec.attachments = {path_attachment(t, 0.5), path_attachment(t + 1, 0.5)};
  } else if (name == "ga") {
    if (t < 3) fail("preset ga requires t >= 3");
    spec.base = build(FamilySpec::figure("fig3a"));
    spec.glue_points = {8, 7};
    spec.attachments = {path_attachment(t - 2, 0.5), path_attachment(t - 1, 0.5)};
  } else if (name == "gb") {
    if (t < 1) fail("preset gb requires t >= 1");
    spec.base = build(FamilySpec::figure("fig3b"));
    spec.glue_points = {2};
    spec.attachments = {path_attachment(t + 1, 0.5)};
  } else if (name == "gt2" || name == "gt3") {
    const int variant = (name == "gt3") ? 3 : 2;
    if (variant == 2 && t < 1) fail("preset gt2 requires t >= 1");
    if (variant == 3 && t < 9) {
      fail("preset gt3 requires t >= 9 (shift 0.44 needs branch order >= 10)");
    }
    spec.base = build(FamilySpec::tri_base(t, variant));
    const double shift = (variant == 2) ? 0.5 : 0.44;
    for (int tip : tri_base_shift_vertices(t, variant)) {
      spec.glue_points.push_back(tip);
      spec.attachments.push_back(path_attachment(t + 1, shift));
    }
  } else {
    fail("unknown preset '" + name + "'");
  }
  return spec;
}

Eigen::MatrixXd tri_base_gamma(int t, int variant) {
  Graph base = build(FamilySpec::tri_base(t, variant));
  Eigen::MatrixXd gamma = base.adjacency_matrix();
  const double shift = (variant == 2) ? 0.5 : 0.44;
  for (int tip : tri_base_shift_vertices(t, variant)) {
    gamma(tip, tip) = -shift;
  }
  return gamma;
}

std::vector<GammaSweepRow> gamma_sweep(int variant, int t_min, int t_max) {
  if (variant != 2 && variant != 3) {
    throw std::invalid_argument("gamma_sweep: variant must be 2 or 3");
  }
  if (t_min < 1 || t_min > t_max) {
    throw std::invalid_argument("gamma_sweep: need 1 <= t_min <= t_max");
  }
  std::vector<GammaSweepRow> rows;
  rows.reserve(static_cast<size_t>(t_max - t_min + 1));
  for (int t = t_min; t <= t_max; ++t) {
    GammaSweepRow row;
    row.t = t;
    row.order = 3 * t + 3;
    row.s_plus = square_energies(tri_base_gamma(t, variant)).plus;
    row.bound = 3.0 * (t + 1) - (variant == 3 ? 0.2 : 0.0);
    row.margin = row.s_plus - row.bound;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sqenergy
