#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "sqenergy/canonical.hpp"
#include "sqenergy/family.hpp"
#include "sqenergy/gluing.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/spectral.hpp"

using namespace sqenergy;

namespace {

GluingSpec tiny_spec() {
  GluingSpec spec;
  spec.base = build(FamilySpec::path(2));
  spec.glue_points = {1};
  Attachment att;
  att.graph = build(FamilySpec::path(2));
  att.vertex = 0;
  spec.attachments.push_back(att);
  return spec;
}

}  // namespace

TEST_CASE("gluing a path edge onto a path end yields a longer path") {
  const GluedResult r = glue(tiny_spec());
  CHECK(r.glued.order() == 3);
  CHECK(r.glued.size() == 2);
  CHECK(are_isomorphic(r.glued, build(FamilySpec::path(3))));

  // Default shift at a path endpoint of order 2 is 1/2.
  REQUIRE(r.shifts.size() == 1);
  CHECK(r.shifts[0] == doctest::Approx(0.5).epsilon(1e-12));
  REQUIRE(r.gamma.rows() == 2);
  CHECK(r.gamma(0, 0) == doctest::Approx(0.0));
  CHECK(r.gamma(0, 1) == doctest::Approx(1.0));
  CHECK(r.gamma(1, 1) == doctest::Approx(-0.5).epsilon(1e-12));

  // The attachment's vertices map onto glued vertices preserving edges.
  REQUIRE(r.attachment_vertex_map.size() == 1);
  const std::vector<int>& map = r.attachment_vertex_map[0];
  REQUIRE(map.size() == 2);
  CHECK(map[0] == 1);  // distinguished vertex lands on the glue point
  CHECK(r.glued.has_edge(map[0], map[1]));
}

TEST_CASE("lower bound on the tiny example") {
  const GluingBound b = gluing_lower_bound(tiny_spec());
  CHECK(b.attachment_sum == doctest::Approx(1.0).epsilon(1e-10));
  // Gamma = [[0,1],[1,-1/2]]: positive eigenvalue (-1/2 + sqrt(17)/2)/2.
  const double lam = (-0.5 + std::sqrt(17.0) / 2.0) / 2.0;
  CHECK(b.gamma_splus == doctest::Approx(lam * lam).epsilon(1e-10));
  CHECK(b.bound == doctest::Approx(1.0 + lam * lam).epsilon(1e-10));
  CHECK(b.true_splus == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(b.margin == doctest::Approx(2.0 - 1.0 - lam * lam).epsilon(1e-8));
  CHECK(b.margin > 0.0);
}

TEST_CASE("presets glue to the advertised triangle-path graphs") {
  // Small orders stay within the canonical-labeling cap.
  CHECK(are_isomorphic(glue(preset_spec("fig1", 4)).glued,
                       build(FamilySpec::triangle_paths(4, 4, 0))));
  CHECK(are_isomorphic(glue(preset_spec("ga", 4)).glued,
                       build(FamilySpec::triangle_paths(4, 4, 1))));
  CHECK(are_isomorphic(glue(preset_spec("gb", 4)).glued,
                       build(FamilySpec::triangle_paths(4, 1, 1))));
  CHECK(are_isomorphic(glue(preset_spec("gt2", 1)).glued,
                       build(FamilySpec::triangle_paths(2, 2, 1))));
}

TEST_CASE("larger presets match on order, size, and spectrum") {
  struct Case {
    const char* name;
    int t;
    FamilySpec target;
  };
  const Case cases[] = {
      {"fig1", 7, FamilySpec::triangle_paths(7, 7, 0)},
      {"ga", 6, FamilySpec::triangle_paths(6, 6, 1)},
      {"gb", 6, FamilySpec::triangle_paths(6, 1, 1)},
      {"gt2", 3, FamilySpec::triangle_paths(6, 6, 3)},
      {"gt3", 9, FamilySpec::triangle_paths(18, 18, 18)},
  };
  for (const Case& c : cases) {
    const Graph glued = glue(preset_spec(c.name, c.t)).glued;
    const Graph target = build(c.target);
    REQUIRE(glued.order() == target.order());
    CHECK(glued.size() == target.size());
    const Eigen::VectorXd sg = spectrum(glued);
    const Eigen::VectorXd st = spectrum(target);
    CHECK((sg - st).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("preset gamma matrices") {
  // fig1: base adjacency with -1/2 diagonal at the glue points 3 and 1.
  Eigen::MatrixXd expected(4, 4);
  expected << 0, 1, 1, 1,
              1, -0.5, 1, 0,
              1, 1, 0, 0,
              1, 0, 0, -0.5;
  const GluedResult fig1 = glue(preset_spec("fig1", 5));
  CHECK((fig1.gamma - expected).norm() <= 1e-12);

  // ga: order-9 base with shifted diagonal at vertices 7 and 8.
  const GluedResult ga = glue(preset_spec("ga", 5));
  REQUIRE(ga.gamma.rows() == 9);
  const Eigen::MatrixXd base_a =
      build(FamilySpec::figure("fig3a")).adjacency_matrix();
  Eigen::MatrixXd gamma_a = base_a;
  gamma_a(7, 7) = -0.5;
  gamma_a(8, 8) = -0.5;
  CHECK((ga.gamma - gamma_a).norm() <= 1e-12);

  // gb: order-5 base with shifted diagonal at vertex 2.
  const GluedResult gb = glue(preset_spec("gb", 5));
  REQUIRE(gb.gamma.rows() == 5);
  const Eigen::MatrixXd base_b =
      build(FamilySpec::figure("fig3b")).adjacency_matrix();
  Eigen::MatrixXd gamma_b = base_b;
  gamma_b(2, 2) = -0.5;
  CHECK((gb.gamma - gamma_b).norm() <= 1e-12);
}

TEST_CASE("preset bounds hold with room to spare") {
  for (int t : {2, 3, 5, 8}) {
    CHECK(gluing_lower_bound(preset_spec("fig1", t)).margin >= -1e-7);
  }
  for (int t : {3, 4, 6, 8}) {
    CHECK(gluing_lower_bound(preset_spec("ga", t)).margin >= -1e-7);
  }
  for (int t : {1, 2, 5, 8}) {
    CHECK(gluing_lower_bound(preset_spec("gb", t)).margin >= -1e-7);
  }
  for (int t : {1, 2, 4, 6}) {
    CHECK(gluing_lower_bound(preset_spec("gt2", t)).margin >= -1e-7);
  }
  for (int t : {9, 10, 12}) {
    CHECK(gluing_lower_bound(preset_spec("gt3", t)).margin >= -1e-7);
  }
  CHECK_THROWS_AS(preset_spec("gt3", 8), std::invalid_argument);
  CHECK_THROWS_AS(preset_spec("nope", 4), std::invalid_argument);
}

TEST_CASE("tri-base gamma and the sweep") {
  // Gamma for variant 2 at t = 3: adjacency of the t,t,t skeleton with
  // -1/2 at the far endpoints of the arms hanging from triangle vertices
  // 1 and 2 (vertices 2+2t and 2+3t).
  const Eigen::MatrixXd gamma = tri_base_gamma(3, 2);
  REQUIRE(gamma.rows() == 12);
  const Eigen::MatrixXd skel =
      build(FamilySpec::triangle_paths(3, 3, 3)).adjacency_matrix();
  Eigen::MatrixXd expected = skel;
  expected(8, 8) = -0.5;
  expected(11, 11) = -0.5;
  CHECK((gamma - expected).norm() <= 1e-12);

  const std::vector<GammaSweepRow> rows2 = gamma_sweep(2, 2, 25);
  REQUIRE(rows2.size() == 24);
  for (const GammaSweepRow& row : rows2) {
    CHECK(row.order == 3 * row.t + 3);
    CHECK(row.bound == doctest::Approx(3.0 * (row.t + 1)));
    CHECK(row.margin == doctest::Approx(row.s_plus - row.bound));
    CHECK(row.margin >= -1e-7);
  }

  const std::vector<GammaSweepRow> rows3 = gamma_sweep(3, 10, 30);
  for (const GammaSweepRow& row : rows3) {
    CHECK(row.bound == doctest::Approx(3.0 * (row.t + 1) - 0.2));
    CHECK(row.margin >= -1e-7);
  }

  CHECK_THROWS_AS(gamma_sweep(4, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(gamma_sweep(2, 5, 4), std::invalid_argument);
}

TEST_CASE("strengthened inequality holds for arbitrary PSD offsets") {
  std::mt19937 rng(2024u);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const GluingSpec spec = preset_spec("fig1", 3);
  const int n = glue(spec).glued.order();
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd b(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) b(i, j) = gauss(rng);
    }
    const Eigen::MatrixXd m = b.transpose() * b / n;
    const StrengthenedResult res = strengthened_check(spec, m);
    CHECK(res.holds);
    CHECK(res.lhs >= res.rhs - 1e-7);
    CHECK(res.r1 >= 0.0);
    CHECK(res.r2 >= 0.0);
  }

  // At M = the exact negative part of the glued graph the objective equals
  // s_plus, and the strengthened right-hand side still stays below it.
  const GluedResult glued = glue(spec);
  const SpectralSplit split = spectral_split(glued.glued);
  const StrengthenedResult at_min = strengthened_check(spec, split.negative_part);
  CHECK(at_min.holds);
  CHECK(at_min.lhs ==
        doctest::Approx(square_energies(glued.glued).plus).epsilon(1e-8));
}

TEST_CASE("shift validation") {
  GluingSpec spec = tiny_spec();
  spec.attachments[0].shift = 0.6;  // above the default 1/2: allowed
  CHECK(glue(spec).shifts[0] == doctest::Approx(0.6));
  CHECK(gluing_lower_bound(spec).margin >= -1e-7);

  spec.attachments[0].shift = 0.4;  // below the default: rejected
  CHECK_THROWS_AS(glue(spec), std::invalid_argument);
}

TEST_CASE("spec validation") {
  GluingSpec spec = tiny_spec();
  spec.glue_points = {2};
  CHECK_THROWS_AS(glue(spec), std::invalid_argument);

  spec = tiny_spec();
  spec.glue_points = {0, 1};
  CHECK_THROWS_AS(glue(spec), std::invalid_argument);

  spec = tiny_spec();
  spec.attachments[0].vertex = 5;
  CHECK_THROWS_AS(glue(spec), std::invalid_argument);

  spec = tiny_spec();
  spec.attachments.clear();
  CHECK_THROWS_AS(glue(spec), std::invalid_argument);

  // Duplicate glue points with two attachments.
  GluingSpec dup;
  dup.base = build(FamilySpec::path(3));
  dup.glue_points = {1, 1};
  Attachment att;
  att.graph = build(FamilySpec::path(2));
  att.vertex = 0;
  dup.attachments.push_back(att);
  dup.attachments.push_back(att);
  CHECK_THROWS_AS(glue(dup), std::invalid_argument);
}

TEST_CASE("random specs respect the bound") {
  std::mt19937 rng(515151u);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 120; ++trial) {
    const int base_n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> base_edges;
    for (int u = 0; u < base_n; ++u) {
      for (int v = u + 1; v < base_n; ++v) {
        if (coin(rng)) base_edges.emplace_back(u, v);
      }
    }
    GluingSpec spec;
    spec.base = Graph(base_n, base_edges);
    const int k = 1 + static_cast<int>(rng() % std::min(base_n, 3));
    for (int i = 0; i < k; ++i) {
      int p;
      do {
        p = static_cast<int>(rng() % base_n);
      } while (std::find(spec.glue_points.begin(), spec.glue_points.end(), p) !=
               spec.glue_points.end());
      spec.glue_points.push_back(p);
      const int an = 1 + static_cast<int>(rng() % 4);
      std::vector<std::pair<int, int>> att_edges;
      for (int u = 0; u < an; ++u) {
        for (int v = u + 1; v < an; ++v) {
          if (coin(rng)) att_edges.emplace_back(u, v);
        }
      }
      Attachment att;
      att.graph = Graph(an, att_edges);
      att.vertex = static_cast<int>(rng() % an);
      spec.attachments.push_back(att);
    }
    const GluingBound b = gluing_lower_bound(spec);
    CHECK(b.margin >= -1e-7);
    CHECK(b.bound == doctest::Approx(b.attachment_sum + b.gamma_splus));
  }
}
