#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqenergy/checks.hpp"
#include "sqenergy/family.hpp"
#include "sqenergy/graph.hpp"
#include "sqenergy/graph6.hpp"
#include "sqenergy/spectral.hpp"

using namespace sqenergy;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("universe iteration over enumeration") {
  Universe u;
  u.max_n = 5;
  long count = 0;
  for_each_universe_graph(u, [&](const Graph& g) {
    ++count;
    CHECK(g.order() <= 5);
  });
  CHECK(count == 1 + 1 + 2 + 6 + 21);
  CHECK(u.description().find("5") != std::string::npos);
}

TEST_CASE("universe iteration over a file") {
  TempFile file("sqenergy_test_universe.g6", "Bw\n@\nCh\n");
  Universe u;
  u.file = file.path;
  std::vector<int> orders;
  for_each_universe_graph(u, [&](const Graph& g) {
    orders.push_back(g.order());
  });
  CHECK(orders == std::vector<int>{3, 1, 4});

  Universe missing;
  missing.file = "/tmp/definitely-not-here.g6";
  CHECK_THROWS_AS(for_each_universe_graph(missing, [](const Graph&) {}),
                  std::runtime_error);
}

TEST_CASE("conjecture ids are validated") {
  Universe u;
  u.max_n = 3;
  CHECK_THROWS_AS(check_conjecture("bogus", u), std::invalid_argument);
  Universe big;
  big.max_n = 99;
  CHECK_THROWS_AS(check_conjecture("c1", big), std::invalid_argument);
}

TEST_CASE("registered claims hold exhaustively through order six") {
  Universe u;
  u.max_n = 6;
  for (const char* id : {"c1", "c2", "unicyclic", "tree-eq", "omega3",
                         "theorems"}) {
    const ConjectureReport report = check_conjecture(id, u);
    CHECK(report.id == id);
    CHECK(report.graphs_checked == 143);
    CHECK(report.violations.empty());
    CHECK(report.wall_seconds >= 0.0);
    CHECK(report.tolerance == doctest::Approx(kCheckTolerance));
  }
}

TEST_CASE("near misses are tight, sorted, and bounded") {
  Universe u;
  u.max_n = 6;
  const ConjectureReport report = check_conjecture("c1", u);
  REQUIRE(!report.near_misses.empty());
  CHECK(report.near_misses.size() <= 20);
  for (size_t i = 1; i < report.near_misses.size(); ++i) {
    CHECK(report.near_misses[i - 1].margin <= report.near_misses[i].margin);
  }
  // Trees meet the bound exactly, so the smallest margins sit at zero.
  CHECK(std::abs(report.near_misses[0].margin) <= 1e-9);
  for (const Finding& f : report.near_misses) {
    CHECK(!f.graph6.empty());
    CHECK(f.n >= 1);
    CHECK(f.margin >= -kCheckTolerance);
  }
}

TEST_CASE("tree equality cases recognized on a file universe") {
  // P4 (tree), C6 (bipartite unicyclic, s_plus = n), K4 (complete).
  const std::string lines = to_graph6(build(FamilySpec::path(4))) + "\n" +
                            to_graph6(build(FamilySpec::cycle(6))) + "\n" +
                            to_graph6(build(FamilySpec::complete(4))) + "\n";
  TempFile file("sqenergy_test_treeeq.g6", lines);
  Universe u;
  u.file = file.path;
  const ConjectureReport report = check_conjecture("tree-eq", u);
  CHECK(report.graphs_checked == 3);
  CHECK(report.violations.empty());
}

TEST_CASE("energy-sign pattern of odd unicyclic graphs") {
  Universe u;
  u.max_n = 7;
  const ConjectureReport report = check_conjecture("unicyclic", u);
  CHECK(report.violations.empty());
  CHECK(report.graphs_checked == 1 + 1 + 2 + 6 + 21 + 112 + 853);
}

TEST_CASE("family grids") {
  const std::vector<SweepCell> tp = triangle_paths_grid(5);
  // Triples j >= k >= l >= 0 with j <= 5.
  CHECK(tp.size() == 1 + 3 + 6 + 10 + 15 + 21);
  for (const SweepCell& cell : tp) {
    CHECK(cell.holds);
    CHECK(cell.margin >= -1e-9);
    CHECK(cell.margin == doctest::Approx(cell.value - cell.bound));
  }

  const std::vector<SweepCell> pent = pentagon_grid(5);
  CHECK(pent.size() == 1 + 2 + 3 + 4 + 5 + 6);
  for (const SweepCell& cell : pent) {
    CHECK(cell.holds);
  }
}

TEST_CASE("spot checks all pass") {
  const std::vector<SweepCell> cells = spot_checks();
  REQUIRE(cells.size() == 6);
  for (const SweepCell& cell : cells) {
    CHECK(cell.holds);
    CHECK(cell.value >= cell.bound);
  }
  // The diamond: s_plus = ((1 + sqrt(17))/2)^2 ~ 6.56 against bound 6.5.
  bool found_diamond = false;
  for (const SweepCell& cell : cells) {
    if (cell.label.find("cyclechord(4,0)") != std::string::npos) {
      found_diamond = true;
      const double lam = (1.0 + std::sqrt(17.0)) / 2.0;
      CHECK(cell.value == doctest::Approx(lam * lam).epsilon(1e-9));
      CHECK(cell.bound == doctest::Approx(6.5));
    }
  }
  CHECK(found_diamond);
}

TEST_CASE("join trends stay within the square-root band") {
  const std::vector<TrendRow> star = join_trend("starjoinpath", 4, 40);
  REQUIRE(star.size() == 37);
  for (const TrendRow& row : star) {
    CHECK(row.baseline == doctest::Approx(2.0 * row.n));
    CHECK(row.excess == doctest::Approx(row.s_plus - 2.0 * row.n));
    CHECK(row.scaled == doctest::Approx(row.excess / std::sqrt(double(row.n))));
    CHECK(std::abs(row.scaled) <= 3.0);
  }

  const std::vector<TrendRow> cycle = join_trend("cyclejoin2", 5, 40);
  REQUIRE(cycle.size() == 36);
  for (const TrendRow& row : cycle) {
    CHECK(row.baseline == doctest::Approx(3.0 * row.n));
    CHECK(row.excess == doctest::Approx(row.s_plus - 3.0 * row.n));
    // The join root (1 + sqrt(2n-3))^2 makes excess ~ 2*sqrt(2n) - 8, so the
    // scaled column approaches 2*sqrt(2) < 3 from below.
    CHECK(std::abs(row.scaled) <= 3.0);
  }

  CHECK_THROWS_AS(join_trend("nope", 5, 10), std::invalid_argument);
}
