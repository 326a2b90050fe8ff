#pragma once

#include <string>
#include <vector>

#include "sqenergy/graph.hpp"

namespace sqenergy {

// Parametric graph families understood by the builders and the CLI.
//
//   Path(n), Cycle(n), Complete(n), CompleteBipartite(p,q), Star(n), Empty(n)
//   TrianglePaths(j,k,l): triangle 0,1,2 with pendant paths of orders j,k,l
//       hanging from vertices 0,1,2 (triangle first, then path vertices in
//       attachment order, each arm numbered outward).  Order 3+j+k+l.
//   CycleChord(k,l), k>=4: cycle 0..k-1, chord {0,2}, pendant path of order l
//       at vertex 1 (numbered outward).  Order k+l.
//   Pentagon(k,l): 5-cycle 0..4 with k leaves on vertex 0 and l leaves on
//       vertex 2.  Order k+l+5.
//   TriBase(t,variant): the TrianglePaths(t,t,t) skeleton used as a gluing
//       base; variant in {2,3} selects which arm endpoints carry shifted
//       diagonals in the associated gamma matrix (see gluing.hpp).
//   Join(a,b): graph join of two family specs.
//   CyclePower(n,k), 1<=k<=n/2: vertices adjacent iff cyclic distance <= k.
//   Figure(id): small named reference graphs fig1, fig2a, fig2b, fig3a,
//       fig3b, fig4, fig5a, fig5b, fig6a, fig6b used by the bound
//       demonstrations; adjacency fixed by a checked-in fixture.
struct FamilySpec {
  enum class Kind {
    kPath,
    kCycle,
    kComplete,
    kCompleteBipartite,
    kStar,
    kEmpty,
    kTrianglePaths,
    kCycleChord,
    kPentagon,
    kTriBase,
    kJoin,
    kCyclePower,
    kFigure,
  };

  Kind kind = Kind::kPath;
  long a = 0;
  long b = 0;
  long c = 0;
  std::string figure_id;
  std::vector<FamilySpec> parts;  // exactly two entries for kJoin

  static FamilySpec make(Kind kind, long a, long b = 0, long c = 0) {
    FamilySpec s;
    s.kind = kind;
    s.a = a;
    s.b = b;
    s.c = c;
    return s;
  }

  static FamilySpec path(long n) { return make(Kind::kPath, n); }
  static FamilySpec cycle(long n) { return make(Kind::kCycle, n); }
  static FamilySpec complete(long n) { return make(Kind::kComplete, n); }
  static FamilySpec complete_bipartite(long p, long q) {
    return make(Kind::kCompleteBipartite, p, q);
  }
  static FamilySpec star(long n) { return make(Kind::kStar, n); }
  static FamilySpec empty(long n) { return make(Kind::kEmpty, n); }
  static FamilySpec triangle_paths(long j, long k, long l) {
    return make(Kind::kTrianglePaths, j, k, l);
  }
  static FamilySpec cycle_chord(long k, long l) {
    return make(Kind::kCycleChord, k, l);
  }
  static FamilySpec pentagon(long k, long l) {
    return make(Kind::kPentagon, k, l);
  }
  static FamilySpec tri_base(long t, long variant) {
    return make(Kind::kTriBase, t, variant);
  }
  static FamilySpec cycle_power(long n, long k) {
    return make(Kind::kCyclePower, n, k);
  }
  static FamilySpec figure(const std::string& id) {
    FamilySpec s;
    s.kind = Kind::kFigure;
    s.figure_id = id;
    return s;
  }
  static FamilySpec join_of(FamilySpec x, FamilySpec y) {
    FamilySpec s;
    s.kind = Kind::kJoin;
    s.parts.push_back(std::move(x));
    s.parts.push_back(std::move(y));
    return s;
  }
};

// Builds the graph for a family spec.  Throws std::invalid_argument on bad
// parameters, std::length_error above capacity.
Graph build(const FamilySpec& spec);

// Vertices carrying shifted diagonals in the TriBase(t,variant) gamma matrix:
// the far endpoints of the arms at triangle vertices 1 and 2 (variant 2) or
// of all three arms (variant 3).
std::vector<int> tri_base_shift_vertices(long t, long variant);

// CLI grammar: path(5), cycle(7), complete(4), bipartite(3,3), star(5),
// empty(2), trianglepaths(1,2,2), cyclechord(5,1), pentagon(2,2),
// tribase(4,2), cyclepower(9,2), fig(fig4), join(complete(1),path(4)).
// Case-insensitive; whitespace ignored.
FamilySpec parse_family(const std::string& text);
std::string to_string(const FamilySpec& spec);

}  // namespace sqenergy
