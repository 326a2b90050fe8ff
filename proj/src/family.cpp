#include "sqenergy/family.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace sqenergy {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_order(long n) {
  if (n > kMaxVertices) {
    throw std::length_error("family order " + std::to_string(n) +
                            " exceeds capacity " +
                            std::to_string(kMaxVertices));
  }
}

Graph build_path(long n) {
  require(n >= 1, "path(n) needs n >= 1");
  check_order(n);
  EdgeList e;
  for (long i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(static_cast<int>(n), e);
}

Graph build_cycle(long n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  check_order(n);
  EdgeList e;
  for (long i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(static_cast<int>(n), e);
}

Graph build_complete(long n) {
  require(n >= 1, "complete(n) needs n >= 1");
  check_order(n);
  EdgeList e;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(static_cast<int>(n), e);
}

Graph build_complete_bipartite(long p, long q) {
  require(p >= 0 && q >= 0 && p + q >= 1, "bipartite(p,q) needs p,q >= 0, p+q >= 1");
  check_order(p + q);
  EdgeList e;
  for (long i = 0; i < p; ++i) {
    for (long j = 0; j < q; ++j) e.emplace_back(i, p + j);
  }
  return Graph(static_cast<int>(p + q), e);
}

Graph build_star(long n) {
  require(n >= 1, "star(n) needs n >= 1");
  check_order(n);
  EdgeList e;
  for (long i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(static_cast<int>(n), e);
}

Graph build_empty(long n) {
  require(n >= 1, "empty(n) needs n >= 1");
  check_order(n);
  return Graph(static_cast<int>(n), {});
}

// Triangle 0,1,2 with pendant paths of orders j,k,l at vertices 0,1,2.
Graph build_triangle_paths(long j, long k, long l) {
  require(j >= 0 && k >= 0 && l >= 0, "trianglepaths needs nonnegative arms");
  long n = 3 + j + k + l;
  check_order(n);
  EdgeList e = {{0, 1}, {0, 2}, {1, 2}};
  long next = 3;
  for (int arm = 0; arm < 3; ++arm) {
    long len = arm == 0 ? j : arm == 1 ? k : l;
    long prev = arm;
    for (long i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(static_cast<int>(n), e);
}

Graph build_cycle_chord(long k, long l) {
  require(k >= 4, "cyclechord(k,l) needs k >= 4");
  require(l >= 0, "cyclechord(k,l) needs l >= 0");
  long n = k + l;
  check_order(n);
  EdgeList e;
  for (long i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  e.emplace_back(0, 2);
  long prev = 1;
  for (long i = 0; i < l; ++i) {
    e.emplace_back(prev, k + i);
    prev = k + i;
  }
  return Graph(static_cast<int>(n), e);
}

Graph build_pentagon(long k, long l) {
  require(k >= 0 && l >= 0, "pentagon(k,l) needs nonnegative leaf counts");
  long n = 5 + k + l;
  check_order(n);
  EdgeList e;
  for (long i = 0; i < 5; ++i) e.emplace_back(i, (i + 1) % 5);
  for (long i = 0; i < k; ++i) e.emplace_back(0, 5 + i);
  for (long i = 0; i < l; ++i) e.emplace_back(2, 5 + k + i);
  return Graph(static_cast<int>(n), e);
}

Graph build_cycle_power(long n, long k) {
  require(n >= 3, "cyclepower(n,k) needs n >= 3");
  require(k >= 1 && 2 * k <= n, "cyclepower(n,k) needs 1 <= k <= n/2");
  check_order(n);
  EdgeList e;
  for (long i = 0; i < n; ++i) {
    for (long d = 1; d <= k; ++d) e.emplace_back(i, (i + d) % n);
  }
  return Graph(static_cast<int>(n), e);
}

// Named reference graphs.  Adjacency lists are fixed fixtures; the vertex
// numbering of fig3a/fig3b matches the shifted base matrices in gluing.cpp.
const std::map<std::string, std::pair<int, EdgeList>>& figure_fixtures() {
  static const std::map<std::string, std::pair<int, EdgeList>> table = {
      // Triangle with one pendant vertex; glue points 1 and 3.
      {"fig1", {4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}}},
      // Net graph: triangle with one pendant at each corner (t=1 skeleton of
      // the triangle-with-three-arms family).
      {"fig2a", {6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}}},
      {"fig2b", {6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}}},
      // Triangle with arms of orders 1 (at 0), 3 (at 1: 4-6-8) and
      // 2 (at 2: 5-7); glue points 8 and 7.
      {"fig3a",
       {9,
        {{0, 1},
         {0, 2},
         {0, 3},
         {1, 2},
         {1, 4},
         {2, 5},
         {4, 6},
         {5, 7},
         {6, 8}}}},
      // Triangle with pendants at 0 and 1; glue point 2.
      {"fig3b", {5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}}}},
      // Two triangles sharing vertex 0, plus one pendant on an outer vertex
      // of each triangle.
      {"fig4",
       {7,
        {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 5}, {3, 6}}}},
      // 5-cycle 0..4 plus a pendant edge 5-6 attached by 5-0 and 6-3.
      {"fig5a",
       {7,
        {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {5, 6}, {0, 5}, {3, 6}}}},
      // pentagon(2,2): 5-cycle with two leaves each on vertices 0 and 2.
      {"fig5b",
       {9,
        {{0, 1},
         {1, 2},
         {2, 3},
         {3, 4},
         {0, 4},
         {0, 5},
         {0, 6},
         {2, 7},
         {2, 8}}}},
      // Triangle with pendants at two of its vertices.
      {"fig6a", {5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}}},
      // 5-cycle 0..4 with chord 0-2, one leaf each on 0 and 2, and a pendant
      // edge 7-8 attached by 0-7 and 2-8.
      {"fig6b",
       {9,
        {{0, 1},
         {1, 2},
         {2, 3},
         {3, 4},
         {0, 4},
         {0, 2},
         {0, 5},
         {2, 6},
         {7, 8},
         {0, 7},
         {2, 8}}}},
  };
  return table;
}

}  // namespace

std::vector<int> tri_base_shift_vertices(long t, long variant) {
  require(t >= 1, "tribase(t,variant) needs t >= 1");
  require(variant == 2 || variant == 3, "tribase variant must be 2 or 3");
  int e1 = static_cast<int>(2 + t);
  int e2 = static_cast<int>(2 + 2 * t);
  int e3 = static_cast<int>(2 + 3 * t);
  if (variant == 2) return {e2, e3};
  return {e1, e2, e3};
}

Graph build(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::kPath:
      return build_path(spec.a);
    case Kind::kCycle:
      return build_cycle(spec.a);
    case Kind::kComplete:
      return build_complete(spec.a);
    case Kind::kCompleteBipartite:
      return build_complete_bipartite(spec.a, spec.b);
    case Kind::kStar:
      return build_star(spec.a);
    case Kind::kEmpty:
      return build_empty(spec.a);
    case Kind::kTrianglePaths:
      return build_triangle_paths(spec.a, spec.b, spec.c);
    case Kind::kCycleChord:
      return build_cycle_chord(spec.a, spec.b);
    case Kind::kPentagon:
      return build_pentagon(spec.a, spec.b);
    case Kind::kTriBase: {
      tri_base_shift_vertices(spec.a, spec.b);  // validates parameters
      return build_triangle_paths(spec.a, spec.a, spec.a);
    }
    case Kind::kJoin: {
      require(spec.parts.size() == 2, "join needs exactly two parts");
      return join(build(spec.parts[0]), build(spec.parts[1]));
    }
    case Kind::kCyclePower:
      return build_cycle_power(spec.a, spec.b);
    case Kind::kFigure: {
      const auto& table = figure_fixtures();
      auto it = table.find(spec.figure_id);
      require(it != table.end(), "unknown figure id '" + spec.figure_id + "'");
      return Graph(it->second.first, it->second.second);
    }
  }
  throw std::logic_error("unreachable family kind");
}

namespace {

struct Parser {
  std::string text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument("family spec: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
    }
    ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '_')) {
      ++pos;
    }
    if (start == pos) {
      throw std::invalid_argument("family spec: expected a name at position " +
                                  std::to_string(start));
    }
    std::string s = text.substr(start, pos - start);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    return s;
  }

  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw std::invalid_argument("family spec: expected an integer at position " +
                                  std::to_string(start));
    }
    return std::stol(text.substr(start, pos - start));
  }

  std::vector<long> int_args(size_t count) {
    expect('(');
    std::vector<long> out;
    for (size_t i = 0; i < count; ++i) {
      if (i) expect(',');
      out.push_back(integer());
    }
    expect(')');
    return out;
  }

  FamilySpec parse() {
    std::string name = ident();
    if (name == "path") return FamilySpec::path(int_args(1)[0]);
    if (name == "cycle") return FamilySpec::cycle(int_args(1)[0]);
    if (name == "complete") return FamilySpec::complete(int_args(1)[0]);
    if (name == "bipartite" || name == "completebipartite") {
      auto a = int_args(2);
      return FamilySpec::complete_bipartite(a[0], a[1]);
    }
    if (name == "star") return FamilySpec::star(int_args(1)[0]);
    if (name == "empty") return FamilySpec::empty(int_args(1)[0]);
    if (name == "trianglepaths") {
      auto a = int_args(3);
      return FamilySpec::triangle_paths(a[0], a[1], a[2]);
    }
    if (name == "cyclechord") {
      auto a = int_args(2);
      return FamilySpec::cycle_chord(a[0], a[1]);
    }
    if (name == "pentagon") {
      auto a = int_args(2);
      return FamilySpec::pentagon(a[0], a[1]);
    }
    if (name == "tribase") {
      auto a = int_args(2);
      return FamilySpec::tri_base(a[0], a[1]);
    }
    if (name == "cyclepower") {
      auto a = int_args(2);
      return FamilySpec::cycle_power(a[0], a[1]);
    }
    if (name == "join") {
      expect('(');
      FamilySpec x = parse();
      expect(',');
      FamilySpec y = parse();
      expect(')');
      return FamilySpec::join_of(std::move(x), std::move(y));
    }
    if (name == "fig" || name == "figure") {
      expect('(');
      std::string id = ident();
      expect(')');
      if (id.rfind("fig", 0) != 0) id = "fig" + id;
      return FamilySpec::figure(id);
    }
    throw std::invalid_argument("family spec: unknown family '" + name + "'");
  }
};

}  // namespace

FamilySpec parse_family(const std::string& text) {
  Parser p{text};
  FamilySpec spec = p.parse();
  p.skip_ws();
  if (p.pos != text.size()) {
    throw std::invalid_argument("family spec: trailing characters after spec");
  }
  build(spec);  // validate parameters eagerly
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  auto args1 = [&] { return "(" + std::to_string(spec.a) + ")"; };
  auto args2 = [&] {
    return "(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ")";
  };
  switch (spec.kind) {
    case Kind::kPath:
      return "path" + args1();
    case Kind::kCycle:
      return "cycle" + args1();
    case Kind::kComplete:
      return "complete" + args1();
    case Kind::kCompleteBipartite:
      return "bipartite" + args2();
    case Kind::kStar:
      return "star" + args1();
    case Kind::kEmpty:
      return "empty" + args1();
    case Kind::kTrianglePaths:
      return "trianglepaths(" + std::to_string(spec.a) + "," +
             std::to_string(spec.b) + "," + std::to_string(spec.c) + ")";
    case Kind::kCycleChord:
      return "cyclechord" + args2();
    case Kind::kPentagon:
      return "pentagon" + args2();
    case Kind::kTriBase:
      return "tribase" + args2();
    case Kind::kJoin:
      return "join(" + to_string(spec.parts[0]) + "," +
             to_string(spec.parts[1]) + ")";
    case Kind::kCyclePower:
      return "cyclepower" + args2();
    case Kind::kFigure:
      return "fig(" + spec.figure_id + ")";
  }
  return "?";
}

}  // namespace sqenergy
