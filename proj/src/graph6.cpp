#include "sqenergy/graph6.hpp"

#include <stdexcept>

namespace sqenergy {

namespace {

constexpr int kBias = 63;  // printable offset: six bits b encode as char(b+63)

void append_sextets(std::string& out, unsigned long long value, int count) {
  for (int i = count - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((value >> (6 * i)) & 0x3f) + kBias));
  }
}

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument("graph6: " + what);
}

int sextet(const std::string& s, size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) {
    fail("byte " + std::to_string(i) + " (value " + std::to_string(c) +
         ") outside the printable range 63..126");
  }
  return c - kBias;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    append_sextets(out, static_cast<unsigned long long>(n), 3);
  } else {
    out.push_back('~');
    out.push_back('~');
    append_sextets(out, static_cast<unsigned long long>(n), 6);
  }
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) {
    acc <<= (6 - bits);  // pad with zero bits on the right
    out.push_back(static_cast<char>(acc + kBias));
  }
  return out;
}

Graph from_graph6(const std::string& raw) {
  std::string s = raw;
  // Tolerate the optional format header and surrounding whitespace.
  const std::string header = ">>graph6<<";
  size_t begin = s.find_first_not_of(" \t\r\n");
  size_t end = s.find_last_not_of(" \t\r\n");
  if (begin == std::string::npos) fail("empty input");
  s = s.substr(begin, end - begin + 1);
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) fail("empty input after header");

  size_t pos = 0;
  long long n = 0;
  if (s[0] != '~') {
    n = sextet(s, 0);
    pos = 1;
  } else if (s.size() >= 2 && s[1] != '~') {
    if (s.size() < 4) fail("truncated order field (expected '~' + 3 bytes)");
    n = (static_cast<long long>(sextet(s, 1)) << 12) |
        (static_cast<long long>(sextet(s, 2)) << 6) | sextet(s, 3);
    if (n < 63) fail("non-canonical long order field for n < 63");
    pos = 4;
  } else {
    if (s.size() < 8) fail("truncated order field (expected '~~' + 6 bytes)");
    n = 0;
    for (size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(s, i);
    if (n < 258048) fail("non-canonical extra-long order field");
    pos = 8;
  }
  if (n > kMaxVertices) {
    fail("declared order " + std::to_string(n) + " exceeds capacity " +
         std::to_string(kMaxVertices));
  }

  const long long pairs = n * (n - 1) / 2;
  const long long body = (pairs + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != body) {
    fail("line length " + std::to_string(s.size() - pos) +
         " does not match the " + std::to_string(body) +
         " bytes required for order " + std::to_string(n));
  }

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  int acc = 0;
  int have = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (have == 0) {
        acc = sextet(s, pos++);
        have = 6;
      }
      if (acc & (1 << (have - 1))) edges.emplace_back(i, j);
      --have;
      ++bit;
    }
  }
  if (have > 0 && (acc & ((1 << have) - 1)) != 0) {
    fail("nonzero padding bits in the final group");
  }
  (void)bit;
  return Graph(static_cast<int>(n), edges);
}

std::optional<Graph> read_graph6_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    size_t begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) continue;  // skip blank lines
    return from_graph6(line);
  }
  return std::nullopt;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  while (auto g = read_graph6_line(in)) out.push_back(std::move(*g));
  return out;
}

}  // namespace sqenergy
