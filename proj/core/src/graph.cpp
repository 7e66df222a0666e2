#include "wsys/graph.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace wsys {

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::DuplicateDart: return "duplicate-dart";
    case ParseErrorKind::MissingDart: return "missing-dart";
    case ParseErrorKind::SelfPairedDart: return "self-paired-dart";
    case ParseErrorKind::BadCount: return "bad-count";
    case ParseErrorKind::Syntax: return "syntax";
  }
  return "unknown";
}

GraphParseError::GraphParseError(int line, ParseErrorKind kind, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         std::string(to_string(kind)) + ": " + detail),
      line_(line),
      kind_(kind) {}

TrivalentGraph::TrivalentGraph(std::vector<Dart> involution) : alpha_(std::move(involution)) {
  const auto n = alpha_.size();
  if (n % 6 != 0) throw std::invalid_argument("dart count must be a multiple of 6");
  for (std::size_t d = 0; d < n; ++d) {
    const Dart p = alpha_[d];
    if (p < 0 || static_cast<std::size_t>(p) >= n)
      throw std::invalid_argument("dart partner out of range");
    if (static_cast<std::size_t>(p) == d) throw std::invalid_argument("dart paired with itself");
    if (static_cast<std::size_t>(alpha_[static_cast<std::size_t>(p)]) != d)
      throw std::invalid_argument("edge map is not an involution");
  }
}

std::vector<std::pair<Dart, Dart>> TrivalentGraph::edges() const {
  std::vector<std::pair<Dart, Dart>> out;
  out.reserve(alpha_.size() / 2);
  for (Dart d = 0; d < dart_count(); ++d)
    if (d < opposite(d)) out.emplace_back(d, opposite(d));
  return out;
}

std::vector<int> TrivalentGraph::edge_index_of_darts() const {
  std::vector<int> out(alpha_.size(), -1);
  int next = 0;
  for (Dart d = 0; d < dart_count(); ++d) {
    if (d < opposite(d)) {
      out[static_cast<std::size_t>(d)] = next;
      out[static_cast<std::size_t>(opposite(d))] = next;
      ++next;
    }
  }
  return out;
}

bool TrivalentGraph::has_loop() const {
  for (Dart d = 0; d < dart_count(); ++d)
    if (is_loop(d)) return true;
  return false;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw GraphParseError(line, ParseErrorKind::Syntax,
                          "expected an integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

TrivalentGraph parse_graph(std::string_view text) {
  int line_no = 0;
  int vertex_count = -1;
  int edges_seen = 0;
  std::vector<Dart> alpha;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens[0] == "v") {
      if (vertex_count >= 0)
        throw GraphParseError(line_no, ParseErrorKind::Syntax, "repeated 'v' line");
      if (tokens.size() != 2)
        throw GraphParseError(line_no, ParseErrorKind::Syntax, "expected 'v <count>'");
      vertex_count = parse_int(tokens[1], line_no);
      if (vertex_count < 0 || vertex_count % 2 != 0)
        throw GraphParseError(line_no, ParseErrorKind::BadCount,
                              "vertex count must be even and non-negative");
      alpha.assign(static_cast<std::size_t>(3 * vertex_count), -1);
    } else if (tokens[0] == "e") {
      if (vertex_count < 0)
        throw GraphParseError(line_no, ParseErrorKind::Syntax, "'e' line before 'v' line");
      if (tokens.size() != 3)
        throw GraphParseError(line_no, ParseErrorKind::Syntax, "expected 'e <dart> <dart>'");
      const Dart a = parse_int(tokens[1], line_no);
      const Dart b = parse_int(tokens[2], line_no);
      const int darts = 3 * vertex_count;
      if (a < 0 || a >= darts || b < 0 || b >= darts)
        throw GraphParseError(line_no, ParseErrorKind::Syntax, "dart out of range");
      if (a == b)
        throw GraphParseError(line_no, ParseErrorKind::SelfPairedDart,
                              "dart " + std::to_string(a) + " paired with itself");
      if (edges_seen == darts / 2)
        throw GraphParseError(line_no, ParseErrorKind::BadCount,
                              "more than " + std::to_string(darts / 2) + " edge lines");
      for (const Dart d : {a, b}) {
        if (alpha[static_cast<std::size_t>(d)] != -1)
          throw GraphParseError(line_no, ParseErrorKind::DuplicateDart,
                                "dart " + std::to_string(d) + " used twice");
      }
      alpha[static_cast<std::size_t>(a)] = b;
      alpha[static_cast<std::size_t>(b)] = a;
      ++edges_seen;
    } else {
      throw GraphParseError(line_no, ParseErrorKind::Syntax,
                            "unknown record '" + std::string(tokens[0]) + "'");
    }
  }

  if (vertex_count < 0) throw GraphParseError(line_no, ParseErrorKind::Syntax, "missing 'v' line");
  for (std::size_t d = 0; d < alpha.size(); ++d) {
    if (alpha[d] == -1)
      throw GraphParseError(line_no, ParseErrorKind::MissingDart,
                            "dart " + std::to_string(d) + " is not on any edge");
  }
  return TrivalentGraph(std::move(alpha));
}

std::string serialize_graph(const TrivalentGraph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (const auto& [a, b] : g.edges()) out << "e " << a << ' ' << b << '\n';
  return out.str();
}

namespace {

// Component count after deleting `removed` (or nothing when -1).
int component_count(const TrivalentGraph& g, int removed) {
  const int v = g.vertex_count();
  std::vector<int> parent(static_cast<std::size_t>(v));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [a, b] : g.edges()) {
    const int u = TrivalentGraph::vertex_of(a);
    const int w = TrivalentGraph::vertex_of(b);
    if (u == removed || w == removed) continue;
    parent[static_cast<std::size_t>(find(u))] = find(w);
  }
  int components = 0;
  for (int i = 0; i < v; ++i)
    if (i != removed && find(i) == i) ++components;
  return components;
}

}  // namespace

bool is_connected(const TrivalentGraph& g) {
  return g.vertex_count() > 0 && component_count(g, -1) == 1;
}

bool is_two_connected(const TrivalentGraph& g) {
  if (!is_connected(g) || g.has_loop()) return false;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (component_count(g, u) > 1) return false;
  return true;
}

TrivalentGraph flip_vertex(const TrivalentGraph& g, int vertex) {
  if (vertex < 0 || vertex >= g.vertex_count())
    throw std::out_of_range("vertex index " + std::to_string(vertex) + " out of range");
  // Swapping the labels of darts 3i+1 and 3i+2 reverses the cyclic order.
  const Dart x = 3 * vertex + 1;
  const Dart y = 3 * vertex + 2;
  auto relabel = [&](Dart d) { return d == x ? y : d == y ? x : d; };
  std::vector<Dart> alpha(static_cast<std::size_t>(g.dart_count()));
  for (Dart d = 0; d < g.dart_count(); ++d)
    alpha[static_cast<std::size_t>(relabel(d))] = relabel(g.opposite(d));
  return TrivalentGraph(std::move(alpha));
}

std::vector<std::vector<Dart>> face_orbits(const TrivalentGraph& g) {
  std::vector<std::vector<Dart>> orbits;
  std::vector<char> seen(static_cast<std::size_t>(g.dart_count()), 0);
  for (Dart start = 0; start < g.dart_count(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<Dart> orbit;
    for (Dart d = start; !seen[static_cast<std::size_t>(d)];
         d = TrivalentGraph::next_ccw(g.opposite(d))) {
      seen[static_cast<std::size_t>(d)] = 1;
      orbit.push_back(d);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

int face_count(const TrivalentGraph& g) { return static_cast<int>(face_orbits(g).size()); }

int genus(const TrivalentGraph& g) {
  const int twice = 2 - g.vertex_count() + g.edge_count() - face_count(g);
  return twice / 2;
}

}  // namespace wsys
