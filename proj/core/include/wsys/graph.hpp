#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wsys {

using Dart = int;

enum class ParseErrorKind { DuplicateDart, MissingDart, SelfPairedDart, BadCount, Syntax };

std::string_view to_string(ParseErrorKind kind);

class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, ParseErrorKind kind, const std::string& detail);

  int line() const { return line_; }
  ParseErrorKind kind() const { return kind_; }

 private:
  int line_;
  ParseErrorKind kind_;
};

// An oriented trivalent multigraph stored as a combinatorial map.
//
// Vertex i owns darts 3i, 3i+1, 3i+2, listed in counterclockwise order. The
// edge involution pairs every dart with the other end of its edge; a loop
// pairs two darts of the same vertex. Values are immutable once built.
class TrivalentGraph {
 public:
  TrivalentGraph() = default;

  // Throws std::invalid_argument unless `involution` is a fixed-point-free
  // involution on 0..n-1 with n divisible by 6.
  explicit TrivalentGraph(std::vector<Dart> involution);

  int vertex_count() const { return static_cast<int>(alpha_.size() / 3); }
  int edge_count() const { return static_cast<int>(alpha_.size() / 2); }
  int dart_count() const { return static_cast<int>(alpha_.size()); }
  int euler_characteristic() const { return vertex_count() - edge_count(); }

  Dart opposite(Dart d) const { return alpha_[static_cast<std::size_t>(d)]; }
  static int vertex_of(Dart d) { return d / 3; }
  // Counterclockwise successor at the dart's vertex.
  static Dart next_ccw(Dart d) { return 3 * (d / 3) + (d % 3 + 1) % 3; }
  static Dart prev_ccw(Dart d) { return 3 * (d / 3) + (d % 3 + 2) % 3; }

  const std::vector<Dart>& involution() const { return alpha_; }

  // Edges as (lower dart, upper dart), ordered by lower dart. This ordering is
  // the edge index used throughout (it matches serialized file order).
  std::vector<std::pair<Dart, Dart>> edges() const;
  // Index of the edge containing dart d in edges() order.
  std::vector<int> edge_index_of_darts() const;

  bool is_loop(Dart d) const { return vertex_of(d) == vertex_of(opposite(d)); }
  bool has_loop() const;

  bool operator==(const TrivalentGraph&) const = default;

 private:
  std::vector<Dart> alpha_;
};

TrivalentGraph parse_graph(std::string_view text);
std::string serialize_graph(const TrivalentGraph& g);

bool is_connected(const TrivalentGraph& g);
// Connected, loop-free and without a cut vertex.
bool is_two_connected(const TrivalentGraph& g);

// Reverses the cyclic order at vertex i: darts (3i, 3i+1, 3i+2) are re-read as
// (3i, 3i+2, 3i+1). Throws std::out_of_range for a bad index.
TrivalentGraph flip_vertex(const TrivalentGraph& g, int vertex);

// Orbits of next(d) = ccw_successor(opposite(d)); each orbit starts at its
// smallest dart and orbits are ordered by that dart.
std::vector<std::vector<Dart>> face_orbits(const TrivalentGraph& g);
int face_count(const TrivalentGraph& g);
int genus(const TrivalentGraph& g);

}  // namespace wsys
