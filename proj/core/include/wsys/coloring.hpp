#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wsys/graph.hpp"
#include "wsys/rational.hpp"
#include "wsys/ribbon.hpp"

namespace wsys {

// Color in {1,2,3} per edge, edges in TrivalentGraph::edges() order.
using EdgeColoring = std::vector<std::uint8_t>;
// Element of Z/2 x Z/2 per face, encoded as 0b00..0b11.
using FaceColoring = std::vector<std::uint8_t>;

std::vector<EdgeColoring> enumerate_edge_3_colorings(const TrivalentGraph& g);
long long count_edge_3_colorings(const TrivalentGraph& g);

// Product over vertices of the sign of the color permutation read
// counterclockwise. Throws std::invalid_argument if c is not proper.
int coloring_sign(const TrivalentGraph& g, const EdgeColoring& c);

// Signed count of proper edge-3-colorings; equals the so(3)~ weight.
Integer penrose_sum(const TrivalentGraph& g);
// 2^(v/2) * penrose_sum(g); equals the weight for make_sl2().
Integer w_sl2(const TrivalentGraph& g);

// Faces of a genus-0 rotation system together with their adjacency.
struct PlanarMap {
  TrivalentGraph rotation;                     // the flipped rotation system
  std::vector<std::vector<Dart>> faces;        // face_orbits(rotation)
  std::vector<int> face_of_dart;
  std::vector<std::pair<int, int>> edge_faces; // per edge: faces of its two darts
  int outer_face = 0;                          // face containing dart 0

  int face_count() const { return static_cast<int>(faces.size()); }
  bool has_self_bordering_face() const;
};

// Throws std::invalid_argument unless the marking is spherical.
PlanarMap extract_map(const TrivalentGraph& g, const Marking& m);

// Proper colorings of the faces with the four elements of H; zero when a face
// borders itself. With `fix_outer`, the outer face is pinned to 00.
std::vector<FaceColoring> enumerate_four_colorings(const PlanarMap& map, bool fix_outer);
long long count_four_colorings(const PlanarMap& map);

// Colors each edge by the sum of its two face colors, with 01->1, 10->2,
// 11->3. Throws std::invalid_argument if fc is not proper.
EdgeColoring tait_edge_coloring(const PlanarMap& map, const FaceColoring& fc);

struct TaitCounterexample {
  std::string reason;
  std::optional<FaceColoring> face_coloring;
  std::optional<EdgeColoring> edge_coloring;
};

// Checks that tait_edge_coloring maps the 4-colorings with the outer face
// colored 00 bijectively onto the proper edge-3-colorings.
std::optional<TaitCounterexample> verify_tait_bijection(const PlanarMap& map);

}  // namespace wsys
