#include "wsys/coloring.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "test_support.hpp"
#include "wsys/catalog.hpp"
#include "wsys/lie.hpp"

namespace wsys {
namespace {

using testing::cube;
using testing::dumbbell;
using testing::k4;
using testing::theta;

std::vector<TrivalentGraph> catalog(int max_v, bool loops = true) {
  std::vector<TrivalentGraph> out;
  for (int v = 2; v <= max_v; v += 2)
    for (const auto& g : generate_graphs(GenerateOptions{v, loops})) out.push_back(g);
  return out;
}

std::vector<std::pair<int, int>> face_adjacency(const PlanarMap& map) {
  return map.edge_faces;
}

PlanarMap planar_map(const TrivalentGraph& g) {
  const auto s = summarize_markings(g);
  return extract_map(g, *s.first_spherical);
}

TEST(EdgeColorings, Counts) {
  EXPECT_EQ(count_edge_3_colorings(theta()), 6);
  EXPECT_EQ(count_edge_3_colorings(k4()), 6);
  EXPECT_EQ(count_edge_3_colorings(dumbbell()), 0);
  EXPECT_EQ(count_edge_3_colorings(testing::k33()), 12);
}

TEST(EdgeColorings, ProperAndDistinct) {
  const auto g = cube();
  const auto all = enumerate_edge_3_colorings(g);
  std::set<EdgeColoring> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
  const auto edges = g.edges();
  for (const auto& c : all) {
    std::vector<int> dart_color(static_cast<std::size_t>(g.dart_count()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      ASSERT_GE(c[i], 1);
      ASSERT_LE(c[i], 3);
      dart_color[static_cast<std::size_t>(edges[i].first)] = c[i];
      dart_color[static_cast<std::size_t>(edges[i].second)] = c[i];
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::set<int> seen{dart_color[3 * v], dart_color[3 * v + 1], dart_color[3 * v + 2]};
      EXPECT_EQ(seen.size(), 3U);
    }
  }
}

TEST(EdgeColorings, MatchBruteForce) {
  for (const auto& g : catalog(6)) {
    const auto census = oracle::brute_colorings(g);
    EXPECT_EQ(count_edge_3_colorings(g), census.proper) << serialize_graph(g);
    EXPECT_EQ(penrose_sum(g), Integer(static_cast<long>(census.signed_sum))) << serialize_graph(g);
  }
}

// Carries an edge coloring of g over to flip_vertex(g, v), whose darts 3v+1
// and 3v+2 trade labels.
EdgeColoring transport(const TrivalentGraph& g, int v, const EdgeColoring& c) {
  const auto flipped = flip_vertex(g, v);
  auto to_old = [v](Dart d) {
    if (d == 3 * v + 1) return 3 * v + 2;
    if (d == 3 * v + 2) return 3 * v + 1;
    return d;
  };
  const auto old_index = g.edge_index_of_darts();
  EdgeColoring out;
  for (const auto& [a, b] : flipped.edges()) {
    (void)b;
    out.push_back(c[static_cast<std::size_t>(old_index[static_cast<std::size_t>(to_old(a))])]);
  }
  return out;
}

TEST(ColoringSign, FlipNegates) {
  const auto g = k4();
  for (const auto& c : enumerate_edge_3_colorings(g))
    for (int v = 0; v < 4; ++v)
      EXPECT_EQ(coloring_sign(flip_vertex(g, v), transport(g, v, c)), -coloring_sign(g, c));
  for (int v = 0; v < 4; ++v) EXPECT_EQ(penrose_sum(flip_vertex(g, v)), -penrose_sum(g));
}

TEST(ColoringSign, RejectsImproper) {
  EXPECT_THROW(coloring_sign(theta(), EdgeColoring{1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(coloring_sign(theta(), EdgeColoring{1, 2}), std::invalid_argument);
}

TEST(ColoringSign, ConstantOnPlanarRotations) {
  for (const auto& g : catalog(6)) {
    const auto s = summarize_markings(g);
    if (!s.first_spherical) continue;
    const auto planar = rotation_of_marking(g, *s.first_spherical);
    const auto colorings = enumerate_edge_3_colorings(planar);
    if (colorings.empty()) continue;
    const int first = coloring_sign(planar, colorings.front());
    for (const auto& c : colorings) EXPECT_EQ(coloring_sign(planar, c), first) << serialize_graph(g);
  }
}

TEST(Penrose, Goldens) {
  EXPECT_EQ(penrose_sum(theta()), -6);
  EXPECT_EQ(penrose_sum(testing::theta_twisted()), 6);
  EXPECT_EQ(penrose_sum(dumbbell()), 0);
  EXPECT_EQ(abs(penrose_sum(k4())), 6);
  EXPECT_EQ(w_sl2(theta()), -12);
  EXPECT_EQ(abs(w_sl2(k4())), 24);
  EXPECT_EQ(w_sl2(dumbbell()), 0);
}

TEST(Penrose, MatchesTensorRoutes) {
  const auto so3 = make_so3_tilde();
  const auto sl2 = make_sl2();
  for (const auto& g : catalog(6)) {
    EXPECT_EQ(Rational(penrose_sum(g)), evaluate_weight(g, so3)) << serialize_graph(g);
    EXPECT_EQ(Rational(w_sl2(g)), evaluate_weight(g, sl2)) << serialize_graph(g);
  }
}

TEST(PlanarMap, Theta) {
  const auto map = extract_map(theta(), Marking::all_plus(2));
  EXPECT_EQ(map.face_count(), 3);
  EXPECT_FALSE(map.has_self_bordering_face());
  EXPECT_EQ(map.outer_face, map.face_of_dart[0]);
  EXPECT_EQ(count_four_colorings(map), 24);
}

TEST(PlanarMap, K4) {
  const auto map = planar_map(k4());
  EXPECT_EQ(map.face_count(), 4);
  std::set<std::pair<int, int>> pairs;
  for (auto [a, b] : map.edge_faces) pairs.insert({std::min(a, b), std::max(a, b)});
  EXPECT_EQ(pairs.size(), 6U);
  EXPECT_EQ(count_four_colorings(map), 24);
}

TEST(PlanarMap, DumbbellBordersItself) {
  const auto map = extract_map(dumbbell(), Marking::all_plus(2));
  EXPECT_EQ(map.face_count(), 3);
  EXPECT_TRUE(map.has_self_bordering_face());
  EXPECT_EQ(count_four_colorings(map), 0);
  EXPECT_TRUE(enumerate_four_colorings(map, false).empty());
  // the bridge has the same face on both sides
  const auto edges = dumbbell().edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!dumbbell().is_loop(edges[i].first))
      EXPECT_EQ(map.edge_faces[i].first, map.edge_faces[i].second);
}

TEST(PlanarMap, RejectsNonSpherical) {
  EXPECT_THROW(extract_map(theta(), Marking({1, -1})), std::invalid_argument);
  EXPECT_THROW(extract_map(testing::k33(), Marking::all_plus(6)), std::invalid_argument);
}

TEST(FourColorings, MatchBruteForce) {
  for (const auto& g : catalog(6)) {
    const auto s = summarize_markings(g);
    if (!s.first_spherical) continue;
    const auto map = extract_map(g, *s.first_spherical);
    EXPECT_EQ(count_four_colorings(map), oracle::brute_four_colorings(map.face_count(), face_adjacency(map)))
        << serialize_graph(g);
  }
  const auto map = planar_map(cube());
  EXPECT_EQ(count_four_colorings(map), oracle::brute_four_colorings(map.face_count(), map.edge_faces));
}

TEST(FourColorings, FixedOuterFace) {
  const auto map = planar_map(cube());
  const auto fixed = enumerate_four_colorings(map, true);
  for (const auto& fc : fixed) EXPECT_EQ(fc[static_cast<std::size_t>(map.outer_face)], 0);
  EXPECT_EQ(static_cast<long long>(fixed.size()) * 4, count_four_colorings(map));
}

TEST(Tait, ThetaExample) {
  const auto map = extract_map(theta(), Marking::all_plus(2));
  FaceColoring fc(3);
  fc[static_cast<std::size_t>(map.face_of_dart[0])] = 0b00;
  fc[static_cast<std::size_t>(map.face_of_dart[1])] = 0b01;
  fc[static_cast<std::size_t>(map.face_of_dart[2])] = 0b10;
  // edges in lower-dart order: (0,3), (1,5), (2,4)
  EXPECT_EQ(tait_edge_coloring(map, fc), (EdgeColoring{1, 3, 2}));
}

TEST(Tait, ShiftInvariant) {
  const auto map = planar_map(cube());
  for (const auto& fc : enumerate_four_colorings(map, true)) {
    const auto base = tait_edge_coloring(map, fc);
    for (std::uint8_t shift = 1; shift < 4; ++shift) {
      FaceColoring moved = fc;
      for (auto& c : moved) c ^= shift;
      EXPECT_EQ(tait_edge_coloring(map, moved), base);
    }
  }
}

TEST(Tait, K4PerfectMatchings) {
  const auto g = k4();
  const auto map = planar_map(g);
  const auto ec = tait_edge_coloring(map, FaceColoring{0, 1, 2, 3});
  const auto edges = g.edges();
  for (std::uint8_t color = 1; color <= 3; ++color) {
    std::set<int> vertices;
    int count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (ec[i] != color) continue;
      ++count;
      vertices.insert(TrivalentGraph::vertex_of(edges[i].first));
      vertices.insert(TrivalentGraph::vertex_of(edges[i].second));
    }
    EXPECT_EQ(count, 2);
    EXPECT_EQ(vertices.size(), 4U);
  }
}

TEST(Tait, RejectsImproperFaceColoring) {
  const auto map = extract_map(theta(), Marking::all_plus(2));
  EXPECT_THROW(tait_edge_coloring(map, FaceColoring{0, 0, 1}), std::invalid_argument);
}

TEST(Tait, Bijection) {
  for (const auto& g : {theta(), k4(), cube()}) {
    const auto map = planar_map(g);
    EXPECT_FALSE(verify_tait_bijection(map).has_value()) << serialize_graph(g);
    EXPECT_EQ(count_four_colorings(map), 4 * count_edge_3_colorings(g));
  }
  for (const auto& g : catalog(6, false)) {
    if (!is_two_connected(g)) continue;
    const auto s = summarize_markings(g);
    if (!s.first_spherical) continue;
    EXPECT_FALSE(verify_tait_bijection(extract_map(g, *s.first_spherical)).has_value()) << serialize_graph(g);
  }
}

}  // namespace
}  // namespace wsys
