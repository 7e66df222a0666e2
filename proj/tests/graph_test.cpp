#include "wsys/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "wsys/catalog.hpp"

namespace wsys {
namespace {

using testing::dumbbell;
using testing::k4;
using testing::theta;
using testing::theta_twisted;

ParseErrorKind parse_error_kind(const std::string& text, int* line = nullptr) {
  try {
    parse_graph(text);
  } catch (const GraphParseError& err) {
    if (line) *line = err.line();
    return err.kind();
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return ParseErrorKind::Syntax;
}

TEST(ParseGraph, Theta) {
  const auto g = parse_graph("v 2\ne 0 3\ne 1 4\ne 2 5\n");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.involution(), (std::vector<Dart>{3, 4, 5, 0, 1, 2}));
  EXPECT_FALSE(g.has_loop());
  EXPECT_EQ(g.euler_characteristic(), -1);
}

TEST(ParseGraph, DumbbellHasLoops) {
  const auto g = dumbbell();
  EXPECT_EQ(g.involution(), (std::vector<Dart>{1, 0, 5, 4, 3, 2}));
  EXPECT_TRUE(g.is_loop(0));
  EXPECT_TRUE(g.is_loop(3));
  EXPECT_FALSE(g.is_loop(2));
}

TEST(ParseGraph, CommentsAndBlankLinesAreSkipped) {
  const auto g = parse_graph("# a comment\n\n  v 2\n# another\ne 0 3\n\ne 1 4\r\ne 2 5");
  EXPECT_EQ(g, theta_twisted());
}

TEST(ParseGraph, DuplicateDart) {
  int line = 0;
  EXPECT_EQ(parse_error_kind("v 2\ne 0 3\ne 1 4\ne 1 5\n", &line), ParseErrorKind::DuplicateDart);
  EXPECT_EQ(line, 4);
}

TEST(ParseGraph, SelfPairedDart) {
  EXPECT_EQ(parse_error_kind("v 2\ne 0 0\ne 1 4\ne 2 5\n"), ParseErrorKind::SelfPairedDart);
}

TEST(ParseGraph, MissingDart) {
  EXPECT_EQ(parse_error_kind("v 2\ne 0 3\ne 1 4\n"), ParseErrorKind::MissingDart);
}

TEST(ParseGraph, BadCounts) {
  int line = 0;
  EXPECT_EQ(parse_error_kind("v 3\n", &line), ParseErrorKind::BadCount);
  EXPECT_EQ(line, 1);
  EXPECT_EQ(parse_error_kind("v -2\n"), ParseErrorKind::BadCount);
  EXPECT_EQ(parse_error_kind("v 2\ne 0 3\ne 1 4\ne 2 5\ne 0 1\n", &line), ParseErrorKind::BadCount);
  EXPECT_EQ(line, 5);
}

TEST(ParseGraph, SyntaxErrors) {
  EXPECT_EQ(parse_error_kind("e 0 3\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_error_kind("v two\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_error_kind("v 2\ne 0\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_error_kind("v 2\nx 0 1\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_error_kind("v 2\ne 0 6\ne 1 4\ne 2 5\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_error_kind("v 2\nv 2\n"), ParseErrorKind::Syntax);
  EXPECT_EQ(parse_error_kind(""), ParseErrorKind::Syntax);
}

TEST(TrivalentGraph, RejectsBadInvolutions) {
  EXPECT_THROW(TrivalentGraph({1, 0, 3, 2}), std::invalid_argument);
  EXPECT_THROW(TrivalentGraph({0, 2, 1, 4, 3, 5}), std::invalid_argument);
  EXPECT_THROW(TrivalentGraph({3, 4, 5, 1, 0, 2}), std::invalid_argument);
}

TEST(SerializeGraph, CanonicalText) {
  EXPECT_EQ(serialize_graph(theta_twisted()), "v 2\ne 0 3\ne 1 4\ne 2 5\n");
  EXPECT_EQ(serialize_graph(dumbbell()), "v 2\ne 0 1\ne 2 5\ne 3 4\n");
  EXPECT_EQ(parse_graph(serialize_graph(k4())), k4());
}

TEST(SerializeGraph, RoundTripOnRandomInvolutions) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = 2 * (1 + static_cast<int>(rng() % 6));
    std::vector<Dart> darts(static_cast<std::size_t>(3 * v));
    for (int i = 0; i < 3 * v; ++i) darts[static_cast<std::size_t>(i)] = i;
    std::shuffle(darts.begin(), darts.end(), rng);
    std::vector<Dart> alpha(darts.size());
    for (std::size_t i = 0; i < darts.size(); i += 2) {
      alpha[static_cast<std::size_t>(darts[i])] = darts[i + 1];
      alpha[static_cast<std::size_t>(darts[i + 1])] = darts[i];
    }
    const TrivalentGraph g(alpha);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

TEST(Connectivity, Basic) {
  EXPECT_TRUE(is_connected(theta()));
  EXPECT_TRUE(is_connected(dumbbell()));
  EXPECT_FALSE(is_connected(parse_graph("v 4\ne 0 3\ne 1 4\ne 2 5\ne 6 9\ne 7 10\ne 8 11\n")));
  EXPECT_FALSE(is_connected(parse_graph("v 0\n")));
}

TEST(Connectivity, TwoConnected) {
  EXPECT_TRUE(is_two_connected(theta()));
  EXPECT_FALSE(is_two_connected(dumbbell()));
  EXPECT_TRUE(is_two_connected(k4()));
  EXPECT_TRUE(is_two_connected(testing::cube()));
  EXPECT_TRUE(is_two_connected(testing::k33()));
  // Two thetas with one edge each cut and rejoined across: a bridge-free
  // ring of two digons is 2-connected.
  EXPECT_TRUE(is_two_connected(parse_graph("v 4\ne 0 3\ne 1 4\ne 2 6\ne 5 9\ne 7 10\ne 8 11\n")));
}

TEST(Connectivity, LoopsNeverTwoConnected) {
  for (const auto& g : generate_graphs(GenerateOptions{4, true}))
    if (g.has_loop()) EXPECT_FALSE(is_two_connected(g)) << serialize_graph(g);
}

TEST(Connectivity, BridgeWithoutLoopsIsNotTwoConnected) {
  // The smallest loop-free graphs with a bridge appear at v = 6.
  bool found = false;
  for (const auto& g : generate_graphs(GenerateOptions{6, false})) {
    if (!is_two_connected(g)) {
      found = true;
      EXPECT_FALSE(g.has_loop());
    }
  }
  EXPECT_TRUE(found);
}

TEST(FlipVertex, ReordersDarts) {
  EXPECT_EQ(flip_vertex(theta_twisted(), 1), theta());
  EXPECT_EQ(flip_vertex(theta(), 0), theta_twisted());
  EXPECT_THROW(flip_vertex(theta(), 2), std::out_of_range);
  EXPECT_THROW(flip_vertex(theta(), -1), std::out_of_range);
}

TEST(FlipVertex, IsAnInvolution) {
  for (const auto& g : generate_graphs(GenerateOptions{4, true}))
    for (int i = 0; i < g.vertex_count(); ++i) EXPECT_EQ(flip_vertex(flip_vertex(g, i), i), g);
}

TEST(FaceOrbits, HandTraces) {
  EXPECT_EQ(face_orbits(theta_twisted()), (std::vector<std::vector<Dart>>{{0, 4, 2, 3, 1, 5}}));
  EXPECT_EQ(face_orbits(theta()), (std::vector<std::vector<Dart>>{{0, 4}, {1, 3}, {2, 5}}));
  EXPECT_EQ(face_orbits(dumbbell()), (std::vector<std::vector<Dart>>{{0, 2, 3, 5}, {1}, {4}}));
  EXPECT_EQ(face_count(k4()), 4);
}

TEST(Genus, SmallGraphs) {
  EXPECT_EQ(genus(dumbbell()), 0);
  EXPECT_EQ(genus(theta()), 0);
  EXPECT_EQ(genus(theta_twisted()), 1);
  EXPECT_EQ(genus(k4()), 0);
  EXPECT_EQ(genus(testing::cube()), 0);
  EXPECT_GT(genus(testing::k33()), 0);
}

TEST(Genus, EulerParityAcrossFlips) {
  for (int v = 2; v <= 6; v += 2) {
    for (const auto& g : generate_graphs(GenerateOptions{v, true})) {
      TrivalentGraph h = g;
      for (int i = 0; i < v; ++i) {
        h = flip_vertex(h, i);
        const int f = face_count(h);
        EXPECT_EQ((h.vertex_count() - h.edge_count() + f) % 2, 0);
        EXPECT_GE(genus(h), 0);
        EXPECT_EQ(2 - 2 * genus(h), h.vertex_count() - h.edge_count() + f);
      }
    }
  }
}

}  // namespace
}  // namespace wsys
