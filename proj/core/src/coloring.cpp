#include "wsys/coloring.hpp"

#include <functional>
#include <set>
#include <stdexcept>

namespace wsys {

namespace {

// Backtracks over edges in index order with colors 1, 2, 3.
void for_each_edge_coloring(const TrivalentGraph& g,
                            const std::function<void(const EdgeColoring&)>& visit) {
  if (g.has_loop()) return;
  const auto edges = g.edges();
  EdgeColoring colors(edges.size(), 0);
  std::vector<std::uint8_t> used(static_cast<std::size_t>(g.vertex_count()), 0);

  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (k == edges.size()) {
      visit(colors);
      return;
    }
    const auto u = static_cast<std::size_t>(TrivalentGraph::vertex_of(edges[k].first));
    const auto w = static_cast<std::size_t>(TrivalentGraph::vertex_of(edges[k].second));
    for (std::uint8_t c = 1; c <= 3; ++c) {
      const auto bit = static_cast<std::uint8_t>(1U << c);
      if ((used[u] & bit) || (used[w] & bit)) continue;
      used[u] |= bit;
      used[w] |= bit;
      colors[k] = c;
      step(k + 1);
      used[u] &= static_cast<std::uint8_t>(~bit);
      used[w] &= static_cast<std::uint8_t>(~bit);
    }
    colors[k] = 0;
  };
  step(0);
}

bool is_proper_edge_coloring(const TrivalentGraph& g, const EdgeColoring& c) {
  if (c.size() != static_cast<std::size_t>(g.edge_count())) return false;
  for (const auto x : c)
    if (x < 1 || x > 3) return false;
  const auto edge_of = g.edge_index_of_darts();
  for (int i = 0; i < g.vertex_count(); ++i) {
    const auto a = c[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(3 * i)])];
    const auto b = c[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(3 * i + 1)])];
    const auto d = c[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(3 * i + 2)])];
    if (a == b || b == d || a == d) return false;
    // A loop contributes the same edge twice, caught above.
  }
  return true;
}

}  // namespace

std::vector<EdgeColoring> enumerate_edge_3_colorings(const TrivalentGraph& g) {
  std::vector<EdgeColoring> out;
  for_each_edge_coloring(g, [&](const EdgeColoring& c) { out.push_back(c); });
  return out;
}

long long count_edge_3_colorings(const TrivalentGraph& g) {
  long long n = 0;
  for_each_edge_coloring(g, [&](const EdgeColoring&) { ++n; });
  return n;
}

int coloring_sign(const TrivalentGraph& g, const EdgeColoring& c) {
  if (!is_proper_edge_coloring(g, c)) throw std::invalid_argument("edge coloring is not proper");
  const auto edge_of = g.edge_index_of_darts();
  int sign = 1;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const int first = c[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(3 * i)])];
    const int second = c[static_cast<std::size_t>(edge_of[static_cast<std::size_t>(3 * i + 1)])];
    // (1,2,3), (2,3,1), (3,1,2) are the even readings.
    if (second != first % 3 + 1) sign = -sign;
  }
  return sign;
}

Integer penrose_sum(const TrivalentGraph& g) {
  long long total = 0;
  for_each_edge_coloring(g, [&](const EdgeColoring& c) { total += coloring_sign(g, c); });
  return Integer(static_cast<long>(total));
}

Integer w_sl2(const TrivalentGraph& g) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(g.vertex_count() / 2));
  return scale * penrose_sum(g);
}

bool PlanarMap::has_self_bordering_face() const {
  for (const auto& [a, b] : edge_faces)
    if (a == b) return true;
  return false;
}

PlanarMap extract_map(const TrivalentGraph& g, const Marking& m) {
  if (genus_of_marking(g, m) != 0)
    throw std::invalid_argument("extract_map needs a spherical marking");
  PlanarMap map;
  map.rotation = rotation_of_marking(g, m);
  map.faces = face_orbits(map.rotation);
  map.face_of_dart.assign(static_cast<std::size_t>(g.dart_count()), -1);
  for (std::size_t f = 0; f < map.faces.size(); ++f)
    for (const Dart d : map.faces[f]) map.face_of_dart[static_cast<std::size_t>(d)] = static_cast<int>(f);
  for (const auto& [a, b] : map.rotation.edges())
    map.edge_faces.emplace_back(map.face_of_dart[static_cast<std::size_t>(a)],
                                map.face_of_dart[static_cast<std::size_t>(b)]);
  map.outer_face = map.face_of_dart.empty() ? 0 : map.face_of_dart[0];
  return map;
}

namespace {

void for_each_four_coloring(const PlanarMap& map, bool fix_outer,
                            const std::function<void(const FaceColoring&)>& visit) {
  if (map.has_self_bordering_face()) return;
  const auto n = static_cast<std::size_t>(map.face_count());
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : map.edge_faces) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  FaceColoring colors(n, 0);
  std::vector<char> assigned(n, 0);

  std::function<void(std::size_t)> step = [&](std::size_t f) {
    if (f == n) {
      visit(colors);
      return;
    }
    const bool pinned = fix_outer && static_cast<int>(f) == map.outer_face;
    for (std::uint8_t c = 0; c < 4; ++c) {
      if (pinned && c != 0) break;
      bool clash = false;
      for (const int nb : adj[f])
        if (assigned[static_cast<std::size_t>(nb)] && colors[static_cast<std::size_t>(nb)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      colors[f] = c;
      assigned[f] = 1;
      step(f + 1);
      assigned[f] = 0;
    }
    colors[f] = 0;
  };
  step(0);
}

}  // namespace

std::vector<FaceColoring> enumerate_four_colorings(const PlanarMap& map, bool fix_outer) {
  std::vector<FaceColoring> out;
  for_each_four_coloring(map, fix_outer, [&](const FaceColoring& c) { out.push_back(c); });
  return out;
}

long long count_four_colorings(const PlanarMap& map) {
  long long n = 0;
  for_each_four_coloring(map, false, [&](const FaceColoring&) { ++n; });
  return n;
}

EdgeColoring tait_edge_coloring(const PlanarMap& map, const FaceColoring& fc) {
  if (fc.size() != static_cast<std::size_t>(map.face_count()))
    throw std::invalid_argument("face coloring has the wrong length");
  for (const auto x : fc)
    if (x > 3) throw std::invalid_argument("face colors must lie in Z/2 x Z/2");
  EdgeColoring out;
  out.reserve(map.edge_faces.size());
  for (const auto& [a, b] : map.edge_faces) {
    const auto diff = static_cast<std::uint8_t>(fc[static_cast<std::size_t>(a)] ^
                                                fc[static_cast<std::size_t>(b)]);
    if (diff == 0) throw std::invalid_argument("face coloring is not proper");
    out.push_back(diff);  // 01 -> 1, 10 -> 2, 11 -> 3
  }
  return out;
}

std::optional<TaitCounterexample> verify_tait_bijection(const PlanarMap& map) {
  const auto targets_list = enumerate_edge_3_colorings(map.rotation);
  const std::set<EdgeColoring> targets(targets_list.begin(), targets_list.end());
  std::set<EdgeColoring> hit;
  for (const auto& fc : enumerate_four_colorings(map, true)) {
    const EdgeColoring ec = tait_edge_coloring(map, fc);
    if (!is_proper_edge_coloring(map.rotation, ec))
      return TaitCounterexample{"image is not a proper edge coloring", fc, ec};
    if (!targets.contains(ec))
      return TaitCounterexample{"image missing from the edge-3-colorings", fc, ec};
    if (!hit.insert(ec).second) return TaitCounterexample{"two face colorings share an image", fc, ec};
  }
  for (const auto& ec : targets_list)
    if (!hit.contains(ec))
      return TaitCounterexample{"edge-3-coloring not reached", std::nullopt, ec};
  return std::nullopt;
}

}  // namespace wsys
