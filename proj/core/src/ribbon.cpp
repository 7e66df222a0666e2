#include "wsys/ribbon.hpp"

#include <bit>
#include <stdexcept>

#include "wsys/parallel.hpp"

namespace wsys {

Marking::Marking(std::vector<int> signs) : signs_(std::move(signs)) {
  for (const int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("marking entries must be +1 or -1");
}

Marking Marking::from_mask(int vertex_count, std::uint64_t mask) {
  std::vector<int> signs(static_cast<std::size_t>(vertex_count), 1);
  for (int i = 0; i < vertex_count; ++i)
    if ((mask >> i) & 1U) signs[static_cast<std::size_t>(i)] = -1;
  return Marking(std::move(signs));
}

Marking Marking::all_plus(int vertex_count) { return from_mask(vertex_count, 0); }

int Marking::sign() const {
  int s = 1;
  for (const int x : signs_) s *= x;
  return s;
}

std::uint64_t Marking::mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] < 0) m |= std::uint64_t{1} << i;
  return m;
}

TrivalentGraph rotation_of_marking(const TrivalentGraph& g, const Marking& m) {
  if (m.size() != g.vertex_count())
    throw std::invalid_argument("marking length does not match vertex count");
  TrivalentGraph out = g;
  for (int i = 0; i < m.size(); ++i)
    if (m[i] < 0) out = flip_vertex(out, i);
  return out;
}

namespace {

// Faces of the rotation in which '-' vertices (bits of mask) turn clockwise.
// Equivalent to face_count(rotation_of_marking(g, m)) without relabelling.
int faces_under_mask(const TrivalentGraph& g, std::uint64_t mask, std::vector<char>& seen) {
  const int n = g.dart_count();
  std::fill(seen.begin(), seen.end(), 0);
  int faces = 0;
  for (Dart start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++faces;
    Dart d = start;
    while (!seen[static_cast<std::size_t>(d)]) {
      seen[static_cast<std::size_t>(d)] = 1;
      const Dart o = g.opposite(d);
      d = ((mask >> TrivalentGraph::vertex_of(o)) & 1U) ? TrivalentGraph::prev_ccw(o)
                                                         : TrivalentGraph::next_ccw(o);
    }
  }
  return faces;
}

int genus_from_boundary(int vertex_count, int boundary) {
  const int twice = vertex_count / 2 + 2 - boundary;
  if (twice < 0 || twice % 2 != 0)
    throw std::logic_error("boundary count violates the Euler relation");
  return twice / 2;
}

struct Partial {
  std::vector<long long> by_exponent;  // signed marking counts per b(T_M)
  long long spherical = 0;
  bool saw_plus = false;
  bool saw_minus = false;
  std::optional<std::uint64_t> first_spherical;
};

}  // namespace

int boundary_count(const TrivalentGraph& g, const Marking& m) {
  return face_count(rotation_of_marking(g, m));
}

int genus_of_marking(const TrivalentGraph& g, const Marking& m) {
  return genus_from_boundary(g.vertex_count(), boundary_count(g, m));
}

MarkingSummary summarize_markings(const TrivalentGraph& g, unsigned jobs) {
  const int v = g.vertex_count();
  if (!is_connected(g)) throw std::invalid_argument("marking sums need a connected graph");
  if (v > 62) throw std::invalid_argument("marking sum limited to 62 vertices");
  const std::uint64_t total = std::uint64_t{1} << v;
  const int top = v / 2 + 2;

  const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 64);
  std::vector<Partial> partials(static_cast<std::size_t>(chunk_count));
  parallel_for(static_cast<std::size_t>(chunk_count), jobs, [&](std::size_t c) {
    Partial& part = partials[c];
    part.by_exponent.assign(static_cast<std::size_t>(top + 1), 0);
    std::vector<char> seen(static_cast<std::size_t>(g.dart_count()));
    const std::uint64_t begin = total * c / chunk_count;
    const std::uint64_t end = total * (c + 1) / chunk_count;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      const int b = faces_under_mask(g, mask, seen);
      const int gen = genus_from_boundary(v, b);
      const bool minus = std::popcount(mask) % 2 == 1;
      part.by_exponent[static_cast<std::size_t>(b)] += minus ? -1 : 1;
      if (gen == 0) {
        ++part.spherical;
        (minus ? part.saw_minus : part.saw_plus) = true;
        if (!part.first_spherical) part.first_spherical = mask;
      }
    }
  });

  MarkingSummary out;
  std::vector<Integer> coeffs(static_cast<std::size_t>(top + 1));
  bool saw_plus = false;
  bool saw_minus = false;
  for (const Partial& part : partials) {
    for (std::size_t b = 0; b < part.by_exponent.size(); ++b)
      coeffs[b] += Integer(static_cast<long>(part.by_exponent[b]));
    out.spherical += part.spherical;
    saw_plus = saw_plus || part.saw_plus;
    saw_minus = saw_minus || part.saw_minus;
    if (!out.first_spherical && part.first_spherical)
      out.first_spherical = Marking::from_mask(v, *part.first_spherical);
  }
  for (std::size_t b = 0; b < coeffs.size(); ++b)
    out.wgl.add_term(coeffs[b], static_cast<unsigned>(b));
  out.w_top = out.wgl.coefficient(static_cast<unsigned>(top));
  out.spherical_signs_agree = !(saw_plus && saw_minus);
  return out;
}

IntPolynomial wgl_polynomial(const TrivalentGraph& g, unsigned jobs) {
  return summarize_markings(g, jobs).wgl;
}

Integer w_top(const TrivalentGraph& g) { return summarize_markings(g).w_top; }

long long count_spherical_embeddings(const TrivalentGraph& g) {
  return summarize_markings(g).spherical;
}

bool is_planar(const TrivalentGraph& g) { return count_spherical_embeddings(g) > 0; }

}  // namespace wsys
