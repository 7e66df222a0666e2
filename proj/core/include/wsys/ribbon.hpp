#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wsys/graph.hpp"
#include "wsys/polynomial.hpp"

namespace wsys {

// A sign per vertex. '-' vertices are thickened as twisted joints, which is
// the same as reversing their cyclic order.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::vector<int> signs);  // entries must be +1 or -1

  // Bit i of `mask` set means vertex i is marked '-'.
  static Marking from_mask(int vertex_count, std::uint64_t mask);
  static Marking all_plus(int vertex_count);

  int size() const { return static_cast<int>(signs_.size()); }
  int operator[](int vertex) const { return signs_[static_cast<std::size_t>(vertex)]; }
  int sign() const;
  std::uint64_t mask() const;

  const std::vector<int>& signs() const { return signs_; }
  bool operator==(const Marking&) const = default;

 private:
  std::vector<int> signs_;
};

// Throws std::invalid_argument on a length mismatch.
TrivalentGraph rotation_of_marking(const TrivalentGraph& g, const Marking& m);

// Number of boundary circles of the thickening T_M.
int boundary_count(const TrivalentGraph& g, const Marking& m);
// Genus of the closed surface S_M.
int genus_of_marking(const TrivalentGraph& g, const Marking& m);

// Everything the 2^v marking sum produces, computed in one pass.
struct MarkingSummary {
  IntPolynomial wgl;                 // sum over M of sign(M) N^b(T_M)
  Integer w_top;                     // coefficient of N^(v/2+2)
  long long spherical = 0;           // markings with genus 0
  bool spherical_signs_agree = true;
  std::optional<Marking> first_spherical;  // in enumeration order
};

// Markings are enumerated as a binary counter with vertex 0 least
// significant; `jobs` threads share the range and partial sums are combined
// in range order. Requires v <= 62.
MarkingSummary summarize_markings(const TrivalentGraph& g, unsigned jobs = 1);

IntPolynomial wgl_polynomial(const TrivalentGraph& g, unsigned jobs = 1);
Integer w_top(const TrivalentGraph& g);
long long count_spherical_embeddings(const TrivalentGraph& g);
bool is_planar(const TrivalentGraph& g);

}  // namespace wsys
