#pragma once

#include <cstddef>
#include <vector>

#include "wsys/graph.hpp"
#include "wsys/rational.hpp"

namespace wsys {

// Dense tensor whose legs are labelled by bond ids; every leg has the same
// dimension. Entries are row-major with the first leg most significant.
class DenseTensor {
 public:
  DenseTensor() = default;
  DenseTensor(std::vector<int> legs, int dim);

  const std::vector<int>& legs() const { return legs_; }
  int rank() const { return static_cast<int>(legs_.size()); }
  int dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  Rational& operator[](std::size_t i) { return data_[i]; }
  const Rational& operator[](std::size_t i) const { return data_[i]; }

 private:
  std::vector<int> legs_;
  int dim_ = 0;
  std::vector<Rational> data_;
};

// Sums over every bond shared by a and b; the result carries a's free legs
// followed by b's free legs.
DenseTensor contract(const DenseTensor& a, const DenseTensor& b);

struct ContractionStep {
  int left = 0;
  int right = 0;
  int result = 0;       // id of the new node
  int result_rank = 0;
};

// Pairwise contraction order for the network of a trivalent graph. Nodes
// 0..v-1 are vertex tensors (legs = the vertex's darts), nodes v..v+e-1 are
// edge tensors (legs = the edge's two darts, in edges() order); each
// contraction appends a node. Greedy: contract the adjacent pair whose result
// has the smallest rank, ties broken by the lowest shared dart.
struct ContractionPlan {
  int initial_nodes = 0;
  std::vector<ContractionStep> steps;
  std::vector<int> roots;  // scalar nodes left after the last step
  int max_rank = 0;
};

ContractionPlan plan_contraction(const TrivalentGraph& g);

// Runs the plan on the given initial tensors (indexed like the plan's nodes)
// and multiplies the remaining scalars.
Rational execute_plan(const ContractionPlan& plan, std::vector<DenseTensor> nodes);

}  // namespace wsys
