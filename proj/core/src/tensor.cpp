#include "wsys/tensor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace wsys {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t out = 1;
  for (int i = 0; i < exp; ++i) out *= static_cast<std::size_t>(base);
  return out;
}

}  // namespace

DenseTensor::DenseTensor(std::vector<int> legs, int dim)
    : legs_(std::move(legs)), dim_(dim), data_(ipow(dim, static_cast<int>(legs_.size()))) {}

DenseTensor contract(const DenseTensor& a, const DenseTensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("contract: dimension mismatch");
  const int dim = a.dim();

  // Leg positions: for each leg of a, its position in b (or -1).
  std::vector<int> a_in_b(static_cast<std::size_t>(a.rank()), -1);
  std::vector<char> b_shared(static_cast<std::size_t>(b.rank()), 0);
  for (int i = 0; i < a.rank(); ++i) {
    const auto& bl = b.legs();
    const auto it = std::find(bl.begin(), bl.end(), a.legs()[static_cast<std::size_t>(i)]);
    if (it != bl.end()) {
      const auto j = static_cast<int>(it - bl.begin());
      a_in_b[static_cast<std::size_t>(i)] = j;
      b_shared[static_cast<std::size_t>(j)] = 1;
    }
  }

  std::vector<int> out_legs;
  std::vector<int> a_free;
  std::vector<int> b_free;
  for (int i = 0; i < a.rank(); ++i) {
    if (a_in_b[static_cast<std::size_t>(i)] < 0) {
      a_free.push_back(i);
      out_legs.push_back(a.legs()[static_cast<std::size_t>(i)]);
    }
  }
  for (int j = 0; j < b.rank(); ++j) {
    if (!b_shared[static_cast<std::size_t>(j)]) {
      b_free.push_back(j);
      out_legs.push_back(b.legs()[static_cast<std::size_t>(j)]);
    }
  }
  DenseTensor out(out_legs, dim);

  auto strides = [dim](int rank) {
    std::vector<std::size_t> s(static_cast<std::size_t>(rank));
    std::size_t acc = 1;
    for (int i = rank - 1; i >= 0; --i) {
      s[static_cast<std::size_t>(i)] = acc;
      acc *= static_cast<std::size_t>(dim);
    }
    return s;
  };
  const auto a_stride = strides(a.rank());
  const auto b_stride = strides(b.rank());
  const std::size_t b_free_size = ipow(dim, static_cast<int>(b_free.size()));

  // Offsets into b for every assignment of b's free legs, in output order.
  std::vector<std::size_t> b_free_offset(b_free_size, 0);
  for (std::size_t k = 0; k < b_free_size; ++k) {
    std::size_t rest = k;
    std::size_t off = 0;
    for (int i = static_cast<int>(b_free.size()) - 1; i >= 0; --i) {
      off += (rest % static_cast<std::size_t>(dim)) *
             b_stride[static_cast<std::size_t>(b_free[static_cast<std::size_t>(i)])];
      rest /= static_cast<std::size_t>(dim);
    }
    b_free_offset[k] = off;
  }

  std::vector<int> digits(static_cast<std::size_t>(a.rank()));
  Rational product;
  for (std::size_t ia = 0; ia < a.size(); ++ia) {
    if (sgn(a[ia]) == 0) continue;
    std::size_t rest = ia;
    for (int i = a.rank() - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::size_t>(dim));
      rest /= static_cast<std::size_t>(dim);
    }
    std::size_t b_base = 0;
    std::size_t out_base = 0;
    for (int i = 0; i < a.rank(); ++i) {
      const int j = a_in_b[static_cast<std::size_t>(i)];
      if (j >= 0)
        b_base += static_cast<std::size_t>(digits[static_cast<std::size_t>(i)]) *
                  b_stride[static_cast<std::size_t>(j)];
    }
    for (const int i : a_free)
      out_base = out_base * static_cast<std::size_t>(dim) +
                 static_cast<std::size_t>(digits[static_cast<std::size_t>(i)]);
    out_base *= b_free_size;
    for (std::size_t k = 0; k < b_free_size; ++k) {
      const Rational& bv = b[b_base + b_free_offset[k]];
      if (sgn(bv) == 0) continue;
      mpq_mul(product.get_mpq_t(), a[ia].get_mpq_t(), bv.get_mpq_t());
      out[out_base + k] += product;
    }
  }
  return out;
}

ContractionPlan plan_contraction(const TrivalentGraph& g) {
  const int v = g.vertex_count();
  const int darts = g.dart_count();
  const auto edge_of = g.edge_index_of_darts();

  ContractionPlan plan;
  plan.initial_nodes = v + g.edge_count();

  std::vector<int> rank(static_cast<std::size_t>(plan.initial_nodes), 0);
  std::vector<char> alive(static_cast<std::size_t>(plan.initial_nodes), 1);
  // Each dart is a bond between two nodes.
  std::vector<std::pair<int, int>> ends(static_cast<std::size_t>(darts));
  for (Dart d = 0; d < darts; ++d) {
    const int vn = TrivalentGraph::vertex_of(d);
    const int en = v + edge_of[static_cast<std::size_t>(d)];
    ends[static_cast<std::size_t>(d)] = {vn, en};
    ++rank[static_cast<std::size_t>(vn)];
    ++rank[static_cast<std::size_t>(en)];
  }
  std::vector<char> bond_live(static_cast<std::size_t>(darts), 1);
  plan.max_rank = v > 0 ? 3 : 0;

  for (;;) {
    int best_bond = -1;
    int best_rank = std::numeric_limits<int>::max();
    for (Dart d = 0; d < darts; ++d) {
      if (!bond_live[static_cast<std::size_t>(d)]) continue;
      const auto [x, y] = ends[static_cast<std::size_t>(d)];
      int shared = 0;
      for (Dart e = 0; e < darts; ++e) {
        if (!bond_live[static_cast<std::size_t>(e)]) continue;
        const auto [p, q] = ends[static_cast<std::size_t>(e)];
        if ((p == x && q == y) || (p == y && q == x)) ++shared;
      }
      const int r = rank[static_cast<std::size_t>(x)] + rank[static_cast<std::size_t>(y)] - 2 * shared;
      if (r < best_rank) {
        best_rank = r;
        best_bond = d;
      }
    }
    if (best_bond < 0) break;

    const auto [x, y] = ends[static_cast<std::size_t>(best_bond)];
    const int z = static_cast<int>(rank.size());
    rank.push_back(best_rank);
    alive.push_back(1);
    alive[static_cast<std::size_t>(x)] = 0;
    alive[static_cast<std::size_t>(y)] = 0;
    for (Dart e = 0; e < darts; ++e) {
      if (!bond_live[static_cast<std::size_t>(e)]) continue;
      auto& [p, q] = ends[static_cast<std::size_t>(e)];
      const bool px = p == x || p == y;
      const bool qx = q == x || q == y;
      if (px && qx) {
        bond_live[static_cast<std::size_t>(e)] = 0;
      } else if (px) {
        p = z;
      } else if (qx) {
        q = z;
      }
    }
    plan.steps.push_back({x, y, z, best_rank});
    plan.max_rank = std::max(plan.max_rank, best_rank);
  }

  for (std::size_t n = 0; n < alive.size(); ++n)
    if (alive[n]) plan.roots.push_back(static_cast<int>(n));
  return plan;
}

Rational execute_plan(const ContractionPlan& plan, std::vector<DenseTensor> nodes) {
  if (static_cast<int>(nodes.size()) != plan.initial_nodes)
    throw std::invalid_argument("execute_plan: node count does not match plan");
  for (const auto& step : plan.steps) {
    DenseTensor merged = contract(nodes[static_cast<std::size_t>(step.left)],
                                  nodes[static_cast<std::size_t>(step.right)]);
    nodes[static_cast<std::size_t>(step.left)] = DenseTensor();
    nodes[static_cast<std::size_t>(step.right)] = DenseTensor();
    nodes.push_back(std::move(merged));
  }
  Rational value = 1;
  for (const int r : plan.roots) {
    const auto& t = nodes[static_cast<std::size_t>(r)];
    if (t.rank() != 0) throw std::logic_error("execute_plan: open legs after contraction");
    value *= t[0];
  }
  return value;
}

}  // namespace wsys
