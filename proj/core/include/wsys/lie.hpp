#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wsys/graph.hpp"
#include "wsys/rational.hpp"

namespace wsys {

// A finite-dimensional Lie algebra with an ad-invariant, symmetric,
// non-degenerate bilinear form, written in a fixed basis L_1..L_dim.
//
//   f(a,b,c) = <L_a, [L_b, L_c]>,   t(a,b) = <L_a, L_b>,   t_inv = t^-1.
struct MetrizedLieAlgebra {
  std::string name;
  int dim = 0;
  std::vector<Rational> f;  // dim^3 entries, row-major in (a,b,c)
  RationalMatrix t;
  RationalMatrix t_inv;

  MetrizedLieAlgebra() = default;
  MetrizedLieAlgebra(std::string name, int dim);

  Rational& f_at(int a, int b, int c) { return f[index(a, b, c)]; }
  const Rational& f_at(int a, int b, int c) const { return f[index(a, b, c)]; }

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * dim + b) * dim + c;
  }
};

// gl(n) in the matrix-unit basis E_ij (index i*n + j) with the trace form.
MetrizedLieAlgebra make_gl(int n);
// so(3) with the standard basis orthonormal: f = epsilon, t = identity.
MetrizedLieAlgebra make_so3_tilde();
// so(3) with half the orthonormal metric: t = id/2, f = epsilon/2.
MetrizedLieAlgebra make_sl2();
// sl(2) in the basis (e, f, h) with the matrix trace form of the defining
// representation. Its weights agree with gl(2) on every graph.
MetrizedLieAlgebra make_sl2_trace();
// n-dimensional Abelian algebra, identity metric.
MetrizedLieAlgebra make_abelian(int n);

class AlgebraNameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts "gl:<n>", "so3", "sl2", "sl2-trace" and "abelian:<n>".
MetrizedLieAlgebra algebra_by_name(std::string_view name);

enum class ViolationKind {
  MetricNotSymmetric,
  MetricDegenerate,
  InverseMismatch,
  NotCyclic,
  NotAntisymmetric,
  Jacobi,
};

std::string_view to_string(ViolationKind kind);

struct AlgebraViolation {
  ViolationKind kind;
  std::vector<int> indices;  // zero-based basis indices where the check failed
  std::string message;
};

// First violated axiom, or nullopt when every check passes.
std::optional<AlgebraViolation> validate_algebra(const MetrizedLieAlgebra& alg);

// Rewrites the algebra in the basis L'_a = sum_b P(b,a) L_b. Throws
// std::invalid_argument when P is singular or has the wrong shape.
MetrizedLieAlgebra change_basis(const MetrizedLieAlgebra& alg, const RationalMatrix& p);

// Replaces the form by lambda * form; f scales by lambda, t_inv by 1/lambda.
MetrizedLieAlgebra scale_metric(const MetrizedLieAlgebra& alg, const Rational& lambda);

// The weight W_L(G): one basis index per dart, a factor f read
// counterclockwise at each vertex, a factor t_inv along each edge, summed over
// all assignments. Evaluated by greedy pairwise tensor contraction.
Rational evaluate_weight(const TrivalentGraph& g, const MetrizedLieAlgebra& alg);

}  // namespace wsys
