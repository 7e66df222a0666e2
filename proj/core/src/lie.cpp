#include "wsys/lie.hpp"

#include <array>
#include <charconv>

#include "wsys/tensor.hpp"

namespace wsys {

MetrizedLieAlgebra::MetrizedLieAlgebra(std::string name_, int dim_)
    : name(std::move(name_)),
      dim(dim_),
      f(static_cast<std::size_t>(dim_) * dim_ * dim_),
      t(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)),
      t_inv(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)) {}

MetrizedLieAlgebra make_gl(int n) {
  if (n < 1) throw std::invalid_argument("gl(n) needs n >= 1");
  MetrizedLieAlgebra alg("gl:" + std::to_string(n), n * n);
  auto idx = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // <E_ij, E_kl> = delta_jk delta_il, which is its own inverse.
      alg.t(static_cast<std::size_t>(idx(i, j)), static_cast<std::size_t>(idx(j, i))) = 1;
      alg.t_inv(static_cast<std::size_t>(idx(i, j)), static_cast<std::size_t>(idx(j, i))) = 1;
    }
  }
  // f_(ij)(kl)(mn) = d_jk d_lm d_ni - d_nk d_li d_jm
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // first term: k = j, m = l, n' = i
      for (int l = 0; l < n; ++l) alg.f_at(idx(i, j), idx(j, l), idx(l, i)) += 1;
      // second term: k = n', l = i, m = j
      for (int np = 0; np < n; ++np) alg.f_at(idx(i, j), idx(np, i), idx(j, np)) -= 1;
    }
  }
  return alg;
}

namespace {

int epsilon(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  // (0,1,2) and its cyclic shifts are even.
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

MetrizedLieAlgebra so3_with_metric(std::string name, const Rational& scale) {
  MetrizedLieAlgebra alg(std::move(name), 3);
  for (int a = 0; a < 3; ++a) {
    alg.t(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = scale;
    alg.t_inv(static_cast<std::size_t>(a), static_cast<std::size_t>(a)) = 1 / scale;
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) alg.f_at(a, b, c) = scale * epsilon(a, b, c);
  }
  return alg;
}

using Mat2 = std::array<std::array<long, 2>, 2>;

Mat2 mul(const Mat2& x, const Mat2& y) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

long trace(const Mat2& x) { return x[0][0] + x[1][1]; }

}  // namespace

MetrizedLieAlgebra make_so3_tilde() { return so3_with_metric("so3", Rational(1)); }

MetrizedLieAlgebra make_sl2() { return so3_with_metric("sl2", make_rational(1, 2)); }

MetrizedLieAlgebra make_sl2_trace() {
  const std::array<Mat2, 3> basis{{
      {{{0, 1}, {0, 0}}},   // e
      {{{0, 0}, {1, 0}}},   // f
      {{{1, 0}, {0, -1}}},  // h
  }};
  MetrizedLieAlgebra alg("sl2-trace", 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      alg.t(a, b) = trace(mul(basis[a], basis[b]));
      for (std::size_t c = 0; c < 3; ++c) {
        const long abc = trace(mul(basis[a], mul(basis[b], basis[c])));
        const long acb = trace(mul(basis[a], mul(basis[c], basis[b])));
        alg.f_at(static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)) = abc - acb;
      }
    }
  }
  alg.t_inv = *alg.t.inverse();
  return alg;
}

MetrizedLieAlgebra make_abelian(int n) {
  if (n < 1) throw std::invalid_argument("abelian algebra needs dimension >= 1");
  MetrizedLieAlgebra alg("abelian:" + std::to_string(n), n);
  alg.t = RationalMatrix::identity(static_cast<std::size_t>(n));
  alg.t_inv = alg.t;
  return alg;
}

MetrizedLieAlgebra algebra_by_name(std::string_view name) {
  auto parse_param = [&](std::string_view prefix) -> int {
    const auto rest = name.substr(prefix.size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty() || n < 1)
      throw AlgebraNameError("bad size in algebra name '" + std::string(name) + "'");
    return n;
  };
  if (name == "so3") return make_so3_tilde();
  if (name == "sl2") return make_sl2();
  if (name == "sl2-trace") return make_sl2_trace();
  if (name.starts_with("gl:")) return make_gl(parse_param("gl:"));
  if (name.starts_with("abelian:")) return make_abelian(parse_param("abelian:"));
  throw AlgebraNameError("unknown algebra '" + std::string(name) + "'");
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MetricNotSymmetric: return "metric-not-symmetric";
    case ViolationKind::MetricDegenerate: return "metric-degenerate";
    case ViolationKind::InverseMismatch: return "inverse-mismatch";
    case ViolationKind::NotCyclic: return "not-cyclic";
    case ViolationKind::NotAntisymmetric: return "not-antisymmetric";
    case ViolationKind::Jacobi: return "jacobi";
  }
  return "unknown";
}

std::optional<AlgebraViolation> validate_algebra(const MetrizedLieAlgebra& alg) {
  const int n = alg.dim;
  const auto un = static_cast<std::size_t>(n);
  if (n < 1 || alg.f.size() != un * un * un || alg.t.rows() != un || alg.t.cols() != un ||
      alg.t_inv.rows() != un || alg.t_inv.cols() != un)
    return AlgebraViolation{ViolationKind::MetricDegenerate, {}, "tensor shapes do not match dim"};

  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j)
      if (alg.t(i, j) != alg.t(j, i))
        return AlgebraViolation{ViolationKind::MetricNotSymmetric,
                                {static_cast<int>(i), static_cast<int>(j)},
                                "t(i,j) != t(j,i)"};
  if (!alg.t.inverse())
    return AlgebraViolation{ViolationKind::MetricDegenerate, {}, "metric is singular"};
  const RationalMatrix prod = alg.t * alg.t_inv;
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      if (prod(i, j) != (i == j ? 1 : 0))
        return AlgebraViolation{ViolationKind::InverseMismatch,
                                {static_cast<int>(i), static_cast<int>(j)},
                                "t * t_inv is not the identity"};

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (alg.f_at(a, b, c) != alg.f_at(b, c, a))
          return AlgebraViolation{ViolationKind::NotCyclic, {a, b, c}, "f(a,b,c) != f(b,c,a)"};
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (alg.f_at(a, b, c) != -alg.f_at(a, c, b))
          return AlgebraViolation{ViolationKind::NotAntisymmetric, {a, b, c},
                                  "f(a,b,c) != -f(a,c,b)"};
      }

  // [L_b, L_c] = sum_d k(d,b,c) L_d with k(d,b,c) = sum_a t_inv(d,a) f(a,b,c).
  std::vector<Rational> k(un * un * un);
  auto kat = [&](int d, int b, int c) -> Rational& {
    return k[(static_cast<std::size_t>(d) * un + static_cast<std::size_t>(b)) * un +
             static_cast<std::size_t>(c)];
  };
  for (int d = 0; d < n; ++d)
    for (int a = 0; a < n; ++a) {
      const Rational& ti = alg.t_inv(static_cast<std::size_t>(d), static_cast<std::size_t>(a));
      if (sgn(ti) == 0) continue;
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (sgn(alg.f_at(a, b, c)) != 0) kat(d, b, c) += ti * alg.f_at(a, b, c);
    }
  // [[L_a,L_b],L_c] + [[L_b,L_c],L_a] + [[L_c,L_a],L_b] = 0, coefficient of L_g.
  std::vector<Rational> acc(un);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        std::fill(acc.begin(), acc.end(), Rational(0));
        const std::array<std::array<int, 3>, 3> terms{{{a, b, c}, {b, c, a}, {c, a, b}}};
        for (const auto& [x, y, z] : terms)
          for (int e = 0; e < n; ++e) {
            const Rational& kxy = kat(e, x, y);
            if (sgn(kxy) == 0) continue;
            for (int g = 0; g < n; ++g) acc[static_cast<std::size_t>(g)] += kxy * kat(g, e, z);
          }
        for (int g = 0; g < n; ++g)
          if (sgn(acc[static_cast<std::size_t>(g)]) != 0)
            return AlgebraViolation{ViolationKind::Jacobi, {a, b, c, g},
                                    "Jacobi identity fails"};
      }
  return std::nullopt;
}

MetrizedLieAlgebra change_basis(const MetrizedLieAlgebra& alg, const RationalMatrix& p) {
  const auto un = static_cast<std::size_t>(alg.dim);
  if (p.rows() != un || p.cols() != un)
    throw std::invalid_argument("change_basis: matrix has the wrong shape");
  if (!p.inverse()) throw std::invalid_argument("change_basis: matrix is singular");

  MetrizedLieAlgebra out(alg.name, alg.dim);
  out.t = p.transposed() * alg.t * p;
  out.t_inv = *out.t.inverse();

  // Transform one slot at a time: f'(a,b,c) = sum P(d,a) P(e,b) P(g,c) f(d,e,g).
  const int n = alg.dim;
  std::vector<Rational> cur = alg.f;
  std::vector<Rational> next(cur.size());
  auto at = [un](std::vector<Rational>& v, int i, int j, int l) -> Rational& {
    return v[(static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)) * un +
             static_cast<std::size_t>(l)];
  };
  for (int slot = 0; slot < 3; ++slot) {
    std::fill(next.begin(), next.end(), Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const Rational& val = at(cur, i, j, l);
          if (sgn(val) == 0) continue;
          const int old_index = slot == 0 ? i : slot == 1 ? j : l;
          for (int a = 0; a < n; ++a) {
            const Rational& pa = p(static_cast<std::size_t>(old_index), static_cast<std::size_t>(a));
            if (sgn(pa) == 0) continue;
            const int ni = slot == 0 ? a : i;
            const int nj = slot == 1 ? a : j;
            const int nl = slot == 2 ? a : l;
            at(next, ni, nj, nl) += pa * val;
          }
        }
    std::swap(cur, next);
  }
  out.f = std::move(cur);
  return out;
}

MetrizedLieAlgebra scale_metric(const MetrizedLieAlgebra& alg, const Rational& lambda) {
  if (sgn(lambda) == 0) throw std::invalid_argument("scale_metric: lambda must be non-zero");
  MetrizedLieAlgebra out = alg;
  const auto un = static_cast<std::size_t>(alg.dim);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      out.t(i, j) *= lambda;
      out.t_inv(i, j) /= lambda;
    }
  for (auto& x : out.f) x *= lambda;
  return out;
}

Rational evaluate_weight(const TrivalentGraph& g, const MetrizedLieAlgebra& alg) {
  const int v = g.vertex_count();
  std::vector<DenseTensor> nodes;
  nodes.reserve(static_cast<std::size_t>(v + g.edge_count()));
  for (int i = 0; i < v; ++i) {
    DenseTensor vt({3 * i, 3 * i + 1, 3 * i + 2}, alg.dim);
    for (std::size_t k = 0; k < alg.f.size(); ++k) vt[k] = alg.f[k];
    nodes.push_back(std::move(vt));
  }
  const auto un = static_cast<std::size_t>(alg.dim);
  for (const auto& [a, b] : g.edges()) {
    DenseTensor et({a, b}, alg.dim);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) et[i * un + j] = alg.t_inv(i, j);
    nodes.push_back(std::move(et));
  }
  return execute_plan(plan_contraction(g), std::move(nodes));
}

}  // namespace wsys
