#include "btmf/building.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "btmf/error.hpp"

namespace btmf {

namespace {

FqLaurent lzero(const Context& ctx) { return FqLaurent(ctx.F()); }
FqLaurent lone(const Context& ctx) { return FqLaurent::constant(ctx.F(), 1); }

LaurentMatrix mul(const Context& ctx, const LaurentMatrix& a, const LaurentMatrix& b) {
  return multiply(a, b, lzero(ctx));
}

FqLaurent det(const Context& ctx, const LaurentMatrix& m) { return determinant(m, lzero(ctx), lone(ctx)); }

// valuations of t with v = t B; returns v_pi(t_i) (INT_MAX for t_i = 0)
std::vector<int> coordinate_valuations(const Context& ctx, const LaurentMatrix& B, const LaurentVector& v) {
  const std::size_t r = B.rows();
  auto adj = adjugate(B, lzero(ctx), lone(ctx));
  const FqLaurent d = det(ctx, B);
  std::vector<int> vals(r, INT_MAX);
  for (std::size_t j = 0; j < r; ++j) {
    FqLaurent num = lzero(ctx);
    for (std::size_t i = 0; i < r; ++i) num = num + v[i] * adj(i, j);
    if (!num.is_zero()) vals[j] = num.pi_valuation() - d.pi_valuation();
  }
  return vals;
}

bool is_zero_vector(const LaurentVector& y) {
  return std::all_of(y.begin(), y.end(), [](const FqLaurent& c) { return c.is_zero(); });
}

}  // namespace

// ---- LatticeVertex ----

LatticeVertex::LatticeVertex(const Context& ctx, LaurentMatrix basis) : basis_(std::move(basis)) {
  const std::size_t r = basis_.rows();
  if (r != basis_.cols() || static_cast<int>(r) != ctx.r)
    throw Error(ErrorKind::InvalidArgument, "lattice basis must be r x r");
  int top = kNegInfDegree;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (!basis_(i, j).field()) basis_(i, j) = lzero(ctx);
      top = std::max(top, basis_(i, j).degree());
    }
  if (top == kNegInfDegree || det(ctx, basis_).is_zero())
    throw Error(ErrorKind::SingularMatrix, "lattice basis is singular");
  if (top != 0)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) basis_(i, j) = basis_(i, j).shifted(-top);
}

std::string LatticeVertex::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    s += i ? "; (" : "(";
    for (std::size_t j = 0; j < basis_.cols(); ++j) s += (j ? ", " : "") + basis_(i, j).to_string();
    s += ")";
  }
  return s + "]";
}

// ---- GammaMatrix ----

GammaMatrix::GammaMatrix(const Context& ctx, PolyMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorKind::InvalidArgument, "gamma must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (!m_(i, j).field()) m_(i, j) = FqPoly(ctx.F());
  auto d = determinant(m_, FqPoly(ctx.F()), FqPoly::constant(ctx.F(), 1));
  if (d.degree() != 0) throw Error(ErrorKind::SingularMatrix, "gamma is not unimodular over A");
}

GammaMatrix GammaMatrix::identity(const Context& ctx) {
  return GammaMatrix(ctx, identity_poly(ctx.F(), static_cast<std::size_t>(ctx.r)));
}

GammaMatrix GammaMatrix::inverse(const Context& ctx) const {
  const FqPoly zero(ctx.F()), one = FqPoly::constant(ctx.F(), 1);
  auto adj = adjugate(m_, zero, one);
  auto d = determinant(m_, zero, one);
  const auto dinv = ctx.F().inv(d.leading());
  for (std::size_t i = 0; i < adj.rows(); ++i)
    for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) = adj(i, j).scaled(dinv);
  return GammaMatrix(ctx, std::move(adj));
}

GammaMatrix GammaMatrix::operator*(const GammaMatrix& other) const {
  const FiniteField& F = *m_(0, 0).field();
  GammaMatrix g;
  g.m_ = multiply(m_, other.m_, FqPoly(F));
  return g;
}

// ---- vertices and arrows ----

LatticeVertex standard_vertex(const Context& ctx, const Vertex& n) {
  if (static_cast<int>(n.size()) != ctx.r) throw Error(ErrorKind::InvalidPoint, "vertex rank differs from r");
  LaurentMatrix b(n.size(), n.size(), lzero(ctx));
  for (std::size_t i = 0; i < n.size(); ++i) b(i, i) = FqLaurent::pi_power(ctx.F(), static_cast<int>(n[i]));
  return LatticeVertex(ctx, std::move(b));
}

std::vector<std::vector<FiniteField::Elem>> projective_points(const Context& ctx) {
  std::vector<std::vector<FiniteField::Elem>> pts;
  const int r = ctx.r;
  for (int lead = 0; lead < r; ++lead) {
    const int free = r - 1 - lead;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= ctx.q;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<FiniteField::Elem> c(static_cast<std::size_t>(r), 0);
      c[static_cast<std::size_t>(lead)] = 1;
      std::uint64_t rest = code;
      for (int i = r - 1; i > lead; --i) {
        c[static_cast<std::size_t>(i)] = static_cast<FiniteField::Elem>(rest % ctx.q);
        rest /= ctx.q;
      }
      pts.push_back(std::move(c));
    }
  }
  return pts;
}

std::vector<Arrow> arrows_type1(const Context& ctx, const LatticeVertex& v) {
  const auto& B = v.basis();
  const std::size_t r = B.rows();
  std::vector<Arrow> out;
  for (auto& c : projective_points(ctx)) {
    std::size_t lead = 0;
    while (c[lead] == 0) ++lead;
    LaurentMatrix nb(r, r, lzero(ctx));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == lead) {
          FqLaurent s = lzero(ctx);
          for (std::size_t l = 0; l < r; ++l)
            if (c[l]) s = s + B(l, j).scaled(c[l]);
          nb(i, j) = s;
        } else {
          nb(i, j) = B(i, j).shifted(-1);
        }
      }
    out.push_back(Arrow{v, LatticeVertex(ctx, std::move(nb)), c, 1});
  }
  return out;
}

LatticeVertex shift_toward(const Context& ctx, const LatticeVertex& v, const LaurentVector& y) {
  if (static_cast<int>(y.size()) != ctx.r) throw Error(ErrorKind::InvalidArgument, "vector length differs from r");
  if (is_zero_vector(y)) throw Error(ErrorKind::ZeroVector, "cannot shift toward the zero vector");
  const auto& B = v.basis();
  const std::size_t r = B.rows();
  auto vals = coordinate_valuations(ctx, B, y);
  const int mu = *std::min_element(vals.begin(), vals.end());
  const std::size_t j = static_cast<std::size_t>(std::find(vals.begin(), vals.end(), mu) - vals.begin());
  LaurentMatrix nb(r, r, lzero(ctx));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < r; ++c) {
      if (i == j) {
        const FqLaurent& yc = y[c].field() ? y[c] : lzero(ctx);
        nb(i, c) = yc.shifted(mu);  // pi^{-mu} y
      } else {
        nb(i, c) = B(i, c).shifted(-1);
      }
    }
  return LatticeVertex(ctx, std::move(nb));
}

bool same_vertex(const Context& ctx, const LatticeVertex& a, const LatticeVertex& b) {
  const auto& A = a.basis();
  const auto& B = b.basis();
  auto adj = adjugate(B, lzero(ctx), lone(ctx));
  auto M = mul(ctx, A, adj);
  const int vdetB = det(ctx, B).pi_valuation();
  int minval = INT_MAX;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_zero()) minval = std::min(minval, M(i, j).pi_valuation());
  const int mu = minval - vdetB;
  return det(ctx, A).pi_valuation() - vdetB == ctx.r * mu;
}

bool points_to(const Context& ctx, const Arrow& e, const LaurentVector& y) {
  return same_vertex(ctx, e.target, shift_toward(ctx, e.origin, y));
}

Arrow apartment_arrow(const Context& ctx, const Vertex& from, const Vertex& to) {
  if (!adjacent(from, to)) throw Error(ErrorKind::InvalidArgument, "vertices are not adjacent");
  long long hi = LLONG_MIN;
  for (std::size_t i = 0; i < from.size(); ++i) hi = std::max(hi, to[i] - from[i]);
  int s = 0;
  for (std::size_t i = 0; i < from.size(); ++i) s += (to[i] - from[i] == hi);
  return Arrow{standard_vertex(ctx, from), standard_vertex(ctx, to), {}, ctx.r - s};
}

// ---- reduction ----

ReductionCertificate reduce_to_weyl(const Context& ctx, const LatticeVertex& v) {
  const FiniteField& F = ctx.F();
  const std::size_t r = static_cast<std::size_t>(ctx.r);
  LaurentMatrix M = v.basis();
  PolyMatrix g = identity_poly(F, r);

  auto col_degree = [&](std::size_t j) {
    int d = kNegInfDegree;
    for (std::size_t i = 0; i < r; ++i) d = std::max(d, M(i, j).degree());
    return d;
  };

  std::vector<int> deg(r);
  for (;;) {
    for (std::size_t j = 0; j < r; ++j) {
      deg[j] = col_degree(j);
      if (deg[j] == kNegInfDegree) throw Error(ErrorKind::SingularMatrix, "zero column during reduction");
    }
    FqMatrix lead(r, r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) lead(i, j) = M(i, j).coeff(deg[j]);
    auto kernel = kernel_vector(F, lead);
    if (!kernel) break;
    const auto& c = *kernel;
    std::size_t target = r;
    for (std::size_t j = 0; j < r; ++j)
      if (c[j] && (target == r || deg[j] > deg[target])) target = j;
    const auto cinv = F.inv(c[target]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == target || c[i] == 0) continue;
      const auto coef = F.mul(c[i], cinv);
      const int shift = deg[target] - deg[i];
      const FqPoly mono = FqPoly::monomial(F, coef, shift);
      for (std::size_t row = 0; row < r; ++row) {
        M(row, target) = M(row, target) + M(row, i).scaled(coef).shifted(shift);
        g(row, target) = g(row, target) + g(row, i) * mono;
      }
    }
  }

  // n_j = -deg_j; stable sort columns by n descending
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] < deg[b]; });
  LaurentMatrix Ms(r, r);
  PolyMatrix gs(r, r);
  Vertex n(r);
  for (std::size_t jj = 0; jj < r; ++jj) {
    const std::size_t j = order[jj];
    n[jj] = -deg[j];
    for (std::size_t i = 0; i < r; ++i) {
      Ms(i, jj) = M(i, j).shifted(-deg[j]);
      gs(i, jj) = g(i, j);
    }
  }
  const long long shift = n.back();
  for (auto& c : n) c -= shift;
  return ReductionCertificate{GammaMatrix(ctx, std::move(gs)), std::move(n), std::move(Ms), static_cast<int>(shift)};
}

bool verify_certificate(const Context& ctx, const LatticeVertex& v, const ReductionCertificate& cert) {
  const std::size_t r = static_cast<std::size_t>(ctx.r);
  if (!WeylPoint::from_ints(cert.weyl_rep).in_chamber()) return false;
  auto bg = mul(ctx, v.basis(), to_laurent(cert.gamma.matrix()));
  FqMatrix lead(r, r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      // entry of basis*gamma*diag(pi^{-n_j}) / pi^shift
      FqLaurent u = bg(i, j).shifted(static_cast<int>(cert.weyl_rep[j]) + cert.shift);
      if (!(u == cert.unit_witness(i, j))) return false;
      if (!u.is_zero() && u.degree() > 0) return false;
      lead(i, j) = u.coeff(0);
    }
  return determinant(ctx.F(), lead) != 0;
}

// ---- norms ----

LogValue log_nu(const Context& ctx, const WeylPoint& x, const std::vector<FqPoly>& v) {
  if (static_cast<int>(v.size()) != ctx.r || x.rank() != ctx.r)
    throw Error(ErrorKind::InvalidArgument, "vector length differs from r");
  LogValue best = LogValue::neg_infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) best = max(best, LogValue(Rational(v[i].degree()) + x[static_cast<int>(i)]));
  return best;
}

long long log_nu_lattice(const Context& ctx, const LatticeVertex& L, const LaurentVector& v) {
  if (is_zero_vector(v)) throw Error(ErrorKind::ZeroVector, "norm of the zero vector is not finite");
  auto vals = coordinate_valuations(ctx, L.basis(), v);
  return -static_cast<long long>(*std::min_element(vals.begin(), vals.end()));
}

LatticeVertex act(const Context& ctx, const GammaMatrix& gamma, const LatticeVertex& v) {
  return act_right(ctx, v, gamma.inverse(ctx));
}

LatticeVertex act_right(const Context& ctx, const LatticeVertex& v, const GammaMatrix& gamma) {
  return LatticeVertex(ctx, mul(ctx, v.basis(), to_laurent(gamma.matrix())));
}

LaurentVector to_laurent_vector(const std::vector<FqPoly>& v) { return LaurentVector(v.begin(), v.end()); }

LaurentVector unit_vector(const Context& ctx, int i) {
  LaurentVector e(static_cast<std::size_t>(ctx.r), lzero(ctx));
  e[static_cast<std::size_t>(i - 1)] = lone(ctx);
  return e;
}

}  // namespace btmf
