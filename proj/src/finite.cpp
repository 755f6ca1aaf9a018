#include "btmf/finite.hpp"

#include <algorithm>

#include "btmf/building.hpp"
#include "btmf/error.hpp"
#include "btmf/matrix.hpp"
#include "btmf/rational.hpp"

namespace btmf {

using Elem = ExtField::Elem;

ExtField::ExtField(const Context& ctx, int m) : q_(ctx.q), m_(m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const BigInt order = ipow(ctx.q, static_cast<unsigned>(m));
  if (order > FiniteField::kMaxOrder) throw Error(ErrorKind::GuardExceeded, "q^m exceeds 2^20");
  field_ = &FiniteField::of(order.convert_to<std::uint32_t>());
  for (Elem x = 0; x < field_->order(); ++x)
    if (field_->pow(x, q_) == x) subfield_.push_back(x);
}

Elem ExtField::frobenius(Elem x, int j) const {
  for (int i = 0; i < j; ++i) x = field_->pow(x, q_);
  return x;
}

Elem moore_det(const ExtField& E, const std::vector<Elem>& elems) {
  const std::size_t n = elems.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Moore determinant needs at least one element");
  FqMatrix m(n, n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Elem x = elems[j];
    for (std::size_t i = 0; i < n; ++i) {
      m(j, i) = x;
      x = E.frobenius(x);
    }
  }
  return determinant(E.F(), m);
}

std::vector<Elem> lattice_elements(const ExtField& E, const std::vector<Elem>& basis) {
  const auto& F = E.F();
  std::vector<Elem> out{0};
  for (Elem b : basis) {
    std::vector<Elem> next;
    next.reserve(out.size() * E.q());
    for (Elem c : E.subfield())
      for (Elem x : out) next.push_back(F.add(x, F.mul(c, b)));
    out = std::move(next);
  }
  return out;
}

ExtPoly vanishing_poly(const ExtField& E, const std::vector<Elem>& roots) {
  const auto& F = E.F();
  ExtPoly p{1};
  for (Elem r : roots) {
    ExtPoly next(p.size() + 1, 0);
    const Elem nr = F.neg(r);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], p[i]);
      next[i] = F.add(next[i], F.mul(p[i], nr));
    }
    p = std::move(next);
  }
  return p;
}

Elem evaluate(const ExtField& E, const ExtPoly& p, Elem x) {
  const auto& F = E.F();
  Elem acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

namespace {

void require_independent(const ExtField& E, const std::vector<Elem>& basis) {
  if (basis.empty() || moore_det(E, basis) == 0)
    throw Error(ErrorKind::DependentBasis, "basis is not F_q-linearly independent");
}

std::size_t qpow(const ExtField& E, std::size_t i) {
  std::size_t v = 1;
  for (std::size_t j = 0; j < i; ++j) v *= E.q();
  return v;
}

}  // namespace

std::vector<Elem> exp_coeffs_via_product(const ExtField& E, const std::vector<Elem>& basis) {
  require_independent(E, basis);
  const auto& F = E.F();
  const auto elems = lattice_elements(E, basis);
  const ExtPoly p = vanishing_poly(E, elems);
  Elem norm = 1;
  for (Elem l : elems)
    if (l != 0) norm = F.mul(norm, F.neg(l));
  const Elem inv = F.inv(norm);
  std::vector<Elem> alpha;
  for (std::size_t i = 0; i <= basis.size(); ++i) alpha.push_back(F.mul(p[qpow(E, i)], inv));
  return alpha;
}

std::vector<Elem> exp_coeffs_via_minors(const ExtField& E, const std::vector<Elem>& basis) {
  require_independent(E, basis);
  const auto& F = E.F();
  const std::size_t n = basis.size();
  // rows omega_j, columns omega_j^{q^i}, i = 0..n
  std::vector<std::vector<Elem>> full(n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem x = basis[j];
    for (std::size_t i = 0; i <= n; ++i) {
      full[j].push_back(x);
      x = E.frobenius(x);
    }
  }
  auto minor = [&](std::size_t skip) {
    FqMatrix m(n, n, 0);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0, c = 0; i <= n; ++i)
        if (i != skip) m(j, c++) = full[j][i];
    return determinant(F, m);
  };
  const Elem m0 = minor(0);
  std::vector<Elem> alpha;
  for (std::size_t i = 0; i <= n; ++i) {
    Elem v = F.div(minor(i), m0);
    alpha.push_back(i % 2 ? F.neg(v) : v);
  }
  return alpha;
}

ExpCoefficients exp_poly_coeffs(const ExtField& E, const std::vector<Elem>& basis) {
  const auto via_product = exp_coeffs_via_product(E, basis);
  const auto via_minors = exp_coeffs_via_minors(E, basis);
  if (via_product != via_minors)
    throw Error(ErrorKind::ConsistencyFailure, "product and Moore-minor coefficients differ");
  ExpCoefficients out;
  out.alpha = via_product;
  out.poly.assign(qpow(E, basis.size()) + 1, 0);
  for (std::size_t i = 0; i < out.alpha.size(); ++i) out.poly[qpow(E, i)] = out.alpha[i];
  // the product expansion has no terms outside the q-powers
  const auto elems = lattice_elements(E, basis);
  const ExtPoly p = vanishing_poly(E, elems);
  const Elem lead = out.alpha.back();
  for (std::size_t j = 0; j < p.size(); ++j)
    if (E.F().mul(p[j], lead) != out.poly[j])
      throw Error(ErrorKind::ConsistencyFailure, "lattice exponential is not q-additive");
  return out;
}

namespace {

UElem umul(const FiniteField& F, const UElem& x, const UElem& y) {
  return {F.mul(x.a, y.a), F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}
UElem uadd(const FiniteField& F, const UElem& x, const UElem& y) { return {F.add(x.a, y.a), F.add(x.b, y.b)}; }

std::vector<UElem> valued_elements(const ExtField& E, const ValuedLattice& W) {
  const auto& F = E.F();
  std::vector<UElem> out{UElem{}};
  for (const auto& b : W.basis) {
    std::vector<UElem> next;
    for (Elem c : E.subfield())
      for (const auto& x : out) next.push_back(uadd(F, x, UElem{F.mul(c, b.a), F.mul(c, b.b)}));
    out = std::move(next);
  }
  return out;
}

std::vector<Elem> unit_parts(const ValuedLattice& W) {
  std::vector<Elem> out;
  for (std::size_t i = static_cast<std::size_t>(W.d0); i < W.basis.size(); ++i) out.push_back(W.basis[i].a);
  return out;
}

}  // namespace

void check_valued_lattice(const ExtField& E, const ValuedLattice& W) {
  const int d = W.dim();
  if (d < 1 || W.d0 < 0 || W.d0 > d) throw Error(ErrorKind::HypothesisViolated, "need 0 <= d0 <= d and d >= 1");
  std::vector<Elem> small;
  for (int i = 0; i < W.d0; ++i) {
    if (W.basis[static_cast<std::size_t>(i)].a != 0)
      throw Error(ErrorKind::HypothesisViolated, "the first d0 basis vectors must be divisible by u");
    small.push_back(W.basis[static_cast<std::size_t>(i)].b);
  }
  if (!small.empty() && moore_det(E, small) == 0)
    throw Error(ErrorKind::HypothesisViolated, "the u-divisible part is not of dimension d0");
  const auto units = unit_parts(W);
  if (!units.empty() && moore_det(E, units) == 0)
    throw Error(ErrorKind::HypothesisViolated, "the reductions of the unit basis vectors are dependent");
}

std::vector<UElem> valued_coefficients(const ExtField& E, const ValuedLattice& W) {
  check_valued_lattice(E, W);
  const auto& F = E.F();
  std::vector<UElem> p{UElem{1, 0}};
  for (const auto& l : valued_elements(E, W)) {
    const UElem nl{F.neg(l.a), F.neg(l.b)};
    std::vector<UElem> next(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] = uadd(F, next[i + 1], p[i]);
      next[i] = uadd(F, next[i], umul(F, p[i], nl));
    }
    p = std::move(next);
  }
  std::vector<UElem> c;
  for (int j = 0; j <= W.dim(); ++j) c.push_back(p[qpow(E, static_cast<std::size_t>(j))]);
  return c;
}

bool reduction_identity_check(const ExtField& E, const ValuedLattice& W) {
  const auto c = valued_coefficients(E, W);
  const int d = W.dim(), d0 = W.d0;
  // alpha_j(W)/alpha_d(W) is c_j since the vanishing polynomial is monic
  std::vector<Elem> cbar(1, 1);
  const auto units = unit_parts(W);
  if (!units.empty()) {
    const ExtPoly pbar = vanishing_poly(E, lattice_elements(E, units));
    cbar.clear();
    for (int i = 0; i <= d - d0; ++i) cbar.push_back(pbar[qpow(E, static_cast<std::size_t>(i))]);
  }
  for (int j = d0; j <= d; ++j)
    if (c[static_cast<std::size_t>(j)].a != E.frobenius(cbar[static_cast<std::size_t>(j - d0)], d0)) return false;
  return true;
}

bool spectral_direction_check(const ExtField& E, const ValuedLattice& W) {
  const auto c = valued_coefficients(E, W);
  // spectrum: d0 values |u| < 1 followed by d - d0 values 1
  for (int k = 1; k < W.dim(); ++k) {
    const bool vanishes = c[static_cast<std::size_t>(k)] == UElem{};
    const bool inseparable = k != W.d0;
    if (vanishes && !inseparable) return false;
  }
  return true;
}

ValuedLattice random_valued_lattice(const ExtField& E, int d, int d0, std::mt19937_64& rng) {
  if (d0 < 0 || d0 > d || d > E.m()) throw Error(ErrorKind::HypothesisViolated, "need 0 <= d0 <= d <= m");
  std::uniform_int_distribution<Elem> any(0, static_cast<Elem>(E.order() - 1));
  ValuedLattice W;
  W.d0 = d0;
  for (;;) {
    std::vector<Elem> b(static_cast<std::size_t>(d0));
    for (auto& x : b) x = any(rng);
    if (d0 == 0 || moore_det(E, b) != 0) {
      for (Elem x : b) W.basis.push_back({0, x});
      break;
    }
  }
  for (;;) {
    std::vector<Elem> a(static_cast<std::size_t>(d - d0));
    for (auto& x : a) x = any(rng);
    if (a.empty() || moore_det(E, a) != 0) {
      for (Elem x : a) W.basis.push_back({x, any(rng)});
      break;
    }
  }
  return W;
}

std::vector<ValuedLattice> all_valued_lattices(const ExtField& E, int d) {
  if (d > E.m()) throw Error(ErrorKind::HypothesisViolated, "d exceeds the extension degree");
  const auto n = static_cast<Elem>(E.order());
  std::vector<ValuedLattice> out;
  for (int d0 = 0; d0 <= d; ++d0) {
    // basis entries: u-divisible ones range over b, unit ones over (a, b)
    std::vector<std::size_t> radix;
    for (int i = 0; i < d; ++i) radix.push_back(i < d0 ? n : static_cast<std::size_t>(n) * n);
    std::size_t total = 1;
    for (auto x : radix) total *= x;
    for (std::size_t idx = 0; idx < total; ++idx) {
      ValuedLattice W;
      W.d0 = d0;
      std::size_t rest = idx;
      for (int i = 0; i < d; ++i) {
        const std::size_t digit = rest % radix[static_cast<std::size_t>(i)];
        rest /= radix[static_cast<std::size_t>(i)];
        if (i < d0)
          W.basis.push_back({0, static_cast<Elem>(digit)});
        else
          W.basis.push_back({static_cast<Elem>(digit % n), static_cast<Elem>(digit / n)});
      }
      try {
        check_valued_lattice(E, W);
      } catch (const Error&) {
        continue;
      }
      out.push_back(std::move(W));
    }
  }
  return out;
}

std::size_t beta_zero_count(const Context& ctx) {
  const ExtField E(ctx, 2);
  std::size_t count = 0;
  for (Elem w = 0; w < E.order(); ++w) {
    if (E.in_subfield(w)) continue;
    if (exp_poly_coeffs(E, {1, w}).alpha[1] == 0) ++count;
  }
  return count;
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
  if (da != db) return da > db;
  if (a[2] != b[2]) return a[2] > b[2];
  if (a[1] != b[1]) return a[1] > b[1];
  return a[0] > b[0];
}

TriPoly moore_minor_poly(const Context& ctx, const std::array<int, 3>& exponents) {
  const auto& F = ctx.F();
  TriPoly p;
  std::array<int, 3> perm{0, 1, 2};
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
    // row v (variable) takes column perm[v]
    Monomial m{exponents[static_cast<std::size_t>(perm[0])], exponents[static_cast<std::size_t>(perm[1])],
               exponents[static_cast<std::size_t>(perm[2])]};
    const Elem c = inversions % 2 ? F.neg(1) : 1;
    Elem& slot = p[m];
    slot = F.add(slot, c);
    if (slot == 0) p.erase(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

int total_degree(const TriPoly& p) {
  if (p.empty()) return kNegInfDegree;
  const auto& m = p.begin()->first;
  return m[0] + m[1] + m[2];
}

std::optional<TriPoly> divide_linear(const FiniteField& F, const TriPoly& p, const std::array<Elem, 3>& linear) {
  int lead = -1;
  for (int v = 2; v >= 0 && lead < 0; --v)
    if (linear[static_cast<std::size_t>(v)] != 0) lead = v;
  if (lead < 0) throw Error(ErrorKind::DivisionByZero, "zero linear form");
  const Elem lc_inv = F.inv(linear[static_cast<std::size_t>(lead)]);
  TriPoly rem = p, quot;
  auto add_term = [&F](TriPoly& t, const Monomial& m, Elem c) {
    Elem& slot = t[m];
    slot = F.add(slot, c);
    if (slot == 0) t.erase(m);
  };
  while (!rem.empty()) {
    const auto [m, c] = *rem.begin();
    if (m[static_cast<std::size_t>(lead)] == 0) return std::nullopt;
    Monomial t = m;
    --t[static_cast<std::size_t>(lead)];
    const Elem tc = F.mul(c, lc_inv);
    add_term(quot, t, tc);
    for (int v = 0; v < 3; ++v) {
      const Elem lv = linear[static_cast<std::size_t>(v)];
      if (lv == 0) continue;
      Monomial s = t;
      ++s[static_cast<std::size_t>(v)];
      add_term(rem, s, F.neg(F.mul(tc, lv)));
    }
  }
  return quot;
}

long long inner_degree_via_moore(const Context& ctx, int k) {
  if (ctx.r != 3) throw Error(ErrorKind::UnsupportedRank, "the Moore divisor count is implemented for r = 3");
  if (k != 1 && k != 2) throw Error(ErrorKind::KOutOfRange, "k must be 1 or 2");
  if (ctx.q > 3) throw Error(ErrorKind::GuardExceeded, "the Moore divisor count is limited to q <= 3");
  const int q = static_cast<int>(ctx.q);
  std::array<int, 4> powers{1, q, q * q, q * q * q};
  std::array<int, 3> exps{};
  for (int i = 0, c = 0; i < 4; ++i)
    if (i != k) exps[static_cast<std::size_t>(c++)] = powers[static_cast<std::size_t>(i)];
  const TriPoly minor = moore_minor_poly(ctx, exps);
  const auto lines = projective_points(ctx);
  TriPoly rest = minor;
  for (const auto& l : lines) {
    auto quot = divide_linear(ctx.F(), rest, {l[0], l[1], l[2]});
    if (!quot) throw Error(ErrorKind::DivisibilityFailure, "Moore minor is not divisible by a rational linear form");
    rest = std::move(*quot);
  }
  for (const auto& l : lines)
    if (divide_linear(ctx.F(), rest, {l[0], l[1], l[2]}))
      throw Error(ErrorKind::DivisibilityFailure, "Moore minor vanishes to higher order along a rational line");
  return static_cast<long long>(total_degree(minor)) - static_cast<long long>(lines.size());
}

}  // namespace btmf
