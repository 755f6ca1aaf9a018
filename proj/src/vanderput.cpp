#include "btmf/vanderput.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "btmf/coeff.hpp"
#include "btmf/error.hpp"
#include "btmf/parallel.hpp"

namespace btmf {

namespace {

constexpr std::size_t kExhaustiveLimit = 4096;

BigInt weight(const Context& ctx, int k) { return ipow(ctx.q, static_cast<unsigned>(k)) - 1; }

CochainValue require_integer(const Rational& v, const char* what) {
  if (!is_integer(v)) throw Error(ErrorKind::NonIntegralTransform, std::string(what) + " is not integral: " + to_string(v));
  return numerator(v);
}

PolyMatrix elementary(const Context& ctx, std::size_t i, std::size_t j, const FqPoly& f) {
  PolyMatrix m = identity_poly(ctx.F(), static_cast<std::size_t>(ctx.r));
  m(i, j) = f;
  return m;
}

FqPoly poly_from_index(const Context& ctx, std::size_t index, int max_degree) {
  std::vector<FiniteField::Elem> c(static_cast<std::size_t>(max_degree + 1), 0);
  for (auto& x : c) {
    x = static_cast<FiniteField::Elem>(index % ctx.q);
    index /= ctx.q;
  }
  return FqPoly(ctx.F(), std::move(c));
}

}  // namespace

void validate_form(const Context& ctx, const FormSpec& f) {
  if (f.k < 1) throw Error(ErrorKind::KOutOfRange, "k must be >= 1");
  if (f.kind == FormKind::Coeff) {
    if (f.d < 1) throw Error(ErrorKind::InvalidArgument, "d must be >= 1");
    if (f.k > f.d) throw Error(ErrorKind::RegimeViolation, "coefficient forms are simplicial only for k <= d");
    if (f.k > ctx.r * f.d) throw Error(ErrorKind::KOutOfRange, "k must be <= rd");
  }
}

std::string to_string(const FormSpec& f) {
  if (f.kind == FormKind::Alpha) return "alpha_" + std::to_string(f.k);
  return "coeff_" + std::to_string(f.k) + "(d=" + std::to_string(f.d) + ")";
}

LogNorm log_norm_standard(const Context& ctx, const FormSpec& f, const Vertex& n) {
  validate_form(ctx, f);
  if (f.kind == FormKind::Alpha) return log_alpha_norm_vertex(ctx, n, f.k);
  return log_coeff_norm(ctx, n, f.d, f.k);
}

LogNorm log_norm_at_vertex(const Context& ctx, const FormSpec& f, const LatticeVertex& m) {
  const auto cert = reduce_to_weyl(ctx, m);
  const LogValue nu = log_nu(ctx, WeylPoint::from_ints(cert.weyl_rep), cert.gamma.bottom_row());
  if (nu.is_neg_infinity()) throw Error(ErrorKind::ConsistencyFailure, "transport matrix has a zero bottom row");
  return log_norm_standard(ctx, f, cert.weyl_rep) + Rational(weight(ctx, f.k)) * nu.value();
}

CochainValue vdp(const Context& ctx, const FormSpec& f, const Arrow& e) {
  return require_integer(log_norm_at_vertex(ctx, f, e.target) - log_norm_at_vertex(ctx, f, e.origin),
                         "van der Put value");
}

int automorphy_vdp(const Context& ctx, const GammaMatrix& gamma, const Arrow& e) {
  const bool to_z = points_to(ctx, e, unit_vector(ctx, ctx.r));
  const bool to_y = points_to(ctx, e, to_laurent_vector(gamma.bottom_row()));
  if (to_z && !to_y) return 1;
  if (to_y && !to_z) return -1;
  return 0;
}

CochainValue inner_degree(const Context& ctx, const FormSpec& f, const Vertex& n) {
  validate_form(ctx, f);
  const auto arrows = arrows_type1(ctx, standard_vertex(ctx, n));
  const auto values = parallel_map(arrows.size(), [&](std::size_t i) { return vdp(ctx, f, arrows[i]); });
  CochainValue total = std::accumulate(values.begin(), values.end(), CochainValue(0));
  if (total < 0)
    throw Error(ErrorKind::NegativeInnerDegree,
                "negative inner degree " + total.str() + " at " + vertex_to_string(n) + " for " + to_string(f));
  return total;
}

CochainValue loop_sum(const Context& ctx, const FormSpec& f, const std::vector<LatticeVertex>& loop) {
  CochainValue total = 0;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    const auto& a = loop[i];
    const auto& b = loop[(i + 1) % loop.size()];
    total += require_integer(log_norm_at_vertex(ctx, f, b) - log_norm_at_vertex(ctx, f, a), "loop step");
  }
  return total;
}

std::vector<GammaMatrix> stabilizer_generators(const Context& ctx, const Vertex& n, int random_samples,
                                               std::uint64_t seed) {
  const auto r = static_cast<std::size_t>(ctx.r);
  if (n.size() + 1 != r && n.size() != r) throw Error(ErrorKind::InvalidPoint, "vertex rank differs from r");
  Vertex full = n;
  if (full.size() + 1 == r) full.push_back(0);
  const auto& F = ctx.F();
  std::vector<GammaMatrix> gens;

  struct Slot {
    std::size_t i, j;
    int max_degree;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && full[i] - full[j] >= 0) slots.push_back({i, j, static_cast<int>(full[i] - full[j])});

  for (const auto& s : slots) {
    const BigInt total = ipow(ctx.q, static_cast<unsigned>(s.max_degree + 1));
    if (ctx.q == 2 && total <= kExhaustiveLimit) {
      for (std::size_t idx = 1; idx < total.convert_to<std::size_t>(); ++idx)
        gens.emplace_back(ctx, elementary(ctx, s.i, s.j, poly_from_index(ctx, idx, s.max_degree)));
    } else {
      for (int a = 0; a <= s.max_degree; ++a)
        for (FiniteField::Elem c = 1; c < ctx.q; ++c)
          gens.emplace_back(ctx, elementary(ctx, s.i, s.j, FqPoly::monomial(F, c, a)));
    }
  }
  if (ctx.q > 2) {
    for (std::size_t i = 0; i < r; ++i) {
      PolyMatrix m = identity_poly(F, r);
      m(i, i) = FqPoly::constant(F, F.generator());
      gens.emplace_back(ctx, std::move(m));
    }
    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < random_samples && !slots.empty(); ++sample) {
      GammaMatrix g = GammaMatrix::identity(ctx);
      for (int step = 0; step < 3; ++step) {
        const auto& s = slots[rng() % slots.size()];
        std::vector<FiniteField::Elem> c(static_cast<std::size_t>(s.max_degree + 1));
        for (auto& x : c) x = static_cast<FiniteField::Elem>(rng() % ctx.q);
        g = g * GammaMatrix(ctx, elementary(ctx, s.i, s.j, FqPoly(F, std::move(c))));
      }
      PolyMatrix d = identity_poly(F, r);
      const std::size_t pos = rng() % r;
      d(pos, pos) = FqPoly::constant(F, static_cast<FiniteField::Elem>(1 + rng() % (ctx.q - 1)));
      gens.push_back(g * GammaMatrix(ctx, std::move(d)));
    }
  }
  return gens;
}

OrbitData arrow_orbits(const Context& ctx, const FormSpec& f, const Vertex& n) {
  OrbitData data;
  const LatticeVertex base = standard_vertex(ctx, n);
  data.arrows = arrows_type1(ctx, base);
  const auto gens = stabilizer_generators(ctx, n);
  data.generators = gens.size();
  const std::size_t m = data.arrows.size();

  std::vector<CochainValue> p(m);
  for (std::size_t a = 0; a < m; ++a) p[a] = vdp(ctx, f, data.arrows[a]);
  const BigInt w = weight(ctx, f.k);

  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  struct Image {
    std::vector<std::size_t> target;
    std::vector<std::string> violations;
  };
  auto images = parallel_map(gens.size(), [&](std::size_t g) {
    Image img;
    const auto& gamma = gens[g];
    if (!same_vertex(ctx, act(ctx, gamma, base), base))
      throw Error(ErrorKind::ConsistencyFailure, "generator does not fix the base vertex");
    for (std::size_t a = 0; a < m; ++a) {
      const LatticeVertex moved = act(ctx, gamma, data.arrows[a].target);
      std::size_t hit = m;
      for (std::size_t b = 0; b < m && hit == m; ++b)
        if (same_vertex(ctx, moved, data.arrows[b].target)) hit = b;
      if (hit == m) throw Error(ErrorKind::ConsistencyFailure, "image of an arrow is not an arrow at the vertex");
      img.target.push_back(hit);
      const CochainValue predicted = w * automorphy_vdp(ctx, gamma, data.arrows[a]) + p[a];
      if (predicted != p[hit])
        img.violations.push_back("orbit consistency fails at " + vertex_to_string(n) + " arrow " + std::to_string(a) +
                                 ": expected " + predicted.str() + ", got " + p[hit].str());
    }
    return img;
  });
  for (const auto& img : images) {
    for (std::size_t a = 0; a < m; ++a) parent[find(a)] = find(img.target[a]);
    data.consistency_checks += m;
    data.violations.insert(data.violations.end(), img.violations.begin(), img.violations.end());
  }

  std::vector<std::vector<std::size_t>> groups(m);
  for (std::size_t a = 0; a < m; ++a) groups[find(a)].push_back(a);
  for (auto& g : groups) {
    if (g.empty()) continue;
    ArrowOrbit orbit;
    orbit.members = g;
    std::set<CochainValue> vals;
    for (auto a : g) vals.insert(p[a]);
    orbit.p_values.assign(vals.begin(), vals.end());
    data.orbits.push_back(std::move(orbit));
  }
  std::stable_sort(data.orbits.begin(), data.orbits.end(), [](const ArrowOrbit& a, const ArrowOrbit& b) {
    return a.members.size() > b.members.size();
  });
  return data;
}

CaseStudyReport case_study_report(const Context& ctx) {
  if (ctx.r != 3) throw Error(ErrorKind::UnsupportedRank, "the case study is defined for r = 3");
  const FormSpec f{FormKind::Alpha, 2, 0};
  const BigInt q = ctx.q;
  const auto qs = static_cast<std::size_t>(ctx.q);
  CaseStudyReport rep;

  auto add = [&](std::string label, Vertex n, BigInt expected_n, std::vector<std::size_t> sizes,
                 std::vector<std::vector<CochainValue>> pvals) {
    CaseStudyVertex cv;
    cv.label = std::move(label);
    n.push_back(0);
    cv.n = n;
    cv.expected_inner_degree = expected_n;
    cv.expected_orbit_sizes = std::move(sizes);
    cv.expected_p_values = std::move(pvals);
    const auto data = arrow_orbits(ctx, f, n);
    for (const auto& o : data.orbits) {
      cv.orbit_sizes.push_back(o.members.size());
      cv.orbit_p_values.push_back(o.p_values);
    }
    cv.inner_degree = inner_degree(ctx, f, n);
    const std::string where = cv.label + " " + vertex_to_string(n);
    auto fail = [&](const std::string& msg) {
      cv.passed = false;
      rep.violations.push_back(where + ": " + msg);
    };
    if (cv.inner_degree != cv.expected_inner_degree)
      fail("inner degree " + cv.inner_degree.str() + " expected " + cv.expected_inner_degree.str());
    CochainValue orbit_sum = 0;
    for (const auto& o : data.orbits)
      for (auto a : o.members) orbit_sum += vdp(ctx, f, data.arrows[a]);
    if (orbit_sum != cv.inner_degree) fail("orbit sum differs from inner degree");
    if (!cv.expected_orbit_sizes.empty() && cv.orbit_sizes != cv.expected_orbit_sizes) fail("orbit sizes differ");
    if (!cv.expected_p_values.empty() && cv.orbit_p_values != cv.expected_p_values) fail("orbit P values differ");
    for (const auto& v : data.violations) fail(v);
    rep.vertices.push_back(std::move(cv));
  };

  add("o", {0, 0}, q * q * q - q * q, {qs * qs + qs + 1}, {{q - q * q, q - 1}});
  add("p", {1, 1}, q * q * q * q - q * q, {qs * qs + qs, 1}, {{q * q - q}, {0}});
  for (long long n = 1; n <= 4; ++n) add("q", {n, 0}, 0, {qs * qs, qs + 1}, {});
  for (long long n = 2; n <= 4; ++n) add("r", {n, 1}, q * q * q - q * q, {qs * qs, qs, 1}, {{0}, {q * q - q}, {0}});
  for (long long n1 = 2; n1 <= 4; ++n1)
    for (long long n2 = 2; n2 <= n1; ++n2) add("s", {n1, n2}, 0, {}, {});
  return rep;
}

}  // namespace btmf
