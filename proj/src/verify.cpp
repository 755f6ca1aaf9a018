#include "btmf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "btmf/alpha.hpp"
#include "btmf/building.hpp"
#include "btmf/coeff.hpp"
#include "btmf/error.hpp"
#include "btmf/finite.hpp"
#include "btmf/render.hpp"
#include "btmf/vanderput.hpp"
#include "btmf/weyl.hpp"

namespace btmf {

namespace {

constexpr std::size_t kMaxDetails = 10;

// Collects failures and counts checks.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (details.size() < kMaxDetails) details.push_back(what);
  }
  // Runs fn, recording a thrown Error as a failure.
  void guarded(const std::string& what, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      check(false, what + ": " + e.what());
    }
  }
  std::string summary() const {
    return std::to_string(checks - failures) + "/" + std::to_string(checks) + " checks passed";
  }
};

std::string big(const BigInt& v) { return v.str(); }

Vertex with_zero(Vertex n) {
  n.push_back(0);
  return n;
}

CriterionResult make_result(int id, std::string suite, std::string name) {
  CriterionResult res;
  res.id = id;
  res.suite = std::move(suite);
  res.name = std::move(name);
  return res;
}

CriterionResult finish(CriterionResult res, const Tally& t) {
  res.passed = t.failures == 0 && t.checks > 0;
  if (res.observed.empty()) res.observed = t.summary();
  res.details = t.details;
  return res;
}

CriterionResult c1() {
  auto res = make_result(1, "vdp", "case-study inner degrees of alpha_2, q in {2,3,4}");
  res.expected = "N = q^3-q^2 at (0,0), q^4-q^2 at (1,1), 0 at (n,0), q^3-q^2 at (n,1), 0 at (n1,n2) n2 in {2,3}; < 60 s";
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream obs;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto ctx = make_context(q, 3);
    const FormSpec f{FormKind::Alpha, 2, 0};
    const BigInt Q = q;
    std::vector<std::pair<Vertex, BigInt>> cases{{{0, 0}, Q * Q * Q - Q * Q}, {{1, 1}, Q * Q * Q * Q - Q * Q}};
    for (long long n = 1; n <= 4; ++n) cases.push_back({{n, 0}, 0});
    for (long long n = 2; n <= 4; ++n) cases.push_back({{n, 1}, Q * Q * Q - Q * Q});
    for (long long n2 = 2; n2 <= 3; ++n2)
      for (long long n1 = n2; n1 <= 4; ++n1) cases.push_back({{n1, n2}, 0});
    obs << "q=" << q << ":";
    for (const auto& [n, expected] : cases) {
      t.guarded("q=" + std::to_string(q) + " " + vertex_to_string(n), [&] {
        const auto N = inner_degree(ctx, f, with_zero(n));
        t.check(N == expected, "q=" + std::to_string(q) + " N" + vertex_to_string(n) + " = " + big(N) +
                                   ", expected " + big(expected));
        if (n == Vertex{0, 0} || n == Vertex{1, 1}) obs << " N" << vertex_to_string(n) << "=" << big(N);
      });
    }
    obs << "; ";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.check(secs < 60.0, "runtime " + std::to_string(secs) + " s exceeds 60 s");
  res.observed = obs.str() + t.summary();
  return finish(res, t);
}

CriterionResult c2() {
  auto res = make_result(2, "oracle", "Moore-minor divisor degrees and beta zero count");
  res.expected = "moore(2) = q^3-q^2, moore(1) = q^3-q for q in {2,3}; beta = q^2-q for q in {2,3,4}";
  Tally t;
  std::ostringstream obs;
  for (std::uint32_t q : {2u, 3u}) {
    auto ctx = make_context(q, 3);
    const BigInt Q = q;
    t.guarded("moore q=" + std::to_string(q), [&] {
      const long long n2 = inner_degree_via_moore(ctx, 2), n1 = inner_degree_via_moore(ctx, 1);
      obs << "q=" << q << ": moore(2)=" << n2 << " moore(1)=" << n1 << "; ";
      t.check(BigInt(n2) == Q * Q * Q - Q * Q, "moore(2) at q=" + std::to_string(q));
      t.check(BigInt(n1) == Q * Q * Q - Q, "moore(1) at q=" + std::to_string(q));
    });
  }
  for (std::uint32_t q : {2u, 3u, 4u}) {
    t.guarded("beta q=" + std::to_string(q), [&] {
      const auto b = beta_zero_count(make_context(q, 3));
      obs << (q == 2 ? "" : " ") << "beta(q=" << q << ")=" << b;
      t.check(b == q * q - q, "beta zero count at q=" + std::to_string(q));
    });
  }
  res.observed = obs.str();
  return finish(res, t);
}

CriterionResult c3() {
  auto res = make_result(3, "norms", "spectral norm of alpha_2 on the window n1 <= 6, q in {2,3,5}");
  res.expected = "-(q^2-q) where n2 >= 1, 0 where n2 = 0";
  Tally t;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    auto ctx = make_context(q, 3);
    const BigInt Q = q;
    for (const auto& n : window_vertices(3, 6)) {
      const Rational expected = n[1] >= 1 ? Rational(-(Q * Q - Q)) : Rational(0);
      const auto v = log_alpha_norm_vertex(ctx, n, 2);
      t.check(v == expected, "q=" + std::to_string(q) + " " + vertex_to_string(n) + ": " + to_string(v));
      t.check(log_norm_at_vertex(ctx, FormSpec{FormKind::Alpha, 2, 0}, standard_vertex(ctx, n)) == v,
              "equivariant norm differs at " + vertex_to_string(n));
    }
  }
  return finish(res, t);
}

CriterionResult c4() {
  auto res = make_result(4, "weyl", "W(k) windows for r = 3, k = 2..5, bound 6 match the reference drawings");
  res.expected = "identical vertex and heavy-edge sets";
  Tally t;
  auto ctx = make_context(2, 3);
  auto norm_edge = [](Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; };
  for (int k = 2; k <= 5; ++k) {
    std::set<Edge> fixture;
    std::set<Vertex> fixture_vertices;
    for (const auto& [a, b] : wk_figure_fixture(k)) {
      Vertex x{a.first, a.second, 0}, y{b.first, b.second, 0};
      fixture.insert(norm_edge(x, y));
      fixture_vertices.insert(x);
      fixture_vertices.insert(y);
    }
    const auto verts = wk_window(ctx, k, 6);
    std::set<Edge> edges;
    for (const auto& [a, b] : induced_edges(verts)) edges.insert(norm_edge(a, b));
    t.check(std::set<Vertex>(verts.begin(), verts.end()) == fixture_vertices, "vertex set differs for k=" + std::to_string(k));
    t.check(edges == fixture, "heavy edges differ for k=" + std::to_string(k));
  }
  return finish(res, t);
}

CriterionResult c5() {
  auto res = make_result(5, "weyl", "standard-vertex membership, r in 2..5, i < r, k <= 3r");
  res.expected = "closed criterion equals characteristic-sequence membership";
  Tally t;
  for (int r = 2; r <= 5; ++r) {
    auto ctx = make_context(2, r);
    for (int i = 0; i < r; ++i)
      for (int k = 1; k <= 3 * r; ++k)
        t.check(standard_vertex_membership(ctx, i, k) == wk_membership(ctx, standard_basis_vertex(r, i), k),
                "r=" + std::to_string(r) + " i=" + std::to_string(i) + " k=" + std::to_string(k));
  }
  return finish(res, t);
}

CriterionResult c6() {
  auto res = make_result(6, "weyl", "recursion image of W(k) equals W(k+1), r = 3, k <= 4, bound 5");
  res.expected = "equal vertex sets";
  Tally t;
  auto ctx = make_context(2, 3);
  for (int k = 1; k <= 4; ++k)
    t.check(recursion_image(ctx, k, 5) == wk_window(ctx, k + 1, 5), "k=" + std::to_string(k));
  return finish(res, t);
}

CriterionResult c7() {
  auto res = make_result(7, "coeff", "coefficient forms versus alpha forms for k <= d, bound 4");
  res.expected = "membership equal, constant norm offset, equal inner degrees";
  Tally t;
  struct Case {
    int r, d, k;
  };
  std::ostringstream obs;
  for (const auto& c : {Case{3, 1, 1}, Case{3, 2, 1}, Case{3, 2, 2}, Case{3, 3, 2}, Case{4, 2, 2}}) {
    for (std::uint32_t q : {2u, 3u}) {
      if (c.r == 4 && q == 3) continue;
      const std::string tag = "(r,d,k)=(" + std::to_string(c.r) + "," + std::to_string(c.d) + "," +
                              std::to_string(c.k) + ") q=" + std::to_string(q);
      t.guarded(tag, [&] {
        const auto rep = verify_simplicial_agreement(make_context(q, c.r), c.d, c.k, 4);
        t.check(rep.membership_equal, tag + ": membership");
        t.check(rep.constant_offset, tag + ": norm offset");
        t.check(rep.inner_degrees_equal, tag + ": inner degree");
        for (const auto& v : rep.violations) t.check(false, tag + ": " + v);
      });
    }
  }
  return finish(res, t);
}

CriterionResult c8() {
  auto res = make_result(8, "coeff", "coefficient norms and membership at the origin, r = 3, d <= 3");
  res.expected = "closed form for all k <= rd; member iff k not divisible by r";
  Tally t;
  for (std::uint32_t q : {2u, 3u}) {
    auto ctx = make_context(q, 3);
    const auto origin = WeylPoint::from_ints({0, 0, 0});
    for (int d = 1; d <= 3; ++d)
      for (int k = 1; k <= 3 * d; ++k) {
        const std::string tag = "q=" + std::to_string(q) + " d=" + std::to_string(d) + " k=" + std::to_string(k);
        t.check(log_coeff_norm(ctx, origin, d, k) == coeff_origin_closed_form(ctx, d, k), tag + " norm");
        if (k < 3 * d) t.check(wprime_membership(ctx, origin, d, k) == (k % 3 != 0), tag + " membership");
      }
  }
  return finish(res, t);
}

CriterionResult c9() {
  auto res = make_result(9, "coeff", "W'_d(rd-1) is the wall x1 = x2, bound 4, r in {2,3}, d <= 3");
  res.expected = "membership iff x1 = x2";
  Tally t;
  for (std::uint32_t q : {2u, 3u})
    for (int r = 2; r <= 3; ++r) {
      auto ctx = make_context(q, r);
      for (int d = 1; d <= 3; ++d)
        for (const auto& n : window_vertices(r, 4))
          t.check(wprime_membership(ctx, WeylPoint::from_ints(n), d, r * d - 1) == (n[0] == n[1]),
                  "q=" + std::to_string(q) + " r=" + std::to_string(r) + " d=" + std::to_string(d) + " " +
                      vertex_to_string(n));
    }
  return finish(res, t);
}

CriterionResult c10() {
  auto res = make_result(10, "vdp", "integral transforms and closed triangle loops, bound 5, q in {2,3}");
  res.expected = "every value integral, every loop sum 0";
  Tally t;
  for (std::uint32_t q : {2u, 3u}) {
    auto ctx = make_context(q, 3);
    std::vector<FormSpec> forms;
    for (int k = 1; k <= 5; ++k) forms.push_back({FormKind::Alpha, k, 0});
    for (int d = 1; d <= 3; ++d)
      for (int k = 1; k <= d; ++k) forms.push_back({FormKind::Coeff, k, d});
    const auto verts = window_vertices(3, 5);
    std::vector<std::vector<Arrow>> arrows;
    for (const auto& n : verts) arrows.push_back(arrows_type1(ctx, standard_vertex(ctx, n)));
    for (const auto& f : forms) {
      for (std::size_t i = 0; i < verts.size(); ++i)
        for (const auto& e : arrows[i])
          t.guarded("q=" + std::to_string(q) + " " + to_string(f) + " at " + vertex_to_string(verts[i]),
                    [&] {
                      (void)vdp(ctx, f, e);
                      t.check(true, "");
                    });
      for (const auto& tri : window_simplices(3, 5, 2)) {
        if (tri.size() != 3) continue;
        std::vector<LatticeVertex> loop;
        for (const auto& v : tri) loop.push_back(standard_vertex(ctx, v));
        t.guarded("loop", [&] {
          t.check(loop_sum(ctx, f, loop) == 0, "q=" + std::to_string(q) + " " + to_string(f) + " loop at " +
                                                   vertex_to_string(tri[0]));
        });
      }
    }
  }
  return finish(res, t);
}

CriterionResult c11() {
  auto res = make_result(11, "norms", "monotonicity of alpha norms, bound 6, k <= 10, r in {3,4}");
  res.expected = "non-increasing in k (strict past the zero block) and in n";
  Tally t;
  for (int r : {3, 4})
    for (std::uint32_t q : {2u, 3u}) {
      auto ctx = make_context(q, r);
      for (const auto& n : window_vertices(r, 6)) {
        int zeros = 0;
        for (int i = 1; i < r; ++i)
          if (n[static_cast<std::size_t>(r - i)] == 0) zeros = i;
        for (int k = 1; k < 10; ++k) {
          const auto a = log_alpha_norm_vertex(ctx, n, k), b = log_alpha_norm_vertex(ctx, n, k + 1);
          const std::string tag = "q=" + std::to_string(q) + " " + vertex_to_string(n) + " k=" + std::to_string(k);
          t.check(b <= a, tag + " order in k");
          if (k > zeros) t.check(b < a, tag + " strict order in k");
        }
        for (int i = 1; i < r; ++i) {
          Vertex m = n;
          for (int j = 0; j < i; ++j) m[static_cast<std::size_t>(j)] += 1;
          for (int k = 1; k <= 10; ++k)
            t.check(log_alpha_norm_vertex(ctx, m, k) <= log_alpha_norm_vertex(ctx, n, k),
                    "q=" + std::to_string(q) + " " + vertex_to_string(n) + " shift " + std::to_string(i));
        }
      }
    }
  return finish(res, t);
}

CriterionResult c12() {
  auto res = make_result(12, "weyl", "W(k) is full, of dimension r-2 everywhere, connected; r in {3,4}, k <= 5");
  res.expected = "all three properties on the core of the window";
  Tally t;
  for (int r : {3, 4}) {
    auto ctx = make_context(2, r);
    const long long bound = r == 3 ? 8 : 6;
    for (int k = 1; k <= 5; ++k) {
      const auto rep = complex_checks(ctx, k, bound);
      const std::string tag = "r=" + std::to_string(r) + " k=" + std::to_string(k);
      t.check(rep.is_full, tag + " full");
      t.check(rep.dim_everywhere, tag + " dimension");
      t.check(rep.connected, tag + " connected");
      for (const auto& v : rep.violations) t.check(false, tag + ": " + v);
    }
  }
  return finish(res, t);
}

FqPoly random_poly(const Context& ctx, std::mt19937_64& rng, int maxdeg) {
  std::vector<FiniteField::Elem> c(static_cast<std::size_t>(maxdeg) + 1);
  for (auto& x : c) x = static_cast<FiniteField::Elem>(rng() % ctx.q);
  return FqPoly(ctx.F(), c);
}

// lower times upper unitriangular times a monomial unit matrix: entries of degree <= 2
GammaMatrix random_transport(const Context& ctx, std::mt19937_64& rng) {
  const auto r = static_cast<std::size_t>(ctx.r);
  PolyMatrix lo = identity_poly(ctx.F(), r), up = identity_poly(ctx.F(), r), pd(r, r, FqPoly(ctx.F()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = random_poly(ctx, rng, 1);
      up(j, i) = random_poly(ctx, rng, 1);
    }
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t i = 0; i < r; ++i)
    pd(i, perm[i]) = FqPoly::constant(ctx.F(), static_cast<FiniteField::Elem>(1 + rng() % (ctx.q - 1)));
  const FqPoly zero(ctx.F());
  return GammaMatrix(ctx, multiply(multiply(lo, up, zero), pd, zero));
}

CriterionResult c13() {
  auto res = make_result(13, "vdp", "500 random unimodular transports per q in {2,3} reduce back");
  res.expected = "valid certificate and recovered chamber vertex";
  Tally t;
  std::mt19937_64 rng(2024);
  for (std::uint32_t q : {2u, 3u})
    for (int trial = 0; trial < 500; ++trial) {
      const int r = 3 + trial % 2;
      auto ctx = make_context(q, r);
      Vertex n(static_cast<std::size_t>(r), 0);
      for (int i = r - 2; i >= 0; --i)
        n[static_cast<std::size_t>(i)] = n[static_cast<std::size_t>(i) + 1] + static_cast<long long>(rng() % 3);
      const auto gamma = random_transport(ctx, rng);
      const auto moved = act(ctx, gamma, standard_vertex(ctx, n));
      t.guarded("transport", [&] {
        const auto cert = reduce_to_weyl(ctx, moved);
        t.check(verify_certificate(ctx, moved, cert), "certificate invalid for " + vertex_to_string(n));
        t.check(cert.weyl_rep == n, "recovered " + vertex_to_string(cert.weyl_rep) + " for " + vertex_to_string(n));
      });
    }
  return finish(res, t);
}

CriterionResult c14() {
  auto res = make_result(14, "oracle", "reduction identity on valued finite lattices");
  res.expected = "holds on all q = 2 models with d <= 3 and 100 random q = 3, d = 2 models";
  Tally t;
  auto ctx2 = make_context(2, 3);
  for (int d = 1; d <= 3; ++d) {
    ExtField E(ctx2, d <= 2 ? 2 : 3);
    for (const auto& W : all_valued_lattices(E, d)) {
      t.guarded("q=2", [&] {
        t.check(reduction_identity_check(E, W), "q=2 d=" + std::to_string(d) + " d0=" + std::to_string(W.d0));
        t.check(spectral_direction_check(E, W), "spectral direction q=2 d=" + std::to_string(d));
      });
    }
  }
  auto ctx3 = make_context(3, 3);
  ExtField E(ctx3, 2);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto W = random_valued_lattice(E, 2, trial % 3, rng);
    t.guarded("q=3", [&] {
      t.check(reduction_identity_check(E, W), "q=3 d0=" + std::to_string(W.d0));
      t.check(spectral_direction_check(E, W), "spectral direction q=3");
    });
  }
  return finish(res, t);
}

using Runner = CriterionResult (*)();
constexpr Runner kRunners[] = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12, c13, c14};

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"weyl", "norms", "vdp", "coeff", "oracle", "all"};
  return names;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > static_cast<int>(std::size(kRunners)))
    throw Error(ErrorKind::IndexOutOfRange, "criterion id must lie in 1..14");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res;
  try {
    res = kRunners[id - 1]();
  } catch (const Error& e) {
    res.id = id;
    res.passed = false;
    res.observed = std::string("error: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

VerifyReport run_verify(const std::string& suite) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
  static const char* kSuiteOf[] = {"vdp",   "oracle", "norms", "weyl", "weyl", "weyl",  "coeff",
                                   "coeff", "coeff",  "vdp",   "norms", "weyl", "vdp", "oracle"};
  VerifyReport rep;
  rep.suite = suite;
  for (int id = 1; id <= 14; ++id)
    if (suite == "all" || suite == kSuiteOf[id - 1]) rep.results.push_back(run_criterion(id));
  return rep;
}

}  // namespace btmf
