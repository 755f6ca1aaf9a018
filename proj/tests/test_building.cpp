#include <doctest.h>

#include <random>

#include "btmf/building.hpp"
#include "btmf/error.hpp"

using namespace btmf;

namespace {

FqLaurent L(const Context& ctx, int t_exp, FiniteField::Elem c = 1) { return FqLaurent::monomial(ctx.F(), c, t_exp); }
FqLaurent Z(const Context& ctx) { return FqLaurent(ctx.F()); }
FqLaurent pi(const Context& ctx, int n) { return FqLaurent::pi_power(ctx.F(), n); }

LaurentVector vec(const Context& ctx, std::vector<FiniteField::Elem> c) {
  LaurentVector v;
  for (auto x : c) v.push_back(x ? FqLaurent::constant(ctx.F(), x) : Z(ctx));
  return v;
}

FqPoly random_poly(const Context& ctx, std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<std::uint32_t> d(0, ctx.q - 1);
  std::vector<FiniteField::Elem> c(static_cast<std::size_t>(maxdeg) + 1);
  for (auto& x : c) x = d(rng);
  return FqPoly(ctx.F(), c);
}

// L * U * P * D with L, U unit triangular of entry degree <= 1: entries of degree <= 2.
GammaMatrix random_unimodular(const Context& ctx, std::mt19937& rng) {
  const std::size_t r = static_cast<std::size_t>(ctx.r);
  PolyMatrix lo = identity_poly(ctx.F(), r), up = identity_poly(ctx.F(), r), pd(r, r, FqPoly(ctx.F()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lo(i, j) = random_poly(ctx, rng, 1);
      up(j, i) = random_poly(ctx, rng, 1);
    }
  std::vector<std::size_t> perm(r);
  for (std::size_t i = 0; i < r; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<std::uint32_t> unit(1, ctx.q - 1);
  for (std::size_t i = 0; i < r; ++i) pd(i, perm[i]) = FqPoly::constant(ctx.F(), unit(rng));
  FqPoly zero(ctx.F());
  return GammaMatrix(ctx, multiply(multiply(lo, up, zero), pd, zero));
}

}  // namespace

TEST_CASE("standard vertices are diagonal") {
  auto ctx = make_context(2, 3);
  auto v0 = standard_vertex(ctx, {0, 0, 0});
  CHECK(v0.basis()(0, 0) == L(ctx, 0));
  CHECK(v0.basis()(0, 1).is_zero());
  auto v1 = standard_vertex(ctx, {1, 1, 0});
  CHECK(v1.basis()(0, 0) == pi(ctx, 1));
  CHECK(v1.basis()(2, 2) == L(ctx, 0));
  auto v2 = standard_vertex(ctx, {2, 1, 0});
  CHECK(v2.basis()(0, 0) == pi(ctx, 2));
  CHECK(v2.basis()(1, 1) == pi(ctx, 1));
  // classes are invariant under global pi-powers
  CHECK(same_vertex(ctx, standard_vertex(ctx, {3, 2, 1}), v2));
  CHECK_FALSE(same_vertex(ctx, v1, v2));
}

TEST_CASE("type-1 arrow counts") {
  CHECK(arrows_type1(make_context(2, 3), standard_vertex(make_context(2, 3), {0, 0, 0})).size() == 7);
  CHECK(arrows_type1(make_context(3, 3), standard_vertex(make_context(3, 3), {1, 0, 0})).size() == 13);
  CHECK(arrows_type1(make_context(4, 2), standard_vertex(make_context(4, 2), {0, 0})).size() == 5);
  auto ctx = make_context(3, 4);
  CHECK(arrows_type1(ctx, standard_vertex(ctx, {2, 1, 1, 0})).size() == 40);
}

TEST_CASE("shift examples") {
  auto ctx = make_context(2, 3);
  auto s0 = shift_toward(ctx, standard_vertex(ctx, {0, 0, 0}), unit_vector(ctx, 3));
  CHECK(reduce_to_weyl(ctx, s0).weyl_rep == Vertex{1, 1, 0});
  auto s1 = shift_toward(ctx, standard_vertex(ctx, {1, 1, 0}), unit_vector(ctx, 2));
  CHECK(reduce_to_weyl(ctx, s1).weyl_rep == Vertex{1, 0, 0});
  for (long long n = 1; n <= 5; ++n) {
    auto s = shift_toward(ctx, standard_vertex(ctx, {n, 0, 0}), unit_vector(ctx, 1));
    CHECK(reduce_to_weyl(ctx, s).weyl_rep == Vertex{n - 1, 0, 0});
  }
  CHECK_THROWS_AS(shift_toward(ctx, s0, vec(ctx, {0, 0, 0})), Error);
}

TEST_CASE("points_to") {
  for (long long q : {2, 3}) {
    auto ctx = make_context(q, 3);
    auto v0 = standard_vertex(ctx, {0, 0, 0});
    Arrow e{v0, shift_toward(ctx, v0, unit_vector(ctx, 3)), {0, 0, 1}, 1};
    CHECK(points_to(ctx, e, unit_vector(ctx, 3)));
    CHECK_FALSE(points_to(ctx, e, unit_vector(ctx, 1)));
    for (FiniteField::Elem c = 1; c < ctx.q; ++c) CHECK(points_to(ctx, e, vec(ctx, {0, 0, c})));
    // scaling by a power of pi does not change the direction
    CHECK(points_to(ctx, e, LaurentVector{Z(ctx), Z(ctx), pi(ctx, 3)}));
  }
}

TEST_CASE("distinct directions give distinct targets") {
  for (long long q : {2, 3}) {
    auto ctx = make_context(q, 3);
    for (Vertex n : {Vertex{0, 0, 0}, Vertex{1, 1, 0}, Vertex{2, 0, 0}, Vertex{3, 1, 0}}) {
      auto arrows = arrows_type1(ctx, standard_vertex(ctx, n));
      for (std::size_t i = 0; i < arrows.size(); ++i)
        for (std::size_t j = 0; j < arrows.size(); ++j)
          CHECK(same_vertex(ctx, arrows[i].target, arrows[j].target) == (i == j));
    }
  }
}

TEST_CASE("shift depends only on the class of y in P(L/piL)") {
  std::mt19937 rng(5);
  for (long long q : {2, 3}) {
    auto ctx = make_context(q, 3);
    auto v = standard_vertex(ctx, {2, 1, 0});
    const auto& B = v.basis();
    for (auto& arrow : arrows_type1(ctx, v)) {
      // y = sum c_i b_i + pi * (random element of L), scaled by a unit and by pi^3
      LaurentVector y(3, Z(ctx));
      std::uniform_int_distribution<std::uint32_t> d(0, ctx.q - 1), unit(1, ctx.q - 1);
      const auto u = unit(rng);
      for (std::size_t i = 0; i < 3; ++i) {
        const auto extra = d(rng);
        for (std::size_t j = 0; j < 3; ++j) {
          y[j] = y[j] + B(i, j).scaled(ctx.F().mul(arrow.direction[i], u));
          if (extra) y[j] = y[j] + B(i, j).scaled(extra).shifted(-1);
        }
      }
      for (auto& c : y) c = c.shifted(-3);
      CHECK(same_vertex(ctx, shift_toward(ctx, v, y), arrow.target));
      CHECK(points_to(ctx, arrow, y));
    }
  }
}

TEST_CASE("reduction examples") {
  auto ctx = make_context(2, 3);
  auto id = standard_vertex(ctx, {0, 0, 0});
  auto c0 = reduce_to_weyl(ctx, id);
  CHECK(c0.weyl_rep == Vertex{0, 0, 0});
  CHECK(c0.gamma.matrix() == identity_poly(ctx.F(), 3));
  CHECK(reduce_to_weyl(ctx, standard_vertex(ctx, {1, 0, 0})).weyl_rep == Vertex{1, 0, 0});

  LaurentMatrix b(3, 3, Z(ctx));
  b(0, 2) = L(ctx, 0);
  b(1, 0) = pi(ctx, 1);
  b(2, 1) = pi(ctx, 1);
  LatticeVertex v(ctx, b);
  auto cert = reduce_to_weyl(ctx, v);
  CHECK(cert.weyl_rep == Vertex{1, 1, 0});
  CHECK(verify_certificate(ctx, v, cert));
  CHECK_THROWS_AS(LatticeVertex(ctx, LaurentMatrix(3, 3, Z(ctx))), Error);
}

TEST_CASE("reduction is idempotent on the chamber") {
  for (int r : {2, 3, 4}) {
    auto ctx = make_context(3, r);
    for (auto& n : window_vertices(r, 4)) {
      auto v = standard_vertex(ctx, n);
      auto cert = reduce_to_weyl(ctx, v);
      CHECK(cert.weyl_rep == n);
      CHECK(verify_certificate(ctx, v, cert));
    }
  }
}

TEST_CASE("reduction is invariant under random unimodular transport") {
  std::mt19937 rng(2024);
  for (long long q : {2, 3}) {
    for (int r : {3, 4}) {
      auto ctx = make_context(q, r);
      auto verts = window_vertices(r, 4);
      for (int t = 0; t < 60; ++t) {
        const auto& n = verts[rng() % verts.size()];
        auto g = random_unimodular(ctx, rng);
        auto v = act_right(ctx, standard_vertex(ctx, n), g);
        auto cert = reduce_to_weyl(ctx, v);
        CHECK(cert.weyl_rep == n);
        CHECK(verify_certificate(ctx, v, cert));
        CHECK(same_vertex(ctx, act(ctx, g, standard_vertex(ctx, n)), act_right(ctx, standard_vertex(ctx, n), g.inverse(ctx))));
      }
    }
  }
}

TEST_CASE("arrow targets are neighbours in the building") {
  auto ctx = make_context(2, 3);
  // each type-1 neighbour of 0 reduces to p = (1,1,0); of p to (1,0,0) or (2,2,0)
  for (auto& a : arrows_type1(ctx, standard_vertex(ctx, {0, 0, 0})))
    CHECK(reduce_to_weyl(ctx, a.target).weyl_rep == Vertex{1, 1, 0});
  int to_q = 0, to_pp = 0;
  for (auto& a : arrows_type1(ctx, standard_vertex(ctx, {1, 1, 0}))) {
    auto w = reduce_to_weyl(ctx, a.target).weyl_rep;
    to_q += (w == Vertex{1, 0, 0});
    to_pp += (w == Vertex{2, 2, 0});
  }
  CHECK(to_q == 6);
  CHECK(to_pp == 1);
}

TEST_CASE("log_nu examples") {
  auto ctx = make_context(2, 3);
  const auto& F = ctx.F();
  auto P = [&](std::vector<FiniteField::Elem> c) { return FqPoly(F, c); };
  CHECK(log_nu(ctx, WeylPoint::from_ints({2, 1, 0}), {P({}), P({}), P({1})}) == LogValue(Rational(0)));
  CHECK(log_nu(ctx, WeylPoint::from_ints({2, 1, 0}), {P({1}), P({}), P({0, 1})}) == LogValue(Rational(2)));
  CHECK(log_nu(ctx, WeylPoint::from_ints({1, 1, 0}), {P({}), P({0, 0, 1}), P({1})}) == LogValue(Rational(3)));
  CHECK(log_nu(ctx, WeylPoint::from_ints({1, 1, 0}), {P({}), P({}), P({})}).is_neg_infinity());
  // lattice norm agrees with the chamber formula on standard vertices
  for (auto& n : window_vertices(3, 3)) {
    std::vector<FqPoly> v{P({1, 1}), P({0}), P({0, 0, 1})};
    CHECK(LogValue(Rational(log_nu_lattice(ctx, standard_vertex(ctx, n), to_laurent_vector(v)))) ==
          log_nu(ctx, WeylPoint::from_ints(n), v));
  }
}

TEST_CASE("apartment arrow types") {
  auto ctx = make_context(2, 3);
  CHECK(apartment_arrow(ctx, {0, 0, 0}, {1, 1, 0}).type == 1);
  CHECK(apartment_arrow(ctx, {0, 0, 0}, {1, 0, 0}).type == 2);
  CHECK(apartment_arrow(ctx, {2, 1, 0}, {1, 1, 0}).type == 1);
  CHECK_THROWS_AS(apartment_arrow(ctx, {0, 0, 0}, {2, 0, 0}), Error);
}
