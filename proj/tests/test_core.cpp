#include <doctest.h>

#include <random>

#include "btmf/context.hpp"
#include "btmf/error.hpp"
#include "btmf/matrix.hpp"
#include "btmf/poly.hpp"
#include "btmf/rational.hpp"

using namespace btmf;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ConsistencyFailure;
}

FqPoly poly(const FiniteField& F, std::vector<FiniteField::Elem> c) { return FqPoly(F, std::move(c)); }

}  // namespace

TEST_CASE("make_context validates q and r") {
  auto ctx = make_context(4, 3);
  CHECK(ctx.q == 4);
  CHECK(ctx.p == 2);
  CHECK(ctx.e == 2);
  CHECK(ctx.r == 3);
  CHECK(kind_of([] { make_context(6, 3); }) == ErrorKind::NotPrimePower);
  CHECK(kind_of([] { make_context(1, 3); }) == ErrorKind::NotPrimePower);
  CHECK(kind_of([] { make_context(2, 1); }) == ErrorKind::RankTooSmall);
  CHECK(make_context(9, 2).p == 3);
  CHECK(make_context(5, 2).e == 1);
}

TEST_CASE("field representation is the least monic irreducible") {
  CHECK(FiniteField::of(4).modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(FiniteField::of(8).modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(FiniteField::of(9).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(FiniteField::of(16).modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
  // g^2 + g + 1 = 0 in F_4 with g = Y (encoded as 2)
  const auto& F4 = FiniteField::of(4);
  CHECK(F4.add(F4.add(F4.mul(2, 2), 2), 1) == 0);
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u, 49u, 64u, 81u, 256u}) {
    const auto& F = FiniteField::of(q);
    std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
    for (int t = 0; t < 300; ++t) {
      auto a = d(rng), b = d(rng), c = d(rng);
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
    // Frobenius is additive and x^q = x
    for (std::uint32_t a = 0; a < std::min<std::uint32_t>(q, 64); ++a) {
      CHECK(F.pow(a, q) == a);
      auto b = (a * 7 + 3) % q;
      CHECK(F.pow(F.add(a, b), F.characteristic()) ==
            F.add(F.pow(a, F.characteristic()), F.pow(b, F.characteristic())));
    }
  }
}

TEST_CASE("polynomial arithmetic examples") {
  const auto& F2 = FiniteField::of(2);
  auto t1 = poly(F2, {1, 1});
  CHECK(t1 * t1 == poly(F2, {1, 0, 1}));
  CHECK(t1 + FqPoly(F2) == t1);

  const auto& F3 = FiniteField::of(3);
  auto [qt, rm] = poly(F3, {1, 0, 1}).divrem(poly(F3, {0, 1}));
  CHECK(qt == poly(F3, {0, 1}));
  CHECK(rm == poly(F3, {1}));
  CHECK(kind_of([&] { poly(F3, {1}).divrem(FqPoly(F3)); }) == ErrorKind::DivisionByZero);
  CHECK(FqPoly(F3).degree() == kNegInfDegree);
}

TEST_CASE("polynomial degree is additive and divrem reconstructs") {
  std::mt19937 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 9u}) {
    const auto& F = FiniteField::of(q);
    std::uniform_int_distribution<std::uint32_t> d(0, q - 1);
    std::uniform_int_distribution<int> len(1, 7);
    for (int t = 0; t < 200; ++t) {
      std::vector<FiniteField::Elem> ca(len(rng)), cb(len(rng));
      for (auto& c : ca) c = d(rng);
      for (auto& c : cb) c = d(rng);
      FqPoly a(F, ca), b(F, cb);
      if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
      if (b.is_zero()) continue;
      auto [qt, rm] = a.divrem(b);
      CHECK(qt * b + rm == a);
      CHECK(rm.degree() < b.degree());
    }
  }
}

TEST_CASE("Laurent polynomials track exponents in both directions") {
  const auto& F = FiniteField::of(3);
  auto pi = FqLaurent::pi_power(F, 1);
  auto t = FqLaurent::monomial(F, 1, 1);
  CHECK((pi * t) == FqLaurent::constant(F, 1));
  auto f = FqLaurent(F, -2, {1, 0, 2});  // T^-2 + 2
  CHECK(f.degree() == 0);
  CHECK(f.low() == -2);
  CHECK(f.pi_valuation() == 0);
  CHECK((f - f).is_zero());
  CHECK(f.shifted(2).to_poly() == poly(F, {1, 0, 2}));
  CHECK(FqLaurent(F, 5, {0, 0, 1}).low() == 7);
}

TEST_CASE("rational arithmetic is exact") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-50, 50), pos(1, 50);
  for (int t = 0; t < 500; ++t) {
    long long a = d(rng), b = pos(rng), c = d(rng), e = pos(rng);
    Rational s = Rational(a, b) + Rational(c, e);
    CHECK(s * b * e == Rational(a * e + c * b));
    CHECK(denominator(s) > 0);
  }
  CHECK(floor(Rational(-3, 2)) == -2);
  CHECK(ceil(Rational(-3, 2)) == -1);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(ipow(5, 12) == BigInt(244140625));
  CHECK(LogValue::neg_infinity() < LogValue(Rational(-1000)));
}

TEST_CASE("finite-field linear algebra") {
  const auto& F = FiniteField::of(3);
  FqMatrix m(3, 3, 0);
  m(0, 0) = 1; m(0, 1) = 2;
  m(1, 0) = 2; m(1, 1) = 1;  // row1 = 2 * row0
  m(2, 2) = 1;
  CHECK(rank(F, m) == 2);
  CHECK(determinant(F, m) == 0);
  auto v = kernel_vector(F, m);
  REQUIRE(v);
  for (std::size_t i = 0; i < 3; ++i) {
    FiniteField::Elem s = 0;
    for (std::size_t j = 0; j < 3; ++j) s = F.add(s, F.mul(m(i, j), (*v)[j]));
    CHECK(s == 0);
  }
  FqMatrix id(2, 2, 0);
  id(0, 0) = 2; id(1, 1) = 2;
  CHECK(determinant(F, id) == 1);
}
