#include <doctest.h>

#include <set>

#include "btmf/error.hpp"
#include "btmf/weyl.hpp"

using namespace btmf;

namespace {

std::vector<int> indices(const std::vector<CharSeqEntry>& seq) {
  std::vector<int> out;
  for (auto& e : seq) out.push_back(static_cast<int>(e.symbol.s) * 10 + e.symbol.i);
  return out;
}

std::vector<Rational> lognorms(const std::vector<CharSeqEntry>& seq) {
  std::vector<Rational> out;
  for (auto& e : seq) out.push_back(e.lognorm);
  return out;
}

std::vector<Rational> R(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

Vertex V2(long long a, long long b) { return {a, b, 0}; }

// Independent oracle: enumerate T^s e_i with s <= smax and sort by (s + x_i, -i).
std::vector<CharSeqEntry> sort_oracle(const ApartmentPoint& x, int count, int smax) {
  std::vector<CharSeqEntry> all;
  for (int s = 0; s <= smax; ++s)
    for (int i = 1; i <= x.rank(); ++i) all.push_back({{s, i}, Rational(s) + x[i - 1], 0});
  std::stable_sort(all.begin(), all.end(), [](auto& a, auto& b) {
    return a.lognorm < b.lognorm || (a.lognorm == b.lognorm && a.symbol.i > b.symbol.i);
  });
  all.resize(static_cast<std::size_t>(count));
  return all;
}

}  // namespace

TEST_CASE("characteristic sequence examples") {
  auto ctx = make_context(2, 3);
  auto s0 = characteristic_sequence(ctx, ApartmentPoint::from_ints({0, 0, 0}), 6);
  CHECK(indices(s0) == std::vector<int>{3, 2, 1, 13, 12, 11});
  CHECK(lognorms(s0) == R({0, 0, 0, 1, 1, 1}));

  auto s1 = characteristic_sequence(ctx, ApartmentPoint::from_ints({1, 1, 0}), 5);
  CHECK(indices(s1) == std::vector<int>{3, 13, 2, 1, 23});
  CHECK(lognorms(s1) == R({0, 1, 1, 1, 2}));

  auto s2 = characteristic_sequence(ctx, ApartmentPoint::from_ints({1, 0, 0}), 5);
  CHECK(indices(s2) == std::vector<int>{3, 2, 13, 12, 1});
  CHECK(lognorms(s2) == R({0, 0, 1, 1, 1}));
  CHECK(s2[4].cycle_index == 2);
}

TEST_CASE("characteristic sequence agrees with the sort oracle and is ordered") {
  for (int r : {2, 3, 4}) {
    auto ctx = make_context(3, r);
    for (auto& n : window_vertices(r, 4)) {
      auto x = ApartmentPoint::from_ints(n);
      auto seq = characteristic_sequence(ctx, x, 12);
      auto oracle = sort_oracle(x, 12, 20);
      CHECK(indices(seq) == indices(oracle));
      for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
        bool ok = seq[j].lognorm < seq[j + 1].lognorm ||
                  (seq[j].lognorm == seq[j + 1].lognorm && seq[j].symbol.i > seq[j + 1].symbol.i);
        CHECK(ok);
      }
    }
  }
  // a rational point off the chamber
  auto ctx = make_context(2, 3);
  ApartmentPoint x({Rational(-3, 2), Rational(5, 3), Rational(0)});
  CHECK(indices(characteristic_sequence(ctx, x, 9)) == indices(sort_oracle(x, 9, 30)));
}

TEST_CASE("cycle structure examples") {
  auto ctx = make_context(2, 3);
  auto c0 = cycle_structure(ctx, WeylPoint::from_ints({0, 0, 0}));
  CHECK(c0.h_values == std::vector<long long>{0, 0});
  REQUIRE(c0.cycles.size() == 1);
  CHECK(c0.cycles[0].length == 3);
  CHECK(c0.cycles[0].count == -1);

  auto c1 = cycle_structure(ctx, WeylPoint::from_ints({1, 1, 0}));
  CHECK(c1.h_values == std::vector<long long>{1, 1});
  REQUIRE(c1.cycles.size() == 2);
  CHECK((c1.cycles[0].length == 1 && c1.cycles[0].count == 1));

  auto c2 = cycle_structure(ctx, WeylPoint::from_ints({2, 1, 0}));
  CHECK(c2.h_values == std::vector<long long>{1, 3});
  REQUIRE(c2.cycles.size() == 3);
  CHECK((c2.cycles[1].length == 2 && c2.cycles[1].count == 1));

  CHECK_THROWS_AS(cycle_structure(ctx, WeylPoint({Rational(1, 2), Rational(0), Rational(0)})), Error);
}

TEST_CASE("cycle runs coincide with groups of equal lognorm") {
  for (int r : {3, 4}) {
    auto ctx = make_context(2, r);
    for (auto& n : window_vertices(r, 5)) {
      auto cs = cycle_structure(ctx, WeylPoint::from_ints(n));
      std::vector<int> lengths;
      for (auto& run : cs.cycles)
        for (long long c = 0; c < (run.count < 0 ? 2 : run.count); ++c) lengths.push_back(run.length);
      int total = 0;
      for (int l : lengths) total += l;
      auto seq = characteristic_sequence(ctx, ApartmentPoint::from_ints(n), total);
      std::vector<int> groups;
      for (std::size_t j = 0; j < seq.size(); ++j) {
        if (j == 0 || seq[j].lognorm != seq[j - 1].lognorm) groups.push_back(0);
        ++groups.back();
      }
      CHECK(groups == lengths);
      CHECK(cs.h_values.back() == total - 2 * r);
    }
  }
}

TEST_CASE("k-inseparability examples") {
  auto ctx = make_context(2, 3);
  CHECK(is_k_inseparable(ctx, ApartmentPoint::from_ints({0, 0, 0}), 2));
  CHECK_FALSE(is_k_inseparable(ctx, ApartmentPoint::from_ints({0, 0, 0}), 3));
  CHECK(is_k_inseparable(ctx, ApartmentPoint::from_ints({1, 1, 0}), 2));
  // W(1) is the wall x_{r-1} = x_r
  CHECK_FALSE(wk_membership(ctx, ApartmentPoint::from_ints({1, 1, 0}), 1));
  CHECK(wk_membership(ctx, ApartmentPoint::from_ints({2, 0, 0}), 1));
  CHECK_FALSE(wk_membership(ctx, ApartmentPoint::from_ints({2, 1, 0}), 1));
}

TEST_CASE("cycle criterion equals lognorm criterion on vertices") {
  for (int r : {3, 4}) {
    auto ctx = make_context(2, r);
    for (auto& n : window_vertices(r, 5))
      for (int k = 1; k <= 15; ++k)
        CHECK(is_k_inseparable(ctx, ApartmentPoint::from_ints(n), k) ==
              cycle_criterion(ctx, WeylPoint::from_ints(n), k));
  }
}

TEST_CASE("membership is invariant under the Weyl group") {
  auto ctx = make_context(2, 3);
  for (auto& n : window_vertices(3, 4))
    for (int k = 1; k <= 6; ++k) {
      bool base = wk_membership(ctx, n, k);
      std::vector<long long> p = n;
      std::sort(p.begin(), p.end());
      do {
        CHECK(wk_membership(ctx, ApartmentPoint::normalized({p.begin(), p.end()}), k) == base);
      } while (std::next_permutation(p.begin(), p.end()));
    }
}

TEST_CASE("W(k) window examples") {
  auto ctx = make_context(2, 3);
  CHECK(wk_window(ctx, 2, 3) == std::vector<Vertex>{V2(0, 0), V2(1, 1), V2(2, 1), V2(3, 1)});
  CHECK(wk_window(ctx, 3, 2) == std::vector<Vertex>{V2(1, 0), V2(1, 1), V2(2, 0), V2(2, 2)});
  auto ctx2 = make_context(2, 2);
  CHECK(wk_window(ctx2, 1, 4) == std::vector<Vertex>{{0, 0}});
}

TEST_CASE("recursion reproduces the next complex") {
  for (int r : {3, 4}) {
    auto ctx = make_context(2, r);
    for (int k = 1; k <= 5; ++k)
      for (long long bound = 1; bound <= 6; ++bound)
        CHECK(recursion_image(ctx, k, bound) == wk_window(ctx, k + 1, bound));
  }
}

TEST_CASE("standard vertex membership") {
  auto ctx = make_context(2, 3);
  CHECK_FALSE(standard_vertex_membership(ctx, 1, 2));
  CHECK(standard_vertex_membership(ctx, 2, 2));
  CHECK_FALSE(standard_vertex_membership(ctx, 0, 6));
  for (int r = 2; r <= 5; ++r) {
    auto c = make_context(2, r);
    for (int i = 0; i < r; ++i)
      for (int k = 1; k <= 3 * r; ++k)
        CHECK(standard_vertex_membership(c, i, k) == wk_membership(c, standard_basis_vertex(r, i), k));
  }
}

TEST_CASE("window simplices have the expected counts") {
  // r = 3, bound 1: vertices (0,0),(1,0),(1,1); edges 3; one triangle
  auto s = window_simplices(3, 1, 2);
  std::size_t v = 0, e = 0, t = 0;
  for (auto& sigma : s) {
    if (sigma.size() == 1) ++v;
    if (sigma.size() == 2) ++e;
    if (sigma.size() == 3) ++t;
  }
  CHECK(v == 3);
  CHECK(e == 3);
  CHECK(t == 1);
  for (auto& sigma : window_simplices(4, 3, 3))
    for (std::size_t i = 0; i < sigma.size(); ++i)
      for (std::size_t j = i + 1; j < sigma.size(); ++j) CHECK(adjacent(sigma[i], sigma[j]));
}

TEST_CASE("complex checks") {
  for (int k = 1; k <= 5; ++k) {
    auto ctx = make_context(2, 3);
    auto rep = complex_checks(ctx, k, 8);
    CHECK(rep.is_full);
    CHECK(rep.dim_everywhere);
    CHECK(rep.connected);
  }
  auto rep1 = complex_checks(make_context(2, 3), 1, 4);
  CHECK((rep1.is_full && rep1.dim_everywhere && rep1.connected));
  auto rep2 = complex_checks(make_context(2, 2), 2, 8);
  CHECK(rep2.is_full);
  CHECK(rep2.dim_everywhere);
}
