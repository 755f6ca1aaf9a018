#include <doctest.h>

#include "btmf/alpha.hpp"

using namespace btmf;

namespace {

Rational Q(long long n, long long d = 1) { return Rational(n, d); }

// Direct evaluation of the sum over the sorted multiset {s + n_i}.
Rational alpha_oracle(long long q, const Vertex& n, int k) {
  std::vector<long long> norms;
  for (long long s = 0; s <= k; ++s)
    for (auto c : n) norms.push_back(s + c);
  std::sort(norms.begin(), norms.end());
  Rational sum = 0, qp = 1;
  for (int j = 0; j < k; ++j) {
    sum += qp * norms[static_cast<std::size_t>(j)];
    qp *= q;
  }
  return -(q - 1) * sum;
}

}  // namespace

TEST_CASE("alpha_2 on the rank 3 chamber") {
  for (long long q : {2, 3, 4, 5}) {
    auto ctx = make_context(q, 3);
    CHECK(log_alpha_norm_vertex(ctx, {0, 0, 0}, 2) == 0);
    CHECK(log_alpha_norm_vertex(ctx, {1, 1, 0}, 2) == Q(-(q * q - q)));
    CHECK(log_alpha_norm_vertex(ctx, {5, 5, 0}, 2) == Q(-(q * q - q)));
    for (long long n = 0; n <= 6; ++n) CHECK(log_alpha_norm_vertex(ctx, {n, 0, 0}, 2) == 0);
  }
}

TEST_CASE("alpha norms agree with the multiset oracle") {
  for (int r : {2, 3, 4}) {
    for (long long q : {2, 3}) {
      auto ctx = make_context(q, r);
      for (auto& n : window_vertices(r, 4))
        for (int k = 1; k <= 8; ++k) CHECK(log_alpha_norm_vertex(ctx, n, k) == alpha_oracle(q, n, k));
    }
  }
}

TEST_CASE("interpolation at rational points") {
  for (long long q : {2, 3}) {
    auto ctx = make_context(q, 3);
    auto v = -Q(q * q - q);
    CHECK(log_alpha_norm_point(ctx, WeylPoint({Q(1, 2), Q(1, 2), Q(0)}), 2) == v / 2);
    CHECK(log_alpha_norm_point(ctx, WeylPoint::from_ints({1, 1, 0}), 2) == v);
    CHECK(log_alpha_norm_point(ctx, WeylPoint({Q(3, 2), Q(1), Q(0)}), 2) == v);
  }
}

TEST_CASE("simplex location") {
  auto loc = locate_simplex(WeylPoint({Q(7, 3), Q(4, 3), Q(0)}));
  REQUIRE(loc.vertices.size() == 2);
  CHECK(loc.vertices[0] == Vertex{2, 1, 0});
  CHECK(loc.vertices[1] == Vertex{3, 2, 0});
  CHECK(loc.weights[0] == Q(2, 3));
  CHECK(loc.weights[1] == Q(1, 3));

  auto loc2 = locate_simplex(WeylPoint({Q(5, 2), Q(1, 4), Q(0)}));
  REQUIRE(loc2.vertices.size() == 3);
  CHECK(loc2.vertices[1] == Vertex{3, 0, 0});
  CHECK(loc2.vertices[2] == Vertex{3, 1, 0});
  // barycentric reconstruction
  for (int i = 0; i < 3; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += loc2.weights[j] * loc2.vertices[j][static_cast<std::size_t>(i)];
    CHECK(s == std::vector<Rational>{Q(5, 2), Q(1, 4), Q(0)}[static_cast<std::size_t>(i)]);
  }
  for (std::size_t j = 0; j < 3; ++j) CHECK(WeylPoint::from_ints(loc2.vertices[j]).in_chamber());
}

TEST_CASE("deep chamber constant") {
  auto ctx2 = make_context(2, 3);
  CHECK(alpha_constant_log(ctx2, 1) == 0);
  CHECK(alpha_constant_log(ctx2, 3) == -10);
  CHECK(log_alpha_norm_vertex(ctx2, {3, 3, 0}, 3) == -10);
  for (int r : {3, 4}) {
    for (long long q : {2, 3, 5}) {
      auto ctx = make_context(q, r);
      CHECK(alpha_constant_log(ctx, 2) == -Q(q * q - q));
      for (auto& n : window_vertices(r, 6))
        for (int k = 1; k <= 6; ++k)
          if (n[static_cast<std::size_t>(r - 2)] >= k) CHECK(log_alpha_norm_vertex(ctx, n, k) == alpha_constant_log(ctx, k));
    }
  }
}

TEST_CASE("monotonicity in k and in n") {
  for (int r : {3, 4}) {
    for (long long q : {2, 3}) {
      auto ctx = make_context(q, r);
      for (auto& n : window_vertices(r, 5)) {
        int zeros = 0;
        for (int i = 1; i < r; ++i)
          if (n[static_cast<std::size_t>(r - i)] == 0) zeros = i;
        for (int k = 1; k < 10; ++k) {
          auto a = log_alpha_norm_vertex(ctx, n, k), b = log_alpha_norm_vertex(ctx, n, k + 1);
          CHECK(b <= a);
          if (k > zeros) CHECK(b < a);
        }
        for (int i = 1; i < r; ++i) {
          Vertex m = n;
          for (int j = 0; j < i; ++j) m[static_cast<std::size_t>(j)] += 1;
          for (int k = 1; k <= 10; ++k) CHECK(log_alpha_norm_vertex(ctx, m, k) <= log_alpha_norm_vertex(ctx, n, k));
        }
      }
    }
  }
}
