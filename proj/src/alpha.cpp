#include "btmf/alpha.hpp"

#include <algorithm>
#include <functional>

#include "btmf/error.hpp"

namespace btmf {

LogNorm log_alpha_norm_vertex(const Context& ctx, const Vertex& n, int k) {
  if (k < 1) throw Error(ErrorKind::KOutOfRange, "k must be >= 1");
  auto x = ApartmentPoint::from_ints(n);
  if (!x.in_chamber()) throw Error(ErrorKind::InvalidPoint, vertex_to_string(n) + " is not in W");
  auto seq = characteristic_sequence(ctx, x, k);
  Rational sum = 0;
  BigInt qpow = 1;
  for (int j = 0; j < k; ++j) {
    sum += Rational(qpow) * seq[static_cast<std::size_t>(j)].lognorm;
    qpow *= ctx.q;
  }
  return -Rational(ctx.q - 1) * sum;
}

SimplexLocation locate_simplex(const WeylPoint& x) {
  const int r = x.rank();
  Vertex base(static_cast<std::size_t>(r));
  std::vector<Rational> frac(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    BigInt f = floor(x[i]);
    base[static_cast<std::size_t>(i)] = f.convert_to<long long>();
    frac[static_cast<std::size_t>(i)] = x[i] - Rational(f);
  }
  std::vector<Rational> levels;
  for (auto& f : frac)
    if (f > 0) levels.push_back(f);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  SimplexLocation loc;
  Rational top = levels.empty() ? Rational(0) : levels.front();
  loc.vertices.push_back(base);
  loc.weights.push_back(Rational(1) - top);
  for (std::size_t j = 0; j < levels.size(); ++j) {
    Vertex v = base;
    for (int i = 0; i < r; ++i)
      if (frac[static_cast<std::size_t>(i)] >= levels[j]) v[static_cast<std::size_t>(i)] += 1;
    Rational next = (j + 1 < levels.size()) ? levels[j + 1] : Rational(0);
    loc.vertices.push_back(v);
    loc.weights.push_back(levels[j] - next);
  }
  if (loc.weights.front() == 0) {
    loc.vertices.erase(loc.vertices.begin());
    loc.weights.erase(loc.weights.begin());
  }
  return loc;
}

LogNorm log_alpha_norm_point(const Context& ctx, const WeylPoint& x, int k) {
  if (x.rank() != ctx.r) throw Error(ErrorKind::InvalidPoint, "point rank differs from r");
  auto loc = locate_simplex(x);
  Rational value = 0;
  for (std::size_t j = 0; j < loc.vertices.size(); ++j)
    value += loc.weights[j] * log_alpha_norm_vertex(ctx, loc.vertices[j], k);
  return value;
}

LogNorm alpha_constant_log(const Context& ctx, int k) {
  if (k < 1) throw Error(ErrorKind::KOutOfRange, "k must be >= 1");
  BigInt qk = ipow(ctx.q, static_cast<unsigned>(k));
  return Rational(BigInt(ctx.q) * (qk - 1), BigInt(ctx.q - 1)) - Rational(BigInt(k) * qk);
}

}  // namespace btmf
