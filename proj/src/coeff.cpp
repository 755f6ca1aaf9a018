#include "btmf/coeff.hpp"

#include <algorithm>

#include "btmf/error.hpp"
#include "btmf/parallel.hpp"
#include "btmf/vanderput.hpp"

namespace btmf {

namespace {

void check_d(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be >= 1");
}

// number of a in A with deg a + x <= t
BigInt count_bounded(std::uint32_t q, const Rational& t, const Rational& x) {
  BigInt f = floor(t - x);
  if (f < 0) return 1;
  return ipow(q, f.convert_to<unsigned>() + 1);
}

}  // namespace

Rational log_e_si(const Context& ctx, const WeylPoint& x, int d, int s, int i) {
  check_d(d);
  if (x.rank() != ctx.r) throw Error(ErrorKind::InvalidPoint, "point rank differs from r");
  if (s < 0 || s >= d) throw Error(ErrorKind::IndexOutOfRange, "s must lie in 0..d-1");
  if (i < 1 || i > ctx.r) throw Error(ErrorKind::IndexOutOfRange, "i must lie in 1..r");
  const Rational B = Rational(s) + x[i - 1] - Rational(d);

  // candidate values of M(tuple) = max_n (deg a_n + x_n) below B
  std::vector<Rational> levels;
  for (int n = i + 1; n <= ctx.r; ++n) {
    const Rational& xn = x[n - 1];
    for (long long delta = 0; Rational(delta) + xn < B; ++delta) levels.push_back(Rational(delta) + xn);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  Rational total = B;
  BigInt below = 1;  // tuples with M <= previous level (just the zero tuple at first)
  for (const auto& m : levels) {
    BigInt upto = 1;
    for (int n = i + 1; n <= ctx.r; ++n) upto *= count_bounded(ctx.q, m, x[n - 1]);
    total += Rational(upto - below) * (B - m);
    below = upto;
  }
  return total;
}

std::vector<TorsionEntry> torsion_char_sequence(const Context& ctx, const WeylPoint& x, int d) {
  check_d(d);
  std::vector<TorsionEntry> seq;
  for (int s = 0; s < d; ++s)
    for (int i = 1; i <= ctx.r; ++i) seq.push_back({{s, i}, log_e_si(ctx, x, d, s, i)});
  std::sort(seq.begin(), seq.end(), [](const TorsionEntry& a, const TorsionEntry& b) {
    if (a.lognorm != b.lognorm) return a.lognorm < b.lognorm;
    if (a.symbol.i != b.symbol.i) return a.symbol.i > b.symbol.i;
    return a.symbol.s < b.symbol.s;
  });
  return seq;
}

bool wprime_membership(const Context& ctx, const WeylPoint& x, int d, int k) {
  check_d(d);
  if (k < 1 || k >= ctx.r * d) throw Error(ErrorKind::KOutOfRange, "k must satisfy 1 <= k < rd");
  auto seq = torsion_char_sequence(ctx, x, d);
  return seq[static_cast<std::size_t>(k - 1)].lognorm == seq[static_cast<std::size_t>(k)].lognorm;
}

LogNorm log_coeff_norm(const Context& ctx, const WeylPoint& x, int d, int k) {
  check_d(d);
  if (k < 1 || k > ctx.r * d) throw Error(ErrorKind::KOutOfRange, "k must satisfy 1 <= k <= rd");
  auto seq = torsion_char_sequence(ctx, x, d);
  Rational value = d;
  BigInt prev = 1;
  for (int s = 1; s <= k; ++s) {
    BigInt cur = prev * ctx.q;
    value -= Rational(cur - prev) * seq[static_cast<std::size_t>(s - 1)].lognorm;
    prev = cur;
  }
  return value;
}

LogNorm log_coeff_norm(const Context& ctx, const Vertex& n, int d, int k) {
  return log_coeff_norm(ctx, WeylPoint::from_ints(n), d, k);
}

LogNorm coeff_constant_log(const Context& ctx, int d, int k) {
  check_d(d);
  if (k < 1) throw Error(ErrorKind::KOutOfRange, "k must be >= 1");
  if (k > d) throw Error(ErrorKind::RegimeViolation, "closed form requires k <= d");
  BigInt qk = ipow(ctx.q, static_cast<unsigned>(k));
  return Rational(BigInt(d - k) * qk) + Rational(BigInt(ctx.q) * (qk - 1), BigInt(ctx.q - 1));
}

LogNorm coeff_origin_closed_form(const Context& ctx, int d, int k) {
  check_d(d);
  if (k < 1 || k > ctx.r * d) throw Error(ErrorKind::KOutOfRange, "k must satisfy 1 <= k <= rd");
  const int s = k / ctx.r;
  BigInt qk = ipow(ctx.q, static_cast<unsigned>(k));
  BigInt qr = ipow(ctx.q, static_cast<unsigned>(ctx.r));
  BigInt qrs = ipow(ctx.q, static_cast<unsigned>(ctx.r * s));
  return Rational(BigInt(d - s) * qk) + Rational(qr * (qrs - 1), qr - 1);
}

SimplicialAgreementReport verify_simplicial_agreement(const Context& ctx, int d, int k, long long bound) {
  check_d(d);
  if (k > d) throw Error(ErrorKind::RegimeViolation, "coefficient forms are compared only for k <= d");
  SimplicialAgreementReport rep;
  rep.expected_offset = coeff_constant_log(ctx, d, k) - alpha_constant_log(ctx, k);
  const auto verts = window_vertices(ctx.r, bound);
  rep.vertices = verts.size();
  const FormSpec alpha{FormKind::Alpha, k, 0}, coeff{FormKind::Coeff, k, d};

  struct Row {
    bool member_ok, offset_ok, degree_ok;
  };
  auto rows = parallel_map(verts.size(), [&](std::size_t idx) {
    const auto& n = verts[idx];
    const auto x = WeylPoint::from_ints(n);
    Row row{};
    row.member_ok = wprime_membership(ctx, x, d, k) == wk_membership(ctx, n, k);
    row.offset_ok = log_coeff_norm(ctx, x, d, k) - log_alpha_norm_vertex(ctx, n, k) == rep.expected_offset;
    row.degree_ok = inner_degree(ctx, coeff, n) == inner_degree(ctx, alpha, n);
    return row;
  });
  for (std::size_t idx = 0; idx < verts.size(); ++idx) {
    const auto name = vertex_to_string(verts[idx]);
    if (!rows[idx].member_ok) {
      rep.membership_equal = false;
      rep.violations.push_back("membership differs at " + name);
    }
    if (!rows[idx].offset_ok) {
      rep.constant_offset = false;
      rep.violations.push_back("norm offset differs at " + name);
    }
    if (!rows[idx].degree_ok) {
      rep.inner_degrees_equal = false;
      rep.violations.push_back("inner degree differs at " + name);
    }
  }
  return rep;
}

}  // namespace btmf
