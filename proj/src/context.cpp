#include "btmf/context.hpp"

#include <string>

#include "btmf/error.hpp"

namespace btmf {

Context make_context(long long q, long long r) {
  if (q < 2) throw Error(ErrorKind::NotPrimePower, "q = " + std::to_string(q));
  auto [p, e] = prime_power_decompose(static_cast<std::uint64_t>(q));
  if (p == 0) throw Error(ErrorKind::NotPrimePower, "q = " + std::to_string(q));
  if (r < 2) throw Error(ErrorKind::RankTooSmall, "r = " + std::to_string(r));
  if (r > 64) throw Error(ErrorKind::GuardExceeded, "r = " + std::to_string(r));
  Context ctx;
  ctx.q = static_cast<std::uint32_t>(q);
  ctx.p = p;
  ctx.e = e;
  ctx.r = static_cast<int>(r);
  ctx.field = &FiniteField::of(ctx.q);
  return ctx;
}

}  // namespace btmf
