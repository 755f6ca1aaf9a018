#pragma once

#include <cstdint>

#include "btmf/field.hpp"

namespace btmf {

struct Context {
  std::uint32_t q = 0;
  std::uint32_t p = 0;
  unsigned e = 0;
  int r = 0;
  const FiniteField* field = nullptr;

  const FiniteField& F() const { return *field; }
};

// Throws NotPrimePower, RankTooSmall.
Context make_context(long long q, long long r);

}  // namespace btmf
