#pragma once

#include <cstdint>
#include <vector>

namespace btmf {

// GF(p^e) realised as F_p[Y]/(f), f the least monic irreducible of degree e
// when monic polynomials are ordered by their base-p encoding.
// Element encoding: sum of c_i p^i for the residue sum c_i Y^i.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  // Shared instance per order; throws NotPrimePower / GuardExceeded.
  static const FiniteField& of(std::uint32_t order);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  // coefficients of f, constant term first, leading 1 included
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t n) const;
  // image of an integer in the prime field
  Elem from_int(long long n) const;
  // discrete log base generator(); a != 0
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t n) const { return exp_[n % (q_ - 1)]; }

 private:
  FiniteField(std::uint32_t p, unsigned e);

  std::uint32_t p_;
  unsigned e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 1;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
};

// Returns (p, e) with q = p^e, or (0, 0) if q is not a prime power.
std::pair<std::uint32_t, unsigned> prime_power_decompose(std::uint64_t q);

}  // namespace btmf
