#include "btmf/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "btmf/error.hpp"

namespace btmf {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint64_t v, std::uint32_t p, unsigned len) {
  Digits d(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

std::uint64_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint64_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic b over F_p
Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * std::uint64_t(b[i])) % p);
    trim(a);
  }
  return a;
}

bool is_irreducible(const Digits& f, std::uint32_t p) {
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= e; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Digits g = to_digits(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::pair<std::uint32_t, unsigned> prime_power_decompose(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  unsigned e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), e};
}

FiniteField::FiniteField(std::uint32_t p, unsigned e) : p_(p), e_(e) {
  q_ = 1;
  for (unsigned i = 0; i < e; ++i) q_ *= p;

  std::uint64_t pe = q_;
  for (std::uint64_t low = 0;; ++low) {
    Digits f = to_digits(low, p, e);
    f.push_back(1);
    if (e == 1 || is_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
    if (low + 1 == pe) throw Error(ErrorKind::ConsistencyFailure, "no irreducible polynomial found");
  }

  auto slow_mul = [&](Elem a, Elem b) -> Elem {
    Digits da = to_digits(a, p, e), db = to_digits(b, p, e);
    Digits prod(2 * e, 0);
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < e; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(da[i]) * db[j]) % p);
    Digits r = poly_mod(prod, modulus_, p);
    r.resize(e, 0);
    return static_cast<Elem>(from_digits(r, p));
  };
  auto slow_pow = [&](Elem a, std::uint64_t n) {
    Elem result = 1;
    while (n) {
      if (n & 1u) result = slow_mul(result, a);
      a = slow_mul(a, a);
      n >>= 1;
    }
    return result;
  };

  // prime divisors of q - 1
  std::vector<std::uint64_t> primes;
  {
    std::uint64_t m = q_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        primes.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) primes.push_back(m);
  }
  for (Elem g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto l : primes)
      if (slow_pow(g, (q_ - 1) / l) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      generator_ = g;
      break;
    }
  }

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator_);
  }
  if (x != 1) throw Error(ErrorKind::ConsistencyFailure, "generator order mismatch");

  neg_.assign(q_, 0);
  for (Elem a = 0; a < q_; ++a) {
    Digits d = to_digits(a, p, e);
    for (auto& c : d) c = (p - c) % p;
    neg_[a] = static_cast<Elem>(from_digits(d, p));
  }
}

const FiniteField& FiniteField::of(std::uint32_t order) {
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<FiniteField>> cache;
  auto [p, e] = prime_power_decompose(order);
  if (p == 0) throw Error(ErrorKind::NotPrimePower, std::to_string(order) + " is not a prime power");
  if (order > kMaxOrder) throw Error(ErrorKind::GuardExceeded, "field order exceeds 2^20");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end())
    it = cache.emplace(order, std::unique_ptr<FiniteField>(new FiniteField(p, e))).first;
  return *it->second;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem result = 0, place = 1;
  while (a || b) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    result += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return result;
}

FiniteField::Elem FiniteField::neg(Elem a) const { return neg_[a]; }

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) % (q_ - 1)];
}

FiniteField::Elem FiniteField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0) throw Error(ErrorKind::DivisionByZero, "log of zero in F_q");
  return log_[a];
}

}  // namespace btmf
