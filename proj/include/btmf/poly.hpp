#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "btmf/field.hpp"

namespace btmf {

inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

// Element of A = F_q[T]. A default-constructed value is the zero polynomial
// with no attached field; arithmetic takes the field from either operand.
class FqPoly {
 public:
  using Elem = FiniteField::Elem;

  FqPoly() = default;
  explicit FqPoly(const FiniteField& F) : field_(&F) {}
  FqPoly(const FiniteField& F, std::vector<Elem> coeffs);

  static FqPoly constant(const FiniteField& F, Elem c);
  static FqPoly monomial(const FiniteField& F, Elem c, int degree);

  const FiniteField* field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  Elem coeff(int i) const { return (i < 0 || i >= static_cast<int>(c_.size())) ? 0 : c_[i]; }
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }

  FqPoly scaled(Elem c) const;
  std::pair<FqPoly, FqPoly> divrem(const FqPoly& b) const;

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b);
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
  FqPoly operator-() const;
  friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  const FiniteField* field_ = nullptr;
  std::vector<Elem> c_;
};

// Finitely supported Laurent polynomial in T; pi = T^{-1}.
class FqLaurent {
 public:
  using Elem = FiniteField::Elem;

  FqLaurent() = default;
  explicit FqLaurent(const FiniteField& F) : field_(&F) {}
  FqLaurent(const FiniteField& F, int low, std::vector<Elem> coeffs);
  FqLaurent(const FqPoly& p);  // NOLINT(implicit)

  static FqLaurent constant(const FiniteField& F, Elem c);
  static FqLaurent monomial(const FiniteField& F, Elem c, int t_exponent);
  static FqLaurent pi_power(const FiniteField& F, int n) { return monomial(F, 1, -n); }

  const FiniteField* field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  // highest / lowest exponent of T; kNegInfDegree for zero
  int degree() const { return c_.empty() ? kNegInfDegree : low_ + static_cast<int>(c_.size()) - 1; }
  int low() const { return c_.empty() ? kNegInfDegree : low_; }
  // v_pi = -deg_T; zero has valuation +inf, reported as INT_MAX
  int pi_valuation() const { return c_.empty() ? std::numeric_limits<int>::max() : -degree(); }
  Elem coeff(int t_exponent) const;
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }

  FqLaurent scaled(Elem c) const;
  FqLaurent shifted(int t_exponent) const;  // multiply by T^k
  bool is_polynomial() const { return c_.empty() || low_ >= 0; }
  FqPoly to_poly() const;

  friend FqLaurent operator+(const FqLaurent& a, const FqLaurent& b);
  friend FqLaurent operator-(const FqLaurent& a, const FqLaurent& b);
  friend FqLaurent operator*(const FqLaurent& a, const FqLaurent& b);
  FqLaurent operator-() const;
  friend bool operator==(const FqLaurent& a, const FqLaurent& b) {
    return a.c_ == b.c_ && (a.c_.empty() || a.low_ == b.low_);
  }

  std::string to_string() const;

 private:
  void trim();
  const FiniteField* field_ = nullptr;
  int low_ = 0;
  std::vector<Elem> c_;
};

}  // namespace btmf
