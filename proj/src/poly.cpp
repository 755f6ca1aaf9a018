#include "btmf/poly.hpp"

#include <algorithm>

#include "btmf/error.hpp"

namespace btmf {

namespace {

const FiniteField& pick(const FiniteField* a, const FiniteField* b) {
  if (a && b && a != b) throw Error(ErrorKind::InvalidArgument, "mixed fields in polynomial arithmetic");
  if (a) return *a;
  if (b) return *b;
  return FiniteField::of(2);  // both operands are fieldless zeros
}

std::string term(FiniteField::Elem c, int e, bool first) {
  std::string s = first ? "" : " + ";
  bool show_c = (c != 1 || e == 0);
  if (show_c) s += std::to_string(c);
  if (e != 0) {
    if (show_c) s += "*";
    s += "T";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

// ---- FqPoly ----

FqPoly::FqPoly(const FiniteField& F, std::vector<Elem> coeffs) : field_(&F), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= F.order()) throw Error(ErrorKind::InvalidArgument, "coefficient outside F_q");
  trim();
}

FqPoly FqPoly::constant(const FiniteField& F, Elem c) { return FqPoly(F, {c}); }

FqPoly FqPoly::monomial(const FiniteField& F, Elem c, int degree) {
  std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return FqPoly(F, std::move(v));
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::scaled(Elem c) const {
  if (!field_ || c == 0) return FqPoly();
  FqPoly r(*field_);
  r.c_.reserve(c_.size());
  for (auto x : c_) r.c_.push_back(field_->mul(x, c));
  r.trim();
  return r;
}

FqPoly operator+(const FqPoly& a, const FqPoly& b) {
  const FiniteField& F = pick(a.field_, b.field_);
  FqPoly r(F);
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.add(a.coeff(int(i)), b.coeff(int(i)));
  r.trim();
  return r;
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  if (field_)
    for (auto& x : r.c_) x = field_->neg(x);
  return r;
}

FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + (-b); }

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
  const FiniteField& F = pick(a.field_, b.field_);
  FqPoly r(F);
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  r.trim();
  return r;
}

std::pair<FqPoly, FqPoly> FqPoly::divrem(const FqPoly& b) const {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FiniteField& F = pick(field_, b.field_);
  FqPoly rem = *this;
  rem.field_ = &F;
  FqPoly quot(F);
  if (degree() < b.degree()) return {quot, rem};
  quot.c_.assign(c_.size() - b.c_.size() + 1, 0);
  const Elem lead_inv = F.inv(b.leading());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    int shift = rem.degree() - b.degree();
    Elem c = F.mul(rem.leading(), lead_inv);
    quot.c_[shift] = c;
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      rem.c_[shift + i] = F.sub(rem.c_[shift + i], F.mul(c, b.c_[i]));
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

std::string FqPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    if (c_[e] == 0) continue;
    s += term(c_[e], e, first);
    first = false;
  }
  return s;
}

// ---- FqLaurent ----

FqLaurent::FqLaurent(const FiniteField& F, int low, std::vector<Elem> coeffs)
    : field_(&F), low_(low), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= F.order()) throw Error(ErrorKind::InvalidArgument, "coefficient outside F_q");
  trim();
}

FqLaurent::FqLaurent(const FqPoly& p) : field_(p.field()), low_(0), c_(p.coeffs()) { trim(); }

FqLaurent FqLaurent::constant(const FiniteField& F, Elem c) { return FqLaurent(F, 0, {c}); }

FqLaurent FqLaurent::monomial(const FiniteField& F, Elem c, int t_exponent) {
  return FqLaurent(F, t_exponent, {c});
}

void FqLaurent::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

FqLaurent::Elem FqLaurent::coeff(int t_exponent) const {
  long long i = static_cast<long long>(t_exponent) - low_;
  if (c_.empty() || i < 0 || i >= static_cast<long long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

FqLaurent FqLaurent::scaled(Elem c) const {
  if (!field_ || c == 0) return FqLaurent();
  FqLaurent r = *this;
  for (auto& x : r.c_) x = field_->mul(x, c);
  return r;
}

FqLaurent FqLaurent::shifted(int t_exponent) const {
  FqLaurent r = *this;
  if (!r.c_.empty()) r.low_ += t_exponent;
  return r;
}

FqPoly FqLaurent::to_poly() const {
  if (!is_polynomial()) throw Error(ErrorKind::InvalidArgument, "Laurent polynomial has negative exponents");
  if (!field_) return FqPoly();
  std::vector<Elem> v(static_cast<std::size_t>(low_), 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return FqPoly(*field_, std::move(v));
}

FqLaurent operator+(const FqLaurent& a, const FqLaurent& b) {
  const FiniteField& F = pick(a.field_, b.field_);
  if (a.is_zero()) return b.field_ ? b : FqLaurent(F);
  if (b.is_zero()) return a;
  int low = std::min(a.low_, b.low_);
  int high = std::max(a.degree(), b.degree());
  std::vector<FiniteField::Elem> v(static_cast<std::size_t>(high - low + 1), 0);
  for (int e = low; e <= high; ++e) v[e - low] = F.add(a.coeff(e), b.coeff(e));
  return FqLaurent(F, low, std::move(v));
}

FqLaurent FqLaurent::operator-() const {
  FqLaurent r = *this;
  if (field_)
    for (auto& x : r.c_) x = field_->neg(x);
  return r;
}

FqLaurent operator-(const FqLaurent& a, const FqLaurent& b) { return a + (-b); }

FqLaurent operator*(const FqLaurent& a, const FqLaurent& b) {
  const FiniteField& F = pick(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return FqLaurent(F);
  std::vector<FiniteField::Elem> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return FqLaurent(F, a.low_ + b.low_, std::move(v));
}

std::string FqLaurent::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int e = degree(); e >= low_; --e) {
    Elem c = coeff(e);
    if (c == 0) continue;
    s += term(c, e, first);
    first = false;
  }
  return s;
}

}  // namespace btmf
