#include "btmf/rational.hpp"

#include "btmf/error.hpp"

namespace btmf {

BigInt floor(const Rational& x) {
  BigInt n = numerator(x);
  BigInt d = denominator(x);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

BigInt ceil(const Rational& x) { return -floor(-x); }

BigInt ipow(std::uint64_t base, unsigned e) {
  BigInt result = 1;
  BigInt b = base;
  while (e) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

std::string to_string(const Rational& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
    return Rational(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "not a rational number: '" + text + "'");
  }
}

const Rational& LogValue::value() const {
  if (neg_inf_) throw Error(ErrorKind::InvalidArgument, "value of -inf");
  return value_;
}

bool operator==(const LogValue& a, const LogValue& b) {
  if (a.neg_inf_ || b.neg_inf_) return a.neg_inf_ == b.neg_inf_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const LogValue& a, const LogValue& b) {
  if (a.neg_inf_ || b.neg_inf_) {
    if (a.neg_inf_ && b.neg_inf_) return std::strong_ordering::equal;
    return a.neg_inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

LogValue max(const LogValue& a, const LogValue& b) { return (a < b) ? b : a; }

std::string to_string(const LogValue& x) {
  return x.is_neg_infinity() ? std::string("-inf") : to_string(x.value());
}

}  // namespace btmf
