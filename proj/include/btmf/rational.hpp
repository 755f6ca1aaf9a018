#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace btmf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator(const Rational& x) { return boost::multiprecision::denominator(x); }
inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);

// base^e for e >= 0
BigInt ipow(std::uint64_t base, unsigned e);

// "num/den", or "num" when integral
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);

// Rational extended by a bottom element -inf (log of zero).
class LogValue {
 public:
  LogValue() : neg_inf_(true) {}
  LogValue(Rational v) : neg_inf_(false), value_(std::move(v)) {}  // NOLINT(implicit)

  static LogValue neg_infinity() { return LogValue(); }

  bool is_neg_infinity() const { return neg_inf_; }
  const Rational& value() const;

  friend bool operator==(const LogValue& a, const LogValue& b);
  friend std::strong_ordering operator<=>(const LogValue& a, const LogValue& b);

 private:
  bool neg_inf_;
  Rational value_;
};

LogValue max(const LogValue& a, const LogValue& b);
std::string to_string(const LogValue& x);

}  // namespace btmf
