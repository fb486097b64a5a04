#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "oq/error.hpp"

namespace oq {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar over arbitrary-precision integers.  The value is
// always held in canonical form: gcd(|num|, den) = 1 and den > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit on purpose: allows 2 * q, q - 1, ...
  explicit Rational(const BigInt& n) : v_(n) {}

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) fail(ErrorKind::ZeroDenominator, "rational with denominator 0");
    if (den < 0)
      v_ = boost::multiprecision::cpp_rational(-num, -den);
    else
      v_ = boost::multiprecision::cpp_rational(num, den);
  }

  // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text) {
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    std::string_view s = trim(text);
    if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");
    auto slash = s.find('/');
    std::string_view num_s = trim(s.substr(0, slash));
    std::string_view den_s =
        slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
    auto check_int = [&](std::string_view t) {
      if (t.empty()) fail(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
      size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) fail(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9')
          fail(ErrorKind::ParseError, "malformed rational literal '" + std::string(text) + "'");
    };
    check_int(num_s);
    check_int(den_s);
    return Rational(BigInt(std::string(num_s)), BigInt(std::string(den_s)));
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorKind::ZeroDenominator, "division of rational by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational inv() const {
    if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero rational");
    return Rational(denominator(), numerator());
  }

  // Exact integer power; negative exponents invert (error on zero base).
  Rational pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational r(1), b(*this);
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  std::string str() const {
    std::string s = numerator().str();
    if (denominator() != 1) s += "/" + denominator().str();
    return s;
  }

 private:
  boost::multiprecision::cpp_rational v_;
};

}  // namespace oq
