#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oq/rational.hpp"

namespace oq {

// Univariate polynomial in the deformation parameter h over Rational.
// Terms are stored sparse, in strictly increasing power order, with no zero
// coefficients.  The degree of the zero polynomial is reported as
// kZeroDegree (a -infinity sentinel).
class HPoly {
 public:
  static constexpr int kZeroDegree = -1;

  HPoly() = default;
  HPoly(const Rational& c) {  // implicit: constants promote freely
    if (!c.is_zero()) terms_.emplace_back(0, c);
  }
  HPoly(long n) : HPoly(Rational(n)) {}
  HPoly(const Rational& c, int power) {
    if (power < 0) fail(ErrorKind::IndexOutOfRange, "negative h power");
    if (!c.is_zero()) terms_.emplace_back(power, c);
  }

  static HPoly h() { return HPoly(Rational(1), 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }

  int degree() const { return terms_.empty() ? kZeroDegree : terms_.back().first; }

  Rational coeff(int power) const;
  Rational constant_term() const { return coeff(0); }
  Rational leading_coeff() const {
    if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero polynomial");
    return terms_.back().second;
  }

  const std::vector<std::pair<int, Rational>>& terms() const { return terms_; }

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  HPoly& operator*=(const HPoly& o) { *this = *this * o; return *this; }
  friend HPoly operator+(HPoly a, const HPoly& b) { a += b; return a; }
  friend HPoly operator-(HPoly a, const HPoly& b) { a -= b; return a; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  HPoly operator-() const;

  HPoly times(const Rational& c) const;
  HPoly times_h_power(int k) const;  // multiply by h^k
  HPoly div_exact_scalar(const Rational& c) const { return times(c.inv()); }

  friend bool operator==(const HPoly& a, const HPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

  Rational eval(const Rational& h0) const;

  // Euclidean division: *this = q*b + r with deg r < deg b.  b must be nonzero.
  void divmod(const HPoly& b, HPoly& q, HPoly& r) const;

  // True and sets q when b divides *this exactly.
  bool try_divide(const HPoly& b, HPoly& q) const;

  HPoly monic() const;

  // gcd normalized monic; gcd(0,0) = 0.
  static HPoly gcd(const HPoly& a, const HPoly& b);

  // Increasing powers, e.g. "1 - 1/4*h^2".
  std::string str() const;

 private:
  std::vector<std::pair<int, Rational>> terms_;
};

// Rational function in h, used only inside elimination kernels.  Always kept
// normalized: gcd(num, den) = 1 and den monic, so equal fractions compare
// equal structurally.  Public results must clear back to HPoly.
class HRat {
 public:
  HRat() : num_(), den_(Rational(1)) {}
  HRat(const HPoly& n) : num_(n), den_(Rational(1)) {}  // implicit promote
  HRat(const HPoly& n, const HPoly& d);

  const HPoly& num() const { return num_; }
  const HPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  HRat& operator+=(const HRat& o);
  HRat& operator-=(const HRat& o);
  HRat& operator*=(const HRat& o);
  HRat& operator/=(const HRat& o);
  friend HRat operator+(HRat a, const HRat& b) { a += b; return a; }
  friend HRat operator-(HRat a, const HRat& b) { a -= b; return a; }
  friend HRat operator*(HRat a, const HRat& b) { a *= b; return a; }
  friend HRat operator/(HRat a, const HRat& b) { a /= b; return a; }
  HRat operator-() const;

  HRat inv() const;

  friend bool operator==(const HRat& a, const HRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const HRat& a, const HRat& b) { return !(a == b); }

  std::string str() const;

 private:
  void normalize();
  HPoly num_, den_;
};

}  // namespace oq
