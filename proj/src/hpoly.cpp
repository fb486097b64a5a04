#include "oq/hpoly.hpp"

#include <algorithm>

namespace oq {

Rational HPoly::coeff(int power) const {
  for (const auto& [p, c] : terms_)
    if (p == power) return c;
  return Rational(0);
}

HPoly& HPoly::operator+=(const HPoly& o) {
  std::vector<std::pair<int, Rational>> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) out.emplace_back(terms_[i].first, c);
      ++i, ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += -o; }

HPoly HPoly::operator-() const {
  HPoly r(*this);
  for (auto& [p, c] : r.terms_) c = -c;
  return r;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  HPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  // Dense accumulation over the (small) degree range.
  int deg = a.degree() + b.degree();
  std::vector<Rational> acc(static_cast<size_t>(deg) + 1, Rational(0));
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) acc[static_cast<size_t>(pa + pb)] += ca * cb;
  for (int p = 0; p <= deg; ++p)
    if (!acc[static_cast<size_t>(p)].is_zero())
      r.terms_.emplace_back(p, acc[static_cast<size_t>(p)]);
  return r;
}

HPoly HPoly::times(const Rational& c) const {
  HPoly r;
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& [p, v] : r.terms_) v *= c;
  return r;
}

HPoly HPoly::times_h_power(int k) const {
  HPoly r(*this);
  for (auto& [p, v] : r.terms_) p += k;
  return r;
}

Rational HPoly::eval(const Rational& h0) const {
  // Horner over the sparse representation.
  Rational acc(0);
  int prev = -1;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (prev >= 0) acc = acc * h0.pow(prev - it->first);
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0) acc = acc * h0.pow(prev);
  return acc;
}

void HPoly::divmod(const HPoly& b, HPoly& q, HPoly& r) const {
  if (b.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero polynomial in h");
  q = HPoly();
  r = *this;
  Rational blc = b.leading_coeff();
  int bdeg = b.degree();
  while (!r.is_zero() && r.degree() >= bdeg) {
    Rational c = r.leading_coeff() / blc;
    int k = r.degree() - bdeg;
    HPoly t(c, k);
    q += t;
    r -= t * b;
  }
}

bool HPoly::try_divide(const HPoly& b, HPoly& q) const {
  HPoly r;
  divmod(b, q, r);
  return r.is_zero();
}

HPoly HPoly::monic() const {
  if (is_zero()) return *this;
  return times(leading_coeff().inv());
}

HPoly HPoly::gcd(const HPoly& a, const HPoly& b) {
  HPoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    HPoly q, r;
    x.divmod(y, q, r);
    x = y;
    y = r.monic();
  }
  return x;
}

std::string HPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string factors;
    if (!a.is_one() || p == 0) factors = a.str();
    if (p > 0) {
      if (!factors.empty()) factors += "*";
      factors += p == 1 ? "h" : "h^" + std::to_string(p);
    }
    out += factors;
  }
  return out;
}

HRat::HRat(const HPoly& n, const HPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
  normalize();
}

void HRat::normalize() {
  if (num_.is_zero()) {
    den_ = HPoly(Rational(1));
    return;
  }
  HPoly g = HPoly::gcd(num_, den_);
  if (!g.is_one()) {
    HPoly q;
    num_.try_divide(g, q);
    num_ = q;
    den_.try_divide(g, q);
    den_ = q;
  }
  Rational lc = den_.leading_coeff();
  if (!lc.is_one()) {
    den_ = den_.times(lc.inv());
    num_ = num_.times(lc.inv());
  }
}

HRat& HRat::operator+=(const HRat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

HRat& HRat::operator-=(const HRat& o) { return *this += -o; }

HRat& HRat::operator*=(const HRat& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

HRat& HRat::operator/=(const HRat& o) {
  if (o.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  if (den_.is_zero()) fail(ErrorKind::ZeroDenominator, "division by zero rational function");
  normalize();
  return *this;
}

HRat HRat::operator-() const {
  HRat r(*this);
  r.num_ = -r.num_;
  return r;
}

HRat HRat::inv() const {
  if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero rational function");
  return HRat(den_, num_);
}

std::string HRat::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace oq
