#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "oq/hpoly.hpp"
#include "oq/monomial.hpp"

namespace oq {

// Sparse commutative polynomial: monomial -> HPoly coefficient, iterated in
// decreasing default monomial order (leading term first).  Coefficients are
// never zero.
class CPoly {
 public:
  using TermMap = std::map<Monomial, HPoly, MonomialDescCmp>;

  CPoly() = default;
  explicit CPoly(int nvars) : nvars_(nvars) {}

  static CPoly constant(int nvars, const HPoly& c) {
    CPoly f(nvars);
    if (!c.is_zero()) f.terms_.emplace(Monomial(nvars), c);
    return f;
  }
  static CPoly variable(int nvars, int i) {
    CPoly f(nvars);
    f.terms_.emplace(Monomial::variable(nvars, i), HPoly(Rational(1)));
    return f;
  }
  static CPoly term(const Monomial& m, const HPoly& c) {
    CPoly f(m.nvars());
    if (!c.is_zero()) f.terms_.emplace(m, c);
    return f;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Total degree; kZeroDegree for the zero polynomial.
  static constexpr int kZeroDegree = -1;
  int total_degree() const {
    int d = kZeroDegree;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
    return d;
  }

  HPoly coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? HPoly() : it->second;
  }

  void add_term(const Monomial& m, const HPoly& c);

  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  friend CPoly operator+(CPoly a, const CPoly& b) { a += b; return a; }
  friend CPoly operator-(CPoly a, const CPoly& b) { a -= b; return a; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  CPoly operator-() const;

  CPoly times(const HPoly& c) const;
  CPoly times(const Rational& c) const { return times(HPoly(c)); }
  CPoly times_monomial(const Monomial& m, const HPoly& c) const;

  friend bool operator==(const CPoly& a, const CPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const CPoly& a, const CPoly& b) { return !(a == b); }

  bool is_h_free() const;

  // Substitute h = 0 in every coefficient.
  CPoly at_h0() const;

  // Substitute rational values for the variables; h survives.
  HPoly evaluate(std::span<const Rational> point) const;

  CPoly partial_derivative(int i) const;

  // Sum of the terms of maximal total degree.
  CPoly top_degree_part() const;

  std::string debug_str() const;

 private:
  void check_same(const CPoly& o) const {
    if (nvars_ != o.nvars_)
      fail(ErrorKind::DimensionMismatch, "polynomial arithmetic across variable counts");
  }
  int nvars_ = 0;
  TermMap terms_;
};

// Leading term of f under `order`; errors on the zero polynomial.
std::pair<Monomial, HPoly> leading_term(const CPoly& f, const MonomialOrder& order);

}  // namespace oq
