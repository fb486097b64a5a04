#include "oq/cpoly.hpp"

#include <algorithm>

namespace oq {

void CPoly::add_term(const Monomial& m, const HPoly& c) {
  if (c.is_zero()) return;
  if (m.nvars() != nvars_)
    fail(ErrorKind::DimensionMismatch, "monomial variable count mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CPoly CPoly::operator-() const {
  CPoly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  a.check_same(b);
  // Collect raw products, then sort and merge; faster than repeated map
  // insertion for the symbolic matrix work.
  std::vector<std::pair<Monomial, HPoly>> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) raw.emplace_back(ma.times(mb), ca * cb);
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
    return Monomial::cmp_grlex(x.first, y.first) > 0;
  });
  CPoly r(a.nvars_);
  auto hint = r.terms_.end();
  for (size_t i = 0; i < raw.size();) {
    HPoly c = std::move(raw[i].second);
    size_t j = i + 1;
    while (j < raw.size() && raw[j].first == raw[i].first) c += raw[j++].second;
    if (!c.is_zero()) hint = r.terms_.emplace_hint(hint, raw[i].first, std::move(c));
    i = j;
  }
  return r;
}

CPoly CPoly::times(const HPoly& c) const {
  CPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) {
    HPoly w = v * c;
    if (!w.is_zero()) r.terms_.emplace(m, std::move(w));
  }
  return r;
}

CPoly CPoly::times_monomial(const Monomial& m, const HPoly& c) const {
  CPoly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [mm, v] : terms_) {
    HPoly w = v * c;
    if (!w.is_zero()) r.terms_.emplace(mm.times(m), std::move(w));
  }
  return r;
}

bool CPoly::is_h_free() const {
  for (const auto& [m, c] : terms_)
    if (c.degree() > 0) return false;
  return true;
}

CPoly CPoly::at_h0() const {
  CPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    Rational c0 = c.constant_term();
    if (!c0.is_zero()) r.terms_.emplace(m, HPoly(c0));
  }
  return r;
}

HPoly CPoly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != nvars_)
    fail(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
  HPoly acc;
  for (const auto& [m, c] : terms_) {
    Rational v(1);
    for (int i = 0; i < nvars_; ++i)
      if (m[i] != 0) v *= point[static_cast<size_t>(i)].pow(m[i]);
    acc += c.times(v);
  }
  return acc;
}

CPoly CPoly::partial_derivative(int i) const {
  if (i < 0 || i >= nvars_) fail(ErrorKind::IndexOutOfRange, "derivative variable out of range");
  CPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    int e = m[i];
    if (e == 0) continue;
    std::vector<int> exps = m.exponents();
    exps[static_cast<size_t>(i)] -= 1;
    r.add_term(Monomial(std::move(exps)), c.times(Rational(e)));
  }
  return r;
}

CPoly CPoly::top_degree_part() const {
  int d = total_degree();
  CPoly r(nvars_);
  for (const auto& [m, c] : terms_)
    if (m.deg() == d) r.terms_.emplace(m, c);
  return r;
}

std::string CPoly::debug_str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + m.debug_str();
  }
  return s;
}

std::pair<Monomial, HPoly> leading_term(const CPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "leading term of zero polynomial");
  if (order.is_default()) {
    const auto& [m, c] = *f.terms().begin();
    return {m, c};
  }
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

std::vector<Monomial> monomials_up_to(int nvars, int max_degree, const MonomialOrder& order) {
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  // Depth-first enumeration of exponent vectors with total degree <= max_degree.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars) {
      out.emplace_back(exps);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exps[static_cast<size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
    exps[static_cast<size_t>(var)] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
  return out;
}

}  // namespace oq
