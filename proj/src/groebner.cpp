#include "oq/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oq {

namespace {

// Internal polynomial form for basis computation: terms sorted strictly
// decreasing under the active order, rational coefficients only.
using QTerm = std::pair<Monomial, Rational>;
using QPoly = std::vector<QTerm>;

QPoly q_from_cpoly(const CPoly& f, const MonomialOrder& order) {
  QPoly q;
  q.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_constant())
      fail(ErrorKind::HCoefficientPresent, "basis generators must not depend on h");
    q.emplace_back(m, c.constant_term());
  }
  std::sort(q.begin(), q.end(),
            [&](const QTerm& a, const QTerm& b) { return order.greater(a.first, b.first); });
  return q;
}

CPoly q_to_cpoly(const QPoly& q, int nvars) {
  CPoly f(nvars);
  for (const auto& [m, c] : q) f.add_term(m, HPoly(c));
  return f;
}

// a + s * x^shift * b, both inputs sorted decreasing.
QPoly q_add_scaled(const QPoly& a, const Rational& s, const Monomial& shift, const QPoly& b,
                   const MonomialOrder& order) {
  QPoly out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = b[j].first.times(shift);
    if (i == a.size()) {
      Rational c = s * b[j].second;
      if (!c.is_zero()) out.emplace_back(mb, c);
      ++j;
      continue;
    }
    int cmp = order.compare(a[i].first, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Rational c = s * b[j].second;
      if (!c.is_zero()) out.emplace_back(mb, c);
      ++j;
    } else {
      Rational c = a[i].second + s * b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

// Full reduction modulo the current basis; remainder terms collect in
// decreasing order since the working leading term drops strictly.
QPoly q_reduce(QPoly p, const std::vector<QPoly>& basis, const std::vector<Monomial>& lts,
               const MonomialOrder& order) {
  QPoly rem;
  while (!p.empty()) {
    const auto& [m, c] = p.front();
    bool hit = false;
    for (size_t g = 0; g < basis.size(); ++g) {
      if (!lts[g].divides(m)) continue;
      Rational s = -(c / basis[g].front().second);
      p = q_add_scaled(p, s, m.divide(lts[g]), basis[g], order);
      hit = true;
      break;
    }
    if (!hit) {
      rem.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return rem;
}

// Strip integer content and normalize the sign of the leading coefficient.
void q_make_primitive(QPoly& p) {
  if (p.empty()) return;
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(c.numerator()));
    den_lcm = den_lcm / boost::multiprecision::gcd(den_lcm, c.denominator()) * c.denominator();
  }
  Rational scale(den_lcm, num_gcd);
  if (p.front().second.sign() < 0) scale = -scale;
  for (auto& [m, c] : p) c *= scale;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
};

}  // namespace

GroebnerBasis assemble_basis(std::vector<CPoly> gens, const MonomialOrder& order, int nvars) {
  GroebnerBasis gb;
  gb.order = order;
  gb.nvars = nvars;
  gb.generators = std::move(gens);
  for (const CPoly& g : gb.generators) gb.leading.push_back(leading_term(g, order).first);
  return gb;
}

GroebnerBasis buchberger(const std::vector<CPoly>& gens, const MonomialOrder& order) {
  if (gens.empty()) fail(ErrorKind::ZeroPolynomial, "empty generator list");
  int nvars = gens.front().nvars();
  if (order.nvars() != nvars)
    fail(ErrorKind::DimensionMismatch, "order and generators disagree on variable count");

  std::vector<QPoly> basis;
  std::vector<Monomial> lts;
  for (const CPoly& g : gens) {
    if (g.nvars() != nvars) fail(ErrorKind::DimensionMismatch, "mixed variable counts");
    if (g.is_zero()) continue;
    QPoly q = q_from_cpoly(g, order);
    q_make_primitive(q);
    basis.push_back(std::move(q));
    lts.push_back(basis.back().front().first);
  }

  std::vector<Pair> pending;
  auto push_pairs = [&](int upto) {
    int j = upto;
    for (int i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(lts[static_cast<size_t>(i)], lts[static_cast<size_t>(j)]);
      pending.push_back(Pair{i, j, l, l.deg()});
    }
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(static_cast<int>(j));

  while (!pending.empty()) {
    // Normal selection: smallest lcm under the order, ties by index.
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      int cmp = order.compare(pending[k].lcm, pending[best].lcm);
      if (cmp < 0 || (cmp == 0 && (pending[k].i < pending[best].i ||
                                   (pending[k].i == pending[best].i && pending[k].j < pending[best].j))))
        best = k;
    }
    Pair pr = pending[best];
    pending.erase(pending.begin() + static_cast<long>(best));

    const Monomial& li = lts[static_cast<size_t>(pr.i)];
    const Monomial& lj = lts[static_cast<size_t>(pr.j)];
    if (pr.deg == li.deg() + lj.deg() && pr.lcm == li.times(lj)) continue;  // coprime leads

    const QPoly& f = basis[static_cast<size_t>(pr.i)];
    const QPoly& g = basis[static_cast<size_t>(pr.j)];
    QPoly s = q_add_scaled(QPoly{}, f.front().second.inv(), pr.lcm.divide(li), f, order);
    s = q_add_scaled(s, -g.front().second.inv(), pr.lcm.divide(lj), g, order);
    QPoly r = q_reduce(std::move(s), basis, lts, order);
    if (r.empty()) continue;
    q_make_primitive(r);
    basis.push_back(std::move(r));
    lts.push_back(basis.back().front().first);
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Minimalize: drop generators whose lead is divisible by another lead.
  std::vector<bool> keep(basis.size(), true);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (lts[j].divides(lts[i]) && (lts[i] != lts[j] || j < i)) {
        keep[i] = false;
        break;
      }
    }
  std::vector<QPoly> minimal;
  std::vector<Monomial> min_lts;
  for (size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) {
      minimal.push_back(std::move(basis[i]));
      min_lts.push_back(lts[i]);
    }

  // Tail-reduce each generator against the others, then make monic.
  std::vector<QPoly> final_polys(minimal.size());
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<QPoly> others;
    std::vector<Monomial> other_lts;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) {
        others.push_back(minimal[j]);
        other_lts.push_back(min_lts[j]);
      }
    QPoly r = q_reduce(minimal[i], others, other_lts, order);
    Rational lead = r.front().second;
    for (auto& [m, c] : r) c /= lead;
    final_polys[i] = std::move(r);
  }

  std::vector<size_t> perm(final_polys.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    return order.less(final_polys[a].front().first, final_polys[b].front().first);
  });

  GroebnerBasis gb;
  gb.order = order;
  gb.nvars = nvars;
  gb.reduced = true;
  for (size_t k : perm) {
    gb.leading.push_back(final_polys[k].front().first);
    gb.generators.push_back(q_to_cpoly(final_polys[k], nvars));
  }
  return gb;
}

CPoly normal_form(const CPoly& f, const GroebnerBasis& gb) { return normal_form(f, gb, nullptr); }

CPoly normal_form(const CPoly& f, const GroebnerBasis& gb, std::vector<CPoly>* quotients) {
  if (f.nvars() != gb.nvars)
    fail(ErrorKind::DimensionMismatch, "polynomial variable count does not match the basis");
  if (quotients) quotients->assign(gb.generators.size(), CPoly(gb.nvars));
  CPoly rem(gb.nvars);
  CPoly p = f;
  while (!p.is_zero()) {
    auto [m, c] = leading_term(p, gb.order);
    bool hit = false;
    for (size_t g = 0; g < gb.generators.size(); ++g) {
      if (!gb.leading[g].divides(m)) continue;
      Rational lc = gb.generators[g].coeff(gb.leading[g]).constant_term();
      Monomial shift = m.divide(gb.leading[g]);
      HPoly factor = c.times(lc.inv());
      p -= gb.generators[g].times_monomial(shift, factor);
      if (quotients) (*quotients)[g].add_term(shift, factor);
      hit = true;
      break;
    }
    if (!hit) {
      rem.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return rem;
}

std::vector<int> StandardMonomialSet::counts_by_degree() const {
  std::vector<int> counts(static_cast<size_t>(max_degree) + 1, 0);
  for (const Monomial& m : monomials) counts[static_cast<size_t>(m.deg())]++;
  return counts;
}

StandardMonomialSet standard_monomials(const GroebnerBasis& gb, int D) {
  if (D < 0) fail(ErrorKind::IndexOutOfRange, "negative degree bound");
  StandardMonomialSet s;
  s.max_degree = D;
  for (Monomial& m : monomials_up_to(gb.nvars, D, gb.order)) {
    bool standard = true;
    for (const Monomial& lt : gb.leading)
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) s.monomials.push_back(std::move(m));
  }
  return s;
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) fail(ErrorKind::UnitIdeal, "quotient by the unit ideal is empty");
  int nv = gb.nvars;
  int best = 0;
  for (unsigned mask = 0; mask < (1u << nv); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& lt : gb.leading) {
      bool inside = true;
      for (int v = 0; v < nv; ++v)
        if (lt[v] > 0 && !(mask & (1u << v))) {
          inside = false;
          break;
        }
      if (inside) {  // some leading monomial lives entirely on this subset
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

}  // namespace oq
