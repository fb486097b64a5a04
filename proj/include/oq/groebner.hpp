#pragma once

#include <vector>

#include "oq/cpoly.hpp"

namespace oq {

// Reduced Groebner basis over rational coefficients. Generators are monic,
// pairwise tail-reduced, and sorted by increasing leading monomial.
struct GroebnerBasis {
  std::vector<CPoly> generators;
  std::vector<Monomial> leading;  // cached leading monomials, parallel to generators
  MonomialOrder order;
  int nvars = 0;
  bool reduced = true;

  bool is_zero_ideal() const { return generators.empty(); }
  bool is_unit() const {
    for (const Monomial& m : leading)
      if (m.is_unit()) return true;
    return false;
  }
};

// Construct a GroebnerBasis value from generators already known to be a
// reduced basis (test/computation plumbing; no S-pair work).
GroebnerBasis assemble_basis(std::vector<CPoly> gens, const MonomialOrder& order, int nvars);

// Buchberger with normal pair selection and the coprimality criterion.
// Generators must have h-free coefficients; zero generators are dropped.
GroebnerBasis buchberger(const std::vector<CPoly>& gens, const MonomialOrder& order);

// Remainder of multivariate division by the basis. HPoly-linear in f; the
// result is supported on standard monomials only. When quotients is non-null
// it receives one cofactor per generator with f = sum q_i g_i + remainder.
CPoly normal_form(const CPoly& f, const GroebnerBasis& gb);
CPoly normal_form(const CPoly& f, const GroebnerBasis& gb, std::vector<CPoly>* quotients);

struct StandardMonomialSet {
  int max_degree = 0;
  std::vector<Monomial> monomials;  // ascending under the basis order
  // monomials of each exact degree 0..max_degree
  std::vector<int> counts_by_degree() const;
};

// Monomials of degree <= D outside the leading-term ideal.
StandardMonomialSet standard_monomials(const GroebnerBasis& gb, int D);

// Dimension of the quotient ring: largest variable subset meeting no leading
// monomial's support entirely.
int krull_dimension(const GroebnerBasis& gb);

}  // namespace oq
