#include "oq/poisson.hpp"

namespace oq {

CPoly poisson_bracket(const LieAlgebraData& alg, const CPoly& f, const CPoly& g) {
  if (f.nvars() != alg.dim || g.nvars() != alg.dim)
    fail(ErrorKind::DimensionMismatch, "polynomial variable count does not match the algebra");
  std::vector<CPoly> df, dg;
  df.reserve(static_cast<size_t>(alg.dim));
  dg.reserve(static_cast<size_t>(alg.dim));
  for (int i = 0; i < alg.dim; ++i) {
    df.push_back(f.partial_derivative(i));
    dg.push_back(g.partial_derivative(i));
  }
  CPoly out(alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    if (df[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (dg[static_cast<size_t>(j)].is_zero()) continue;
      const auto& terms = alg.bracket_terms(i, j);
      if (terms.empty()) continue;
      CPoly lin(alg.dim);
      for (const auto& [k, c] : terms) lin.add_term(Monomial::variable(alg.dim, k), HPoly(c));
      out += df[static_cast<size_t>(i)] * dg[static_cast<size_t>(j)] * lin;
    }
  }
  return out;
}

CPoly coadjoint_action(const LieAlgebraData& alg, int i, const CPoly& f) {
  if (i < 0 || i >= alg.dim) fail(ErrorKind::IndexOutOfRange, "basis index out of range");
  if (f.nvars() != alg.dim)
    fail(ErrorKind::DimensionMismatch, "polynomial variable count does not match the algebra");
  CPoly out(alg.dim);
  for (int j = 0; j < alg.dim; ++j) {
    const auto& terms = alg.bracket_terms(i, j);
    if (terms.empty()) continue;
    CPoly dfj = f.partial_derivative(j);
    if (dfj.is_zero()) continue;
    CPoly lin(alg.dim);
    for (const auto& [k, c] : terms) lin.add_term(Monomial::variable(alg.dim, k), HPoly(c));
    out += dfj * lin;
  }
  return out;
}

}  // namespace oq
