#pragma once

#include <string>
#include <vector>

#include "oq/cpoly.hpp"
#include "oq/ratmat.hpp"

namespace oq {

// Square matrix with polynomial entries (generic dual-coordinate matrix and
// everything derived from it).
using CMat = std::vector<std::vector<CPoly>>;

// sl(n) in a fixed basis: root vectors E_ij with i<j (row-major), then E_ij
// with i>j (row-major), then Cartan elements H_k = E_kk - E_{k+1,k+1}.
struct LieAlgebraData {
  int n = 0;    // defining representation size
  int dim = 0;  // n^2 - 1
  std::vector<std::string> labels;
  std::vector<RatMat> basis;       // defining representation, n x n each
  std::vector<RatMat> dual_basis;  // tr(dual_basis[i] * basis[j]) = delta_ij
  // brackets[i*dim+j] = sorted sparse list of (k, c) with [X_i,X_j] = sum c X_k
  std::vector<std::vector<std::pair<int, Rational>>> brackets;

  const std::vector<std::pair<int, Rational>>& bracket_terms(int i, int j) const;
  Rational bracket_coeff(int i, int j, int k) const;
  int label_index(const std::string& label) const;  // -1 when absent
};

LieAlgebraData make_sl(int n);

// Coefficients of a traceless matrix in the algebra basis.
std::vector<Rational> expand_in_basis(const LieAlgebraData& alg, const RatMat& A);

std::vector<Rational> bracket(const LieAlgebraData& alg, const std::vector<Rational>& x,
                              const std::vector<Rational>& y);

Rational killing_form(const LieAlgebraData& alg, const std::vector<Rational>& x,
                      const std::vector<Rational>& y);

RatMat ad_matrix(const LieAlgebraData& alg, int i);

// M(x) = sum_i x_i * dual_basis[i]; tr(M(x) * basis[j]) = x_j identically.
CMat generic_matrix(const LieAlgebraData& alg);

struct InvariantSet {
  std::vector<CPoly> generators;  // p_2 .. p_n, p_k = tr(M(x)^k)
  std::vector<int> degrees;       // 2 .. n
};

InvariantSet invariants(const LieAlgebraData& alg);

// Matrix-of-polynomials helpers.
CMat cmat_identity(int size, int nvars);
CMat cmat_mul(const CMat& a, const CMat& b);
CPoly cmat_trace(const CMat& a);
CMat cmat_scale(const CMat& a, const CPoly& c);
RatMat cmat_evaluate(const CMat& a, const std::vector<Rational>& point);

// dim x dim matrix of ad_{M(x)}: column j = expansion of [M(x), X_j].
CMat generic_adjoint_matrix(const LieAlgebraData& alg);

// Coefficients a_1..a_kmax of det(t*1 - A) = t^d + a_1 t^{d-1} + ... for a
// square polynomial matrix, by the trace recursion (all divisions exact).
std::vector<CPoly> charpoly_coeffs(const CMat& A, int kmax);
std::vector<Rational> charpoly_coeffs_numeric(const RatMat& A, int kmax);

}  // namespace oq
