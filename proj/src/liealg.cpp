#include "oq/liealg.hpp"

#include <algorithm>

namespace oq {

const std::vector<std::pair<int, Rational>>& LieAlgebraData::bracket_terms(int i, int j) const {
  if (i < 0 || i >= dim || j < 0 || j >= dim)
    fail(ErrorKind::IndexOutOfRange, "basis index out of range");
  return brackets[static_cast<size_t>(i) * static_cast<size_t>(dim) + static_cast<size_t>(j)];
}

Rational LieAlgebraData::bracket_coeff(int i, int j, int k) const {
  for (const auto& [l, c] : bracket_terms(i, j))
    if (l == k) return c;
  return Rational(0);
}

int LieAlgebraData::label_index(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  return -1;
}

std::vector<Rational> expand_in_basis(const LieAlgebraData& alg, const RatMat& A) {
  if (A.rows() != alg.n || A.cols() != alg.n)
    fail(ErrorKind::DimensionMismatch, "matrix size does not match the algebra");
  std::vector<Rational> out(static_cast<size_t>(alg.dim));
  for (int j = 0; j < alg.dim; ++j) out[static_cast<size_t>(j)] = (A * alg.dual_basis[static_cast<size_t>(j)]).trace();
  return out;
}

LieAlgebraData make_sl(int n) {
  if (n < 2) fail(ErrorKind::InvalidRank, "sl(n) requires n >= 2");
  LieAlgebraData alg;
  alg.n = n;
  alg.dim = n * n - 1;

  auto unit = [n](int i, int j) {
    RatMat m(n, n);
    m.at(i, j) = Rational(1);
    return m;
  };

  // Upper root vectors, lower root vectors, then Cartan elements.
  std::vector<std::pair<int, int>> root_pos;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) root_pos.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) root_pos.emplace_back(i, j);

  for (auto [i, j] : root_pos) {
    alg.basis.push_back(unit(i, j));
    alg.dual_basis.push_back(unit(j, i));
    if (n == 2) {
      alg.labels.push_back(i < j ? "E" : "F");
    } else {
      alg.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  for (int k = 1; k < n; ++k) {
    RatMat hk(n, n);
    hk.at(k - 1, k - 1) = Rational(1);
    hk.at(k, k) = Rational(-1);
    alg.basis.push_back(hk);
    RatMat dual(n, n);
    for (int i = 0; i < n; ++i)
      dual.at(i, i) = (i < k) ? Rational(n - k, n) : Rational(-k, n);
    alg.dual_basis.push_back(dual);
    alg.labels.push_back(n == 2 ? "H" : "H" + std::to_string(k));
  }

  alg.brackets.resize(static_cast<size_t>(alg.dim) * static_cast<size_t>(alg.dim));
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) {
      RatMat comm = alg.basis[static_cast<size_t>(i)] * alg.basis[static_cast<size_t>(j)] -
                    alg.basis[static_cast<size_t>(j)] * alg.basis[static_cast<size_t>(i)];
      std::vector<std::pair<int, Rational>> terms;
      std::vector<Rational> coeffs = expand_in_basis(alg, comm);
      for (int k = 0; k < alg.dim; ++k)
        if (!coeffs[static_cast<size_t>(k)].is_zero()) terms.emplace_back(k, coeffs[static_cast<size_t>(k)]);
      alg.brackets[static_cast<size_t>(i) * static_cast<size_t>(alg.dim) + static_cast<size_t>(j)] =
          std::move(terms);
    }
  return alg;
}

std::vector<Rational> bracket(const LieAlgebraData& alg, const std::vector<Rational>& x,
                              const std::vector<Rational>& y) {
  if (static_cast<int>(x.size()) != alg.dim || static_cast<int>(y.size()) != alg.dim)
    fail(ErrorKind::DimensionMismatch, "coordinate vector length mismatch");
  std::vector<Rational> out(static_cast<size_t>(alg.dim));
  for (int i = 0; i < alg.dim; ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < alg.dim; ++j) {
      if (y[static_cast<size_t>(j)].is_zero()) continue;
      Rational xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (const auto& [k, c] : alg.bracket_terms(i, j)) out[static_cast<size_t>(k)] += xy * c;
    }
  }
  return out;
}

RatMat ad_matrix(const LieAlgebraData& alg, int i) {
  if (i < 0 || i >= alg.dim) fail(ErrorKind::IndexOutOfRange, "basis index out of range");
  RatMat m(alg.dim, alg.dim);
  for (int j = 0; j < alg.dim; ++j)
    for (const auto& [k, c] : alg.bracket_terms(i, j)) m.at(k, j) = c;
  return m;
}

Rational killing_form(const LieAlgebraData& alg, const std::vector<Rational>& x,
                      const std::vector<Rational>& y) {
  if (static_cast<int>(x.size()) != alg.dim || static_cast<int>(y.size()) != alg.dim)
    fail(ErrorKind::DimensionMismatch, "coordinate vector length mismatch");
  RatMat adx(alg.dim, alg.dim), ady(alg.dim, alg.dim);
  for (int i = 0; i < alg.dim; ++i) {
    if (!x[static_cast<size_t>(i)].is_zero()) adx += ad_matrix(alg, i).times(x[static_cast<size_t>(i)]);
    if (!y[static_cast<size_t>(i)].is_zero()) ady += ad_matrix(alg, i).times(y[static_cast<size_t>(i)]);
  }
  return (adx * ady).trace();
}

CMat generic_matrix(const LieAlgebraData& alg) {
  CMat m(static_cast<size_t>(alg.n), std::vector<CPoly>(static_cast<size_t>(alg.n), CPoly(alg.dim)));
  for (int i = 0; i < alg.dim; ++i) {
    const RatMat& d = alg.dual_basis[static_cast<size_t>(i)];
    for (int u = 0; u < alg.n; ++u)
      for (int v = 0; v < alg.n; ++v)
        if (!d.at(u, v).is_zero())
          m[static_cast<size_t>(u)][static_cast<size_t>(v)].add_term(
              Monomial::variable(alg.dim, i), HPoly(d.at(u, v)));
  }
  return m;
}

CMat cmat_identity(int size, int nvars) {
  CMat m(static_cast<size_t>(size), std::vector<CPoly>(static_cast<size_t>(size), CPoly(nvars)));
  for (int i = 0; i < size; ++i)
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = CPoly::constant(nvars, HPoly(Rational(1)));
  return m;
}

CMat cmat_mul(const CMat& a, const CMat& b) {
  size_t rows = a.size(), inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  if (!a.empty() && a[0].size() != inner)
    fail(ErrorKind::DimensionMismatch, "polynomial matrix product shape mismatch");
  int nvars = a.empty() ? 0 : a[0][0].nvars();
  CMat r(rows, std::vector<CPoly>(cols, CPoly(nvars)));
  for (size_t i = 0; i < rows; ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

CPoly cmat_trace(const CMat& a) {
  CPoly t(a.empty() ? 0 : a[0][0].nvars());
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

CMat cmat_scale(const CMat& a, const CPoly& c) {
  CMat r = a;
  for (auto& row : r)
    for (auto& e : row) e = e * c;
  return r;
}

RatMat cmat_evaluate(const CMat& a, const std::vector<Rational>& point) {
  RatMat r(static_cast<int>(a.size()), a.empty() ? 0 : static_cast<int>(a[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) {
      HPoly v = a[i][j].evaluate(point);
      if (!v.is_constant())
        fail(ErrorKind::HCoefficientPresent, "matrix entry depends on the deformation parameter");
      r.at(static_cast<int>(i), static_cast<int>(j)) = v.constant_term();
    }
  return r;
}

InvariantSet invariants(const LieAlgebraData& alg) {
  InvariantSet inv;
  CMat m = generic_matrix(alg);
  CMat power = cmat_mul(m, m);
  for (int k = 2; k <= alg.n; ++k) {
    inv.generators.push_back(cmat_trace(power));
    inv.degrees.push_back(k);
    if (k < alg.n) power = cmat_mul(power, m);
  }
  return inv;
}

CMat generic_adjoint_matrix(const LieAlgebraData& alg) {
  CMat m = generic_matrix(alg);
  CMat ad(static_cast<size_t>(alg.dim),
          std::vector<CPoly>(static_cast<size_t>(alg.dim), CPoly(alg.dim)));
  for (int j = 0; j < alg.dim; ++j) {
    // [M(x), X_j], then expand in the basis via trace duals.
    const RatMat& xj = alg.basis[static_cast<size_t>(j)];
    CMat comm(static_cast<size_t>(alg.n),
              std::vector<CPoly>(static_cast<size_t>(alg.n), CPoly(alg.dim)));
    for (int u = 0; u < alg.n; ++u)
      for (int v = 0; v < alg.n; ++v) {
        CPoly e(alg.dim);
        for (int w = 0; w < alg.n; ++w) {
          if (!xj.at(w, v).is_zero())
            e += m[static_cast<size_t>(u)][static_cast<size_t>(w)].times(xj.at(w, v));
          if (!xj.at(u, w).is_zero())
            e -= m[static_cast<size_t>(w)][static_cast<size_t>(v)].times(xj.at(u, w));
        }
        comm[static_cast<size_t>(u)][static_cast<size_t>(v)] = std::move(e);
      }
    for (int k = 0; k < alg.dim; ++k) {
      const RatMat& dk = alg.dual_basis[static_cast<size_t>(k)];
      CPoly coeff(alg.dim);
      for (int u = 0; u < alg.n; ++u)
        for (int v = 0; v < alg.n; ++v)
          if (!dk.at(v, u).is_zero())
            coeff += comm[static_cast<size_t>(u)][static_cast<size_t>(v)].times(dk.at(v, u));
      ad[static_cast<size_t>(k)][static_cast<size_t>(j)] = std::move(coeff);
    }
  }
  return ad;
}

std::vector<CPoly> charpoly_coeffs(const CMat& A, int kmax) {
  int d = static_cast<int>(A.size());
  int nvars = d == 0 ? 0 : A[0][0].nvars();
  if (kmax < 0 || kmax > d) fail(ErrorKind::IndexOutOfRange, "coefficient count out of range");
  std::vector<CPoly> out;
  CMat N = cmat_identity(d, nvars);
  for (int k = 1; k <= kmax; ++k) {
    CMat AN = cmat_mul(A, N);
    CPoly ak = cmat_trace(AN).times(Rational(-1, k));
    out.push_back(ak);
    if (k == kmax) break;
    for (int i = 0; i < d; ++i) AN[static_cast<size_t>(i)][static_cast<size_t>(i)] += ak;
    N = std::move(AN);
  }
  return out;
}

std::vector<Rational> charpoly_coeffs_numeric(const RatMat& A, int kmax) {
  int d = A.rows();
  if (A.cols() != d) fail(ErrorKind::DimensionMismatch, "characteristic polynomial of non-square matrix");
  if (kmax < 0 || kmax > d) fail(ErrorKind::IndexOutOfRange, "coefficient count out of range");
  std::vector<Rational> out;
  RatMat N = RatMat::identity(d);
  for (int k = 1; k <= kmax; ++k) {
    RatMat AN = A * N;
    Rational ak = AN.trace() * Rational(-1, k);
    out.push_back(ak);
    if (k == kmax) break;
    for (int i = 0; i < d; ++i) AN.at(i, i) += ak;
    N = std::move(AN);
  }
  return out;
}

}  // namespace oq
