#include "oq/orbit.hpp"

#include <algorithm>

#include "oq/pbw.hpp"

namespace oq {

OrbitSpec orbit_from_eigs(const LieAlgebraData& alg, const std::vector<EigenvaluePair>& eigs) {
  OrbitSpec spec;
  spec.alg = alg;
  spec.eigs = eigs;
  std::sort(spec.eigs.begin(), spec.eigs.end(),
            [](const EigenvaluePair& a, const EigenvaluePair& b) { return b.value < a.value; });

  int total_mult = 0;
  Rational weighted_sum;
  for (size_t i = 0; i < spec.eigs.size(); ++i) {
    if (spec.eigs[i].mult <= 0)
      fail(ErrorKind::MultiplicityMismatch, "multiplicities must be positive");
    if (i > 0 && spec.eigs[i].value == spec.eigs[i - 1].value)
      fail(ErrorKind::DuplicateEigenvalue, "eigenvalues must be pairwise distinct");
    total_mult += spec.eigs[i].mult;
    weighted_sum += spec.eigs[i].value * Rational(spec.eigs[i].mult);
  }
  if (total_mult != alg.n)
    fail(ErrorKind::MultiplicityMismatch,
         "multiplicities sum to " + std::to_string(total_mult) + ", need " + std::to_string(alg.n));
  if (!weighted_sum.is_zero())
    fail(ErrorKind::TraceNotZero, "weighted eigenvalue sum is " + weighted_sum.str());

  for (const EigenvaluePair& e : spec.eigs)
    for (int r = 0; r < e.mult; ++r) spec.diagonal.push_back(e.value);

  spec.regular = true;
  for (const EigenvaluePair& e : spec.eigs)
    if (e.mult > 1) spec.regular = false;

  // Coordinates x_j = tr(diag * X_j): zero on root coordinates, consecutive
  // differences on Cartan coordinates.
  RatMat diag(alg.n, alg.n);
  for (int i = 0; i < alg.n; ++i) diag.at(i, i) = spec.diagonal[static_cast<size_t>(i)];
  spec.representative.reserve(static_cast<size_t>(alg.dim));
  for (int j = 0; j < alg.dim; ++j)
    spec.representative.push_back((diag * alg.basis[static_cast<size_t>(j)]).trace());
  return spec;
}

IdealPresentation regular_generators(const OrbitSpec& spec) {
  if (!spec.regular)
    fail(ErrorKind::NotRegular, "invariant-shift generators require all multiplicities 1");
  IdealPresentation pres;
  pres.orbit = spec;
  pres.source = GeneratorSource::kRegularInvariant;
  InvariantSet inv = invariants(spec.alg);
  for (const CPoly& p : inv.generators) {
    HPoly value = p.evaluate(spec.representative);
    pres.generators.push_back(p - CPoly::constant(spec.alg.dim, value));
  }
  return pres;
}

namespace {

// Entries of the ordered product of (Mhat - A_r I) over the distinct
// eigenvalues, where Mhat[i][j] = sum_a (dual basis_a)_{ij} X_a is the matrix
// of degree-1 enveloping generators and A_r = a_r - h * (sum of
// multiplicities of blocks with larger eigenvalue). The shift is forced: the
// product of unshifted factors generates a deformed span containing the
// coordinates themselves at h != 0 as soon as some multiplicity exceeds 1.
// Results are pulled back through the symmetrization map so the presentation
// stays commutative; the h = 0 part of each entry is the matching entry of
// mu(M(x)) because every correction term carries at least one power of h.
std::vector<CPoly> deformed_minimalpoly(const OrbitSpec& spec) {
  const LieAlgebraData& alg = spec.alg;
  const auto n = static_cast<size_t>(alg.n);
  PBWContext ctx(alg);

  std::vector<std::vector<PBWElement>> mhat(n, std::vector<PBWElement>(n, PBWElement(alg.dim)));
  for (int a = 0; a < alg.dim; ++a)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const Rational& c = alg.dual_basis[static_cast<size_t>(a)].at(static_cast<int>(i),
                                                                      static_cast<int>(j));
        if (!c.is_zero()) mhat[i][j] += PBWElement::generator(alg.dim, a).times(HPoly(c));
      }

  std::vector<std::vector<PBWElement>> prod(n, std::vector<PBWElement>(n, PBWElement(alg.dim)));
  for (size_t i = 0; i < n; ++i) prod[i][i] = PBWElement::unit(alg.dim, HPoly(Rational(1)));
  int larger_mult = 0;
  for (const EigenvaluePair& e : spec.eigs) {
    HPoly root(e.value);
    root -= HPoly(Rational(larger_mult), 1);
    larger_mult += e.mult;

    std::vector<std::vector<PBWElement>> factor = mhat;
    for (size_t i = 0; i < n; ++i) factor[i][i] -= PBWElement::unit(alg.dim, root);
    std::vector<std::vector<PBWElement>> next(n, std::vector<PBWElement>(n, PBWElement(alg.dim)));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k = 0; k < n; ++k) next[i][j] += ctx.mul(prod[i][k], factor[k][j]);
    prod = next;
  }

  std::vector<CPoly> out;
  out.reserve(n * n);
  for (size_t u = 0; u < n; ++u)
    for (size_t v = 0; v < n; ++v) out.push_back(ctx.weyl_inverse(prod[u][v]));
  return out;
}

}  // namespace

IdealPresentation minimalpoly_generators(const OrbitSpec& spec) {
  IdealPresentation pres;
  pres.orbit = spec;
  pres.source = GeneratorSource::kMinimalPolynomial;
  CMat mu = cmat_identity(spec.alg.n, spec.alg.dim);
  CMat m = generic_matrix(spec.alg);
  for (const EigenvaluePair& e : spec.eigs) {
    CMat shifted = m;
    for (int i = 0; i < spec.alg.n; ++i)
      shifted[static_cast<size_t>(i)][static_cast<size_t>(i)] -=
          CPoly::constant(spec.alg.dim, HPoly(e.value));
    mu = cmat_mul(mu, shifted);
  }
  for (int u = 0; u < spec.alg.n; ++u)
    for (int v = 0; v < spec.alg.n; ++v)
      pres.generators.push_back(mu[static_cast<size_t>(u)][static_cast<size_t>(v)]);
  pres.deformed_generators = deformed_minimalpoly(spec);
  for (size_t a = 0; a < pres.generators.size(); ++a)
    if (pres.deformed_generators[a].at_h0() != pres.generators[a])
      fail(ErrorKind::RepresentationFailure,
           "deformed generator " + std::to_string(a) + " does not reduce to its h-free form");
  return pres;
}

EquivarianceCertificate equivariance_certificate(const IdealPresentation& pres) {
  const LieAlgebraData& alg = pres.orbit.alg;
  int l = static_cast<int>(pres.generators.size());

  // All actions, computed up front so the coefficient matrix can index every
  // monomial that appears anywhere.
  std::vector<std::vector<CPoly>> actions(static_cast<size_t>(alg.dim));
  for (int i = 0; i < alg.dim; ++i) {
    actions[static_cast<size_t>(i)].reserve(static_cast<size_t>(l));
    for (const CPoly& r : pres.generators)
      actions[static_cast<size_t>(i)].push_back(coadjoint_action(alg, i, r));
  }

  std::map<Monomial, int, MonomialDescCmp> row_of;
  auto index_monomials = [&](const CPoly& f) {
    for (const auto& [m, c] : f.terms())
      row_of.emplace(m, 0);
  };
  for (const CPoly& r : pres.generators) index_monomials(r);
  for (const auto& acts : actions)
    for (const CPoly& a : acts) index_monomials(a);
  int rows = 0;
  for (auto& [m, idx] : row_of) idx = rows++;

  auto coeff_at = [](const CPoly& f, const Monomial& m) {
    HPoly c = f.coeff(m);
    if (!c.is_constant())
      fail(ErrorKind::HCoefficientPresent, "generators must not depend on h");
    return c.constant_term();
  };

  // One augmented system: generator columns, then one rhs column per (i, a).
  // A single reduction fixes one linear section for every solve, which is
  // what makes the solved matrices a Lie algebra representation.
  int rhs_count = alg.dim * l;
  RatMat aug(rows, l + rhs_count);
  for (int b = 0; b < l; ++b)
    for (const auto& [m, c] : pres.generators[static_cast<size_t>(b)].terms())
      aug.at(row_of[m], b) = coeff_at(pres.generators[static_cast<size_t>(b)], m);
  for (int i = 0; i < alg.dim; ++i)
    for (int a = 0; a < l; ++a) {
      int col = l + i * l + a;
      for (const auto& [m, c] : actions[static_cast<size_t>(i)][static_cast<size_t>(a)].terms())
        aug.at(row_of[m], col) =
            coeff_at(actions[static_cast<size_t>(i)][static_cast<size_t>(a)], m);
    }

  std::vector<int> pivots = aug.rref();
  std::vector<int> pivot_row_of_col(static_cast<size_t>(l), -1);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= l) {
      // A pivot inside a rhs column means that action is outside the span.
      int col = pivots[r] - l;
      fail(ErrorKind::NotEquivariant,
           "action of basis element " + alg.labels[static_cast<size_t>(col / l)] +
               " on generator " + std::to_string(col % l) + " is outside the generator span");
    }
    pivot_row_of_col[static_cast<size_t>(pivots[r])] = static_cast<int>(r);
  }

  EquivarianceCertificate cert;
  cert.T.assign(static_cast<size_t>(alg.dim), RatMat(l, l));
  for (int i = 0; i < alg.dim; ++i)
    for (int a = 0; a < l; ++a) {
      int col = l + i * l + a;
      for (int b = 0; b < l; ++b) {
        int pr = pivot_row_of_col[static_cast<size_t>(b)];
        if (pr >= 0) cert.T[static_cast<size_t>(i)].at(a, b) = aug.at(pr, col);
      }
    }

  // Commutation identity, row convention: composing actions transposes the
  // order, so sum_k c_ij^k T_k = T_j T_i - T_i T_j.
  for (int i = 0; i < alg.dim; ++i)
    for (int j = 0; j < alg.dim; ++j) {
      RatMat lhs(l, l);
      for (const auto& [k, c] : alg.bracket_terms(i, j))
        lhs += cert.T[static_cast<size_t>(k)].times(c);
      RatMat rhs = cert.T[static_cast<size_t>(j)] * cert.T[static_cast<size_t>(i)] -
                   cert.T[static_cast<size_t>(i)] * cert.T[static_cast<size_t>(j)];
      if (lhs != rhs)
        fail(ErrorKind::RepresentationFailure,
             "certificate matrices fail the commutation identity at indices (" +
                 std::to_string(i) + ", " + std::to_string(j) + ")");
    }

  // The certificate must reproduce every action exactly.
  for (int i = 0; i < alg.dim; ++i)
    for (int a = 0; a < l; ++a) {
      CPoly recon(alg.dim);
      for (int b = 0; b < l; ++b) {
        const Rational& t = cert.T[static_cast<size_t>(i)].at(a, b);
        if (!t.is_zero()) recon += pres.generators[static_cast<size_t>(b)].times(t);
      }
      if (recon != actions[static_cast<size_t>(i)][static_cast<size_t>(a)])
        fail(ErrorKind::NotEquivariant,
             "solved coefficients fail to reproduce the action of " +
                 alg.labels[static_cast<size_t>(i)] + " on generator " + std::to_string(a));
    }

  return cert;
}

bool on_orbit(const IdealPresentation& pres, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != pres.orbit.alg.dim)
    fail(ErrorKind::DimensionMismatch, "point length mismatch");
  for (const CPoly& g : pres.generators)
    if (!g.evaluate(point).is_zero()) return false;
  return true;
}

std::optional<RatMat> try_inverse(const RatMat& a) {
  int n = a.rows();
  if (a.cols() != n) fail(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  std::vector<int> pivots = aug.rref();
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  RatMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<Rational> conjugated_coordinates(const OrbitSpec& spec, const RatMat& g) {
  auto ginv = try_inverse(g);
  if (!ginv) fail(ErrorKind::ZeroDenominator, "conjugating matrix is singular");
  RatMat diag(spec.alg.n, spec.alg.n);
  for (int i = 0; i < spec.alg.n; ++i) diag.at(i, i) = spec.diagonal[static_cast<size_t>(i)];
  RatMat conj = g * diag * *ginv;
  std::vector<Rational> coords;
  coords.reserve(static_cast<size_t>(spec.alg.dim));
  for (int j = 0; j < spec.alg.dim; ++j)
    coords.push_back((conj * spec.alg.basis[static_cast<size_t>(j)]).trace());
  return coords;
}

}  // namespace oq
