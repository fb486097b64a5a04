#pragma once

#include <vector>

#include "oq/groebner.hpp"
#include "oq/liealg.hpp"
#include "oq/poisson.hpp"

namespace oq {

struct EigenvaluePair {
  Rational value;
  int mult = 1;
};

// Validated orbit data: distinct rational eigenvalues with multiplicities
// summing to n and weighted sum zero, plus the diagonal representative.
struct OrbitSpec {
  LieAlgebraData alg;
  std::vector<EigenvaluePair> eigs;      // sorted by decreasing value
  std::vector<Rational> diagonal;        // n entries, eigenvalues repeated
  std::vector<Rational> representative;  // coordinates of the diagonal point
  bool regular = false;

  // Number of distinct eigenvalues = degree of the minimal polynomial.
  int distinct_count() const { return static_cast<int>(eigs.size()); }
};

OrbitSpec orbit_from_eigs(const LieAlgebraData& alg, const std::vector<EigenvaluePair>& eigs);

enum class GeneratorSource { kRegularInvariant, kMinimalPolynomial };

struct IdealPresentation {
  OrbitSpec orbit;
  std::vector<CPoly> generators;  // h-free
  GeneratorSource source = GeneratorSource::kRegularInvariant;

  // h-corrected lift targets: commutative polynomials (coefficients may carry
  // h) whose symmetrization generates the deformed ideal. Their h = 0 parts
  // equal `generators` entry by entry. Empty means "same as `generators`".
  std::vector<CPoly> deformed_generators;

  const std::vector<CPoly>& lift_targets() const {
    return deformed_generators.empty() ? generators : deformed_generators;
  }
};

// Shifted invariants p_k - p_k(representative), k = 2..n. Regular specs only.
IdealPresentation regular_generators(const OrbitSpec& spec);

// All n^2 entries (row-major) of mu(M(x)), mu = product of (t - a) over the
// distinct eigenvalues a. Works for regular and non-regular specs.
//
// Also fills `deformed_generators` with the h-corrected lift targets: the
// entries of the ordered product of (Mhat - A_r I) over distinct eigenvalues,
// where Mhat is the matrix of degree-1 enveloping generators and each root is
// lowered to A_r = a_r - h * (sum of multiplicities of larger eigenvalues),
// pulled back through the symmetrization map. Without the root shift the
// deformed span acquires h-torsion (low-degree elements at h != 0) whenever
// some multiplicity exceeds 1, and engine construction fails SpanDeficient.
IdealPresentation minimalpoly_generators(const OrbitSpec& spec);

// One matrix per basis index: the infinitesimal action on the generator span,
// X_i . r_a = sum_b T_i[a][b] r_b, solved with a fixed linear section so the
// commutation identity holds even for linearly dependent generator lists.
struct EquivarianceCertificate {
  std::vector<RatMat> T;
};

EquivarianceCertificate equivariance_certificate(const IdealPresentation& pres);

bool on_orbit(const IdealPresentation& pres, const std::vector<Rational>& point);

// Coordinates of g * diag * g^{-1} for an invertible rational g.
std::vector<Rational> conjugated_coordinates(const OrbitSpec& spec, const RatMat& g);

// Inverse of a square rational matrix; nullopt when singular.
std::optional<RatMat> try_inverse(const RatMat& a);

}  // namespace oq
