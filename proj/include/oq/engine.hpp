#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "oq/orbit.hpp"
#include "oq/pbw.hpp"

namespace oq {

// Lifted generator data: R_a = weyl(r_a), plus the commutator matrices
// C_i = h * T_i with [X_i, R_a] = sum_b C_i[a][b] R_b, verified exactly on
// construction.
struct LiftedIdeal {
  std::vector<PBWElement> R;
  std::vector<std::vector<std::vector<HPoly>>> C;  // per basis index, l x l
};

LiftedIdeal lift_ideal(const PBWContext& ctx, const IdealPresentation& pres,
                       const EquivarianceCertificate& cert);

// Degree-truncated reduction of the deformed quotient onto standard
// monomials: rows are normalized left multiples m * R_a with
// deg m + deg r_a <= D, echelonized over rational functions in h with pivots
// on non-standard monomials (standard columns are ordered last within each
// degree). Construction fails loudly when the span or freeness structure
// breaks.
class ReductionEngine {
 public:
  int max_degree() const;
  const MonomialOrder& order() const;
  const IdealPresentation& presentation() const;
  const GroebnerBasis& basis() const;  // commutative orbit-ideal basis
  const StandardMonomialSet& std_monomials() const;
  const LiftedIdeal& lifted() const;
  const PBWContext& context() const;

  int rank() const;  // number of pivots = non-standard monomials up to D
  // Cumulative counts indexed by degree 0..D.
  std::vector<int> ranks_by_degree() const;
  std::vector<int> pbw_counts_by_degree() const;
  std::vector<int> std_counts_by_degree() const;

  // Monic numerators of the pivots met during elimination (deduplicated,
  // nonconstant only): evaluation at any h0 avoiding their roots is safe.
  const std::vector<HPoly>& denominator_watch() const;

  // Reduce modulo the truncated ideal span onto standard monomials.
  CPoly nf(const PBWElement& u) const;

  struct Internals;
  const Internals& internals() const { return *d_; }

 private:
  friend ReductionEngine build_engine(const IdealPresentation& pres,
                                      const EquivarianceCertificate& cert, int D,
                                      const MonomialOrder& order);
  std::shared_ptr<const Internals> d_;
};

ReductionEngine build_engine(const IdealPresentation& pres, const EquivarianceCertificate& cert,
                             int D, const MonomialOrder& order);
inline ReductionEngine build_engine(const IdealPresentation& pres,
                                    const EquivarianceCertificate& cert, int D) {
  return build_engine(pres, cert, D, MonomialOrder::default_for(pres.orbit.alg.dim));
}

// Degree policy when the caller does not pick one.
int default_degree(const IdealPresentation& pres);

enum class LiftMode { kStandardMonomial, kWeyl };

struct StarResult {
  CPoly value;      // supported on standard monomials, HPoly coefficients
  CPoly f_reduced;  // inputs after commutative pre-reduction
  CPoly g_reduced;
  LiftMode mode = LiftMode::kStandardMonomial;
};

StarResult star(const ReductionEngine& engine, const CPoly& f, const CPoly& g,
                LiftMode mode = LiftMode::kStandardMonomial);

struct TheoremReport {
  struct Item {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::string witness;  // first failure, inputs and both sides
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const Item& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// Quantization property suite on one engine: classical limit, first-order
// Poisson limit, associativity, per-degree rank identity, lift-mode
// independence. d caps the degree of random factors; trials counts random
// associativity/mode samples.
TheoremReport check_theorem(const ReductionEngine& engine, int d, int trials, std::uint64_t seed);

// The engine with h specialized: rows re-echelonized over the rationals.
class EvaluatedEngine {
 public:
  const Rational& h_value() const;
  int rank() const;
  const std::vector<Monomial>& pivot_monomials() const;
  // Reduce at the numeric h (coefficients of u are evaluated first).
  CPoly nf(const PBWElement& u) const;

  struct Internals;

 private:
  friend EvaluatedEngine evaluate_engine_h(const ReductionEngine& engine, const Rational& h0);
  std::shared_ptr<const Internals> d_;
};

// Fails with SingularEvaluation when the specialized span no longer has
// pivots exactly on the non-standard monomials (standard-monomial
// independence would break at this h0).
EvaluatedEngine evaluate_engine_h(const ReductionEngine& engine, const Rational& h0);

}  // namespace oq
