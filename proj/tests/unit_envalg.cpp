// The deformed enveloping algebra: normal ordering, confluence of the two
// rewriting strategies, associativity, symmetrization, and its inverse.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oq/pbw.hpp"
#include "oq/poisson.hpp"
#include "testutil.hpp"

using namespace oq;
using oqtest::Q;

namespace {

PBWElement gen(const LieAlgebraData& alg, const std::string& label) {
  return PBWElement::generator(alg.dim, oqtest::label_index(alg, label));
}

PBWElement random_pbw(std::mt19937_64& rng, int nvars, int maxdeg, int terms) {
  CPoly f = oqtest::random_cpoly(rng, nvars, maxdeg, terms);
  PBWElement u(nvars);
  for (const auto& [m, c] : f.terms()) u += PBWElement::from_word_exponents(m, c);
  return u;
}

}  // namespace

TEST_CASE("generator commutators equal h times the bracket") {
  LieAlgebraData alg = make_sl(2);
  PBWContext ctx(alg);
  PBWElement E = gen(alg, "E"), F = gen(alg, "F"), H = gen(alg, "H");
  CHECK(ctx.mul(E, F) - ctx.mul(F, E) == H.times(HPoly::h()));
  CHECK(ctx.mul(H, E) - ctx.mul(E, H) == E.times(HPoly(Rational(2), 1)));
  CHECK(ctx.mul(H, F) - ctx.mul(F, H) == F.times(HPoly(Rational(-2), 1)));
}

TEST_CASE("every generator commutator matches the structure constants") {
  for (int n : {2, 3}) {
    LieAlgebraData alg = make_sl(n);
    PBWContext ctx(alg);
    for (int i = 0; i < alg.dim; ++i)
      for (int j = 0; j < alg.dim; ++j) {
        PBWElement lhs = ctx.mul(PBWElement::generator(alg.dim, i),
                                 PBWElement::generator(alg.dim, j)) -
                         ctx.mul(PBWElement::generator(alg.dim, j),
                                 PBWElement::generator(alg.dim, i));
        PBWElement rhs(alg.dim);
        for (const auto& [k, c] : alg.bracket_terms(i, j))
          rhs += PBWElement::generator(alg.dim, k).times(HPoly(c, 1));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("both rewrite strategies normalize to the same element") {
  LieAlgebraData alg = make_sl(3);
  PBWContext ctx(alg);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int len = 2 + static_cast<int>(rng() % 4);
    std::vector<int> word;
    for (int k = 0; k < len; ++k)
      word.push_back(static_cast<int>(rng() % static_cast<unsigned>(alg.dim)));
    PBWElement left = ctx.normalize(word, HPoly(Rational(1)), RewriteStrategy::kLeftmost);
    PBWElement right = ctx.normalize(word, HPoly(Rational(1)), RewriteStrategy::kRightmost);
    CHECK(left == right);
  }
}

TEST_CASE("multiplication is associative and unit-preserving") {
  LieAlgebraData alg = make_sl(2);
  PBWContext ctx(alg);
  std::mt19937_64 rng(53);
  PBWElement one = PBWElement::unit(alg.dim, HPoly(Rational(1)));
  for (int trial = 0; trial < 15; ++trial) {
    PBWElement a = random_pbw(rng, alg.dim, 2, 2);
    PBWElement b = random_pbw(rng, alg.dim, 2, 2);
    PBWElement c = random_pbw(rng, alg.dim, 2, 2);
    CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
    CHECK(ctx.mul(one, a) == a);
    CHECK(ctx.mul(a, one) == a);
  }
}

TEST_CASE("filtered degree is submultiplicative with top symbol multiplicative") {
  LieAlgebraData alg = make_sl(2);
  PBWContext ctx(alg);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    PBWElement a = random_pbw(rng, alg.dim, 3, 2);
    PBWElement b = random_pbw(rng, alg.dim, 3, 2);
    if (a.is_zero() || b.is_zero()) continue;
    PBWElement ab = ctx.mul(a, b);
    CHECK(ab.degree() <= a.degree() + b.degree());
    // The commutative top symbol multiplies (deformation only adds lower order).
    if (ab.degree() == a.degree() + b.degree())
      CHECK(symbol(ab) == symbol(a) * symbol(b));
  }
}

TEST_CASE("symmetrization inverts exactly") {
  for (int n : {2, 3}) {
    LieAlgebraData alg = make_sl(n);
    PBWContext ctx(alg);
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
      CPoly f = oqtest::random_cpoly(rng, alg.dim, 3, 3);
      CHECK(ctx.weyl_inverse(ctx.weyl(f)) == f);
      PBWElement u = random_pbw(rng, alg.dim, 3, 3);
      CHECK(ctx.weyl(ctx.weyl_inverse(u)) == u);
    }
  }
}

TEST_CASE("symmetrization of a square averages the two orderings") {
  LieAlgebraData alg = make_sl(2);
  PBWContext ctx(alg);
  // weyl(xE * xF) = (X_E X_F + X_F X_E)/2 = X_E X_F - h X_H / 2 in normal form.
  CPoly ef = CPoly::variable(alg.dim, 0) * CPoly::variable(alg.dim, 1);
  PBWElement expect = PBWElement::from_word_exponents(Monomial(std::vector<int>{1, 1, 0}),
                                                      HPoly(Rational(1)));
  expect += gen(alg, "H").times(HPoly(Q("-1/2"), 1));
  CHECK(ctx.weyl(ef) == expect);
  // weyl of a pure power of one generator is that power, no correction.
  CPoly e2 = CPoly::variable(alg.dim, 0) * CPoly::variable(alg.dim, 0);
  CHECK(ctx.weyl(e2) == PBWElement::from_word_exponents(Monomial(std::vector<int>{2, 0, 0}),
                                                        HPoly(Rational(1))));
}

TEST_CASE("symmetrization intertwines the two adjoint actions") {
  // ad through the context on the deformed side (scaled by h) matches the
  // Poisson coadjoint action symmetrized from the commutative side.
  for (int n : {2, 3}) {
    LieAlgebraData alg = make_sl(n);
    PBWContext ctx(alg);
    std::mt19937_64 rng(1234);
    int trials = n == 2 ? 25 : 10;
    for (int trial = 0; trial < trials; ++trial) {
      CPoly f = oqtest::random_cpoly(rng, alg.dim, 3, 2);
      for (int i = 0; i < alg.dim; ++i) {
        PBWElement lhs = ctx.ad(i, ctx.weyl(f));
        PBWElement rhs = ctx.weyl(coadjoint_action(alg, i, f)).times(HPoly::h());
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("h specialization is a ring map") {
  LieAlgebraData alg = make_sl(2);
  PBWContext ctx(alg);
  std::mt19937_64 rng(8);
  PBWElement a = random_pbw(rng, alg.dim, 2, 3);
  PBWElement b = random_pbw(rng, alg.dim, 2, 3);
  // Specializing h in a product of specialized inputs must agree, because the
  // rewrite rule scales brackets by the same h value everywhere.
  for (const Rational& h0 : {Rational(0), Rational(1), Q("1/2")}) {
    PBWElement lhs = evaluate_h(ctx.mul(a, b), h0);
    // Recompute the product after specializing the coefficients only; the
    // words still rewrite with symbolic h, then specialize again.
    PBWElement rhs = evaluate_h(ctx.mul(evaluate_h(a, h0), evaluate_h(b, h0)), h0);
    CHECK(lhs == rhs);
  }
  // At h = 0 multiplication is plain commutative multiplication of symbols.
  PBWElement prod0 = evaluate_h(ctx.mul(a, b), Rational(0));
  CPoly commutative = ctx.weyl_inverse(evaluate_h(a, Rational(0))).at_h0() *
                      ctx.weyl_inverse(evaluate_h(b, Rational(0))).at_h0();
  CHECK(ctx.weyl_inverse(prod0).at_h0() == commutative);
}

TEST_CASE("words of monomials are sorted with multiplicity") {
  Monomial m(std::vector<int>{2, 0, 1});
  CHECK(word_of_monomial(m) == std::vector<int>{0, 0, 2});
  CHECK(word_of_monomial(Monomial(3)).empty());
}
