// Acceptance suite: one criterion per line, each an exact symbolic identity
// or a byte-pinned fixture, with a wall-time budget. Any failure (including
// a blown budget) makes the binary exit nonzero.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "oq/engine.hpp"
#include "oq/format.hpp"
#include "oq/poisson.hpp"
#include "testutil.hpp"

using namespace oq;
using oqtest::Q;

namespace {

struct Outcome {
  bool pass = true;
  long checks = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

OrbitSpec spec_sl2() {
  return orbit_from_eigs(make_sl(2), {{Rational(1), 1}, {Rational(-1), 1}});
}
OrbitSpec spec_sl3_reg_sym() {
  return orbit_from_eigs(make_sl(3),
                         {{Rational(1), 1}, {Rational(0), 1}, {Rational(-1), 1}});
}
OrbitSpec spec_sl3_reg_generic() {
  return orbit_from_eigs(make_sl(3), {{Rational(1), 1}, {Rational(2), 1}, {Rational(-3), 1}});
}
OrbitSpec spec_cp2() { return orbit_from_eigs(make_sl(3), {{Rational(1), 2}, {Rational(-2), 1}}); }

IdealPresentation presentation_for(const OrbitSpec& spec) {
  return spec.regular ? regular_generators(spec) : minimalpoly_generators(spec);
}

ReductionEngine engine_for(const OrbitSpec& spec, int D) {
  IdealPresentation pres = presentation_for(spec);
  return build_engine(pres, equivariance_certificate(pres), D);
}

PBWElement lift_words(const CPoly& f) {
  PBWElement u(f.nvars());
  for (const auto& [m, c] : f.terms()) u += PBWElement::from_word_exponents(m, c);
  return u;
}

// ---------------------------------------------------------------------------
// 1: structure constants against the defining representation, Jacobi closed.
Outcome criterion_structure() {
  Outcome out;
  for (int n : {2, 3, 4}) {
    LieAlgebraData alg = make_sl(n);
    for (int i = 0; i < alg.dim && out.pass; ++i)
      for (int j = 0; j < alg.dim && out.pass; ++j) {
        RatMat rep = alg.basis[static_cast<size_t>(i)] * alg.basis[static_cast<size_t>(j)] -
                     alg.basis[static_cast<size_t>(j)] * alg.basis[static_cast<size_t>(i)];
        RatMat table(alg.n, alg.n);
        for (const auto& [k, c] : alg.bracket_terms(i, j))
          table += alg.basis[static_cast<size_t>(k)].times(c);
        out.expect(rep == table, "sl" + std::to_string(n) + " bracket (" + std::to_string(i) +
                                     "," + std::to_string(j) + ") disagrees with the representation");
      }
    // Jacobi through the structure constants: sum over cyclic double brackets.
    for (int i = 0; i < alg.dim && out.pass; ++i)
      for (int j = i + 1; j < alg.dim && out.pass; ++j)
        for (int k = j + 1; k < alg.dim && out.pass; ++k) {
          std::vector<Rational> acc(static_cast<size_t>(alg.dim));
          auto add_double = [&](int a, int b, int c) {
            for (const auto& [m, w] : alg.bracket_terms(a, b))
              for (const auto& [l, v] : alg.bracket_terms(m, c))
                acc[static_cast<size_t>(l)] += w * v;
          };
          add_double(i, j, k);
          add_double(j, k, i);
          add_double(k, i, j);
          bool zero = true;
          for (const Rational& r : acc)
            if (!r.is_zero()) zero = false;
          out.expect(zero, "sl" + std::to_string(n) + " Jacobi failure at triple (" +
                               std::to_string(i) + "," + std::to_string(j) + "," +
                               std::to_string(k) + ")");
        }
  }
  return out;
}

// 2: invariants Poisson-commute; adjoint characteristic coefficients reduce
// to constants modulo the invariant-shift ideal at random points.
Outcome criterion_casimir() {
  Outcome out;
  for (int n : {2, 3}) {
    LieAlgebraData alg = make_sl(n);
    InvariantSet inv = invariants(alg);
    for (const CPoly& p : inv.generators)
      for (int i = 0; i < alg.dim; ++i)
        out.expect(poisson_bracket(alg, CPoly::variable(alg.dim, i), p).is_zero(),
                   "sl" + std::to_string(n) + " invariant fails to commute with coordinate " +
                       std::to_string(i));
  }
  // Cross-check: the adjoint characteristic coefficients are themselves
  // invariant, so modulo (p_k - p_k(x0)) they reduce to their value at x0.
  LieAlgebraData sl2 = make_sl(2);
  InvariantSet inv = invariants(sl2);
  std::vector<CPoly> ad_coeffs = charpoly_coeffs(generic_adjoint_matrix(sl2), 3);
  std::mt19937_64 rng(20260818);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> x0(static_cast<size_t>(sl2.dim));
    for (auto& v : x0) v = Rational(static_cast<long>(rng() % 9) - 4);
    std::vector<CPoly> shifted;
    for (const CPoly& p : inv.generators) {
      HPoly val = p.evaluate(x0);
      shifted.push_back(p - CPoly::constant(sl2.dim, val));
    }
    GroebnerBasis gb = buchberger(shifted, MonomialOrder::default_for(sl2.dim));
    for (const CPoly& c : ad_coeffs) {
      HPoly val = c.evaluate(x0);
      CPoly diff = c - CPoly::constant(sl2.dim, val);
      out.expect(normal_form(diff, gb).is_zero(),
                 "adjoint characteristic coefficient does not reduce to its point value");
    }
  }
  return out;
}

// 3: symmetrization intertwines the infinitesimal actions.
Outcome criterion_intertwine() {
  Outcome out;
  {
    LieAlgebraData alg = make_sl(2);
    PBWContext ctx(alg);
    for (const Monomial& m : monomials_up_to(alg.dim, 4, MonomialOrder::default_for(alg.dim))) {
      CPoly f = CPoly::term(m, HPoly(Rational(1)));
      PBWElement w = ctx.weyl(f);
      for (int i = 0; i < alg.dim; ++i)
        out.expect(ctx.ad(i, w) == ctx.weyl(coadjoint_action(alg, i, f)).times(HPoly::h()),
                   "sl2 intertwining fails on monomial " + m.debug_str() + " action " +
                       std::to_string(i));
    }
  }
  {
    LieAlgebraData alg = make_sl(3);
    PBWContext ctx(alg);
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 100; ++trial) {
      CPoly f = oqtest::random_cpoly(rng, alg.dim, 3, 2);
      int i = static_cast<int>(rng() % static_cast<unsigned>(alg.dim));
      out.expect(ctx.ad(i, ctx.weyl(f)) ==
                     ctx.weyl(coadjoint_action(alg, i, f)).times(HPoly::h()),
                 "sl3 intertwining fails on trial " + std::to_string(trial));
    }
  }
  return out;
}

// 4: commutators of generators with lifted ideal elements land in the lifted
// span with the certificate coefficients, exactly.
Outcome criterion_ideal_closure() {
  Outcome out;
  for (const OrbitSpec& spec : {spec_sl2(), spec_sl3_reg_sym(), spec_cp2()}) {
    IdealPresentation pres = presentation_for(spec);
    EquivarianceCertificate cert = equivariance_certificate(pres);
    PBWContext ctx(pres.orbit.alg);
    LiftedIdeal lifted = lift_ideal(ctx, pres, cert);
    const size_t l = lifted.R.size();
    for (int i = 0; i < pres.orbit.alg.dim; ++i)
      for (size_t a = 0; a < l; ++a) {
        PBWElement rhs(pres.orbit.alg.dim);
        for (size_t b = 0; b < l; ++b) {
          const Rational& t =
              cert.T[static_cast<size_t>(i)].at(static_cast<int>(a), static_cast<int>(b));
          if (!t.is_zero()) rhs += lifted.R[b].times(HPoly(t, 1));
        }
        out.expect(ctx.ad(i, lifted.R[a]) == rhs,
                   "ideal closure fails at generator " + std::to_string(a) + ", action " +
                       std::to_string(i));
      }
  }
  return out;
}

// 5: the hand-derived sphere fixtures, byte-exact.
Outcome criterion_fixture() {
  Outcome out;
  OrbitSpec spec = spec_sl2();
  ReductionEngine eng = engine_for(spec, 4);
  CPoly xE = CPoly::variable(3, 0), xF = CPoly::variable(3, 1);
  CPoly ef = star(eng, xE, xF).value;
  CPoly fe = star(eng, xF, xE).value;
  out.expect(render_cpoly(ef, spec.alg.labels) == "1 + 1/2*h*xH - 1/4*xH^2",
             "star(xE,xF) prints as " + render_cpoly(ef, spec.alg.labels));
  out.expect(render_cpoly(fe, spec.alg.labels) == "1 - 1/2*h*xH - 1/4*xH^2",
             "star(xF,xE) prints as " + render_cpoly(fe, spec.alg.labels));
  out.expect(render_cpoly(ef - fe, spec.alg.labels) == "h*xH",
             "star commutator prints as " + render_cpoly(ef - fe, spec.alg.labels));
  return out;
}

// 6: per-degree freeness — monomial counts split as standard + pivots at
// every degree, with all eliminations staying polynomial in the parameter.
Outcome criterion_freeness() {
  Outcome out;
  struct Row {
    OrbitSpec spec;
    int D;
  };
  std::vector<Row> rows = {{spec_sl2(), 4}, {spec_sl3_reg_sym(), 3}, {spec_cp2(), 3}};
  for (const Row& row : rows) {
    ReductionEngine eng = engine_for(row.spec, row.D);  // throws on any failure
    std::vector<int> pbw = eng.pbw_counts_by_degree();
    std::vector<int> stds = eng.std_counts_by_degree();
    std::vector<int> ranks = eng.ranks_by_degree();
    for (int d = 0; d <= row.D; ++d)
      out.expect(pbw[static_cast<size_t>(d)] ==
                     stds[static_cast<size_t>(d)] + ranks[static_cast<size_t>(d)],
                 "rank identity fails at degree " + std::to_string(d));
  }
  return out;
}

// 7: classical limit and first-order Poisson limit, exhaustive over standard
// monomial pairs within the degree window; repeated under a permuted
// variable priority to confirm order independence of the axioms.
Outcome criterion_limits() {
  Outcome out;
  struct Row {
    OrbitSpec spec;
    int D;
  };
  std::vector<Row> rows = {{spec_sl2(), 4}, {spec_cp2(), 3}};
  for (const Row& row : rows) {
    ReductionEngine eng = engine_for(row.spec, row.D);
    const LieAlgebraData& alg = row.spec.alg;
    const std::vector<Monomial>& mons = eng.std_monomials().monomials;
    for (const Monomial& m1 : mons) {
      if (!out.pass) break;
      for (const Monomial& m2 : mons) {
        if (m1.deg() + m2.deg() > row.D) continue;
        CPoly f = CPoly::term(m1, HPoly(Rational(1)));
        CPoly g = CPoly::term(m2, HPoly(Rational(1)));
        CPoly fg = star(eng, f, g).value;
        // Property: at h = 0 the product is the reduced commutative product.
        out.expect(fg.at_h0() == normal_form(f * g, eng.basis()),
                   "classical limit fails at " + m1.debug_str() + " * " + m2.debug_str());
        // Property: the commutator is h * (reduced Poisson bracket) + O(h^2).
        CPoly comm = fg - star(eng, g, f).value;
        CPoly first_order(alg.dim);
        bool divisible = true;
        for (const auto& [m, c] : comm.terms()) {
          HPoly q;
          if (!c.try_divide(HPoly::h(), q)) {
            divisible = false;
            break;
          }
          first_order += CPoly::term(m, HPoly(q.constant_term()));
        }
        out.expect(divisible && first_order ==
                                    normal_form(poisson_bracket(alg, f, g), eng.basis()),
                   "Poisson limit fails at " + m1.debug_str() + " , " + m2.debug_str());
        if (!out.pass) break;
      }
    }
  }
  // Permuted-priority rerun: different standard monomials, same axioms.
  {
    IdealPresentation pres = regular_generators(spec_sl2());
    ReductionEngine eng = build_engine(pres, equivariance_certificate(pres), 4,
                                       MonomialOrder::with_priority({2, 0, 1}));
    TheoremReport rep = check_theorem(eng, 2, 20, 777);
    for (const auto& item : rep.items)
      out.expect(item.pass, "permuted priority: " + item.name + " fails: " + item.witness);
    out.checks += 1;
  }
  return out;
}

// 8: associativity, exhaustive on coordinate triples plus random samples.
Outcome criterion_associativity() {
  Outcome out;
  struct Row {
    OrbitSpec spec;
    int D;
  };
  std::vector<Row> rows = {{spec_sl2(), 4}, {spec_cp2(), 3}};
  std::mt19937_64 rng(271828);
  for (const Row& row : rows) {
    ReductionEngine eng = engine_for(row.spec, row.D);
    const int dim = row.spec.alg.dim;
    for (int i = 0; i < dim && out.pass; ++i)
      for (int j = 0; j < dim && out.pass; ++j)
        for (int k = 0; k < dim && out.pass; ++k) {
          CPoly xi = CPoly::variable(dim, i);
          CPoly xj = CPoly::variable(dim, j);
          CPoly xk = CPoly::variable(dim, k);
          out.expect(star(eng, star(eng, xi, xj).value, xk).value ==
                         star(eng, xi, star(eng, xj, xk).value).value,
                     "associativity fails on coordinates (" + std::to_string(i) + "," +
                         std::to_string(j) + "," + std::to_string(k) + ")");
        }
    for (int trial = 0; trial < 50 && out.pass; ++trial) {
      // Split the degree window across the three factors.
      int d1 = static_cast<int>(rng() % 2) + (row.D >= 4 ? 1 : 0);
      int d2 = 1;
      int d3 = row.D - d1 - d2 > 0 ? 1 : 0;
      CPoly f = oqtest::random_cpoly(rng, dim, d1, 2);
      CPoly g = oqtest::random_cpoly(rng, dim, d2, 2);
      CPoly k = oqtest::random_cpoly(rng, dim, d3, 2);
      out.expect(star(eng, star(eng, f, g).value, k).value ==
                     star(eng, f, star(eng, g, k).value).value,
                 "associativity fails on random trial " + std::to_string(trial));
    }
  }
  return out;
}

// 9: specialization of the parameter keeps standard monomials independent
// and agrees with the commutative reduction at zero.
Outcome criterion_evaluation() {
  Outcome out;
  struct Row {
    OrbitSpec spec;
    int D;
  };
  std::vector<Row> rows = {{spec_sl2(), 4}, {spec_cp2(), 3}};
  std::mt19937_64 rng(161803);
  for (const Row& row : rows) {
    ReductionEngine eng = engine_for(row.spec, row.D);
    for (const Rational& h0 : {Rational(0), Rational(1), Rational(-1), Q("1/2"), Q("1/3")}) {
      EvaluatedEngine ev = evaluate_engine_h(eng, h0);
      out.expect(ev.rank() == eng.rank(),
                 "rank drifts at h = " + h0.str() + ": " + std::to_string(ev.rank()));
    }
    EvaluatedEngine e0 = evaluate_engine_h(eng, Rational(0));
    for (int trial = 0; trial < 100; ++trial) {
      CPoly f = oqtest::random_cpoly(rng, row.spec.alg.dim, 2, 3);
      out.expect(e0.nf(lift_words(f)) == normal_form(f, eng.basis()),
                 "zero-parameter reduction disagrees with the commutative normal form");
    }
  }
  return out;
}

// 10: the vanishing ideal, cross-validated two ways, with orbit dimensions
// and random membership.
Outcome criterion_orbit_ideal() {
  Outcome out;
  std::mt19937_64 rng(577215);
  // Reduced bases from both presentations coincide on single-orbit fibers.
  for (const OrbitSpec& spec : {spec_sl2(), spec_sl3_reg_generic()}) {
    MonomialOrder ord = MonomialOrder::default_for(spec.alg.dim);
    GroebnerBasis a = buchberger(regular_generators(spec).generators, ord);
    GroebnerBasis b = buchberger(minimalpoly_generators(spec).generators, ord);
    bool same = a.generators.size() == b.generators.size();
    if (same)
      for (size_t i = 0; i < a.generators.size(); ++i)
        if (a.generators[i] != b.generators[i]) same = false;
    out.expect(same, "presentations generate different reduced bases for sl" +
                         std::to_string(spec.alg.n));
  }
  // Krull dimensions = orbit dimensions.
  auto dim_of = [](const IdealPresentation& pres) {
    return krull_dimension(
        buchberger(pres.generators, MonomialOrder::default_for(pres.orbit.alg.dim)));
  };
  out.expect(dim_of(regular_generators(spec_sl2())) == 2, "sl2 orbit dimension is not 2");
  out.expect(dim_of(regular_generators(spec_sl3_reg_generic())) == 6,
             "sl3 regular orbit dimension is not 6");
  out.expect(dim_of(minimalpoly_generators(spec_cp2())) == 4, "cp2 orbit dimension is not 4");
  // Random rational conjugates stay in the vanishing locus.
  for (const OrbitSpec& spec : {spec_sl2(), spec_sl3_reg_generic(), spec_cp2()}) {
    IdealPresentation pres = presentation_for(spec);
    for (int trial = 0; trial < 20; ++trial) {
      RatMat g = oqtest::random_sl(rng, spec.alg.n);
      out.expect(on_orbit(pres, conjugated_coordinates(spec, g)),
                 "conjugated point leaves the vanishing locus on trial " + std::to_string(trial));
    }
  }
  return out;
}

// 11: the check verb is byte-deterministic across thread counts and runs.
Outcome criterion_determinism() {
  Outcome out;
#ifndef OQ_BIN
  out.expect(false, "CLI binary path missing at compile time");
#else
  const std::string base =
      std::string(OQ_BIN) + " check --algebra sl3 --eigs 1:2,-2:1 --deg 3";
  std::vector<std::string> cmds = {base + " --threads 1 2>/dev/null",
                                   base + " --threads 2 2>/dev/null",
                                   base + " --threads 8 2>/dev/null",
                                   base + " --threads 1 2>/dev/null"};
  std::vector<std::string> outputs;
  for (const std::string& cmd : cmds) {
    oqtest::CliResult res = oqtest::run_cli(cmd);
    out.expect(res.exit_code == 0, "check run exited " + std::to_string(res.exit_code));
    out.expect(!res.out.empty(), "check run produced no output");
    outputs.push_back(res.out);
  }
  for (size_t i = 1; i < outputs.size(); ++i)
    out.expect(outputs[i] == outputs[0],
               "output " + std::to_string(i) + " differs from the first run");
#endif
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int index;
    std::string name;
    long budget_ms;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {1, "structure constants and Jacobi", 5000, criterion_structure},
      {2, "invariants commute plus adjoint cross-check", 5000, criterion_casimir},
      {3, "symmetrization intertwines the actions", 30000, criterion_intertwine},
      {4, "lifted ideal closes under commutators", 60000, criterion_ideal_closure},
      {5, "sphere product fixtures byte-exact", 10000, criterion_fixture},
      {6, "per-degree module freeness", 300000, criterion_freeness},
      {7, "classical and Poisson limits", 300000, criterion_limits},
      {8, "associativity", 300000, criterion_associativity},
      {9, "parameter evaluation", 60000, criterion_evaluation},
      {10, "orbit ideal validation", 60000, criterion_orbit_ideal},
      {11, "byte determinism of check", 300000, criterion_determinism},
  };
  bool all_pass = true;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const Error& e) {
      out.pass = false;
      out.detail = std::string("unexpected error: ") + e.what();
    }
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    bool in_budget = ms < c.budget_ms;
    bool pass = out.pass && in_budget;
    all_pass = all_pass && pass;
    std::printf("criterion %2d: %s (%s, %ld checks, %ld ms)\n", c.index,
                pass ? "PASS" : "FAIL", c.name.c_str(), out.checks, ms);
    if (!out.pass) std::printf("    reason: %s\n", out.detail.c_str());
    if (out.pass && !in_budget)
      std::printf("    reason: exceeded the %ld ms budget\n", c.budget_ms);
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return all_pass ? 0 : 1;
}
