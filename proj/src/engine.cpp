#include "oq/engine.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "oq/error.hpp"
#include "oq/groebner.hpp"
#include "oq/poisson.hpp"

namespace oq {

namespace {

// Sparse row over a field scalar, entries sorted by column index.
template <typename Scalar>
using SparseRow = std::vector<std::pair<int, Scalar>>;

// r + s * m, keeping entries sorted and dropping zeros.
template <typename Scalar>
SparseRow<Scalar> row_add_scaled(const SparseRow<Scalar>& r, const Scalar& s,
                                 const SparseRow<Scalar>& m) {
  SparseRow<Scalar> out;
  out.reserve(r.size() + m.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < m.size()) {
    if (j >= m.size() || (i < r.size() && r[i].first < m[j].first)) {
      out.push_back(r[i++]);
    } else if (i >= r.size() || m[j].first < r[i].first) {
      Scalar v = s * m[j].second;
      if (!v.is_zero()) out.emplace_back(m[j].first, std::move(v));
      ++j;
    } else {
      Scalar v = r[i].second + s * m[j].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <typename Scalar>
void row_scale(SparseRow<Scalar>& r, const Scalar& s) {
  for (auto& e : r) e.second = e.second * s;
}

std::string describe_monomial(const LieAlgebraData& alg, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "x" << alg.labels[static_cast<std::size_t>(i)];
    if (m[i] > 1) os << "^" << m[i];
  }
  if (first) os << "1";
  return os.str();
}

}  // namespace

struct ReductionEngine::Internals {
  IdealPresentation pres;
  MonomialOrder ord;
  int max_deg = 0;
  GroebnerBasis gb;
  StandardMonomialSet stdset;
  std::unique_ptr<PBWContext> ctx;  // bound to pres.orbit.alg (stable address)
  LiftedIdeal lifted;

  std::vector<Monomial> columns;  // engine column order
  std::map<Monomial, int, MonomialDescCmp> col_of;
  std::vector<bool> col_is_std;
  std::vector<int> col_degree;

  // Raw normalized rows (kept for numeric re-evaluation), parallel metadata.
  std::vector<SparseRow<HPoly>> raw_rows;
  std::vector<std::pair<int, Monomial>> raw_meta;  // (generator index, multiplier)

  // Echelonized rows, one per non-standard column; the surviving
  // standard-column coefficients are polynomial in h (checked at build time).
  std::map<int, std::vector<std::pair<int, HPoly>>> nf_rows;

  std::vector<HPoly> watch;
  std::vector<int> ranks_cum;
  std::vector<int> pbw_cum;
  std::vector<int> std_cum;
};

int ReductionEngine::max_degree() const { return d_->max_deg; }
const MonomialOrder& ReductionEngine::order() const { return d_->ord; }
const IdealPresentation& ReductionEngine::presentation() const { return d_->pres; }
const GroebnerBasis& ReductionEngine::basis() const { return d_->gb; }
const StandardMonomialSet& ReductionEngine::std_monomials() const { return d_->stdset; }
const LiftedIdeal& ReductionEngine::lifted() const { return d_->lifted; }
const PBWContext& ReductionEngine::context() const { return *d_->ctx; }
int ReductionEngine::rank() const { return static_cast<int>(d_->nf_rows.size()); }
std::vector<int> ReductionEngine::ranks_by_degree() const { return d_->ranks_cum; }
std::vector<int> ReductionEngine::pbw_counts_by_degree() const { return d_->pbw_cum; }
std::vector<int> ReductionEngine::std_counts_by_degree() const { return d_->std_cum; }
const std::vector<HPoly>& ReductionEngine::denominator_watch() const { return d_->watch; }

LiftedIdeal lift_ideal(const PBWContext& ctx, const IdealPresentation& pres,
                       const EquivarianceCertificate& cert) {
  const LieAlgebraData& alg = ctx.algebra();
  const std::size_t l = pres.generators.size();
  if (cert.T.size() != static_cast<std::size_t>(alg.dim))
    fail(ErrorKind::DimensionMismatch, "certificate does not match the basis size");
  for (const RatMat& Ti : cert.T)
    if (Ti.rows() != static_cast<int>(l) || Ti.cols() != static_cast<int>(l))
      fail(ErrorKind::DimensionMismatch, "certificate does not match the generator count");

  const std::vector<CPoly>& targets = pres.lift_targets();
  if (targets.size() != l)
    fail(ErrorKind::DimensionMismatch, "lift target count does not match the generator count");
  for (std::size_t a = 0; a < l; ++a)
    if (targets[a].at_h0() != pres.generators[a])
      fail(ErrorKind::RepresentationFailure,
           "lift target " + std::to_string(a + 1) + " does not reduce to its h-free generator");

  LiftedIdeal out;
  out.R.reserve(l);
  for (const CPoly& g : targets) out.R.push_back(ctx.weyl(g));
  out.C.assign(static_cast<std::size_t>(alg.dim), {});
  for (int i = 0; i < alg.dim; ++i) {
    auto& Ci = out.C[static_cast<std::size_t>(i)];
    Ci.assign(l, std::vector<HPoly>(l));
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = 0; b < l; ++b)
        Ci[a][b] = HPoly(cert.T[static_cast<std::size_t>(i)].at(static_cast<int>(a),
                                                                static_cast<int>(b)),
                         1);
    // [X_i, R_a] must equal sum_b C_i[a][b] R_b, exactly.
    for (std::size_t a = 0; a < l; ++a) {
      PBWElement lhs = ctx.ad(i, out.R[a]);
      PBWElement rhs(alg.dim);
      for (std::size_t b = 0; b < l; ++b) {
        if (Ci[a][b].is_zero()) continue;
        rhs += out.R[b].times(Ci[a][b]);
      }
      if (lhs != rhs)
        fail(ErrorKind::Lemma1Violation,
             "bracket of " + alg.labels[static_cast<std::size_t>(i)] +
                 " with lifted generator " + std::to_string(a + 1) +
                 " is not the certified combination");
    }
  }
  return out;
}

ReductionEngine build_engine(const IdealPresentation& pres, const EquivarianceCertificate& cert,
                             int D, const MonomialOrder& order) {
  if (D < 0) fail(ErrorKind::IndexOutOfRange, "truncation degree must be nonnegative");
  const LieAlgebraData& alg = pres.orbit.alg;
  if (order.nvars() != alg.dim)
    fail(ErrorKind::DimensionMismatch, "monomial order arity does not match the basis");

  auto data = std::make_shared<ReductionEngine::Internals>();
  data->pres = pres;
  data->ord = order;
  data->max_deg = D;
  data->gb = buchberger(pres.generators, order);
  data->stdset = standard_monomials(data->gb, D);
  data->ctx = std::make_unique<PBWContext>(data->pres.orbit.alg);
  data->lifted = lift_ideal(*data->ctx, data->pres, cert);
  const std::size_t l = data->pres.generators.size();

  // Columns: every monomial of degree <= D, ordered by degree descending,
  // non-standard before standard within a degree, then descending in the
  // monomial order.
  std::vector<Monomial> all = monomials_up_to(alg.dim, D, order);
  std::vector<bool> is_std_flag(all.size(), false);
  {
    std::set<Monomial, MonomialDescCmp> std_lookup;
    for (const Monomial& m : data->stdset.monomials) std_lookup.insert(m);
    for (std::size_t k = 0; k < all.size(); ++k) is_std_flag[k] = std_lookup.count(all[k]) > 0;
  }
  std::vector<std::size_t> perm(all.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    int da = all[a].deg(), db = all[b].deg();
    if (da != db) return da > db;
    if (is_std_flag[a] != is_std_flag[b]) return !is_std_flag[a];
    return order.greater(all[a], all[b]);
  });
  data->columns.reserve(all.size());
  for (std::size_t k : perm) {
    data->col_of.emplace(all[k], static_cast<int>(data->columns.size()));
    data->col_is_std.push_back(is_std_flag[k]);
    data->col_degree.push_back(all[k].deg());
    data->columns.push_back(all[k]);
  }

  // Rows: normalized m * R_a over all multipliers m with deg m + deg R_a <= D,
  // in deterministic (generator, ascending multiplier) order.
  for (std::size_t a = 0; a < l; ++a) {
    if (data->lifted.R[a].is_zero()) continue;
    const int dg = data->lifted.R[a].degree();
    if (dg > D) continue;
    for (const Monomial& m : all) {
      if (m.deg() + dg > D) continue;
      PBWElement prod =
          data->ctx->mul(PBWElement::from_word_exponents(m, HPoly(Rational(1))),
                         data->lifted.R[a]);
      SparseRow<HPoly> row;
      row.reserve(prod.term_count());
      for (const auto& [mono, coeff] : prod.terms()) {
        auto it = data->col_of.find(mono);
        if (it == data->col_of.end())
          fail(ErrorKind::DegreeOverflow, "normalized row leaves the truncation window");
        row.emplace_back(it->second, coeff);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      if (row.empty()) continue;
      data->raw_rows.push_back(std::move(row));
      data->raw_meta.emplace_back(static_cast<int>(a), m);
    }
  }

  // Incremental reduced echelon form over rational functions in h.
  std::map<int, std::size_t> by_col;
  std::vector<SparseRow<HRat>> rows;
  std::set<std::string> watch_seen;
  for (const SparseRow<HPoly>& raw : data->raw_rows) {
    SparseRow<HRat> r;
    r.reserve(raw.size());
    for (const auto& [c, p] : raw) r.emplace_back(c, HRat(p));
    for (;;) {
      std::size_t hit = r.size();
      std::size_t prow = 0;
      for (std::size_t k = 0; k < r.size(); ++k) {
        auto it = by_col.find(r[k].first);
        if (it != by_col.end()) {
          hit = k;
          prow = it->second;
          break;
        }
      }
      if (hit == r.size()) break;
      HRat s = -r[hit].second;
      r = row_add_scaled(r, s, rows[prow]);
    }
    if (r.empty()) continue;
    const HRat& pv = r.front().second;
    HPoly num = pv.num().monic();
    if (num.degree() > 0) {
      std::string key = num.str();
      if (watch_seen.insert(key).second) data->watch.push_back(num);
    }
    HRat inv = pv.inv();
    row_scale(r, inv);
    const int pcol = r.front().first;
    // Maintain full reduction: clear this column from existing pivot rows.
    for (auto& [col, idx] : by_col) {
      (void)col;
      SparseRow<HRat>& old = rows[idx];
      auto it = std::lower_bound(old.begin(), old.end(), pcol,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == old.end() || it->first != pcol) continue;
      HRat s = -it->second;
      old = row_add_scaled(old, s, r);
    }
    by_col.emplace(pcol, rows.size());
    rows.push_back(std::move(r));
  }

  // The pivot set must be exactly the non-standard monomials up to D.
  for (const auto& [col, idx] : by_col) {
    (void)idx;
    if (data->col_is_std[static_cast<std::size_t>(col)])
      fail(ErrorKind::SpanDeficient,
           "a standard monomial became a pivot: " +
               describe_monomial(alg, data->columns[static_cast<std::size_t>(col)]));
  }
  for (std::size_t c = 0; c < data->columns.size(); ++c) {
    if (data->col_is_std[c]) continue;
    if (by_col.count(static_cast<int>(c))) continue;
    fail(ErrorKind::SpanDeficient,
         "degree " + std::to_string(data->col_degree[c]) +
             " monomial not reached by the truncated span: " +
             describe_monomial(alg, data->columns[c]));
  }

  // Freeness of the remainder module: surviving standard-column entries must
  // be polynomial in h.
  for (const auto& [pcol, idx] : by_col) {
    const SparseRow<HRat>& row = rows[idx];
    std::vector<std::pair<int, HPoly>> entries;
    for (const auto& [col, val] : row) {
      if (col == pcol) continue;
      if (!data->col_is_std[static_cast<std::size_t>(col)])
        fail(ErrorKind::SpanDeficient, "echelon row touches a second non-standard monomial");
      if (!val.is_polynomial())
        fail(ErrorKind::FreeModuleViolation,
             "reduction of " +
                 describe_monomial(alg, data->columns[static_cast<std::size_t>(pcol)]) +
                 " onto " + describe_monomial(alg, data->columns[static_cast<std::size_t>(col)]) +
                 " has denominator " + val.den().str());
      entries.emplace_back(col, val.num());
    }
    data->nf_rows.emplace(pcol, std::move(entries));
  }

  // Cumulative counts by degree.
  data->ranks_cum.assign(static_cast<std::size_t>(D) + 1, 0);
  data->pbw_cum.assign(static_cast<std::size_t>(D) + 1, 0);
  data->std_cum.assign(static_cast<std::size_t>(D) + 1, 0);
  for (const auto& [pcol, idx] : by_col) {
    (void)idx;
    int deg = data->col_degree[static_cast<std::size_t>(pcol)];
    for (int dd = deg; dd <= D; ++dd) data->ranks_cum[static_cast<std::size_t>(dd)] += 1;
  }
  for (std::size_t c = 0; c < data->columns.size(); ++c)
    for (int dd = data->col_degree[c]; dd <= D; ++dd) {
      data->pbw_cum[static_cast<std::size_t>(dd)] += 1;
      if (data->col_is_std[c]) data->std_cum[static_cast<std::size_t>(dd)] += 1;
    }

  ReductionEngine engine;
  engine.d_ = std::move(data);
  return engine;
}

int default_degree(const IdealPresentation& pres) {
  int maxdeg = 0;
  for (const CPoly& g : pres.generators) maxdeg = std::max(maxdeg, g.total_degree());
  if (pres.orbit.alg.n == 2) return std::max(4, 2 * maxdeg);
  return std::max(3, maxdeg);
}

CPoly ReductionEngine::nf(const PBWElement& u) const {
  const Internals& in = *d_;
  if (u.degree() > in.max_deg)
    fail(ErrorKind::DegreeOverflow,
         "element of degree " + std::to_string(u.degree()) + " exceeds the window " +
             std::to_string(in.max_deg));
  CPoly out(in.pres.orbit.alg.dim);
  for (const auto& [mono, coeff] : u.terms()) {
    auto it = in.col_of.find(mono);
    if (it == in.col_of.end())
      fail(ErrorKind::DegreeOverflow, "monomial outside the truncation window");
    const int col = it->second;
    if (in.col_is_std[static_cast<std::size_t>(col)]) {
      out.add_term(mono, coeff);
      continue;
    }
    for (const auto& [scol, sval] : in.nf_rows.at(col))
      out.add_term(in.columns[static_cast<std::size_t>(scol)], -(coeff * sval));
  }
  return out;
}

StarResult star(const ReductionEngine& engine, const CPoly& f, const CPoly& g, LiftMode mode) {
  const int dim = engine.presentation().orbit.alg.dim;
  if (f.nvars() != dim || g.nvars() != dim)
    fail(ErrorKind::DimensionMismatch, "inputs do not match the coordinate count");
  StarResult res;
  res.mode = mode;
  res.f_reduced = normal_form(f, engine.basis());
  res.g_reduced = normal_form(g, engine.basis());
  if (res.f_reduced.is_zero() || res.g_reduced.is_zero()) {
    res.value = CPoly(dim);
    return res;
  }
  const int df = res.f_reduced.total_degree();
  const int dg = res.g_reduced.total_degree();
  if (df + dg > engine.max_degree())
    fail(ErrorKind::DegreeOverflow,
         "product degree " + std::to_string(df + dg) + " exceeds the window " +
             std::to_string(engine.max_degree()));
  const PBWContext& ctx = engine.context();
  auto lift = [&](const CPoly& p) {
    if (mode == LiftMode::kWeyl) return ctx.weyl(p);
    PBWElement out(dim);
    for (const auto& [mono, coeff] : p.terms()) out.add_term(mono, coeff);
    return out;
  };
  res.value = engine.nf(ctx.mul(lift(res.f_reduced), lift(res.g_reduced)));
  return res;
}

namespace {

// Coefficientwise division by h; every coefficient must vanish at h = 0.
CPoly divide_by_h(const CPoly& p) {
  CPoly out(p.nvars());
  for (const auto& [mono, coeff] : p.terms()) {
    HPoly q;
    if (!coeff.try_divide(HPoly::h(), q))
      fail(ErrorKind::HCoefficientPresent, "difference is not divisible by h");
    out.add_term(mono, q);
  }
  return out;
}

std::string pair_witness(const CPoly& f, const CPoly& g, const CPoly& lhs, const CPoly& rhs) {
  std::ostringstream os;
  os << "f=" << f.debug_str() << " g=" << g.debug_str() << " lhs=" << lhs.debug_str()
     << " rhs=" << rhs.debug_str();
  return os.str();
}

}  // namespace

TheoremReport check_theorem(const ReductionEngine& engine, int d, int trials,
                            std::uint64_t seed) {
  TheoremReport rep;
  const LieAlgebraData& alg = engine.presentation().orbit.alg;
  const int dim = alg.dim;
  const int D = engine.max_degree();
  const GroebnerBasis& gb = engine.basis();
  const std::vector<Monomial>& stdm = engine.std_monomials().monomials;

  // (a) classical limit: star at h=0 equals the commutative product mod the
  // orbit ideal, exhaustively over standard-monomial pairs within the window.
  {
    TheoremReport::Item item;
    item.name = "classical-limit";
    for (const Monomial& mf : stdm) {
      for (const Monomial& mg : stdm) {
        if (mf.deg() + mg.deg() > D) continue;
        CPoly f = CPoly::term(mf, HPoly(Rational(1)));
        CPoly g = CPoly::term(mg, HPoly(Rational(1)));
        CPoly lhs = star(engine, f, g).value.at_h0();
        CPoly rhs = normal_form(f * g, gb).at_h0();
        ++item.checks;
        if (!(lhs == rhs)) {
          item.pass = false;
          item.witness = pair_witness(f, g, lhs, rhs);
          break;
        }
      }
      if (!item.pass) break;
    }
    rep.items.push_back(std::move(item));
  }

  // (b) Poisson limit: (f*g - g*f)/h at h=0 equals the Poisson bracket mod
  // the orbit ideal, same exhaustive range.
  {
    TheoremReport::Item item;
    item.name = "poisson-limit";
    for (const Monomial& mf : stdm) {
      for (const Monomial& mg : stdm) {
        if (mf.deg() + mg.deg() > D) continue;
        CPoly f = CPoly::term(mf, HPoly(Rational(1)));
        CPoly g = CPoly::term(mg, HPoly(Rational(1)));
        CPoly diff = star(engine, f, g).value;
        diff -= star(engine, g, f).value;
        CPoly lhs = divide_by_h(diff).at_h0();
        CPoly rhs = normal_form(poisson_bracket(alg, f, g), gb).at_h0();
        ++item.checks;
        if (!(lhs == rhs)) {
          item.pass = false;
          item.witness = pair_witness(f, g, lhs, rhs);
          break;
        }
      }
      if (!item.pass) break;
    }
    rep.items.push_back(std::move(item));
  }

  std::mt19937_64 rng(seed);
  auto random_std_poly = [&](int maxdeg) {
    std::vector<const Monomial*> pool;
    for (const Monomial& m : stdm)
      if (m.deg() <= maxdeg) pool.push_back(&m);
    CPoly out(dim);
    if (pool.empty()) return out;
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> hpow(0, 1);
    std::uniform_int_distribution<int> nterms(1, 3);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
      int c = coeff(rng);
      if (c == 0) c = 1;
      out.add_term(*pool[pick(rng)], HPoly(Rational(c), hpow(rng)));
    }
    return out;
  };

  // (c) associativity: exhaustive coordinate triples when they fit the
  // window, then random standard-supported triples.
  {
    TheoremReport::Item item;
    item.name = "associativity";
    auto check_triple = [&](const CPoly& f, const CPoly& g, const CPoly& k) {
      CPoly lhs = star(engine, star(engine, f, g).value, k).value;
      CPoly rhs = star(engine, f, star(engine, g, k).value).value;
      ++item.checks;
      if (!(lhs == rhs)) {
        item.pass = false;
        std::ostringstream os;
        os << "f=" << f.debug_str() << " g=" << g.debug_str() << " k=" << k.debug_str()
           << " lhs=" << lhs.debug_str() << " rhs=" << rhs.debug_str();
        item.witness = os.str();
        return false;
      }
      return true;
    };
    if (D >= 3) {
      for (int i = 0; i < dim && item.pass; ++i)
        for (int j = 0; j < dim && item.pass; ++j)
          for (int k = 0; k < dim && item.pass; ++k)
            check_triple(CPoly::variable(dim, i), CPoly::variable(dim, j),
                         CPoly::variable(dim, k));
    }
    const int cap = std::max(0, std::min(d, D));
    int produced = 0;
    int guard = 0;
    while (produced < trials && item.pass && guard < 50 * (trials + 1)) {
      ++guard;
      CPoly f = random_std_poly(cap);
      CPoly g = random_std_poly(cap);
      CPoly k = random_std_poly(cap);
      int total = std::max(f.total_degree(), 0) + std::max(g.total_degree(), 0) +
                  std::max(k.total_degree(), 0);
      if (total > D) continue;
      ++produced;
      check_triple(f, g, k);
    }
    rep.items.push_back(std::move(item));
  }

  // (d) per-degree rank identity.
  {
    TheoremReport::Item item;
    item.name = "rank-identity";
    std::vector<int> ranks = engine.ranks_by_degree();
    std::vector<int> pbw = engine.pbw_counts_by_degree();
    std::vector<int> stdc = engine.std_counts_by_degree();
    for (int dd = 0; dd <= D; ++dd) {
      ++item.checks;
      if (ranks[static_cast<std::size_t>(dd)] !=
          pbw[static_cast<std::size_t>(dd)] - stdc[static_cast<std::size_t>(dd)]) {
        item.pass = false;
        item.witness = "degree " + std::to_string(dd) + ": rank " +
                       std::to_string(ranks[static_cast<std::size_t>(dd)]) + " vs " +
                       std::to_string(pbw[static_cast<std::size_t>(dd)] -
                                      stdc[static_cast<std::size_t>(dd)]);
        break;
      }
    }
    rep.items.push_back(std::move(item));
  }

  // (e) lift-mode independence: the two lifts agree at h=0 and differ by a
  // multiple of h.
  {
    TheoremReport::Item item;
    item.name = "mode-independence";
    const int cap = std::max(0, std::min(d, D));
    int produced = 0;
    int guard = 0;
    const int want = std::max(trials, 1);
    while (produced < want && item.pass && guard < 50 * (want + 1)) {
      ++guard;
      CPoly f = random_std_poly(cap);
      CPoly g = random_std_poly(cap);
      if (std::max(f.total_degree(), 0) + std::max(g.total_degree(), 0) > D) continue;
      ++produced;
      CPoly a = star(engine, f, g, LiftMode::kStandardMonomial).value;
      CPoly b = star(engine, f, g, LiftMode::kWeyl).value;
      ++item.checks;
      if (!(a.at_h0() == b.at_h0())) {
        item.pass = false;
        item.witness = pair_witness(f, g, a.at_h0(), b.at_h0());
        break;
      }
      CPoly diff = a;
      diff -= b;
      for (const auto& [mono, coeff] : diff.terms()) {
        (void)mono;
        if (!coeff.constant_term().is_zero()) {
          item.pass = false;
          item.witness = pair_witness(f, g, a, b);
          break;
        }
      }
    }
    rep.items.push_back(std::move(item));
  }

  return rep;
}

struct EvaluatedEngine::Internals {
  Rational h0;
  int dim = 0;
  int max_deg = 0;
  std::vector<Monomial> columns;
  std::map<Monomial, int, MonomialDescCmp> col_of;
  std::vector<bool> col_is_std;
  std::vector<Monomial> pivot_monos;
  std::map<int, std::vector<std::pair<int, Rational>>> nf_rows;
};

const Rational& EvaluatedEngine::h_value() const { return d_->h0; }
int EvaluatedEngine::rank() const { return static_cast<int>(d_->nf_rows.size()); }
const std::vector<Monomial>& EvaluatedEngine::pivot_monomials() const { return d_->pivot_monos; }

EvaluatedEngine evaluate_engine_h(const ReductionEngine& engine, const Rational& h0) {
  const ReductionEngine::Internals& in = engine.internals();
  auto data = std::make_shared<EvaluatedEngine::Internals>();
  data->h0 = h0;
  data->dim = in.pres.orbit.alg.dim;
  data->max_deg = in.max_deg;
  data->columns = in.columns;
  data->col_of = in.col_of;
  data->col_is_std = in.col_is_std;

  // Re-echelonize the raw rows numerically with the same column order.
  std::map<int, std::size_t> by_col;
  std::vector<SparseRow<Rational>> rows;
  for (const SparseRow<HPoly>& raw : in.raw_rows) {
    SparseRow<Rational> r;
    r.reserve(raw.size());
    for (const auto& [c, p] : raw) {
      Rational v = p.eval(h0);
      if (!v.is_zero()) r.emplace_back(c, v);
    }
    for (;;) {
      std::size_t hit = r.size();
      std::size_t prow = 0;
      for (std::size_t k = 0; k < r.size(); ++k) {
        auto it = by_col.find(r[k].first);
        if (it != by_col.end()) {
          hit = k;
          prow = it->second;
          break;
        }
      }
      if (hit == r.size()) break;
      Rational s = -r[hit].second;
      r = row_add_scaled(r, s, rows[prow]);
    }
    if (r.empty()) continue;
    Rational inv = r.front().second.inv();
    row_scale(r, inv);
    const int pcol = r.front().first;
    for (auto& [col, idx] : by_col) {
      (void)col;
      SparseRow<Rational>& old = rows[idx];
      auto it = std::lower_bound(old.begin(), old.end(), pcol,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == old.end() || it->first != pcol) continue;
      Rational s = -it->second;
      old = row_add_scaled(old, s, r);
    }
    by_col.emplace(pcol, rows.size());
    rows.push_back(std::move(r));
  }

  // Specialization is healthy only when the pivots are still exactly the
  // non-standard monomials.
  bool healthy = static_cast<int>(by_col.size()) == engine.rank();
  if (healthy) {
    for (const auto& [col, idx] : by_col) {
      (void)idx;
      if (data->col_is_std[static_cast<std::size_t>(col)]) {
        healthy = false;
        break;
      }
    }
  }
  if (!healthy) {
    std::ostringstream os;
    os << "specialization at h=" << h0.str() << " has rank " << by_col.size() << " (expected "
       << engine.rank() << ")";
    std::string culprits;
    for (const HPoly& w : engine.denominator_watch())
      if (w.eval(h0).is_zero()) {
        if (!culprits.empty()) culprits += ", ";
        culprits += w.str();
      }
    if (!culprits.empty()) os << "; vanishing pivots: " << culprits;
    fail(ErrorKind::SingularEvaluation, os.str());
  }

  for (const auto& [pcol, idx] : by_col) {
    data->pivot_monos.push_back(data->columns[static_cast<std::size_t>(pcol)]);
    std::vector<std::pair<int, Rational>> entries;
    for (const auto& [col, val] : rows[idx]) {
      if (col == pcol) continue;
      entries.emplace_back(col, val);
    }
    data->nf_rows.emplace(pcol, std::move(entries));
  }

  EvaluatedEngine ev;
  ev.d_ = std::move(data);
  return ev;
}

CPoly EvaluatedEngine::nf(const PBWElement& u) const {
  const Internals& in = *d_;
  if (u.degree() > in.max_deg)
    fail(ErrorKind::DegreeOverflow,
         "element of degree " + std::to_string(u.degree()) + " exceeds the window " +
             std::to_string(in.max_deg));
  CPoly out(in.dim);
  for (const auto& [mono, coeff] : u.terms()) {
    Rational c = coeff.eval(in.h0);
    if (c.is_zero()) continue;
    auto it = in.col_of.find(mono);
    if (it == in.col_of.end())
      fail(ErrorKind::DegreeOverflow, "monomial outside the truncation window");
    const int col = it->second;
    if (in.col_is_std[static_cast<std::size_t>(col)]) {
      out.add_term(mono, HPoly(c));
      continue;
    }
    for (const auto& [scol, sval] : in.nf_rows.at(col))
      out.add_term(in.columns[static_cast<std::size_t>(scol)], HPoly(-(c * sval)));
  }
  return out;
}

}  // namespace oq
