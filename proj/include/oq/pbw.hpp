#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "oq/cpoly.hpp"
#include "oq/liealg.hpp"

namespace oq {

// Element of the h-deformed enveloping algebra in PBW normal form: a sorted
// word X_{i1}...X_{ik} (indices nondecreasing) is stored as its exponent
// vector over basis indices, so terms reuse the commutative container.
class PBWElement {
 public:
  PBWElement() = default;
  explicit PBWElement(int nvars) : data_(nvars) {}

  static PBWElement unit(int nvars, const HPoly& c) {
    PBWElement e(nvars);
    e.data_.add_term(Monomial(nvars), c);
    return e;
  }
  static PBWElement generator(int nvars, int i) {
    PBWElement e(nvars);
    e.data_.add_term(Monomial::variable(nvars, i), HPoly(Rational(1)));
    return e;
  }
  static PBWElement from_word_exponents(const Monomial& m, const HPoly& c) {
    PBWElement e(m.nvars());
    e.data_.add_term(m, c);
    return e;
  }

  int nvars() const { return data_.nvars(); }
  bool is_zero() const { return data_.is_zero(); }
  size_t term_count() const { return data_.term_count(); }
  const CPoly::TermMap& terms() const { return data_.terms(); }

  // Filtered degree: longest word present.
  int degree() const { return data_.total_degree(); }

  void add_term(const Monomial& word, const HPoly& c) { data_.add_term(word, c); }

  PBWElement& operator+=(const PBWElement& o) {
    data_ += o.data_;
    return *this;
  }
  PBWElement& operator-=(const PBWElement& o) {
    data_ -= o.data_;
    return *this;
  }
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { a += b; return a; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { a -= b; return a; }
  PBWElement operator-() const {
    PBWElement e;
    e.data_ = -data_;
    return e;
  }
  PBWElement times(const HPoly& c) const {
    PBWElement e;
    e.data_ = data_.times(c);
    return e;
  }

  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.data_ == b.data_; }
  friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

  // Raw coefficient view, word-exponent keyed (shape shared with CPoly).
  const CPoly& coefficients() const { return data_; }

 private:
  CPoly data_;
};

// Rewriting strategy for normalization; both must give identical results
// (confluence), which tests exercise.
enum class RewriteStrategy { kLeftmost, kRightmost };

// Normalization context: per-algebra memo cache for word rewriting. All
// public operations are const and thread-safe; the cache never changes
// results.
class PBWContext {
 public:
  explicit PBWContext(const LieAlgebraData& alg) : alg_(&alg) {}

  const LieAlgebraData& algebra() const { return *alg_; }

  // c * X_{w1}...X_{wk} rewritten into PBW normal form via
  // X_b X_a -> X_a X_b + h [X_b, X_a]   (b > a).
  PBWElement normalize(const std::vector<int>& word, const HPoly& c,
                       RewriteStrategy strategy = RewriteStrategy::kLeftmost) const;

  PBWElement mul(const PBWElement& a, const PBWElement& b) const;

  // Weyl symmetrization: monomial -> average over distinct arrangements.
  PBWElement weyl(const CPoly& f) const;

  // Inverse of weyl, peeled top degree down.
  CPoly weyl_inverse(const PBWElement& u) const;

  // Commutator action X_i u - u X_i.
  PBWElement ad(int i, const PBWElement& u) const;

 private:
  const PBWElement& normalized_word(const std::vector<int>& word, RewriteStrategy strategy) const;

  const LieAlgebraData* alg_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, std::vector<int>>, PBWElement> cache_;
};

// Sorted word of a commutative monomial (exponent vector flattened).
std::vector<int> word_of_monomial(const Monomial& m);

// Top filtered-degree part mapped to commutative variables with h set to 0.
CPoly symbol(const PBWElement& u);

// Substitute a numeric value for h in every coefficient.
PBWElement evaluate_h(const PBWElement& u, const Rational& h0);

}  // namespace oq
