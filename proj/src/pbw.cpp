#include "oq/pbw.hpp"

#include <algorithm>

namespace oq {

std::vector<int> word_of_monomial(const Monomial& m) {
  std::vector<int> w;
  w.reserve(static_cast<size_t>(m.deg()));
  for (int i = 0; i < m.nvars(); ++i)
    for (int e = 0; e < m[i]; ++e) w.push_back(i);
  return w;
}

namespace {

Monomial exponents_of_word(const std::vector<int>& sorted_word, int nvars) {
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  for (int i : sorted_word) ++e[static_cast<size_t>(i)];
  return Monomial(std::move(e));
}

}  // namespace

const PBWElement& PBWContext::normalized_word(const std::vector<int>& word,
                                              RewriteStrategy strategy) const {
  std::pair<int, std::vector<int>> key(static_cast<int>(strategy), word);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  int dim = alg_->dim;
  PBWElement result(dim);
  int pos = -1;
  for (size_t p = 0; p + 1 < word.size(); ++p) {
    if (word[p] > word[p + 1]) {
      pos = static_cast<int>(p);
      if (strategy == RewriteStrategy::kLeftmost) break;
    }
  }
  if (pos < 0) {
    result.add_term(exponents_of_word(word, dim), HPoly(Rational(1)));
  } else {
    size_t p = static_cast<size_t>(pos);
    std::vector<int> swapped = word;
    std::swap(swapped[p], swapped[p + 1]);
    result += normalized_word(swapped, strategy);
    // X_b X_a = X_a X_b + h [X_b, X_a]
    std::vector<int> contracted;
    contracted.reserve(word.size() - 1);
    contracted.insert(contracted.end(), word.begin(), word.begin() + static_cast<long>(p));
    contracted.push_back(0);  // placeholder for the bracket letter
    contracted.insert(contracted.end(), word.begin() + static_cast<long>(p) + 2, word.end());
    for (const auto& [k, c] : alg_->bracket_terms(word[p], word[p + 1])) {
      contracted[p] = k;
      result += normalized_word(contracted, strategy).times(HPoly(c, 1));
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = cache_.emplace(std::move(key), std::move(result));
  return it->second;
}

PBWElement PBWContext::normalize(const std::vector<int>& word, const HPoly& c,
                                 RewriteStrategy strategy) const {
  for (int i : word)
    if (i < 0 || i >= alg_->dim) fail(ErrorKind::IndexOutOfRange, "basis index out of range");
  if (c.is_zero()) return PBWElement(alg_->dim);
  return normalized_word(word, strategy).times(c);
}

PBWElement PBWContext::mul(const PBWElement& a, const PBWElement& b) const {
  if (a.nvars() != alg_->dim || b.nvars() != alg_->dim)
    fail(ErrorKind::DimensionMismatch, "element does not belong to this algebra");
  PBWElement out(alg_->dim);
  for (const auto& [ma, ca] : a.terms()) {
    std::vector<int> wa = word_of_monomial(ma);
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> w = wa;
      std::vector<int> wb = word_of_monomial(mb);
      w.insert(w.end(), wb.begin(), wb.end());
      out += normalized_word(w, RewriteStrategy::kLeftmost).times(ca * cb);
    }
  }
  return out;
}

PBWElement PBWContext::weyl(const CPoly& f) const {
  if (f.nvars() != alg_->dim)
    fail(ErrorKind::DimensionMismatch, "polynomial does not belong to this algebra");
  PBWElement out(alg_->dim);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> w = word_of_monomial(m);
    // Average over distinct arrangements; identical words normalize equally,
    // so this matches the full permutation average.
    PBWElement sym(alg_->dim);
    long count = 0;
    std::vector<int> perm = w;
    do {
      sym += normalized_word(perm, RewriteStrategy::kLeftmost);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out += sym.times(c.times(Rational(1, count)));
  }
  return out;
}

CPoly PBWContext::weyl_inverse(const PBWElement& u) const {
  if (u.nvars() != alg_->dim)
    fail(ErrorKind::DimensionMismatch, "element does not belong to this algebra");
  CPoly out(alg_->dim);
  PBWElement rest = u;
  while (!rest.is_zero()) {
    int d = rest.degree();
    CPoly layer(alg_->dim);
    for (const auto& [m, c] : rest.terms())
      if (m.deg() == d) layer.add_term(m, c);
    out += layer;
    rest -= weyl(layer);  // cancels the whole top layer, degree drops
  }
  return out;
}

PBWElement PBWContext::ad(int i, const PBWElement& u) const {
  if (i < 0 || i >= alg_->dim) fail(ErrorKind::IndexOutOfRange, "basis index out of range");
  PBWElement xi = PBWElement::generator(alg_->dim, i);
  return mul(xi, u) - mul(u, xi);
}

CPoly symbol(const PBWElement& u) {
  if (u.is_zero()) fail(ErrorKind::ZeroElement, "symbol of the zero element");
  int d = u.degree();
  CPoly out(u.nvars());
  for (const auto& [m, c] : u.terms()) {
    if (m.deg() != d) continue;
    Rational c0 = c.constant_term();
    if (!c0.is_zero()) out.add_term(m, HPoly(c0));
  }
  return out;
}

PBWElement evaluate_h(const PBWElement& u, const Rational& h0) {
  PBWElement out(u.nvars());
  for (const auto& [m, c] : u.terms()) {
    Rational v = c.eval(h0);
    if (!v.is_zero()) out.add_term(m, HPoly(v));
  }
  return out;
}

}  // namespace oq
