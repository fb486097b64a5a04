#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "oq/error.hpp"

namespace oq {

// Commutative exponent vector over a fixed variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0), deg_(0) {}
  explicit Monomial(std::vector<int> exponents)
      : e_(std::move(exponents)), deg_(std::accumulate(e_.begin(), e_.end(), 0)) {
    for (int x : e_)
      if (x < 0) fail(ErrorKind::IndexOutOfRange, "negative exponent in monomial");
  }

  static Monomial variable(int nvars, int i) {
    Monomial m(nvars);
    m.e_.at(static_cast<size_t>(i)) = 1;
    m.deg_ = 1;
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int deg() const { return deg_; }
  bool is_unit() const { return deg_ == 0; }
  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& exponents() const { return e_; }

  Monomial times(const Monomial& o) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  Monomial divide(const Monomial& o) const {  // *this / o, assumes o | *this
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    r.deg_ = deg_ - o.deg_;
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    int d = 0;
    for (size_t i = 0; i < r.e_.size(); ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = d;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Graded lex with variable 0 most significant; the fixed structural order
  // behind map keys.  Returns <0, 0, >0.
  static int cmp_grlex(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    return 0;
  }

  std::string debug_str() const {
    std::string s = "(";
    for (size_t i = 0; i < e_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(e_[i]);
    }
    return s + ")";
  }

 private:
  std::vector<int> e_;
  int deg_ = 0;
};

// Map comparator: decreasing graded-lex, so map iteration starts at the
// leading term under the default order.
struct MonomialDescCmp {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp_grlex(a, b) > 0;
  }
};

// Graded lexicographic order with a configurable variable priority.
// priority[0] is the most significant variable index; the default priority is
// the basis order 0,1,...,n-1.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder default_for(int nvars) {
    MonomialOrder o;
    o.nvars_ = nvars;
    return o;
  }
  static MonomialOrder with_priority(std::vector<int> priority) {
    MonomialOrder o;
    o.nvars_ = static_cast<int>(priority.size());
    std::vector<bool> seen(priority.size(), false);
    for (int p : priority) {
      if (p < 0 || p >= o.nvars_ || seen[static_cast<size_t>(p)])
        fail(ErrorKind::DimensionMismatch, "variable priority is not a permutation");
      seen[static_cast<size_t>(p)] = true;
    }
    bool identity = true;
    for (size_t i = 0; i < priority.size(); ++i)
      if (priority[i] != static_cast<int>(i)) identity = false;
    if (!identity) o.priority_ = std::move(priority);
    return o;
  }

  int nvars() const { return nvars_; }
  bool is_default() const { return priority_.empty(); }
  const std::vector<int>& priority() const { return priority_; }

  int compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars() || a.nvars() != nvars_)
      fail(ErrorKind::DimensionMismatch, "monomial comparison across variable counts");
    if (priority_.empty()) return Monomial::cmp_grlex(a, b);
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (int idx : priority_)
      if (a[idx] != b[idx]) return a[idx] < b[idx] ? -1 : 1;
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string str() const {
    if (priority_.empty()) return "default";
    std::string s;
    for (size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(priority_[i]);
    }
    return s;
  }

 private:
  int nvars_ = 0;
  std::vector<int> priority_;  // empty = identity
};

// All monomials on nvars variables with total degree <= max_degree, in
// increasing order under `order`.
std::vector<Monomial> monomials_up_to(int nvars, int max_degree, const MonomialOrder& order);

}  // namespace oq
