#pragma once

#include <optional>
#include <vector>

#include "oq/error.hpp"
#include "oq/rational.hpp"

namespace oq {

// Dense matrix over the rationals. Small sizes only (certificate solves,
// structure-constant tables); the reduction engine uses its own sparse rows.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) fail(ErrorKind::IndexOutOfRange, "negative matrix dimension");
  }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) {
    check(i, j);
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }
  const Rational& at(int i, int j) const {
    check(i, j);
    return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
  }

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  RatMat& operator+=(const RatMat& o) {
    same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  RatMat& operator-=(const RatMat& o) {
    same_shape(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend RatMat operator+(RatMat a, const RatMat& b) { return a += b; }
  friend RatMat operator-(RatMat a, const RatMat& b) { return a -= b; }

  RatMat times(const Rational& c) const {
    RatMat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
  }

  friend RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    RatMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  Rational trace() const {
    if (rows_ != cols_) fail(ErrorKind::DimensionMismatch, "trace of non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  // In-place reduced row echelon form; returns pivot columns in order.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = -1;
      for (int i = r; i < rows_; ++i)
        if (!at(i, c).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
      Rational inv = at(r, c).inv();
      for (int j = c; j < cols_; ++j) at(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r) continue;
        Rational f = at(i, c);
        if (f.is_zero()) continue;
        for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    RatMat m = *this;
    return static_cast<int>(m.rref().size());
  }

 private:
  void check(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      fail(ErrorKind::IndexOutOfRange, "matrix index out of range");
  }
  void same_shape(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(ErrorKind::DimensionMismatch, "matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

// Least-structure solver: find any x with A x = b, or nullopt when the system
// is inconsistent. Free variables are set to zero, so the result is the
// canonical section used by the equivariance certificate.
inline std::optional<std::vector<Rational>> solve_linear(const RatMat& A,
                                                         const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != A.rows())
    fail(ErrorKind::DimensionMismatch, "rhs length mismatch");
  RatMat aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivots = aug.rref();
  for (int c : pivots)
    if (c == A.cols()) return std::nullopt;  // row (0 ... 0 | 1): inconsistent
  std::vector<Rational> x(static_cast<size_t>(A.cols()));
  for (size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), A.cols());
  return x;
}

}  // namespace oq
