#pragma once

#include <optional>
#include <vector>

#include "wreathvote/errors.hpp"
#include "wreathvote/rational.hpp"

/*
 * Dense exact-rational linear algebra, just enough for projection operators
 * and the paradox solver: rank by fraction-free (Bareiss) elimination,
 * reduced row echelon form, particular solutions and nullspace bases.
 * Pivots are chosen as the first nonzero entry; there are no thresholds.
 */

namespace wreathvote {

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  }

  static RationalMatrix identity(int d) {
    RationalMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool is_zero() const {
    for (const Rational& x : data_)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const RationalMatrix&) const = default;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product dimension mismatch");
    RationalMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj != 0) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DomainError("matrix sum dimension mismatch");
    RationalMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }

  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw DomainError("matrix difference dimension mismatch");
    RationalMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }

  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
    RationalMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
    return r;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw DomainError("matrix/vector size mismatch");
    std::vector<Rational> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) {
      Rational s = 0;
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != 0) s += at(i, j) * v[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] = s;
    }
    return out;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

// Rank by one-step fraction-free elimination (Bareiss recurrence).
inline int rank(RationalMatrix a) {
  int r = 0;
  Rational prev = 1;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(r, pivot);
    const Rational p = a.at(r, c);
    for (int i = r + 1; i < a.rows(); ++i) {
      for (int j = c + 1; j < a.cols(); ++j)
        a.at(i, j) = (a.at(i, j) * p - a.at(i, c) * a.at(r, j)) / prev;
      a.at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

// Reduced row echelon form; pivot column indices are appended to
// *pivot_cols when given.
inline RationalMatrix rref(RationalMatrix a, std::vector<int>* pivot_cols = nullptr) {
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.swap_rows(r, pivot);
    const Rational p = a.at(r, c);
    for (int j = c; j < a.cols(); ++j) a.at(r, j) /= p;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Rational f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return a;
}

// Basis of {x : A x = 0}, one vector per free column, in column order.
inline std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a) {
  std::vector<int> pivots;
  RationalMatrix r = rref(a, &pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> x(static_cast<std::size_t>(a.cols()));
    x[static_cast<std::size_t>(f)] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row)
      x[static_cast<std::size_t>(pivots[row])] = -r.at(static_cast<int>(row), f);
    basis.push_back(std::move(x));
  }
  return basis;
}

// A particular solution of A x = b, or nullopt when the system is
// inconsistent. Free variables are set to zero.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& a,
                                                  const std::vector<Rational>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw DomainError("right-hand side length does not match matrix");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots;
  RationalMatrix r = rref(std::move(aug), &pivots);
  for (int c : pivots)
    if (c == a.cols()) return std::nullopt;
  std::vector<Rational> x(static_cast<std::size_t>(a.cols()));
  for (std::size_t row = 0; row < pivots.size(); ++row)
    x[static_cast<std::size_t>(pivots[row])] = r.at(static_cast<int>(row), a.cols());
  return x;
}

}  // namespace wreathvote
