#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "corel/rational.hpp"

namespace corel {

/// Dense matrix of exact rationals, row-major. A linear map V -> W with
/// dim V = c and dim W = r is stored as an r x c matrix acting on column
/// vectors, so composition g . f is the product g * f. Zero-row and
/// zero-column matrices are legal; they are the maps in and out of the
/// zero space and several constructions below produce them.
class RatMatrix {
 public:
  RatMatrix() = default;

  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
    entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const Rational& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!corel::is_zero(e)) return false;
    return true;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Column j as a rows x 1 matrix.
  RatMatrix col(int j) const {
    RatMatrix c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

/// Flat index of e_i (x) e_j in V (x) W, 0-based: i * dim W + j. This
/// convention is shared by kron, flip and every coaction matrix, and is
/// part of the external file-format contract.
inline int tensor_index(int i, int j, int dim_second) { return i * dim_second + j; }

inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("RatMatrix multiply: shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  // Matrices here are mostly sparse 0/1 patterns; skipping zero factors is
  // what keeps the larger cotensor computations cheap.
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Rational& f = a(i, k);
      if (is_zero(f)) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const Rational& g = b(k, j);
        if (is_zero(g)) continue;
        out(i, j) += f * g;
      }
    }
  return out;
}

inline RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("RatMatrix add: shape mismatch");
  RatMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!is_zero(b(i, j))) out(i, j) += b(i, j);
  return out;
}

inline RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("RatMatrix subtract: shape mismatch");
  RatMatrix out = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!is_zero(b(i, j))) out(i, j) -= b(i, j);
  return out;
}

inline RatMatrix operator-(const RatMatrix& a) {
  RatMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) out(i, j) = -a(i, j);
  return out;
}

inline RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row mismatch");
  RatMatrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

/// Rows [first, first + count) as their own matrix.
inline RatMatrix row_block(const RatMatrix& m, int first, int count) {
  if (first < 0 || count < 0 || first + count > m.rows())
    throw std::invalid_argument("row_block: range out of bounds");
  RatMatrix out(count, m.cols());
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(first + i, j);
  return out;
}

/// Matrix of f (x) g under the tensor_index convention:
/// kron(a, b)[i * rb + j, p * cb + q] = a[i, p] * b[j, q].
inline RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int p = 0; p < a.cols(); ++p) {
      const Rational& f = a(i, p);
      if (is_zero(f)) continue;
      for (int j = 0; j < b.rows(); ++j)
        for (int q = 0; q < b.cols(); ++q) {
          const Rational& g = b(j, q);
          if (is_zero(g)) continue;
          out(i * b.rows() + j, p * b.cols() + q) = f * g;
        }
    }
  return out;
}

namespace detail {

/// Gauss-Jordan elimination over Q. Every row operation is mirrored onto
/// *mirror when given (used for solving and inverse extraction). Returns the
/// pivot columns in increasing order. The reduced form is the unique rref,
/// independent of pivot search order.
inline std::vector<int> rref_in_place(RatMatrix& a, RatMatrix* mirror) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < a.cols() && lead < a.rows(); ++col) {
    int pivot_row = -1;
    for (int i = lead; i < a.rows(); ++i)
      if (!is_zero(a(i, col))) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    a.swap_rows(pivot_row, lead);
    if (mirror) mirror->swap_rows(pivot_row, lead);
    if (a(lead, col) != 1) {
      const Rational scale = a(lead, col);
      // Entries left of col in row `lead` are already zero.
      for (int j = col; j < a.cols(); ++j)
        if (!is_zero(a(lead, j))) a(lead, j) /= scale;
      if (mirror)
        for (int j = 0; j < mirror->cols(); ++j)
          if (!is_zero((*mirror)(lead, j))) (*mirror)(lead, j) /= scale;
    }
    for (int i = 0; i < a.rows(); ++i) {
      if (i == lead) continue;
      const Rational factor = a(i, col);
      if (is_zero(factor)) continue;
      for (int j = col; j < a.cols(); ++j)
        if (!is_zero(a(lead, j))) a(i, j) -= factor * a(lead, j);
      if (mirror)
        for (int j = 0; j < mirror->cols(); ++j)
          if (!is_zero((*mirror)(lead, j))) (*mirror)(i, j) -= factor * (*mirror)(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

}  // namespace detail

struct Rref {
  RatMatrix mat;
  std::vector<int> pivot_cols;
};

/// Reduced row echelon form. Unique, hence idempotent: rref(rref(m).mat)
/// returns the same matrix and pivot set.
inline Rref rref(RatMatrix m) {
  auto pivots = detail::rref_in_place(m, nullptr);
  return {std::move(m), std::move(pivots)};
}

inline int rank(const RatMatrix& m) {
  RatMatrix copy = m;
  return static_cast<int>(detail::rref_in_place(copy, nullptr).size());
}

/// Solves a * x = b columnwise, or nullopt when some column of b lies
/// outside the column space of a. Free variables are set to zero relative
/// to the rref pivot structure, so the returned solution is deterministic
/// and witness matrices are reproducible byte for byte.
inline std::optional<RatMatrix> solve_right(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: row mismatch");
  RatMatrix red = a;
  RatMatrix rhs = b;
  const auto pivots = detail::rref_in_place(red, &rhs);
  const int rank = static_cast<int>(pivots.size());
  for (int i = rank; i < rhs.rows(); ++i)
    for (int j = 0; j < rhs.cols(); ++j)
      if (!is_zero(rhs(i, j))) return std::nullopt;
  RatMatrix x(a.cols(), b.cols());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rhs.cols(); ++j) x(pivots[i], j) = rhs(i, j);
  return x;
}

}  // namespace corel
