#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "corel/matrix.hpp"

namespace corel {

/// A linear subspace of Q^ambient in reduced column echelon form: basis
/// columns ordered by leading row, each leading entry 1 and the only
/// nonzero entry of its row. The form is unique for a given span, so two
/// subspaces are equal exactly when their basis matrices are identical.
class Subspace {
 public:
  /// The zero subspace.
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(ambient_dim, 0) {
    if (ambient_dim < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
  }

  /// Canonicalizes the span of the given columns (ambient = rows).
  static Subspace span_of(const RatMatrix& vectors) {
    Subspace s(vectors.rows());
    Rref r = rref(vectors.transpose());
    const int d = static_cast<int>(r.pivot_cols.size());
    RatMatrix basis(vectors.rows(), d);
    for (int c = 0; c < d; ++c)
      for (int i = 0; i < vectors.rows(); ++i) basis(i, c) = r.mat(c, i);
    s.basis_ = std::move(basis);
    s.pivot_rows_ = std::move(r.pivot_cols);
    return s;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }

  /// Leading row of each basis column, strictly increasing.
  const std::vector<int>& pivot_rows() const { return pivot_rows_; }

  /// Exact membership test for an ambient x 1 column vector.
  bool contains(const RatMatrix& v) const {
    if (v.rows() != ambient_ || v.cols() != 1)
      throw std::invalid_argument("Subspace::contains: expected an ambient x 1 column");
    RatMatrix w = v;
    for (int c = 0; c < dim(); ++c) {
      const Rational coeff = w(pivot_rows_[c], 0);
      if (corel::is_zero(coeff)) continue;
      for (int i = 0; i < ambient_; ++i)
        if (!corel::is_zero(basis_(i, c))) w(i, 0) -= coeff * basis_(i, c);
    }
    return w.is_zero();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_;
  RatMatrix basis_;
  std::vector<int> pivot_rows_;
};

inline bool subspace_leq(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw std::invalid_argument("subspace_leq: ambient dimension mismatch");
  for (int c = 0; c < s.dim(); ++c)
    if (!t.contains(s.basis().col(c))) return false;
  return true;
}

inline Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  return Subspace::span_of(hcat(s.basis(), t.basis()));
}

/// Null space of m as a canonical subspace of Q^cols; dim = cols - rank.
inline Subspace kernel_basis(const RatMatrix& m) {
  Rref r = rref(m);
  const int n = m.cols();
  const int rk = static_cast<int>(r.pivot_cols.size());
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;
  RatMatrix vecs(n, n - rk);
  int c = 0;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    vecs(free, c) = 1;
    for (int i = 0; i < rk; ++i)
      if (!is_zero(r.mat(i, free))) vecs(r.pivot_cols[i], c) = -r.mat(i, free);
    ++c;
  }
  return Subspace::span_of(vecs);
}

/// Column space of m as a canonical subspace of Q^rows.
inline Subspace image_basis(const RatMatrix& m) { return Subspace::span_of(m); }

}  // namespace corel
