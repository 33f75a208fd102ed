#pragma once

#include <string>
#include <utility>
#include <vector>

#include "corel/matrix.hpp"
#include "corel/validation.hpp"

namespace corel {

/// Finite-dimensional coalgebra over Q. The comultiplication is stored as
/// an (n*n) x n matrix under the flat convention e_i (x) e_j -> i*n + j,
/// the counit as 1 x n. Basis names exist for parsing and reporting only;
/// none of the algebra below looks at them.
struct Coalgebra {
  int dim = 0;
  std::vector<std::string> basis_names;
  RatMatrix delta;  // (dim*dim) x dim
  RatMatrix eps;    // 1 x dim
};

/// Permutation matrix of the flip V (x) W -> W (x) V, v (x) w -> w (x) v.
/// flip(1, m) and flip(m, 1) are identities.
inline RatMatrix flip(int n, int m) {
  RatMatrix p(m * n, n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) p(tensor_index(j, i, n), tensor_index(i, j, m)) = 1;
  return p;
}

/// Coalgebra with delta(e) = e (x) e and eps(e) = 1 for every basis vector.
inline Coalgebra grouplike_coalgebra(std::vector<std::string> names) {
  const int n = static_cast<int>(names.size());
  RatMatrix delta(n * n, n);
  RatMatrix eps(1, n);
  for (int i = 0; i < n; ++i) {
    delta(tensor_index(i, i, n), i) = 1;
    eps(0, i) = 1;
  }
  return {n, std::move(names), std::move(delta), std::move(eps)};
}

namespace detail {

inline std::string basis_label(const std::vector<std::string>& names, int j) {
  if (j >= 0 && j < static_cast<int>(names.size())) return names[j];
  return "#" + std::to_string(j);
}

/// Column index of the first mismatch, or -1 when equal. Both matrices are
/// checked column by column so failure details can name a basis vector.
inline int first_col_mismatch(const RatMatrix& a, const RatMatrix& b) {
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return j;
  return -1;
}

}  // namespace detail

/// Checks shapes, coassociativity and both counit laws. A shape failure
/// short-circuits the rest, since the law matrices would not even compose.
inline ValidationReport validate_coalgebra(const Coalgebra& c) {
  ValidationReport rep;
  const int n = c.dim;
  const bool shape_ok = n >= 0 && static_cast<int>(c.basis_names.size()) == n &&
                        c.delta.rows() == n * n && c.delta.cols() == n && c.eps.rows() == 1 &&
                        c.eps.cols() == n;
  rep.add("shape", shape_ok,
          shape_ok ? "" : "expected delta of shape (n*n) x n and eps of shape 1 x n");
  if (!shape_ok) return rep;

  const RatMatrix id = RatMatrix::identity(n);
  {
    // (delta (x) id) . delta = (id (x) delta) . delta
    const RatMatrix lhs = kron(c.delta, id) * c.delta;
    const RatMatrix rhs = kron(id, c.delta) * c.delta;
    const int bad = detail::first_col_mismatch(lhs, rhs);
    rep.add("coassociativity", bad < 0,
            bad < 0 ? "" : "fails on basis vector " + detail::basis_label(c.basis_names, bad));
  }
  {
    // (eps (x) id) . delta = id
    const RatMatrix lhs = kron(c.eps, id) * c.delta;
    const int bad = detail::first_col_mismatch(lhs, id);
    rep.add("counit_left", bad < 0,
            bad < 0 ? "" : "fails on basis vector " + detail::basis_label(c.basis_names, bad));
  }
  {
    // (id (x) eps) . delta = id
    const RatMatrix lhs = kron(id, c.eps) * c.delta;
    const int bad = detail::first_col_mismatch(lhs, id);
    rep.add("counit_right", bad < 0,
            bad < 0 ? "" : "fails on basis vector " + detail::basis_label(c.basis_names, bad));
  }
  return rep;
}

/// Whether flip . delta = delta.
inline bool is_cocommutative(const Coalgebra& c) {
  return flip(c.dim, c.dim) * c.delta == c.delta;
}

inline bool same_coalgebra(const Coalgebra& a, const Coalgebra& b) {
  return a.dim == b.dim && a.delta == b.delta && a.eps == b.eps;
}

}  // namespace corel
