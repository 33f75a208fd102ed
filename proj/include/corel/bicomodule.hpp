#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "corel/coalgebra.hpp"
#include "corel/matrix.hpp"
#include "corel/subspace.hpp"
#include "corel/validation.hpp"

namespace corel {

/// Two-sided comodule over a coalgebra C (n = over.dim, m = dim):
///   left coaction  M -> C (x) M   as an (n*m) x m matrix,
///   right coaction M -> M (x) C   as an (m*n) x m matrix.
struct Bicomodule {
  Coalgebra over;
  int dim = 0;
  RatMatrix left;
  RatMatrix right;
};

/// C as a bicomodule over itself, both coactions given by delta.
inline Bicomodule regular_bicomodule(const Coalgebra& c) { return {c, c.dim, c.delta, c.delta}; }

/// Checks shapes and the five bicomodule axioms: left/right coassociativity,
/// left/right counit laws, and commutation of the two coactions.
inline ValidationReport validate_bicomodule(const Bicomodule& b) {
  ValidationReport rep;
  const int n = b.over.dim;
  const int m = b.dim;
  const bool shape_ok = m >= 0 && n >= 0 && b.left.rows() == n * m && b.left.cols() == m &&
                        b.right.rows() == m * n && b.right.cols() == m;
  rep.add("shape", shape_ok,
          shape_ok ? "" : "expected left of shape (n*m) x m and right of shape (m*n) x m");
  if (!shape_ok) return rep;

  const RatMatrix id_n = RatMatrix::identity(n);
  const RatMatrix id_m = RatMatrix::identity(m);
  // (delta (x) id) . left = (id (x) left) . left
  rep.add("left_coassociativity", kron(b.over.delta, id_m) * b.left == kron(id_n, b.left) * b.left);
  // (eps (x) id) . left = id
  rep.add("left_counit", kron(b.over.eps, id_m) * b.left == id_m);
  // (right (x) id) . right = (id (x) delta) . right
  rep.add("right_coassociativity",
          kron(b.right, id_n) * b.right == kron(id_m, b.over.delta) * b.right);
  // (id (x) eps) . right = id
  rep.add("right_counit", kron(id_m, b.over.eps) * b.right == id_m);
  // (id (x) right) . left = (left (x) id) . right
  rep.add("coaction_compatibility", kron(id_n, b.right) * b.left == kron(b.left, id_n) * b.right);
  return rep;
}

struct InducedSubBicomodule {
  Bicomodule bicomodule;
  RatMatrix inclusion;  // ambient basis of the subspace, (n*n) x dim
};

struct NotSubBicomodule {
  std::string side;      // "left" or "right"
  RatMatrix violating;   // subspace basis vector whose coaction image escapes
  std::string detail;
};

using InduceResult = std::variant<InducedSubBicomodule, NotSubBicomodule>;

/// Tries to corestrict the coactions of C (x) C (delta (x) id on the left,
/// id (x) delta on the right) to a subspace W. Succeeds exactly when W is a
/// sub-bicomodule; the induced coactions are unique because the inclusion
/// has full column rank, so the result does not depend on solver choices.
inline InduceResult induce_from_subspace(const Coalgebra& c, const Subspace& w) {
  const int n = c.dim;
  if (w.ambient_dim() != n * n)
    throw std::invalid_argument("induce_from_subspace: subspace must live in C (x) C");
  const RatMatrix& b = w.basis();
  const int k = w.dim();
  const RatMatrix id_n = RatMatrix::identity(n);

  const RatMatrix left_ambient = kron(c.delta, id_n) * b;
  auto left = solve_right(kron(id_n, b), left_ambient);
  if (!left) {
    const Subspace cw = image_basis(kron(id_n, b));
    for (int j = 0; j < k; ++j)
      if (!cw.contains(left_ambient.col(j)))
        return NotSubBicomodule{"left", b.col(j),
                                "(delta (x) id) image of subspace basis vector " +
                                    std::to_string(j) + " leaves C (x) W"};
    throw std::logic_error("induce_from_subspace: unsolvable yet contained on the left");
  }

  const RatMatrix right_ambient = kron(id_n, c.delta) * b;
  auto right = solve_right(kron(b, id_n), right_ambient);
  if (!right) {
    const Subspace wc = image_basis(kron(b, id_n));
    for (int j = 0; j < k; ++j)
      if (!wc.contains(right_ambient.col(j)))
        return NotSubBicomodule{"right", b.col(j),
                                "(id (x) delta) image of subspace basis vector " +
                                    std::to_string(j) + " leaves W (x) C"};
    throw std::logic_error("induce_from_subspace: unsolvable yet contained on the right");
  }

  return InducedSubBicomodule{Bicomodule{c, k, std::move(*left), std::move(*right)}, b};
}

/// Cotensor product R box S: the kernel of
///   right_R (x) id_S - id_R (x) left_S : R (x) S -> R (x) C (x) S,
/// stored as a canonical subspace of R (x) S.
struct CotensorSpace {
  int left_dim = 0;
  int right_dim = 0;
  Subspace inclusion;
};

inline CotensorSpace cotensor(const Bicomodule& r, const Bicomodule& s) {
  if (!same_coalgebra(r.over, s.over))
    throw std::invalid_argument("cotensor: bicomodules live over different coalgebras");
  const RatMatrix d = kron(r.right, RatMatrix::identity(s.dim)) -
                      kron(RatMatrix::identity(r.dim), s.left);
  return {r.dim, s.dim, kernel_basis(d)};
}

/// Restriction of f (x) g to the cotensor subspace: an
/// (f.rows * g.rows) x dim(R box S) matrix acting on cotensor coordinates.
inline RatMatrix cotensor_restriction(const RatMatrix& f, const RatMatrix& g,
                                      const CotensorSpace& ct) {
  if (f.cols() != ct.left_dim || g.cols() != ct.right_dim)
    throw std::invalid_argument("cotensor_restriction: factor shape mismatch");
  return kron(f, g) * ct.inclusion.basis();
}

/// The cotensor product as a bicomodule: left coaction corestricted from
/// left_R (x) id_S, right from id_R (x) right_S. Both corestrictions exist
/// because the cotensor is a sub-bicomodule of R (x) S; failure to solve
/// means a broken input and is reported as a logic error.
inline Bicomodule cotensor_bicomodule(const Bicomodule& r, const Bicomodule& s,
                                      const CotensorSpace& ct) {
  const int n = r.over.dim;
  const RatMatrix& incl = ct.inclusion.basis();
  const int d = ct.inclusion.dim();

  const RatMatrix left_ambient = kron(r.left, RatMatrix::identity(s.dim)) * incl;
  auto left = solve_right(kron(RatMatrix::identity(n), incl), left_ambient);
  if (!left) throw std::logic_error("cotensor_bicomodule: left coaction does not corestrict");

  const RatMatrix right_ambient = kron(RatMatrix::identity(r.dim), s.right) * incl;
  auto right = solve_right(kron(incl, RatMatrix::identity(n)), right_ambient);
  if (!right) throw std::logic_error("cotensor_bicomodule: right coaction does not corestrict");

  return {r.over, d, std::move(*left), std::move(*right)};
}

}  // namespace corel
