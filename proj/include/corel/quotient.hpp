#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corel/coalgebra.hpp"
#include "corel/matrix.hpp"
#include "corel/relation.hpp"
#include "corel/subspace.hpp"
#include "corel/validation.hpp"

namespace corel {

/// Checks that a subspace V of C is a coideal: eps vanishes on V and
/// delta(V) is contained in C (x) V + V (x) C.
inline ValidationReport coideal_check(const Coalgebra& c, const Subspace& v) {
  if (v.ambient_dim() != c.dim)
    throw std::invalid_argument("coideal_check: subspace must live in C");
  ValidationReport rep;
  const int n = c.dim;
  const RatMatrix& b = v.basis();
  {
    const RatMatrix ev = c.eps * b;
    int bad = -1;
    for (int j = 0; j < ev.cols() && bad < 0; ++j)
      if (!is_zero(ev(0, j))) bad = j;
    rep.add("counit_vanishes", bad < 0,
            bad < 0 ? "" : "eps is nonzero on coideal basis vector " + std::to_string(bad));
  }
  {
    const RatMatrix id_n = RatMatrix::identity(n);
    const Subspace target =
        subspace_sum(image_basis(kron(id_n, b)), image_basis(kron(b, id_n)));
    const RatMatrix dv = c.delta * b;
    int bad = -1;
    for (int j = 0; j < dv.cols() && bad < 0; ++j)
      if (!target.contains(dv.col(j))) bad = j;
    rep.add("comultiplication_containment", bad < 0,
            bad < 0 ? ""
                    : "delta image of coideal basis vector " + std::to_string(bad) +
                          " leaves C (x) V + V (x) C");
  }
  return rep;
}

/// Quotient of C by the coideal im(left_leg - right_leg) of a relation.
struct QuotientResult {
  Subspace coideal;
  Coalgebra quotient;
  RatMatrix chi;      // q x n, the canonical projection
  RatMatrix section;  // n x q, splits chi: chi * section = id
};

/// Builds C / im(left_leg - right_leg). The section picks the standard
/// basis vectors at the non-pivot rows of the coideal's echelon basis, so
/// the whole construction is canonical. The coideal property makes the
/// quotient structure independent of that choice; this is re-verified and
/// any breach (possible only for an invalid input relation) throws
/// logic_error rather than returning a wrong coalgebra.
inline QuotientResult quotient(const Coalgebra& c, const Relation& rel) {
  const int n = c.dim;
  if (rel.bicomod.over.dim != n)
    throw std::invalid_argument("quotient: relation lives over a different coalgebra");
  QuotientResult out{Subspace(n), {}, {}, {}};
  out.coideal = image_basis(rel.left_leg - rel.right_leg);

  const ValidationReport co = coideal_check(c, out.coideal);
  if (!co.valid())
    throw std::logic_error("quotient: im(left_leg - right_leg) is not a coideal (" +
                           co.first_failure() + "); the input relation is broken");

  const int k = out.coideal.dim();
  const int q = n - k;
  std::vector<bool> is_pivot(n, false);
  for (int p : out.coideal.pivot_rows()) is_pivot[p] = true;

  out.section = RatMatrix(n, q);
  std::vector<std::string> names;
  names.reserve(q);
  int col = 0;
  for (int i = 0; i < n; ++i) {
    if (is_pivot[i]) continue;
    out.section(i, col) = 1;
    ++col;
  }
  for (int j = 0; j < q; ++j) names.push_back(q == 1 ? "u" : "q" + std::to_string(j));

  // chi = last q rows of the inverse of [ coideal basis | section ].
  const RatMatrix m = hcat(out.coideal.basis(), out.section);
  auto inv = solve_right(m, RatMatrix::identity(n));
  if (!inv) throw std::logic_error("quotient: change of basis is singular");
  out.chi = row_block(*inv, k, q);

  const RatMatrix delta_q = kron(out.chi, out.chi) * c.delta * out.section;
  const RatMatrix eps_q = c.eps * out.section;
  out.quotient = Coalgebra{q, std::move(names), delta_q, eps_q};

  // chi must be a surjective coalgebra map and the quotient a coalgebra;
  // both follow from the coideal property, so a failure here is internal.
  if (kron(out.chi, out.chi) * c.delta != delta_q * out.chi ||
      eps_q * out.chi != c.eps)
    throw std::logic_error("quotient: projection is not a coalgebra map");
  if (!validate_coalgebra(out.quotient).valid())
    throw std::logic_error("quotient: quotient structure violates the coalgebra axioms");
  return out;
}

}  // namespace corel
