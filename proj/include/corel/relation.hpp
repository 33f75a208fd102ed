#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "corel/bicomodule.hpp"
#include "corel/coalgebra.hpp"
#include "corel/matrix.hpp"
#include "corel/subspace.hpp"
#include "corel/validation.hpp"

namespace corel {

/// A linear relation on C: a bicomodule R together with a bicolinear map
/// r : R -> C (x) C, stored as an (n*n) x m matrix. The two legs and the
/// counit contraction kappa are derived once at construction:
///   left_leg  = (id (x) eps) . r     (n x m)
///   right_leg = (eps (x) id) . r     (n x m)
///   kappa     = (eps (x) eps) . r    (1 x m)
struct Relation {
  Bicomodule bicomod;
  RatMatrix r;
  RatMatrix left_leg;
  RatMatrix right_leg;
  RatMatrix kappa;
};

inline Relation make_relation(Bicomodule b, RatMatrix r) {
  const int n = b.over.dim;
  if (r.rows() != n * n || r.cols() != b.dim)
    throw std::invalid_argument("make_relation: r must be (n*n) x dim R");
  const RatMatrix id_n = RatMatrix::identity(n);
  RatMatrix left_leg = kron(id_n, b.over.eps) * r;
  RatMatrix right_leg = kron(b.over.eps, id_n) * r;
  RatMatrix kappa = kron(b.over.eps, b.over.eps) * r;
  return {std::move(b), std::move(r), std::move(left_leg), std::move(right_leg),
          std::move(kappa)};
}

/// The diagonal relation: R = C as a bicomodule over itself, r = delta.
/// Its legs are both the identity by the counit laws.
inline Relation diagonal_relation(const Coalgebra& c) {
  return make_relation(regular_bicomodule(c), c.delta);
}

/// Rebuilds an embedding from its counit contraction:
///   r = (id (x) kappa (x) id) . (left (x) id) . right.
/// Applied to kappa of an existing relation this reproduces r exactly.
inline Relation relation_from_kappa(const Bicomodule& b, const RatMatrix& kappa) {
  const int n = b.over.dim;
  const int m = b.dim;
  if (kappa.rows() != 1 || kappa.cols() != m)
    throw std::invalid_argument("relation_from_kappa: kappa must be 1 x dim R");
  const RatMatrix id_n = RatMatrix::identity(n);
  const RatMatrix r =
      kron(id_n, kron(kappa, id_n)) * kron(b.left, id_n) * b.right;
  return make_relation(b, r);
}

/// Validates the bicomodule axioms plus the relation-specific identities:
/// left/right bicolinearity of r and the kappa reconstruction law. Each
/// failed identity is reported separately.
inline ValidationReport validate_relation(const Relation& rel) {
  ValidationReport rep;
  rep.absorb("bicomodule.", validate_bicomodule(rel.bicomod));
  const Bicomodule& b = rel.bicomod;
  const int n = b.over.dim;
  const int m = b.dim;
  const bool shape_ok = rel.r.rows() == n * n && rel.r.cols() == m;
  rep.add("embedding_shape", shape_ok, shape_ok ? "" : "expected r of shape (n*n) x m");
  if (!rep.valid()) return rep;

  const RatMatrix id_n = RatMatrix::identity(n);
  // (delta (x) id) . r = (id (x) r) . left
  rep.add("left_bicolinearity", kron(b.over.delta, id_n) * rel.r == kron(id_n, rel.r) * b.left);
  // (id (x) delta) . r = (r (x) id) . right
  rep.add("right_bicolinearity", kron(id_n, b.over.delta) * rel.r == kron(rel.r, id_n) * b.right);
  // r = (id (x) kappa (x) id) . (left (x) id) . right
  const RatMatrix rebuilt =
      kron(id_n, kron(rel.kappa, id_n)) * kron(b.left, id_n) * b.right;
  rep.add("kappa_reconstruction", rebuilt == rel.r);
  return rep;
}

/// Result of a solvability check. When the defining equation has a solution
/// the witness matrix is the deterministic solve_right solution; otherwise
/// violating_index / violating_vector pin down the first offending column
/// (what it indexes depends on the check, see each function).
struct WitnessCheck {
  std::optional<RatMatrix> witness;
  std::string failure;
  std::optional<int> violating_index;
  std::optional<RatMatrix> violating_vector;

  bool holds() const { return witness.has_value(); }
};

namespace detail {

inline WitnessCheck leave_image_failure(const Relation& rel, const RatMatrix& target,
                                        const std::string& what) {
  WitnessCheck out;
  const Subspace im = image_basis(rel.r);
  for (int j = 0; j < target.cols(); ++j) {
    if (!im.contains(target.col(j))) {
      out.violating_index = j;
      out.violating_vector = target.col(j);
      out.failure = what + " " + std::to_string(j) + " lies outside im r";
      return out;
    }
  }
  out.failure = what + ": no solution";  // unreachable for honest callers
  return out;
}

}  // namespace detail

/// Reflexivity: delta factors through r. The witness delta_w : C -> R
/// satisfies r . delta_w = delta; on failure the violating column is the
/// basis vector of C whose comultiplication misses im r.
inline WitnessCheck check_reflexive(const Relation& rel) {
  auto w = solve_right(rel.r, rel.bicomod.over.delta);
  if (w) return {std::move(w), "", std::nullopt, std::nullopt};
  return detail::leave_image_failure(rel, rel.bicomod.over.delta,
                                     "comultiplication of basis vector");
}

/// Symmetry: flip . r factors through r. The witness tau : R -> R satisfies
/// r . tau = flip . r; on failure the violating column is the basis vector
/// of R whose flipped embedding misses im r.
inline WitnessCheck check_symmetric(const Relation& rel) {
  const int n = rel.bicomod.over.dim;
  const RatMatrix flipped = flip(n, n) * rel.r;
  auto w = solve_right(rel.r, flipped);
  if (w) return {std::move(w), "", std::nullopt, std::nullopt};
  return detail::leave_image_failure(rel, flipped, "flipped embedding of R basis vector");
}

namespace detail {

inline WitnessCheck check_transitive_with(const Relation& rel, const CotensorSpace& ct) {
  const RatMatrix target = cotensor_restriction(rel.left_leg, rel.right_leg, ct);
  auto w = solve_right(rel.r, target);
  if (w) return {std::move(w), "", std::nullopt, std::nullopt};
  return leave_image_failure(rel, target, "left_leg (x) right_leg image of cotensor basis vector");
}

}  // namespace detail

/// Transitivity: the restriction of left_leg (x) right_leg to R box R
/// factors through r. The witness pi : R box R -> R satisfies
/// r . pi = (left_leg (x) right_leg) . inclusion.
inline WitnessCheck check_transitive(const Relation& rel) {
  return detail::check_transitive_with(rel, cotensor(rel.bicomod, rel.bicomod));
}

/// Antisymmetry data. The pair space K is the universal source of pairs of
/// maps f, g : T -> R with r . f = flip . r . g: concretely the kernel of
/// [ r | -flip . r ] inside R + R, with p1/p2 the two projections of its
/// basis. Antisymmetry holds iff both legs equalize p1 and p2, which makes
/// the check necessary and sufficient (any f, g factor through K).
struct AntisymCheck {
  bool holds = false;
  Subspace pair_space;      // subspace of R + R, ambient 2m
  RatMatrix p1;             // m x dim K
  RatMatrix p2;             // m x dim K
  std::optional<RatMatrix> violating_pair;  // 2m x 1 column of K
  std::string failure;

  AntisymCheck() : pair_space(0) {}
};

inline AntisymCheck check_antisymmetric(const Relation& rel) {
  const int n = rel.bicomod.over.dim;
  const int m = rel.bicomod.dim;
  AntisymCheck out;
  out.pair_space = kernel_basis(hcat(rel.r, -(flip(n, n) * rel.r)));
  const RatMatrix& kb = out.pair_space.basis();
  out.p1 = row_block(kb, 0, m);
  out.p2 = row_block(kb, m, m);
  const RatMatrix l1 = rel.left_leg * out.p1;
  const RatMatrix l2 = rel.left_leg * out.p2;
  const RatMatrix r1 = rel.right_leg * out.p1;
  const RatMatrix r2 = rel.right_leg * out.p2;
  for (int j = 0; j < kb.cols(); ++j) {
    bool bad = false;
    for (int i = 0; i < n && !bad; ++i)
      bad = l1(i, j) != l2(i, j) || r1(i, j) != r2(i, j);
    if (bad) {
      out.violating_pair = kb.col(j);
      out.failure = "legs disagree on pair space basis vector " + std::to_string(j);
      return out;
    }
  }
  out.holds = true;
  return out;
}

enum class Verdict { Equivalence, Order, Neither };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equivalence: return "Equivalence";
    case Verdict::Order: return "Order";
    default: return "Neither";
  }
}

/// Full classification: the four properties with witnesses, the verdict,
/// injectivity of r, and structural facts about the witnesses themselves
/// (each witness is a bicomodule map; tau squares to the identity on a
/// symmetric relation). A relation that is both reflexive-symmetric-
/// transitive and reflexive-antisymmetric-transitive reports Equivalence.
struct Classification {
  WitnessCheck reflexive;
  WitnessCheck symmetric;
  WitnessCheck transitive;
  AntisymCheck antisymmetric;
  Verdict verdict = Verdict::Neither;
  bool injective = false;
  std::optional<bool> delta_colinear;
  std::optional<bool> tau_colinear;
  std::optional<bool> tau_involution;
  std::optional<bool> pi_colinear;
};

namespace detail {

/// Whether f : S -> T is a map of bicomodules.
inline bool is_bicolinear_map(const Bicomodule& s, const Bicomodule& t, const RatMatrix& f) {
  const int n = s.over.dim;
  const RatMatrix id_n = RatMatrix::identity(n);
  return t.left * f == kron(id_n, f) * s.left && t.right * f == kron(f, id_n) * s.right;
}

}  // namespace detail

inline Classification classify(const Relation& rel) {
  Classification out;
  const Bicomodule& b = rel.bicomod;
  out.reflexive = check_reflexive(rel);
  out.symmetric = check_symmetric(rel);
  const CotensorSpace ct = cotensor(b, b);
  out.transitive = detail::check_transitive_with(rel, ct);
  out.antisymmetric = check_antisymmetric(rel);

  const bool rf = out.reflexive.holds();
  const bool sy = out.symmetric.holds();
  const bool tr = out.transitive.holds();
  const bool as = out.antisymmetric.holds;
  if (rf && sy && tr) out.verdict = Verdict::Equivalence;
  else if (rf && as && tr) out.verdict = Verdict::Order;
  else out.verdict = Verdict::Neither;

  out.injective = rank(rel.r) == b.dim;

  if (out.reflexive.holds())
    out.delta_colinear = detail::is_bicolinear_map(regular_bicomodule(b.over), b,
                                                   *out.reflexive.witness);
  if (out.symmetric.holds()) {
    out.tau_colinear = detail::is_bicolinear_map(b, b, *out.symmetric.witness);
    out.tau_involution =
        *out.symmetric.witness * *out.symmetric.witness == RatMatrix::identity(b.dim);
  }
  if (out.transitive.holds())
    out.pi_colinear = detail::is_bicolinear_map(cotensor_bicomodule(b, b, ct), b,
                                                *out.transitive.witness);
  return out;
}

}  // namespace corel
