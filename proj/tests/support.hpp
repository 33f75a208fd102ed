#pragma once

// Shared builders and deterministic random generators for the test suites.
// Everything here is seed-driven: the same seed always yields the same
// structures, so failures reproduce exactly.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "corel/corel.hpp"

namespace testsupport {

using corel::Bicomodule;
using corel::Coalgebra;
using corel::RatMatrix;
using corel::Rational;
using corel::Relation;
using corel::Subspace;

using Rng = std::uint64_t;

// xorshift-style mixer: identical sequences on every platform, unlike the
// <random> distributions whose output is implementation-defined.
inline std::uint64_t next_u64(Rng& state) {
  state ^= state << 13;
  state ^= state >> 7;
  state ^= state << 17;
  return state;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(next_u64(rng) % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bool chance(Rng& rng, int percent) { return uniform_int(rng, 0, 99) < percent; }

inline Rational random_rational(Rng& rng) {
  Rational q(uniform_int(rng, -3, 3), uniform_int(rng, 1, 3));
  q.canonicalize();
  return q;
}

/// Random matrix with roughly half the entries zero.
inline RatMatrix random_matrix(Rng& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (chance(rng, 50)) m(i, j) = random_rational(rng);
  return m;
}

/// Column vector e_i (x) e_j in Q^(n*n).
inline RatMatrix tensor_unit(int n, int i, int j) {
  RatMatrix v(n * n, 1);
  v(corel::tensor_index(i, j, n), 0) = 1;
  return v;
}

/// The three-dimensional coalgebra with basis x, y, z and
/// delta x = x*x, delta y = x*y + y*z, delta z = z*z; eps = (1, 0, 1).
inline Coalgebra order3_coalgebra() {
  RatMatrix delta(9, 3);
  delta(corel::tensor_index(0, 0, 3), 0) = 1;
  delta(corel::tensor_index(0, 1, 3), 1) = 1;
  delta(corel::tensor_index(1, 2, 3), 1) = 1;
  delta(corel::tensor_index(2, 2, 3), 2) = 1;
  RatMatrix eps(1, 3);
  eps(0, 0) = 1;
  eps(0, 2) = 1;
  return {3, {"x", "y", "z"}, std::move(delta), std::move(eps)};
}

/// The five-dimensional order relation on order3_coalgebra:
/// span of x*x, z*z, x*y + y*z, y*x, z*x.
inline Relation order3_relation(const Coalgebra& c) {
  RatMatrix vecs(9, 5);
  const auto put = [&](int col, int i, int j, int val) {
    vecs(corel::tensor_index(i, j, 3), col) = val;
  };
  put(0, 0, 0, 1);              // x*x
  put(1, 2, 2, 1);              // z*z
  put(2, 0, 1, 1); put(2, 1, 2, 1);  // x*y + y*z
  put(3, 1, 0, 1);              // y*x
  put(4, 2, 0, 1);              // z*x
  auto induced = corel::induce_from_subspace(c, Subspace::span_of(vecs));
  auto& ok = std::get<corel::InducedSubBicomodule>(induced);
  return corel::make_relation(std::move(ok.bicomodule), std::move(ok.inclusion));
}

/// Comatrix coalgebra on k x k matrix units: delta e_ij = sum_t e_it (x) e_tj,
/// eps e_ij = [i == j]. Non-cocommutative for k >= 2.
inline Coalgebra comatrix_coalgebra(int k) {
  const int n = k * k;
  RatMatrix delta(n * n, n);
  RatMatrix eps(1, n);
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int col = i * k + j;
      names.push_back("e" + std::to_string(i) + std::to_string(j));
      for (int t = 0; t < k; ++t)
        delta(corel::tensor_index(i * k + t, t * k + j, n), col) = 1;
      if (i == j) eps(0, col) = 1;
    }
  return {n, std::move(names), std::move(delta), std::move(eps)};
}

/// Slices that decide coaction stability of a subspace W of C (x) C:
/// (delta (x) id) w lies in C (x) W iff its first-factor slices are in W,
/// and (id (x) delta) w lies in W (x) C iff its last-factor slices are.
inline std::vector<RatMatrix> coaction_slices(const Coalgebra& c, const RatMatrix& w) {
  const int n = c.dim;
  const RatMatrix id_n = RatMatrix::identity(n);
  const RatMatrix l = kron(c.delta, id_n) * w;  // index i*n^2 + t
  const RatMatrix r = kron(id_n, c.delta) * w;  // index t*n + k
  std::vector<RatMatrix> out;
  for (int i = 0; i < n; ++i) {
    RatMatrix s(n * n, 1);
    for (int t = 0; t < n * n; ++t) s(t, 0) = l(i * n * n + t, 0);
    out.push_back(std::move(s));
  }
  for (int k = 0; k < n; ++k) {
    RatMatrix s(n * n, 1);
    for (int t = 0; t < n * n; ++t) s(t, 0) = r(t * n + k, 0);
    out.push_back(std::move(s));
  }
  return out;
}

/// Smallest sub-bicomodule of C (x) C containing the seed: repeatedly adds
/// coaction slices until the dimension stabilizes.
inline Subspace bicomodule_closure(const Coalgebra& c, Subspace seed) {
  for (;;) {
    std::vector<RatMatrix> add;
    for (int j = 0; j < seed.dim(); ++j)
      for (auto& s : coaction_slices(c, seed.basis().col(j))) add.push_back(std::move(s));
    RatMatrix m(c.dim * c.dim, static_cast<int>(add.size()));
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i) m(i, j) = add[j](i, 0);
    Subspace next = corel::subspace_sum(seed, Subspace::span_of(m));
    if (next.dim() == seed.dim()) return next;
    seed = std::move(next);
  }
}

inline Subspace flip_image(const Coalgebra& c, const Subspace& w) {
  return Subspace::span_of(corel::flip(c.dim, c.dim) * w.basis());
}

struct RandomSubBicomodule {
  Subspace subspace;
  bool seeded_reflexive = false;  // the comultiplication image was forced in
  bool seeded_symmetric = false;  // the subspace was closed under the flip
};

/// Random sub-bicomodule of C (x) C. Mixes four shapes: plain coaction
/// closures of random seeds, reflexive ones (the image of delta forced in),
/// flip-invariant ones (giving symmetric relations), and both at once.
inline RandomSubBicomodule random_sub_bicomodule(Rng& rng, const Coalgebra& c) {
  const int nn = c.dim * c.dim;
  const int seeds = uniform_int(rng, 1, 2);
  RatMatrix raw(nn, seeds);
  for (int j = 0; j < seeds; ++j) {
    for (int reps = 0; reps < 2; ++reps)
      raw(uniform_int(rng, 0, nn - 1), j) = uniform_int(rng, 1, 2) * (chance(rng, 50) ? 1 : -1);
  }
  RandomSubBicomodule out{Subspace::span_of(raw), chance(rng, 50), chance(rng, 50)};
  if (out.seeded_reflexive)
    out.subspace = corel::subspace_sum(out.subspace, corel::image_basis(c.delta));
  out.subspace = bicomodule_closure(c, std::move(out.subspace));
  if (out.seeded_symmetric) {
    // alternate flip-symmetrization and coaction closure to a common fixpoint
    for (;;) {
      Subspace sym = corel::subspace_sum(out.subspace, flip_image(c, out.subspace));
      if (sym.dim() == out.subspace.dim()) break;
      out.subspace = bicomodule_closure(c, std::move(sym));
    }
  }
  return out;
}

/// Relation given by the inclusion of a random sub-bicomodule.
inline Relation random_induced_relation(Rng& rng, const Coalgebra& c,
                                        bool* seeded_reflexive = nullptr,
                                        bool* seeded_symmetric = nullptr) {
  RandomSubBicomodule w = random_sub_bicomodule(rng, c);
  if (seeded_reflexive) *seeded_reflexive = w.seeded_reflexive;
  if (seeded_symmetric) *seeded_symmetric = w.seeded_symmetric;
  auto induced = corel::induce_from_subspace(c, w.subspace);
  auto& ok = std::get<corel::InducedSubBicomodule>(induced);
  return corel::make_relation(std::move(ok.bicomodule), std::move(ok.inclusion));
}

/// Random relation on an n-element set; pair density controlled in percent.
inline corel::FinSetRelation random_set_relation(Rng& rng, int n, int density_percent) {
  std::vector<std::string> elements;
  for (int i = 0; i < n; ++i) elements.push_back("s" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (chance(rng, density_percent)) pairs.emplace_back(i, j);
  return corel::FinSetRelation::make(std::move(elements), std::move(pairs));
}

}  // namespace testsupport
