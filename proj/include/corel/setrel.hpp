#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "corel/coalgebra.hpp"
#include "corel/relation.hpp"

namespace corel {

/// A relation on a finite set, kept as sorted unique index pairs over a
/// fixed element order. Duplicate input pairs collapse (set semantics).
struct FinSetRelation {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> pairs;

  static FinSetRelation make(std::vector<std::string> elements,
                             std::vector<std::pair<int, int>> pairs) {
    const int n = static_cast<int>(elements.size());
    for (const auto& [a, b] : pairs)
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("FinSetRelation: pair index out of range");
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return {std::move(elements), std::move(pairs)};
  }

  int size() const { return static_cast<int>(elements.size()); }

  bool contains(int a, int b) const {
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(a, b));
  }

  friend bool operator==(const FinSetRelation& x, const FinSetRelation& y) {
    return x.elements == y.elements && x.pairs == y.pairs;
  }
};

/// The four classical properties by direct enumeration. Kept deliberately
/// naive: this is the independent oracle the linear route is checked
/// against, so it must not share any machinery with it.
struct SetClassification {
  bool reflexive = false;
  bool symmetric = false;
  bool transitive = false;
  bool antisymmetric = false;
  Verdict verdict = Verdict::Neither;
};

inline SetClassification oracle_check(const FinSetRelation& s) {
  const int n = s.size();
  SetClassification out;
  out.reflexive = true;
  for (int i = 0; i < n; ++i)
    if (!s.contains(i, i)) { out.reflexive = false; break; }
  out.symmetric = true;
  for (const auto& [a, b] : s.pairs)
    if (!s.contains(b, a)) { out.symmetric = false; break; }
  out.transitive = true;
  for (const auto& [a, b] : s.pairs) {
    for (const auto& [c, d] : s.pairs)
      if (b == c && !s.contains(a, d)) { out.transitive = false; break; }
    if (!out.transitive) break;
  }
  out.antisymmetric = true;
  for (const auto& [a, b] : s.pairs)
    if (a != b && s.contains(b, a)) { out.antisymmetric = false; break; }

  if (out.reflexive && out.symmetric && out.transitive) out.verdict = Verdict::Equivalence;
  else if (out.reflexive && out.antisymmetric && out.transitive) out.verdict = Verdict::Order;
  return out;
}

/// Smallest equivalence relation containing s, by saturating with the
/// diagonal, swaps and iterated composition until a fixpoint.
inline FinSetRelation equivalence_closure(const FinSetRelation& s) {
  const int n = s.size();
  std::set<std::pair<int, int>> acc(s.pairs.begin(), s.pairs.end());
  for (int i = 0; i < n; ++i) acc.insert({i, i});
  for (;;) {
    std::set<std::pair<int, int>> next = acc;
    for (const auto& [a, b] : acc) next.insert({b, a});
    for (const auto& [a, b] : next) {
      for (const auto& [c, d] : next)
        if (b == c) next.insert({a, d});
    }
    if (next == acc) break;
    acc.swap(next);
  }
  return FinSetRelation::make(s.elements, {acc.begin(), acc.end()});
}

/// Classes of the equivalence closure, ordered by smallest member, members
/// in element order.
inline std::vector<std::vector<int>> quotient_set(const FinSetRelation& s) {
  const FinSetRelation eq = equivalence_closure(s);
  const int n = s.size();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cls;
    for (int j = 0; j < n; ++j)
      if (eq.contains(i, j)) {
        cls.push_back(j);
        seen[j] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Linearisation of a set relation: the grouplike coalgebra on the
/// elements, R spanned by one basis vector per pair, coactions
/// x_i (x) (x_i, x_j) on the left and (x_i, x_j) (x) x_j on the right,
/// embedding (x_i, x_j) -> x_i (x) x_j. classify on the result agrees with
/// oracle_check property by property.
struct Linearisation {
  Coalgebra coalgebra;
  Relation relation;
};

inline Linearisation linearise(const FinSetRelation& s) {
  Coalgebra c = grouplike_coalgebra(s.elements);
  const int n = c.dim;
  const int m = static_cast<int>(s.pairs.size());
  RatMatrix left(n * m, m);
  RatMatrix right(m * n, m);
  RatMatrix r(n * n, m);
  for (int p = 0; p < m; ++p) {
    const auto& [i, j] = s.pairs[p];
    left(tensor_index(i, p, m), p) = 1;
    right(tensor_index(p, j, n), p) = 1;
    r(tensor_index(i, j, n), p) = 1;
  }
  Relation rel = make_relation(Bicomodule{c, m, std::move(left), std::move(right)}, std::move(r));
  return {std::move(c), std::move(rel)};
}

}  // namespace corel
