#include <catch2/catch_amalgamated.hpp>

#include "corel/matrix.hpp"
#include "corel/rational.hpp"
#include "corel/subspace.hpp"
#include "support.hpp"

using namespace corel;
using testsupport::Rng;

namespace {

RatMatrix from_rows(int rows, int cols, std::initializer_list<int> vals) {
  RatMatrix m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_CASE("rational literals parse strictly and canonically", "[rational]") {
  CHECK(*parse_rational("3") == Rational(3));
  CHECK(*parse_rational("4/6") == *parse_rational("2/3"));
  CHECK(*parse_rational("-7/14") == *parse_rational("-1/2"));
  CHECK(*parse_rational("+5") == Rational(5));
  CHECK(to_string(*parse_rational("2/4")) == "1/2");
  CHECK(to_string(*parse_rational("-12/8")) == "-3/2");
  CHECK(to_string(Rational(0)) == "0");

  for (const char* bad : {"", "/2", "3/", "3/0", "1/-2", "2/3/4", " 3", "3 ", "a", "1.5", "--2"})
    CHECK_FALSE(parse_rational(bad).has_value());
}

TEST_CASE("is_zero and matrix zero test", "[rational]") {
  CHECK(is_zero(Rational(0)));
  CHECK_FALSE(is_zero(*parse_rational("1/1000000")));
  RatMatrix m(2, 3);
  CHECK(m.is_zero());
  m(1, 2) = 1;
  CHECK_FALSE(m.is_zero());
}

TEST_CASE("matrix arithmetic and shape guards", "[matrix]") {
  const RatMatrix a = from_rows(2, 2, {1, 2, 3, 4});
  const RatMatrix b = from_rows(2, 2, {0, 1, 1, 0});
  CHECK(a * b == from_rows(2, 2, {2, 1, 4, 3}));
  CHECK(a + b == from_rows(2, 2, {1, 3, 4, 4}));
  CHECK(a - a == RatMatrix(2, 2));
  CHECK(-a == from_rows(2, 2, {-1, -2, -3, -4}));
  CHECK(a * RatMatrix::identity(2) == a);
  CHECK(a.transpose() == from_rows(2, 2, {1, 3, 2, 4}));
  CHECK(a.col(1) == from_rows(2, 1, {2, 4}));
  CHECK_THROWS_AS(a * RatMatrix(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(a + RatMatrix(2, 3), std::invalid_argument);
}

TEST_CASE("hcat and row_block split and join", "[matrix]") {
  const RatMatrix a = from_rows(2, 1, {1, 2});
  const RatMatrix b = from_rows(2, 2, {3, 4, 5, 6});
  const RatMatrix j = hcat(a, b);
  CHECK(j == from_rows(2, 3, {1, 3, 4, 2, 5, 6}));
  CHECK(row_block(j, 1, 1) == from_rows(1, 3, {2, 5, 6}));
  CHECK_THROWS_AS(row_block(j, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(hcat(a, RatMatrix(3, 1)), std::invalid_argument);
}

TEST_CASE("kron follows the tensor index convention", "[matrix]") {
  RatMatrix e00(2, 2), e11(2, 2);
  e00(0, 0) = 1;
  e11(1, 1) = 1;
  const RatMatrix k = kron(e00, e11);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(k(i, j) == ((i == 1 && j == 1) ? Rational(1) : Rational(0)));
  CHECK(tensor_index(1, 2, 4) == 6);

  // e_i (x) e_j maps to position i * dim_second + j
  RatMatrix u(2, 1), v(3, 1);
  u(1, 0) = 1;
  v(2, 0) = 1;
  const RatMatrix uv = kron(u, v);
  for (int t = 0; t < 6; ++t) CHECK(uv(t, 0) == (t == tensor_index(1, 2, 3) ? 1 : 0));
}

TEST_CASE("rref is the unique reduced form", "[matrix]") {
  SECTION("rank-deficient 2x2") {
    const Rref r = rref(from_rows(2, 2, {2, 4, 1, 2}));
    CHECK(r.mat == from_rows(2, 2, {1, 2, 0, 0}));
    CHECK(r.pivot_cols == std::vector<int>{0});
  }
  SECTION("3x4 with a gap column") {
    const Rref r = rref(from_rows(3, 4, {1, 2, 0, 3, 2, 4, 1, 7, 0, 0, 2, 2}));
    CHECK(r.mat == from_rows(3, 4, {1, 2, 0, 3, 0, 0, 1, 1, 0, 0, 0, 0}));
    CHECK(r.pivot_cols == std::vector<int>{0, 2});
    CHECK(rank(from_rows(3, 4, {1, 2, 0, 3, 2, 4, 1, 7, 0, 0, 2, 2})) == 2);
  }
  SECTION("fractions stay exact") {
    RatMatrix m(2, 2);
    m(0, 0) = *parse_rational("1/3");
    m(0, 1) = *parse_rational("1/7");
    m(1, 0) = *parse_rational("2/3");
    m(1, 1) = *parse_rational("5/7");
    const Rref r = rref(m);
    CHECK(r.mat == RatMatrix::identity(2));
  }
}

TEST_CASE("solve_right is deterministic and detects inconsistency", "[matrix]") {
  SECTION("free variables are pinned to zero") {
    const RatMatrix a = from_rows(1, 2, {1, 1});
    const RatMatrix b = from_rows(1, 1, {1});
    const auto x = solve_right(a, b);
    REQUIRE(x.has_value());
    CHECK(*x == from_rows(2, 1, {1, 0}));
  }
  SECTION("inconsistent system") {
    const RatMatrix a = from_rows(2, 1, {1, 0});
    const RatMatrix b = from_rows(2, 1, {0, 1});
    CHECK_FALSE(solve_right(a, b).has_value());
  }
  SECTION("zero-column solve is trivially consistent") {
    const auto x = solve_right(RatMatrix(2, 0), RatMatrix(2, 0));
    REQUIRE(x.has_value());
    CHECK(x->rows() == 0);
    CHECK(x->cols() == 0);
  }
  SECTION("solution reproduces the right-hand side") {
    Rng rng = 101;
    for (int it = 0; it < 25; ++it) {
      const RatMatrix a = testsupport::random_matrix(rng, 4, 3);
      const RatMatrix coeffs = testsupport::random_matrix(rng, 3, 2);
      const RatMatrix b = a * coeffs;
      const auto x = solve_right(a, b);
      REQUIRE(x.has_value());
      CHECK(a * *x == b);
    }
  }
}

TEST_CASE("subspaces are canonical", "[subspace]") {
  SECTION("span equality ignores the generating set") {
    RatMatrix g1(2, 2), g2(2, 2);
    g1(0, 0) = 1;
    g1(1, 1) = 1;
    g2(0, 0) = 1; g2(1, 0) = 1;
    g2(0, 1) = 1; g2(1, 1) = -1;
    CHECK(Subspace::span_of(g1) == Subspace::span_of(g2));
  }
  SECTION("membership and pivot rows") {
    const RatMatrix vecs = from_rows(3, 2, {1, 1, 2, 2, 0, 1});
    const Subspace s = Subspace::span_of(vecs);
    CHECK(s.dim() == 2);
    CHECK(s.pivot_rows() == std::vector<int>{0, 2});
    CHECK(s.basis() == from_rows(3, 2, {1, 0, 2, 0, 0, 1}));
    CHECK(s.contains(from_rows(3, 1, {2, 4, 1})));
    CHECK_FALSE(s.contains(from_rows(3, 1, {1, 0, 0})));
    CHECK_THROWS_AS(s.contains(RatMatrix(2, 1)), std::invalid_argument);
  }
  SECTION("sum and inclusion order") {
    RatMatrix e0(2, 1), e1(2, 1);
    e0(0, 0) = 1;
    e1(1, 0) = 1;
    const Subspace s0 = Subspace::span_of(e0);
    const Subspace s1 = Subspace::span_of(e1);
    const Subspace all = subspace_sum(s0, s1);
    CHECK(all.dim() == 2);
    CHECK(subspace_leq(s0, all));
    CHECK_FALSE(subspace_leq(all, s0));
    CHECK(subspace_leq(Subspace(2), s0));
  }
}

TEST_CASE("kernel and image bases", "[subspace]") {
  SECTION("frozen kernel of a 1x2 map") {
    const Subspace k = kernel_basis(from_rows(1, 2, {1, 1}));
    CHECK(k.dim() == 1);
    CHECK(k.basis() == from_rows(2, 1, {1, -1}));
  }
  SECTION("kernel vectors are annihilated") {
    Rng rng = 202;
    for (int it = 0; it < 25; ++it) {
      const RatMatrix m = testsupport::random_matrix(rng, 3, 5);
      const Subspace k = kernel_basis(m);
      for (int j = 0; j < k.dim(); ++j) CHECK((m * k.basis().col(j)).is_zero());
    }
  }
  SECTION("image contains every column") {
    const RatMatrix m = from_rows(3, 3, {1, 2, 3, 0, 0, 0, 1, 2, 3});
    const Subspace im = image_basis(m);
    CHECK(im.dim() == 1);
    for (int j = 0; j < 3; ++j) CHECK(im.contains(m.col(j)));
  }
}

TEST_CASE("randomized linear algebra laws", "[matrix][property]") {
  Rng rng = 303;
  for (int it = 0; it < 200; ++it) {
    const int rows = testsupport::uniform_int(rng, 1, 6);
    const int cols = testsupport::uniform_int(rng, 1, 6);
    const RatMatrix m = testsupport::random_matrix(rng, rows, cols);

    // rank-nullity
    CHECK(rank(m) + kernel_basis(m).dim() == cols);

    // rref idempotence, including the pivot set
    const Rref r1 = rref(m);
    const Rref r2 = rref(r1.mat);
    CHECK(r2.mat == r1.mat);
    CHECK(r2.pivot_cols == r1.pivot_cols);

    // kron multiplicativity: (a (x) b)(c (x) d) = ac (x) bd
    const int q = testsupport::uniform_int(rng, 1, 3);
    const int t = testsupport::uniform_int(rng, 1, 3);
    const int s = testsupport::uniform_int(rng, 1, 3);
    const int u = testsupport::uniform_int(rng, 1, 3);
    const RatMatrix a = testsupport::random_matrix(rng, testsupport::uniform_int(rng, 1, 3), q);
    const RatMatrix c = testsupport::random_matrix(rng, q, t);
    const RatMatrix b = testsupport::random_matrix(rng, testsupport::uniform_int(rng, 1, 3), s);
    const RatMatrix d = testsupport::random_matrix(rng, s, u);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("flip is the tensor swap", "[matrix]") {
  const RatMatrix p = flip(2, 3);
  REQUIRE(p.rows() == 6);
  REQUIRE(p.cols() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      RatMatrix v(6, 1);
      v(tensor_index(i, j, 3), 0) = 1;
      const RatMatrix w = p * v;
      for (int t = 0; t < 6; ++t) CHECK(w(t, 0) == (t == tensor_index(j, i, 2) ? 1 : 0));
    }
  CHECK(flip(3, 2) * flip(2, 3) == RatMatrix::identity(6));
  CHECK(flip(2, 3).transpose() == flip(3, 2));
  CHECK(flip(1, 4) == RatMatrix::identity(4));
}
