#include <doctest.h>

#include "sparse.hpp"
#include "test_rng.hpp"

using namespace stratih;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// Boundary matrix d1 of the triangle circle bdΔ²: vertices 0,1,2,
// edges [0,1],[0,2],[1,2] with d[a,b] = b - a.
SparseMatrix circle_d1(const FieldSpec& f) {
  SparseMatrix m(3, 3, f);
  Fq one = Fq::one(f);
  m.set(0, 0, -one); m.set(1, 0, one);   // [0,1]
  m.set(0, 1, -one); m.set(2, 1, one);   // [0,2]
  m.set(1, 2, -one); m.set(2, 2, one);   // [1,2]
  return m;
}

SparseMatrix random_matrix(testutil::Rng& rng, const FieldSpec& f, int rows, int cols) {
  SparseMatrix m(rows, cols, f);
  int fill = static_cast<int>(rng.below(rows * cols + 1));
  for (int k = 0; k < fill; ++k)
    m.set(static_cast<int>(rng.below(rows)), static_cast<int>(rng.below(cols)), rng.scalar(f));
  return m;
}

}  // namespace

TEST_CASE("rank: empty, identity, circle boundary") {
  CHECK(rank(SparseMatrix(0, 0, Q)) == 0);
  CHECK(rank(SparseMatrix::identity(3, Q)) == 3);
  // hand elimination: the three edge columns of bdΔ² have rank 2
  CHECK(rank(circle_d1(Q)) == 2);
  CHECK(rank(circle_d1(FieldSpec::mod(2))) == 2);
}

TEST_CASE("kernel: identity, zero, circle fundamental cycle") {
  CHECK(kernel_basis(SparseMatrix::identity(4, Q)).empty());
  CHECK(kernel_basis(SparseMatrix(2, 2, Q)).size() == 2);

  auto ker = kernel_basis(circle_d1(Q));
  REQUIRE(ker.size() == 1);
  // solved by hand: [0,1] + [1,2] - [0,2] is the circle cycle (up to scale)
  const Vec& v = ker[0];
  CHECK(is_zero_vec(circle_d1(Q).apply(v)));
  CHECK(v[0] * v[2] == -(v[1] * v[0]));
  CHECK(!v[0].is_zero());
  CHECK(v[0] == v[2]);
  CHECK(v[1] == -v[0]);
}

TEST_CASE("solve: identity, zero matrix, simplex boundary") {
  Vec b = {Fq::rational(3), Fq::rational(-1, 2)};
  auto x = solve(SparseMatrix::identity(2, Q), b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  CHECK(!solve(SparseMatrix(2, 2, Q), b).has_value());

  // d2 of Δ²: single column = boundary of the 2-simplex in the edge basis
  SparseMatrix d2(3, 1, Q);
  d2.set(0, 0, Fq::rational(1));    // [1,2] ... rows ordered [0,1],[0,2],[1,2]
  d2.set(1, 0, Fq::rational(-1));
  d2.set(2, 0, Fq::rational(1));
  Vec rhs = {Fq::rational(1), Fq::rational(-1), Fq::rational(1)};
  auto y = solve(d2, rhs);
  REQUIRE(y.has_value());
  CHECK((*y)[0].is_one());

  CHECK_THROWS(solve(d2, b));  // dimension mismatch
}

TEST_CASE("rank-nullity and solve round trip on 500 random matrices per field") {
  for (auto f : {FieldSpec::rationals(), FieldSpec::mod(5)}) {
    testutil::Rng rng(f.is_rational() ? 101 : 202);
    for (int t = 0; t < 500; ++t) {
      int rows = 1 + static_cast<int>(rng.below(7));
      int cols = 1 + static_cast<int>(rng.below(7));
      SparseMatrix m = random_matrix(rng, f, rows, cols);
      RowEchelon re(m);
      CHECK(re.rank() + static_cast<int>(re.kernel_basis().size()) == cols);
      for (const auto& k : re.kernel_basis()) CHECK(is_zero_vec(m.apply(k)));

      Vec x(cols, Fq::zero(f));
      for (auto& v : x) v = rng.scalar(f);
      Vec b = m.apply(x);
      auto sol = re.solve(b);
      REQUIRE(sol.has_value());
      CHECK(m.apply(*sol) == b);
    }
  }
}

TEST_CASE("column space membership and basis") {
  testutil::Rng rng(33);
  SparseMatrix m = random_matrix(rng, Q, 5, 4);
  RowEchelon re(m);
  auto piv = column_space_basis(m);
  CHECK(static_cast<int>(piv.size()) == re.rank());
  for (int c : piv) CHECK(re.in_column_space(m.column(c)));
}

TEST_CASE("transpose and multiply agree with apply") {
  testutil::Rng rng(44);
  SparseMatrix a = random_matrix(rng, Q, 4, 3);
  SparseMatrix b = random_matrix(rng, Q, 3, 5);
  SparseMatrix ab = a.multiply(b);
  Vec x(5, Fq::zero(Q));
  for (auto& v : x) v = rng.scalar(Q);
  CHECK(ab.apply(x) == a.apply(b.apply(x)));
  CHECK(a.transpose().transpose() == a);
}
