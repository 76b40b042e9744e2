#include <doctest.h>

#include "signcalc.hpp"

using namespace stratih;
using namespace stratih::signcalc;

namespace {
const FieldSpec Q = FieldSpec::rationals();
}

TEST_CASE("exterior algebra and de Rham generators are genuine DGAs") {
  auto ext = exterior_algebra(Q, {1, 3});
  CHECK(ext.cx.dim(0) == 1);
  CHECK(ext.cx.dim(1) == 1);
  CHECK(ext.cx.dim(3) == 1);
  CHECK(ext.cx.dim(4) == 1);
  CHECK(!ext.cx.has_nonzero_differential());
  // x y = -y x for odd generators
  Vec x = {Fq::rational(1)};
  Vec xy = ext.multiply(1, x, 3, x);
  Vec yx = ext.multiply(3, x, 1, x);
  CHECK(xy == scale(Fq::rational(-1), yx));

  auto dr = truncated_de_rham(Q, 3);
  CHECK(dr.cx.has_nonzero_differential());
  dr.cx.check_d_squared();
  // d(t^2) = 2 t dt
  Vec t2 = zero_vec(Q, 3);
  t2[2] = Fq::rational(1);
  Vec dt2 = dr.cx.d(0).apply(t2);
  CHECK(dt2[1] == Fq::rational(2));

  auto prod = tensor(exterior_algebra(Q, {1}), truncated_de_rham(Q, 2));
  prod.cx.check_d_squared();
  CHECK(prod.cx.dim(0) == 2);
  CHECK(prod.cx.dim(1) == 3);
  CHECK(prod.cx.dim(2) == 1);
}

TEST_CASE("transfer instance invariants hold by construction") {
  for (int n : {0, 1, 2, 3}) {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
      auto t = random_instance(seed, n, Q);
      CHECK(t.n() == n);
      t.b().check_d_squared();
      // f is invertible degree by degree
      for (int deg = t.a().cx.lo(); deg <= t.a().cx.hi(); ++deg) {
        if (t.a().cx.dim(deg) == 0) continue;
        Vec e = zero_vec(Q, t.a().cx.dim(deg));
        e[0] = Fq::rational(1);
        CHECK(t.g(deg + n, t.f(deg, e)) == e);
      }
    }
  }
}

TEST_CASE("unit image computations match the displayed formulas") {
  // for n = 1: Q(u,b) = b on the nose, Q'(u,b) = -b, Q'(b,u) = (-1)^{|b|} b
  auto t = random_instance(7, 1, Q);
  auto u = t.unit_b();
  const auto& b = t.b();
  for (int i = b.lo(); i <= b.hi(); ++i) {
    if (b.dim(i) == 0) continue;
    Vec v = zero_vec(Q, b.dim(i));
    v[0] = Fq::rational(1);
    CHECK(t.q(u.degree, u.v, i, v) == v);
    CHECK(t.qprime(u.degree, u.v, i, v) == scale(Fq::rational(-1), v));
    Vec right = t.qprime(i, v, u.degree, u.v);
    CHECK(right == (i % 2 == 0 ? v : scale(Fq::rational(-1), v)));
    CHECK(t.bullet(i, v, u.degree, u.v) == v);
    CHECK(t.bullet(u.degree, u.v, i, v) == v);
  }
}

TEST_CASE("all sign laws pass over both fields") {
  for (auto f : {FieldSpec::rationals(), FieldSpec::mod(5)}) {
    auto reports = run_sign_laws(2024, 60, {0, 1, 2, 3}, f);
    for (const auto& r : reports) {
      INFO(r.law, " witness: ", r.witness);
      CHECK(r.pass);
      CHECK(r.trials > 0);
    }
  }
}

TEST_CASE("defect report: Q' on an odd-shift exterior instance") {
  auto ext = exterior_algebra(Q, {1, 1});
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= ext.cx.hi(); ++d)
    blocks.push_back(SparseMatrix::identity(ext.cx.dim(d), Q));
  TransferInstance t(std::move(ext), 1, std::move(blocks));

  auto qp = defect_report(t, "Q'");
  CHECK(qp.chain_map);  // zero differential: chain map trivially
  CHECK(!qp.associative_exact);
  CHECK(qp.associativity_defect == "(-1)^(n+n|a|)");
  CHECK(qp.commutativity_defect == "(-1)^(|a||b|+n)");

  auto bu = defect_report(t, "bullet");
  CHECK(bu.associative_exact);
  CHECK(bu.commutativity_defect == "(-1)^((|a|-n)(|b|-n))");
  CHECK(bu.left_unit == "exact");
  CHECK(bu.right_unit == "exact");

  auto r = defect_report(t, "R");
  CHECK(r.chain_map);
  CHECK(r.associative_exact);
  CHECK(r.commutativity_defect == "(-1)^(|a||b|)");
  CHECK(r.left_unit == "exact");
  CHECK(r.right_unit == "exact");
}

TEST_CASE("bullet genuinely fails the chain-map law when n is odd and d is nonzero") {
  auto dr = truncated_de_rham(Q, 3);
  std::vector<SparseMatrix> blocks;
  for (int d = 0; d <= dr.cx.hi(); ++d)
    blocks.push_back(SparseMatrix::identity(dr.cx.dim(d), Q));
  TransferInstance t(std::move(dr), 1, std::move(blocks));
  auto bu = defect_report(t, "bullet");
  CHECK(!bu.chain_map);
  // while Q and Q' remain chain maps on the same instance
  CHECK(defect_report(t, "Q").chain_map);
  CHECK(defect_report(t, "Q'").chain_map);
  CHECK(defect_report(t, "R").chain_map);
}

TEST_CASE("for n = 0 all transfers coincide") {
  auto t = random_instance(99, 0, Q);
  const auto& b = t.b();
  for (int i = b.lo(); i <= b.hi(); ++i)
    for (int j = b.lo(); j <= b.hi(); ++j) {
      if (b.dim(i) == 0 || b.dim(j) == 0) continue;
      Vec x = zero_vec(Q, b.dim(i));
      Vec y = zero_vec(Q, b.dim(j));
      x[0] = Fq::rational(2);
      y[b.dim(j) - 1] = Fq::rational(-3);
      CHECK(t.q(i, x, j, y) == t.qprime(i, x, j, y));
      CHECK(t.q(i, x, j, y) == t.bullet(i, x, j, y));
      CHECK(t.q(i, x, j, y) == t.shifted_r(i, x, j, y));
    }
}
