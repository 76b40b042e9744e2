#include <doctest.h>

#include "field.hpp"
#include "test_rng.hpp"

using namespace stratih;

TEST_CASE("rational canonical form") {
  Fq a = Fq::rational(2, -4);
  CHECK(a.str() == "-1/2");
  CHECK(Fq::rational(0, 7).str() == "0");
  CHECK(Fq::rational(6, 3).str() == "2");
  CHECK(Fq::parse(FieldSpec::rationals(), "-10/15").str() == "-2/3");
}

TEST_CASE("rational arithmetic is exact") {
  Fq a = Fq::rational(1, 3), b = Fq::rational(2, 5);
  CHECK((a + b).str() == "11/15");
  CHECK((a * b).str() == "2/15");
  CHECK((a / b).str() == "5/6");
  CHECK((a - a).is_zero());
  // no silent overflow: numbers grow as needed
  Fq big = Fq::rational(1);
  for (int i = 0; i < 40; ++i) big *= Fq::rational(1000000);
  CHECK(big.str() == "1" + std::string(240, '0'));
  CHECK((big / big).is_one());
}

TEST_CASE("F_p arithmetic matches integers mod p") {
  testutil::Rng rng(7);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 65537ull}) {
    auto f = FieldSpec::mod(p);
    for (int t = 0; t < 200; ++t) {
      long x = rng.range(-500, 500), y = rng.range(-500, 500);
      auto fx = Fq::from_int(f, x), fy = Fq::from_int(f, y);
      CHECK(fx + fy == Fq::from_int(f, x + y));
      CHECK(fx - fy == Fq::from_int(f, x - y));
      CHECK(fx * fy == Fq::from_int(f, x * y));
      if (!fy.is_zero()) CHECK((fx / fy) * fy == fx);
    }
  }
}

TEST_CASE("field axioms on random samples") {
  testutil::Rng rng(11);
  for (auto f : {FieldSpec::rationals(), FieldSpec::mod(5)}) {
    for (int t = 0; t < 100; ++t) {
      Fq a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("field spec parsing and validation") {
  CHECK(FieldSpec::parse("q").is_rational());
  CHECK(FieldSpec::parse("p:13").prime == 13);
  CHECK(FieldSpec::parse("2").prime == 2);
  CHECK_THROWS(FieldSpec::parse("p:4"));
  CHECK_THROWS(FieldSpec::parse("nonsense"));
  CHECK_THROWS(FieldSpec::mod(1));
}

TEST_CASE("mixed-field arithmetic is rejected") {
  Fq a = Fq::rational(1), b = Fq::residue(5, 1);
  CHECK_THROWS(a + b);
}
