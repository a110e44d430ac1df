#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpa/coeff.hpp"

using namespace dpa;

TEST_CASE("rational arithmetic basics") {
  Coeff a(0, BigRat(1, 2)), b(0, BigRat(1, 3));
  CHECK((a + b).rat() == BigRat(5, 6));
  CHECK((a * b).rat() == BigRat(1, 6));
  CHECK((a - a).is_zero());
  CHECK((a / b).rat() == BigRat(3, 2));
  CHECK(a.str() == "1/2");
  CHECK(Coeff(0, BigRat(7)).str() == "7");
}

TEST_CASE("prime field arithmetic") {
  Coeff a(3, 2), b(3, 2);
  CHECK((a + b).rat() == 1);
  CHECK((a * b).rat() == 1);
  CHECK(a.inv().rat() == 2);
  CHECK((-a).rat() == 1);
  CHECK(a.str() == "2 mod 3");
  CHECK(Coeff(5, BigRat(1, 2)).rat() == 3); // 1/2 = 3 mod 5
  CHECK_THROWS_AS(Coeff(3, 1) + Coeff(5, 1), domain_error);
  CHECK_THROWS_AS(Coeff(3, 1) + Coeff(0, 1), domain_error);
}

TEST_CASE("field axioms on samples") {
  for (int p : {0, 2, 3, 5}) {
    std::vector<Coeff> xs;
    for (int v = -3; v <= 3; ++v) xs.push_back(Coeff(p, v));
    for (auto &x : xs)
      for (auto &y : xs)
        for (auto &z : xs) {
          CHECK((x + y) * z == x * z + y * z);
          CHECK((x * y) * z == x * (y * z));
        }
    for (auto &x : xs)
      if (!x.is_zero()) CHECK((x * x.inv()).is_one());
  }
}

TEST_CASE("multinomial values") {
  CHECK(multinomial(0, 2, {1, 1}).rat() == 2);
  CHECK(multinomial(3, 3, {1, 1, 1}).is_zero()); // 6 mod 3
  CHECK(multinomial(5, 4, {2, 2}).rat() == 1);   // 6 mod 5
  CHECK_THROWS_AS(multinomial(0, 3, {1, 1}), domain_error);
}

TEST_CASE("multinomial mod p agrees with rational reduction") {
  for (int p : {2, 3, 5})
    for (long long j = 0; j <= 8; ++j)
      for (int m = 1; m <= 3; ++m)
        for (auto &q : compositions_of(j, m)) {
          Coeff over_q = multinomial(0, j, q);
          Coeff red(p, over_q.rat());
          CHECK(red == multinomial(p, j, q));
        }
}

TEST_CASE("divided coefficients") {
  CHECK(divided_coefficient(0, {1, 1, 1}).is_one());
  CHECK(divided_coefficient(2, {1, 1, 1}).is_one());
  CHECK(divided_coefficient(3, {2, 2}).is_one()); // 1/4 = 1 mod 3
  CHECK(divided_coefficient(0, {3, 2}).rat() == BigRat(1, 12));
  CHECK_THROWS_WITH_AS(divided_coefficient(3, {3}).is_zero(),
                       doctest::Contains("non-invertible factorial"), domain_error);
}

TEST_CASE("vandermonde identity") {
  CHECK(vandermonde_check(1, 1, 2));
  CHECK(vandermonde_check(2, 1, 2));
  CHECK(vandermonde_check(3, 3, 4));
  for (long long j = 0; j <= 8; ++j)
    for (long long k = 0; j + k <= 8; ++k)
      for (int m = 1; m <= 4; ++m) CHECK(vandermonde_check(j, k, m));
}
