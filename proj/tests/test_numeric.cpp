#include "doctest.h"
#include "hcizlab/numeric.hpp"

using namespace hcizlab;

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  // Pascal's rule as an independent oracle.
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("rising factorial with negative order is the reciprocal product") {
  CHECK(rising_factorial(Rational(3), -2) == Rational(1, 2));
  CHECK(rising_factorial(Rational(5), -2) == Rational(1, 12));
  CHECK(rising_factorial(Rational(7), 0) == 1);
  CHECK(rising_factorial(Rational(4), 3) == 120);
  for (int k = -4; k <= 4; ++k) {
    const Rational x(11, 3);
    CHECK(rising_factorial(x, k) * rising_factorial(x + k, -k) == 1);
  }
  CHECK_THROWS_AS(rising_factorial(Rational(1), -2), DomainError);
}

TEST_CASE("polynomial arithmetic and exact division") {
  const IntPolynomial a(std::vector<BigInt>{1, 2, 1});  // (1+q)^2
  const IntPolynomial b(std::vector<BigInt>{1, 1});
  CHECK(divexact(a, b) == b);
  CHECK((a * b).degree() == 3);
  CHECK(a.evaluate(BigInt(3)) == 16);
  CHECK_THROWS_AS(divexact(a, IntPolynomial(std::vector<BigInt>{2, 1})), DomainError);
  CHECK((a - a).is_zero());
}

TEST_CASE("Bareiss determinant matches the Leibniz expansion") {
  DenseMatrix<BigInt> m(3, 3);
  m << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  CHECK(bareiss_determinant(m) == 4);
  DenseMatrix<BigInt> swap(2, 2);
  swap << 0, 1, 1, 0;
  CHECK(bareiss_determinant(swap) == -1);
  DenseMatrix<BigInt> singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK(bareiss_determinant(singular) == 0);
}

TEST_CASE("exact inverse") {
  DenseMatrix<BigInt> m(3, 3);
  m << 0, 2, 1, 1, 1, 0, 3, 0, 5;
  const auto inv = exact_inverse(m);
  const DenseMatrix<Rational> prod = to_rational(m) * inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod(i, j) == (i == j ? 1 : 0));
  DenseMatrix<BigInt> singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK_THROWS_AS(exact_inverse(singular), DomainError);
}
