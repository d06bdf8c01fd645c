#include "hcizlab/numeric.hpp"

#include <sstream>

namespace hcizlab {

BigInt factorial(int n) {
  if (n < 0) throw DomainError("numeric", "factorial of a negative integer");
  BigInt f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt b(1);
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

Rational rising_factorial(const Rational& x, int k) {
  Rational r(1);
  if (k >= 0) {
    for (int i = 0; i < k; ++i) r *= x + i;
    return r;
  }
  for (int i = k; i < 0; ++i) {
    Rational factor = x + i;
    if (factor == 0) throw DomainError("numeric", "rising factorial with negative order hits a pole");
    r /= factor;
  }
  return r;
}

BigInt divexact(const BigInt& a, const BigInt& b) {
  if (b == 0) throw DomainError("numeric", "division by zero");
  BigInt q, r;
  mp::divide_qr(a, b, q, r);
  if (r != 0) throw DomainError("numeric", "inexact integer division");
  return q;
}

BigInt to_integer(const Rational& q, const char* what) {
  if (mp::denominator(q) != 1) {
    throw DomainError("numeric", std::string("expected an integer for ") + what + ", got " + to_string(q));
  }
  return mp::numerator(q);
}

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const BigInt& z) { return z.str(); }

DenseMatrix<Rational> to_rational(const DenseMatrix<BigInt>& m) {
  DenseMatrix<Rational> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

DenseMatrix<Rational> exact_inverse(const DenseMatrix<BigInt>& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw UsageError("numeric", "inverse of a non-square matrix");
  DenseMatrix<BigInt> aug(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      aug(i, j) = m(i, j);
      aug(i, n + j) = i == j ? 1 : 0;
    }
  }
  // Fraction-free Gauss-Jordan: after step k every entry is a k x k minor,
  // so the division by the previous pivot is exact.
  BigInt previous(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (aug(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && aug(swap, k) == 0) ++swap;
      if (swap == n) throw DomainError("numeric", "singular matrix");
      aug.row(k).swap(aug.row(swap));
    }
    const BigInt pivot = aug(k, k);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt factor = aug(i, k);
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        aug(i, j) = divexact(pivot * aug(i, j) - factor * aug(k, j), previous);
      }
      aug(i, k) = 0;
    }
    previous = pivot;
  }
  // The left block is now previous * I (previous = +/- det).
  DenseMatrix<Rational> inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = Rational(aug(i, n + j), aug(i, i));
  return inv;
}

}  // namespace hcizlab
