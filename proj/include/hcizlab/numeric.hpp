#pragma once

// Exact scalar types, small integer helpers, and dense exact linear algebra.
//
// BigInt and Rational are GMP-backed Boost.Multiprecision numbers with
// expression templates disabled, so they compose with Eigen's dense
// containers through <boost/multiprecision/eigen.hpp>.

#include "hcizlab/error.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcizlab {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Rising factorial x(x+1)...(x+k-1). For k < 0 this is 1/((x+k)(x+k+1)...(x-1)),
/// which makes x^(k) * (x+k)^(-k) = 1 hold for every integer k.
Rational rising_factorial(const Rational& x, int k);

/// Integer power with exponent >= 0.
template <class Scalar>
Scalar ipow(Scalar base, int exponent) {
  Scalar result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

/// Exact integer quotient; throws if the division leaves a remainder.
BigInt divexact(const BigInt& a, const BigInt& b);

/// Converts a rational known to be integral; throws otherwise.
BigInt to_integer(const Rational& q, const char* what);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Dense univariate polynomial with coefficients in an integral domain.
/// Coefficients are stored lowest degree first with no trailing zeros.
template <class Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Coeff constant) {  // NOLINT: implicit on purpose, scalars embed.
    if (constant != 0) coeffs_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(int degree, Coeff c = Coeff(1)) {
    std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, Coeff(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  Coeff coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Coeff(0);
  }

  template <class X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Exact division; the divisor's leading coefficient must divide every
  /// intermediate leading coefficient and the remainder must vanish.
  friend Polynomial divexact(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("numeric", "polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw DomainError("numeric", "inexact polynomial division");
    std::vector<Coeff> rem = a.coeffs_;
    std::vector<Coeff> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Coeff(0));
    const Coeff& lead = b.coeffs_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      Coeff& top = rem[static_cast<std::size_t>(k + b.degree())];
      if (top == 0) continue;
      Coeff q = exact_quotient(top, lead);
      for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs_[j];
      quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const auto& r : rem)
      if (r != 0) throw DomainError("numeric", "inexact polynomial division");
    return Polynomial(std::move(quot));
  }

 private:
  static Coeff exact_quotient(const Coeff& a, const Coeff& b) {
    if constexpr (std::is_same_v<Coeff, BigInt>) {
      return divexact(a, b);
    } else {
      return a / b;
    }
  }
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;

/// Determinant by fraction-free (Bareiss) elimination. Scalar must be an
/// integral domain with an exact `divexact(Scalar, Scalar)`.
template <class Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw UsageError("numeric", "determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == Scalar(0)) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = divexact(m(k, k) * m(i, j) - m(i, k) * m(k, j), previous);
      }
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Exact inverse of an integer matrix via fraction-free Gauss-Jordan
/// elimination on [M | I]. Throws DomainError when M is singular.
DenseMatrix<Rational> exact_inverse(const DenseMatrix<BigInt>& m);

DenseMatrix<Rational> to_rational(const DenseMatrix<BigInt>& m);

}  // namespace hcizlab

namespace Eigen {
template <class Coeff>
struct NumTraits<hcizlab::Polynomial<Coeff>> : GenericNumTraits<hcizlab::Polynomial<Coeff>> {
  using Real = hcizlab::Polynomial<Coeff>;
  using NonInteger = hcizlab::Polynomial<Coeff>;
  using Nested = hcizlab::Polynomial<Coeff>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
};
}  // namespace Eigen
