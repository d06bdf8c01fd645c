#pragma once

// Variable-precision MPFR reals and a minimal complex type over them.
//
// Boost's MPFR backend keeps one process-wide default precision that new
// values pick up at construction. PrecisionScope sets it for the duration of
// a computation and serializes such computations behind a recursive mutex.

#include "hcizlab/numeric.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <mutex>

namespace hcizlab {

using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  std::unique_lock<std::recursive_mutex> lock_;
  unsigned previous_;
};

/// Default decimal digits, from HCIZ_PRECISION when set.
int default_digits();

Real to_real(const Rational& q);

struct BigComplex {
  Real re;
  Real im;

  BigComplex() : re(0), im(0) {}
  BigComplex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit real embedding
  BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_complex() const { return {re.convert_to<double>(), im.convert_to<double>()}; }

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o) {
    const Real den = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }
  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator-(const BigComplex& a) { return {Real(-a.re), Real(-a.im)}; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re == b.re && a.im == b.im; }
};

inline Real norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline Real abs(const BigComplex& z) { return mp::sqrt(norm(z)); }
inline Real arg(const BigComplex& z) { return mp::atan2(z.im, z.re); }
inline BigComplex conj(const BigComplex& z) { return {z.re, Real(-z.im)}; }
inline BigComplex exp(const BigComplex& z) {
  const Real m = mp::exp(z.re);
  return {Real(m * mp::cos(z.im)), Real(m * mp::sin(z.im))};
}
/// Principal branch.
inline BigComplex log(const BigComplex& z) { return {Real(mp::log(abs(z))), arg(z)}; }
inline BigComplex to_big(const Rational& q) { return BigComplex(to_real(q)); }

/// Determinant by Gaussian elimination with partial pivoting on |entry|.
BigComplex determinant(DenseMatrix<BigComplex> m);

/// log10 of a positive real, as double even when the value is far outside
/// double range.
double log10_magnitude(const Real& x);

}  // namespace hcizlab
