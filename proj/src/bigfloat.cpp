#include "hcizlab/bigfloat.hpp"

#include <cstdlib>
#include <limits>
#include <string>

namespace hcizlab {

namespace {
std::recursive_mutex& precision_mutex() {
  static std::recursive_mutex m;
  return m;
}
}  // namespace

PrecisionScope::PrecisionScope(int digits) : lock_(precision_mutex()), previous_(Real::default_precision()) {
  if (digits < 10) digits = 10;
  Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(previous_); }

int default_digits() {
  if (const char* env = std::getenv("HCIZ_PRECISION")) {
    try {
      const int d = std::stoi(env);
      if (d >= 10) return d;
    } catch (const std::exception&) {
    }
  }
  return 50;
}

Real to_real(const Rational& q) {
  return Real(BigInt(mp::numerator(q)).str()) / Real(BigInt(mp::denominator(q)).str());
}

BigComplex determinant(DenseMatrix<BigComplex> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw UsageError("numeric", "determinant of a non-square matrix");
  BigComplex det(Real(1));
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    Real best = norm(m(k, k));
    for (Eigen::Index i = k + 1; i < n; ++i) {
      Real cand = norm(m(i, k));
      if (cand > best) {
        best = std::move(cand);
        pivot = i;
      }
    }
    if (best == 0) return BigComplex();
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    const BigComplex inv = BigComplex(Real(1)) / m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const BigComplex factor = m(i, k) * inv;
      if (factor.re == 0 && factor.im == 0) continue;
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

double log10_magnitude(const Real& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  return mp::log10(x).convert_to<double>();
}

}  // namespace hcizlab
