// Eigen's complex Householder path trips a false positive in GCC 11.
#pragma GCC diagnostic ignored "-Wmaybe-uninitialized"

#include "hcizlab/haar.hpp"

#include <cmath>
#include <numbers>

namespace hcizlab {

HaarSampler::HaarSampler(int N, std::uint64_t seed) : N_(N), seed_(seed) {
  std::uint64_t state = seed;
  engine_.seed(splitmix64(state));
}

double HaarSampler::uniform() {
  // 53 random bits, shifted off zero.
  return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

Complex HaarSampler::gaussian() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-std::log(u1));  // |z|^2 ~ Exp(1)
  const double angle = 2 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

ComplexMatrix HaarSampler::next() {
  ComplexMatrix z(N_, N_);
  for (int j = 0; j < N_; ++j)
    for (int i = 0; i < N_; ++i) z(i, j) = gaussian();
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < N_; ++j) {
    const Complex d = r(j, j);
    const double m = std::abs(d);
    q.col(j) *= m > 0 ? d / m : Complex(1.0);
  }
  ++counter_;
  return q;
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix g = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
  return g.cwiseAbs().maxCoeff();
}

Estimate Accumulator::estimate() const {
  Estimate e;
  e.samples = n;
  if (n == 0) return e;
  e.mean = {mean_re, mean_im};
  if (n > 1) {
    const double dn = static_cast<double>(n);
    e.se_re = std::sqrt(m2_re / (dn - 1) / dn);
    e.se_im = std::sqrt(m2_im / (dn - 1) / dn);
  }
  return e;
}

}  // namespace hcizlab
