#pragma once

// Haar-distributed unitary matrices: complex Ginibre matrix, Householder QR,
// and the phase fix Q diag(R_ii / |R_ii|). The stream is mt19937_64 with a
// hand-written 53-bit uniform and Box-Muller transform, so draws are
// reproducible bit for bit across standard libraries.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace hcizlab {

using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

class HaarSampler {
 public:
  HaarSampler(int N, std::uint64_t seed);

  int dimension() const { return N_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t draws() const { return counter_; }

  ComplexMatrix next();
  /// Standard complex Gaussian with E|z|^2 = 1.
  Complex gaussian();

 private:
  double uniform();  // in (0, 1)

  int N_;
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::mt19937_64 engine_;
};

/// max_ij |(U^* U - I)_ij|
double unitarity_defect(const ComplexMatrix& u);

/// Mean and componentwise standard error of a complex sample.
struct Estimate {
  Complex mean;
  double se_re = 0;
  double se_im = 0;
  long long samples = 0;
};

/// Running mean and centered second moments (Welford), merged pairwise in a
/// fixed order (Chan et al.) so that zero-variance samples give zero error.
struct Accumulator {
  double mean_re = 0, mean_im = 0, m2_re = 0, m2_im = 0;
  long long n = 0;
  void add(Complex x) {
    ++n;
    const double dr = x.real() - mean_re, di = x.imag() - mean_im;
    mean_re += dr / static_cast<double>(n);
    mean_im += di / static_cast<double>(n);
    m2_re += dr * (x.real() - mean_re);
    m2_im += di * (x.imag() - mean_im);
  }
  void merge(const Accumulator& o) {
    if (o.n == 0) return;
    if (n == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n), nt = na + nb;
    const double dr = o.mean_re - mean_re, di = o.mean_im - mean_im;
    mean_re += dr * nb / nt;
    mean_im += di * nb / nt;
    m2_re += o.m2_re + dr * dr * na * nb / nt;
    m2_im += o.m2_im + di * di * na * nb / nt;
    n += o.n;
  }
  Estimate estimate() const;
};

/// Monte Carlo average of f(U) over Haar samples. Samples are split into
/// fixed chunks with their own substreams; results do not depend on the
/// number of worker threads.
template <class F>
Estimate haar_average(int N, long long samples, std::uint64_t seed, F&& f);

}  // namespace hcizlab

#include "hcizlab/parallel.hpp"

#include <vector>

namespace hcizlab {

inline constexpr long long kHaarChunk = 2048;

template <class F>
Estimate haar_average(int N, long long samples, std::uint64_t seed, F&& f) {
  const long long chunks = (samples + kHaarChunk - 1) / kHaarChunk;
  std::vector<Accumulator> parts(static_cast<std::size_t>(chunks));
  parallel_for(static_cast<std::size_t>(chunks), [&](std::size_t c) {
    HaarSampler sampler(N, substream_seed(seed, c));
    const long long begin = static_cast<long long>(c) * kHaarChunk;
    const long long end = std::min(samples, begin + kHaarChunk);
    Accumulator acc;
    for (long long s = begin; s < end; ++s) acc.add(f(sampler.next()));
    parts[c] = acc;
  });
  Accumulator total;
  for (const auto& p : parts) total.merge(p);
  return total.estimate();
}

}  // namespace hcizlab
