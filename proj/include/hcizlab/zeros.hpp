#pragma once

// Zeros of the HCIZ integral when A has an arithmetic-progression spectrum
// a_i = a_1 + (i - 1) h: the determinant factors into a Vandermonde in
// q_j = exp(-zNh b_j), which vanishes exactly when two q_j coincide.

#include "hcizlab/haar.hpp"
#include "hcizlab/hciz_model.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace hcizlab {

struct PredictedZero {
  int i = 0;  // 1-based pair i < j generating the zero
  int j = 0;
  int k = 0;
  /// Imaginary part; the zero itself is purely imaginary.
  double im = 0;
  Complex z() const { return {0.0, im}; }
};

struct ZeroPrediction {
  int N = 0;
  double a1 = 0;
  double spacing = 0;
  std::vector<double> b;
  int k_window = 0;
  /// Sorted by imaginary part. When several (i, j, k) give the same point the
  /// one found first (lexicographically smallest) is kept.
  std::vector<PredictedZero> zeros;

  /// A's spectrum a_i = a1 + (i - 1) * spacing.
  std::vector<double> a() const;
  SpectrumPair spectra() const;
};

inline constexpr int kDefaultZeroWindow = 3;

/// z = 2 k pi i / (N h (b_j - b_i)) for i < j and 0 < |k| <= k_window.
ZeroPrediction predicted_zeros(double a1, double spacing, const std::vector<double>& b, int k_window = kDefaultZeroWindow);

/// |det[exp(-zN a_i b_j)]| divided by the product of the row sup-norms, in
/// `digits`-digit arithmetic. Rejects z = 0, where the formula has a pole.
double verify_zero(Complex z, const SpectrumPair& spec, int digits = 50);

struct UniformZeroBound {
  double smallest = 0;  // pi / (M (b_N - b_1))
  double bound = 0;     // pi / (2 M^2)
  bool holds = false;   // smallest >= bound
  /// bound > 2/27 M^{-2}: the zero-free disc covers the genus-zero disc.
  bool beyond_critical = false;
};

/// A = classical locations of uniform[-M, M] (spacing 2M/N), B = b in [-M, M].
UniformZeroBound smallest_zero_bound_uniform(double M, const std::vector<double>& b);

struct CauchyExample {
  int N = 0;
  /// b_k = tan(pi (k/(N+1) - 1/2)), k = 1..N
  std::vector<double> b;
  double smallest = 0;  // pi / (M (b_N - b_1))
};

CauchyExample cauchy_counterexample(int N, double M = 1.0);

struct ScalarCaseRow {
  Complex z;
  Complex closed_form;
  Estimate estimate;
  bool agrees = false;
  bool above_floor = false;
};

struct ScalarCaseResult {
  std::vector<ScalarCaseRow> rows;
  bool ok = false;
};

/// A = omega I: the integral is exp(-z omega N Tr B). Checks Monte Carlo
/// against the closed form (4 standard errors, plus 1e-12 relative for
/// rounding since the kernel is constant) and |I| >= exp(-|z omega N Tr B|)/2.
ScalarCaseResult scalar_case_check(Complex omega, const std::vector<Complex>& b, const std::vector<Complex>& zs,
                                   long long samples = 2000, std::uint64_t seed = 1);

/// Columns N, i, j, k, im_z, residual.
std::string zero_atlas_csv(const ZeroPrediction& prediction, const std::vector<double>& residuals);
nlohmann::json to_json(const ZeroPrediction& prediction);

}  // namespace hcizlab
