#include "hcizlab/zeros.hpp"

#include "hcizlab/bigfloat.hpp"
#include "hcizlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace hcizlab {

std::vector<double> ZeroPrediction::a() const {
  std::vector<double> out;
  for (int i = 0; i < N; ++i) out.push_back(a1 + i * spacing);
  return out;
}

SpectrumPair ZeroPrediction::spectra() const { return SpectrumPair::from_real(a(), b); }

ZeroPrediction predicted_zeros(double a1, double spacing, const std::vector<double>& b, int k_window) {
  if (!(spacing > 0)) throw UsageError("zeros", "spacing must be positive");
  if (k_window < 0) throw UsageError("zeros", "k window must be nonnegative");
  if (b.size() < 2) throw UsageError("zeros", "need at least two eigenvalues");
  for (std::size_t i = 1; i < b.size(); ++i)
    if (!(b[i] > b[i - 1])) throw UsageError("zeros", "b must be strictly increasing (repeated values have no prediction)");
  ZeroPrediction out;
  out.N = static_cast<int>(b.size());
  out.a1 = a1;
  out.spacing = spacing;
  out.b = b;
  out.k_window = k_window;
  std::vector<PredictedZero> all;
  for (int i = 1; i <= out.N; ++i)
    for (int j = i + 1; j <= out.N; ++j)
      for (int k = -k_window; k <= k_window; ++k) {
        if (k == 0) continue;
        const double gap = b[static_cast<std::size_t>(j - 1)] - b[static_cast<std::size_t>(i - 1)];
        all.push_back({i, j, k, 2 * k * std::numbers::pi / (out.N * spacing * gap)});
      }
  // Stable sort keeps the first generator of each point ahead of duplicates.
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.im < y.im; });
  for (const auto& zero : all) {
    if (!out.zeros.empty() && std::abs(zero.im - out.zeros.back().im) <= 1e-12 * std::abs(zero.im)) continue;
    out.zeros.push_back(zero);
  }
  return out;
}

double verify_zero(Complex z, const SpectrumPair& spec, int digits) {
  if (z == Complex(0.0)) throw UsageError("zeros", "z = 0 is excluded: the determinantal formula has a pole there");
  if (!spec.simple()) throw DomainError("zeros", "spectra must be simple");
  const int N = spec.N();
  PrecisionScope scope(digits);
  const BigComplex t = BigComplex(z) * BigComplex(Real(-N));
  DenseMatrix<BigComplex> m(N, N);
  Real scale(1);
  for (int i = 0; i < N; ++i) {
    Real row_max(0);
    for (int j = 0; j < N; ++j) {
      m(i, j) = exp(t * BigComplex(spec.a()[static_cast<std::size_t>(i)]) * BigComplex(spec.b()[static_cast<std::size_t>(j)]));
      row_max = std::max(row_max, abs(m(i, j)));
    }
    scale *= row_max;
  }
  return (abs(determinant(std::move(m))) / scale).convert_to<double>();
}

UniformZeroBound smallest_zero_bound_uniform(double M, const std::vector<double>& b) {
  if (!(M > 0)) throw UsageError("zeros", "M must be positive");
  if (b.size() < 2) throw UsageError("zeros", "need at least two eigenvalues");
  const auto [lo, hi] = std::minmax_element(b.begin(), b.end());
  if (*lo < -M || *hi > M) throw UsageError("zeros", "b must lie in [-M, M]");
  if (!(*hi > *lo)) throw UsageError("zeros", "b must not be scalar");
  UniformZeroBound out;
  // N h = 2M for the uniform classical locations, so N drops out.
  out.smallest = std::numbers::pi / (M * (*hi - *lo));
  out.bound = std::numbers::pi / (2 * M * M);
  out.holds = out.smallest >= out.bound;
  out.beyond_critical = out.bound > 2.0 / 27.0 / (M * M);
  return out;
}

CauchyExample cauchy_counterexample(int N, double M) {
  if (N < 2) throw UsageError("zeros", "need N >= 2");
  if (!(M > 0)) throw UsageError("zeros", "M must be positive");
  CauchyExample out;
  out.N = N;
  for (int k = 1; k <= N; ++k)
    out.b.push_back(std::tan(std::numbers::pi * (static_cast<double>(k) / (N + 1) - 0.5)));
  out.smallest = std::numbers::pi / (M * (out.b.back() - out.b.front()));
  return out;
}

ScalarCaseResult scalar_case_check(Complex omega, const std::vector<Complex>& b, const std::vector<Complex>& zs,
                                   long long samples, std::uint64_t seed) {
  const int N = static_cast<int>(b.size());
  const auto spec = SpectrumPair::from_complex(std::vector<Complex>(static_cast<std::size_t>(N), omega), b);
  Complex trace(0.0);
  for (Complex v : b) trace += v;
  ScalarCaseResult out;
  out.ok = true;
  std::uint64_t stream = 0;
  for (Complex z : zs) {
    ScalarCaseRow row;
    row.z = z;
    const Complex exponent = -z * omega * static_cast<double>(N) * trace;
    row.closed_form = std::exp(exponent);
    row.estimate = hciz_monte_carlo(z, spec, samples, substream_seed(seed, stream++));
    const double slack = 1e-12 * std::abs(row.closed_form);
    row.agrees = std::abs(row.estimate.mean.real() - row.closed_form.real()) <= 4 * row.estimate.se_re + slack &&
                 std::abs(row.estimate.mean.imag() - row.closed_form.imag()) <= 4 * row.estimate.se_im + slack;
    row.above_floor = std::abs(row.estimate.mean) >= std::exp(-std::abs(exponent)) / 2;
    out.ok = out.ok && row.agrees && row.above_floor;
    out.rows.push_back(row);
  }
  return out;
}

std::string zero_atlas_csv(const ZeroPrediction& prediction, const std::vector<double>& residuals) {
  if (!residuals.empty() && residuals.size() != prediction.zeros.size())
    throw UsageError("zeros", "one residual per zero expected");
  std::ostringstream os;
  os << "N,i,j,k,im_z,residual\n" << std::setprecision(17);
  for (std::size_t n = 0; n < prediction.zeros.size(); ++n) {
    const auto& zero = prediction.zeros[n];
    os << prediction.N << ',' << zero.i << ',' << zero.j << ',' << zero.k << ',' << zero.im << ',';
    if (!residuals.empty()) os << residuals[n];
    os << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const ZeroPrediction& prediction) {
  nlohmann::json zeros = nlohmann::json::array();
  for (const auto& z : prediction.zeros) zeros.push_back({{"i", z.i}, {"j", z.j}, {"k", z.k}, {"im", z.im}});
  return {{"N", prediction.N},         {"a1", prediction.a1},   {"spacing", prediction.spacing},
          {"b", prediction.b},         {"k_window", prediction.k_window}, {"zeros", zeros}};
}

}  // namespace hcizlab
