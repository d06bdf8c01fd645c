#pragma once

// The HCIZ integral I_N(z; A, B) = E[exp(-zN Tr(A U B U^*))] over Haar U and
// its free energy F_N = N^{-2} log I_N: exact Taylor data at the origin,
// genus expansions of the derivatives, the determinantal closed form in
// multiprecision, Monte Carlo, and the large-N convergence experiment.

#include "hcizlab/bigfloat.hpp"
#include "hcizlab/combinatorics.hpp"
#include "hcizlab/haar.hpp"
#include "hcizlab/numeric.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcizlab {

/// Eigenvalues of the two normal matrices A and B. Exact rational copies are
/// kept when the spectra were given that way; all exact computations need them.
class SpectrumPair {
 public:
  static SpectrumPair from_rational(std::vector<Rational> a, std::vector<Rational> b);
  static SpectrumPair from_complex(std::vector<Complex> a, std::vector<Complex> b);
  static SpectrumPair from_real(const std::vector<double>& a, const std::vector<double>& b);

  int N() const { return static_cast<int>(a_.size()); }
  const std::vector<Complex>& a() const { return a_; }
  const std::vector<Complex>& b() const { return b_; }
  bool exact() const { return a_exact_.has_value(); }
  const std::vector<Rational>& a_exact() const;
  const std::vector<Rational>& b_exact() const;

  bool hermitian_a() const { return hermitian_a_; }
  bool hermitian_b() const { return hermitian_b_; }
  bool hermitian() const { return hermitian_a_ && hermitian_b_; }
  /// Pairwise distinct eigenvalues on both sides.
  bool simple() const { return simple_a_ && simple_b_; }
  /// A (or B) is a multiple of the identity.
  bool scalar_a() const;
  bool scalar_b() const;
  /// max |eigenvalue| over both matrices.
  double spectral_bound() const;

  nlohmann::json to_json() const;

 private:
  SpectrumPair(std::vector<Complex> a, std::vector<Complex> b);
  std::vector<Complex> a_, b_;
  std::optional<std::vector<Rational>> a_exact_, b_exact_;
  bool hermitian_a_ = false, hermitian_b_ = false, simple_a_ = false, simple_b_ = false;
};

/// Limit moment data for an (M, h)-regular sequence of spectra.
struct MomentData {
  Rational M;
  int h = 0;
  std::vector<Rational> phi;
  std::vector<Rational> psi;
  /// |phi_k| <= M^k and |psi_k| <= M^k for every supplied k.
  bool consistent() const;
};

/// prod_i sum_j x_j^{alpha_i}
Rational power_sum(const std::vector<Rational>& spectrum, const Partition& alpha);
Complex power_sum(const std::vector<Complex>& spectrum, const Partition& alpha);

enum class DerivativeRoute {
  /// sum over lambda of d! s_lambda(a) s_lambda(b) / prod (N + c); any d.
  schur,
  /// sum over the Weingarten index set of W(rho, sigma) p_rho(a) p_sigma(b).
  weingarten,
};

/// Largest order served by the Schur route.
inline constexpr int kMaxDerivativeOrder = 24;

/// I_N^{(d)}(0) for d = 0..d_max (index 0 holds 1). Needs exact spectra.
std::vector<Rational> partition_derivatives(int d_max, const SpectrumPair& spec,
                                            DerivativeRoute route = DerivativeRoute::schur);
/// Same in multiprecision from the floating spectra, at the current precision.
std::vector<BigComplex> partition_derivatives_numeric(int d_max, const SpectrumPair& spec);

/// F_N^{(d)}(0) for d = 0..size-1 from I_N^{(d)}(0) (index 0 must be 1).
std::vector<Rational> free_energy_derivatives(const std::vector<Rational>& partition_derivs, int N);
std::vector<BigComplex> free_energy_derivatives(const std::vector<BigComplex>& partition_derivs, int N);

/// Genus coefficients C_{g,d} for g = 0..g_max with the tail bound for
/// dimension N.
struct DerivativeSeries {
  int d = 0;
  int N = 0;
  int g_max = 0;
  std::vector<Rational> coefficients;
  /// Bound on sum_{g > g_max} |C_{g,d}| / N^{2g}; infinite when d! >= N.
  double tail_bound = 0;
  double M = 0;

  /// sum_{g <= genus} C_{g,d} / N^{2g}
  Rational partial_sum(int genus) const;
  Rational partial_sum() const { return partial_sum(g_max); }
};

/// M^{2d} p(d)^2 (d!)^{2d-2} x^{g_max+1} / (1 - x) with x = (d!/N)^2.
double derivative_tail_bound(int d, int N, int g_max, double M);

/// Coefficients from the normalized traces N^{-1} Tr A^k, N^{-1} Tr B^k.
DerivativeSeries leading_derivative_series(int d, const SpectrumPair& spec, int g_max);
/// Coefficients from limit moments; the tail bound uses dimension N.
DerivativeSeries leading_derivative_series(int d, const MomentData& moments, int g_max, int N);

struct IntegralValue {
  BigComplex value;
  /// Estimated relative error of value.
  double relative_error = 0;
  /// Working precision actually used, in decimal digits.
  int digits = 0;
  /// "exact", "scalar", "series" or "determinant".
  std::string method;

  Complex to_complex() const { return value.to_complex(); }
};

/// Below this value of |z| N max|a| max|b| the Maclaurin series is used.
inline constexpr double kSeriesThreshold = 1e-2;
/// Orders beyond this send the near-origin case back to the determinant.
inline constexpr int kMaxSeriesOrder = 16;

/// I_N(z) from the determinantal formula with adaptive precision, accurate to
/// about `digits` significant digits. Needs simple spectra unless one side is
/// scalar.
IntegralValue hciz_determinant(Complex z, const SpectrumPair& spec, int digits = default_digits());

/// Maclaurin partial sum through order `order` plus a rigorous remainder bound
/// (returned as relative_error times |value|, stored in `remainder`).
struct SeriesEvaluation {
  BigComplex value;
  double remainder = 0;
  int order = 0;
};
SeriesEvaluation hciz_series(Complex z, const SpectrumPair& spec, int order);

Estimate hciz_monte_carlo(Complex z, const SpectrumPair& spec, long long samples, std::uint64_t seed);

/// F_N(z) along the straight path from 0, branch fixed by F_N(0) = 0.
Complex free_energy(Complex z, const SpectrumPair& spec, int path_steps = 16, int digits = default_digits());

/// a_i = -M + 2 M i / N, i = 1..N.
std::vector<Rational> uniform_classical_locations(int N, const Rational& M);

struct ConvergenceRow {
  int N = 0;
  Complex z;
  Complex F;
  Complex C0;
  double gap = 0;
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  /// Least-squares slope of log gap against log N (NaN with fewer than two
  /// positive gaps).
  double slope = 0;
  int d_trunc = 0;
  int digits = 0;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

/// Gap between F_N(z) for uniform[-M, M] classical locations on both sides
/// and the degree-d_trunc truncation of the genus-zero series.
ConvergenceResult convergence_experiment(Complex z, const std::vector<int>& Ns, const Rational& M, int d_trunc,
                                         int digits = default_digits());

}  // namespace hcizlab
