#pragma once

// Exact power series for the monotone Hurwitz generating functions: the
// algebraic function s(z) with s = z (1 - 2s)^{-2}, its hypergeometric
// derivative, the multivariate system for s_1, s_2, ..., genus-specific
// series, and radius-of-convergence estimators.

#include "hcizlab/combinatorics.hpp"
#include "hcizlab/numeric.hpp"

#include <json.hpp>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace hcizlab {

/// Power series in one variable with exact coefficients of z^0..z^order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = 0);
  TruncatedSeries(std::vector<Rational> coefficients);  // order = size - 1

  static TruncatedSeries constant(const Rational& c, int order);
  static TruncatedSeries variable(int order);  // z

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  Rational& operator[](int n) { return coeffs_[static_cast<std::size_t>(n)]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Index of the first nonzero coefficient, or order() + 1 for zero.
  int valuation() const;
  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const Rational& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// 1/f; needs f(0) != 0.
  TruncatedSeries reciprocal() const;
  /// f^k for any integer k; negative k needs f(0) != 0.
  TruncatedSeries pow(int k) const;
  /// f(g(z)); needs g(0) = 0.
  TruncatedSeries compose(const TruncatedSeries& inner) const;
  TruncatedSeries derivative() const;
  /// log f with f(0) = 1.
  TruncatedSeries log() const;
  /// exp f with f(0) = 0.
  TruncatedSeries exp() const;

  std::complex<double> evaluate(std::complex<double> z) const;
  nlohmann::json to_json() const;

 private:
  std::vector<Rational> coeffs_;
};

/// s_n = 2^{n-1}/n binom(3n-2, n-1) for n = 1..n_max, s_0 = 0.
TruncatedSeries s_coefficients(int n_max);
/// The same series by fixed-point iteration of s = z (1 - 2s)^{-2}.
TruncatedSeries s_by_iteration(int n_max);
/// s - z (1 - 2s)^{-2}, truncated at the order of s.
TruncatedSeries s_functional_residual(const TruncatedSeries& s);

/// Coefficients binom(3n+1, n) 2^n of s'(z).
TruncatedSeries s_prime_coefficients(int n_max);
/// Taylor coefficients of 2F1(2/3, 4/3; 3/2; 27z/2) built from the term ratio.
TruncatedSeries hypergeometric_coefficients(int n_max);

struct SeriesValue {
  std::complex<double> value;
  double remainder_bound = 0;
  int terms = 0;
};

/// 2F1(2/3, 4/3; 3/2; 27z/2) for |27z/2| < 1, summed until the geometric
/// remainder bound falls below tolerance.
SeriesValue s_prime_hypergeometric(std::complex<double> z, double tolerance = 1e-16);
/// Partial sum of s at z with a rigorous tail bound, for |z| < 2/27.
SeriesValue s_value(std::complex<double> z, int n_max);

/// Series in z whose coefficients are polynomials in phi_1, phi_2, ...
/// A monomial phi_{k1} phi_{k2} ... is keyed by the partition (k1, k2, ...);
/// solutions of the system are graded, with z-degree equal to the weight.
class MultiSeries {
 public:
  explicit MultiSeries(int max_weight = 0) : max_weight_(max_weight) {}

  static MultiSeries phi(int k, int max_weight);
  static MultiSeries constant(const Rational& c, int max_weight);

  int max_weight() const { return max_weight_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coefficient(const Partition& monomial) const;
  /// Sum of the terms of total weight n (the z^n coefficient).
  std::map<Partition, Rational> degree(int n) const;
  /// Specializes phi_k to values[k-1] (missing values are 0).
  TruncatedSeries specialize(const std::vector<Rational>& values) const;

  MultiSeries& operator+=(const MultiSeries& o);
  MultiSeries& operator-=(const MultiSeries& o);
  MultiSeries& operator*=(const Rational& c);
  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend bool operator==(const MultiSeries& a, const MultiSeries& b) { return a.terms_ == b.terms_; }

  /// Same terms under a new budget; terms above it are dropped.
  MultiSeries with_max_weight(int max_weight) const;
  /// (1 - f)^{-m} for f without constant term.
  MultiSeries one_minus_pow(int m) const;
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

 private:
  void add(const Partition& key, const Rational& value);
  int max_weight_;
  std::map<Partition, Rational> terms_;
};

/// gamma(s_1, s_2, ...) = sum_k binom(2k, k) s_k.
MultiSeries gamma_of(const std::vector<MultiSeries>& s);

/// s_1..s_K with s_j = phi_j z^j (1 - gamma)^{-2j}, exact through z-degree
/// n_max. K = n_max suffices: s_j for j > n_max vanishes to that order.
std::vector<MultiSeries> solve_sj_system(int K, int n_max);
/// s_j - phi_j z^j (1 - gamma)^{-2j} for each j; all zero for a solution.
std::vector<MultiSeries> sj_system_residuals(const std::vector<MultiSeries>& s);

/// Coefficient of phi_k (index k-1) in eta_j = sum_k (2k+1) k^j binom(2k, k) phi_k.
std::vector<Rational> eta_coefficients(int j, int K);
/// Coefficient of phi_k in gamma(Phi) = sum_k binom(2k, k) phi_k.
std::vector<Rational> gamma_coefficients(int K);
/// Linear form evaluated at a moment prefix.
Rational apply_linear(const std::vector<Rational>& form, const std::vector<Rational>& phi);

/// H_g(z; 1, 1) = sum_d (sum_{alpha, beta} H_g(alpha, beta)) z^d / d!.
TruncatedSeries genus_series_all_ones(int g, int d_max);

/// C_g(z; Phi, Psi) = sum_d C_{g,d}(Phi, Psi) z^d / d!, with
/// C_{g,d} = sum (-1)^{d + l(alpha) + l(beta)} H_g(alpha, beta) phi_alpha psi_beta.
TruncatedSeries c_g_series(int g, const std::vector<Rational>& phi, const std::vector<Rational>& psi, int d_max);
/// The list C_{g,d} for d = 0..d_max (index 0 is 0), for every g <= g_max.
std::vector<std::vector<Rational>> leading_coefficients(const std::vector<Rational>& phi,
                                                        const std::vector<Rational>& psi, int d_max, int g_max);
/// Guaranteed disc of absolute convergence z_c / M^2.
double c_g_convergence_radius(double M);

/// Limit moments of the uniform law on [-M, M]: M^k / (k + 1) for even k, 0 for odd.
std::vector<Rational> uniform_moments(const Rational& M, int K);

inline constexpr double kCriticalPoint = 2.0 / 27.0;

enum class RadiusMethod { ratio, cauchy_hadamard, domb_sykes };

struct RadiusEstimate {
  RadiusMethod method = RadiusMethod::domb_sykes;
  double radius = 0;
  /// Extrapolated (or final) growth rate of the coefficients, 1 / radius.
  double growth = 0;
  /// Per-degree estimates of the growth rate, for trend inspection.
  std::vector<std::pair<int, double>> trend;
};

/// Needs at least 10 nonzero coefficients.
RadiusEstimate radius_estimate(const TruncatedSeries& series, RadiusMethod method);
const char* to_string(RadiusMethod method);

}  // namespace hcizlab
