#include "hcizlab/hciz_model.hpp"

#include "hcizlab/characters.hpp"
#include "hcizlab/error.hpp"
#include "hcizlab/genfun.hpp"
#include "hcizlab/weingarten.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

namespace hcizlab {

namespace {

constexpr double kLn10 = 2.302585092994045684;

double to_double(const Rational& q) { return q.convert_to<double>(); }

template <class T>
T from_int(long long v);
template <>
Rational from_int<Rational>(long long v) {
  return Rational(v);
}
template <>
BigComplex from_int<BigComplex>(long long v) {
  return BigComplex(Real(v));
}

BigComplex big(Complex z) { return BigComplex(z); }
Real big_real(const BigInt& v) { return Real(v.str()); }

template <class T>
bool is_zero(const T& v) {
  return v == from_int<T>(0);
}

// Exact elimination; any nonzero pivot will do.
Rational small_determinant(DenseMatrix<Rational> m) {
  const Eigen::Index n = m.rows();
  Rational det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      det = -det;
    }
    det *= m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

BigComplex small_determinant(DenseMatrix<BigComplex> m) { return determinant(std::move(m)); }

// h_0..h_k (complete) or e_0..e_k (elementary) of the variables, by adding
// one variable at a time.
template <class T>
std::vector<T> symmetric_sequence(const std::vector<T>& x, int k_max, bool elementary) {
  std::vector<T> out(static_cast<std::size_t>(k_max) + 1, from_int<T>(0));
  out[0] = from_int<T>(1);
  for (const T& v : x) {
    if (elementary) {
      for (int k = k_max; k >= 1; --k) out[static_cast<std::size_t>(k)] += v * out[static_cast<std::size_t>(k - 1)];
    } else {
      for (int k = 1; k <= k_max; ++k) out[static_cast<std::size_t>(k)] += v * out[static_cast<std::size_t>(k - 1)];
    }
  }
  return out;
}

// Jacobi-Trudi in whichever of the two forms has the smaller matrix.
template <class T>
T schur_polynomial(const Partition& lambda, const std::vector<T>& h, const std::vector<T>& e) {
  const Partition conj = lambda.conjugate();
  const bool use_e = conj.length() < lambda.length();
  const Partition& shape = use_e ? conj : lambda;
  const std::vector<T>& seq = use_e ? e : h;
  const int n = shape.length();
  if (n == 0) return from_int<T>(1);
  DenseMatrix<T> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = shape[i] - i + j;
      m(i, j) = k < 0 || k >= static_cast<int>(seq.size()) ? from_int<T>(0) : seq[static_cast<std::size_t>(k)];
    }
  return small_determinant(std::move(m));
}

Rational content_factor(const Partition& lambda, int N) {
  Rational out(1);
  for (int c : contents(lambda)) out *= Rational(N + c);
  return out;
}

// I^{(d)}(0) = (-N)^d sum over lambda of d! s_lambda(a) s_lambda(b) / prod (N + c).
template <class T>
std::vector<T> schur_derivatives(int d_max, int N, const std::vector<T>& a, const std::vector<T>& b,
                                 const std::function<T(const Rational&)>& lift) {
  const auto ha = symmetric_sequence(a, d_max, false), ea = symmetric_sequence(a, d_max, true);
  const auto hb = symmetric_sequence(b, d_max, false), eb = symmetric_sequence(b, d_max, true);
  std::vector<T> out{from_int<T>(1)};
  for (int d = 1; d <= d_max; ++d) {
    T moment = from_int<T>(0);
    for (const Partition& lambda : enumerate_partitions(d)) {
      if (lambda.length() > N) continue;
      const T sa = schur_polynomial(lambda, ha, ea);
      if (is_zero(sa)) continue;
      const T sb = schur_polynomial(lambda, hb, eb);
      moment += sa * sb * lift(Rational(factorial(d)) / content_factor(lambda, N));
    }
    out.push_back(moment * lift(Rational(ipow(BigInt(-N), d))));
  }
  return out;
}

std::vector<BigComplex> lifted(const std::vector<Complex>& xs) {
  std::vector<BigComplex> out;
  for (Complex x : xs) out.push_back(big(x));
  return out;
}

std::vector<BigComplex> lifted(const std::vector<Rational>& xs) {
  std::vector<BigComplex> out;
  for (const Rational& x : xs) out.push_back(to_big(x));
  return out;
}

template <class T>
std::vector<T> cumulants(const std::vector<T>& m, int N) {
  if (m.empty() || !(m[0] == from_int<T>(1))) throw UsageError("hciz_model", "derivative list must start with I(0) = 1");
  const int d_max = static_cast<int>(m.size()) - 1;
  std::vector<T> c(m.size(), from_int<T>(0));
  for (int d = 1; d <= d_max; ++d) {
    T acc = m[static_cast<std::size_t>(d)];
    for (int k = 1; k < d; ++k)
      acc -= from_int<T>(binomial(d - 1, k - 1).convert_to<long long>()) * c[static_cast<std::size_t>(k)] *
             m[static_cast<std::size_t>(d - k)];
    c[static_cast<std::size_t>(d)] = acc;
  }
  const T scale = from_int<T>(static_cast<long long>(N) * N);
  std::vector<T> out(m.size(), from_int<T>(0));
  for (int d = 1; d <= d_max; ++d) out[static_cast<std::size_t>(d)] = c[static_cast<std::size_t>(d)] / scale;
  return out;
}

double max_abs(const std::vector<Complex>& xs) {
  double out = 0;
  for (Complex x : xs) out = std::max(out, std::abs(x));
  return out;
}

BigComplex pow_int(BigComplex base, long long e) {
  BigComplex out(Real(1));
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

double log10_abs(const BigComplex& z) {
  const Real n = norm(z);
  if (n <= 0) return -std::numeric_limits<double>::infinity();
  return 0.5 * log10_magnitude(n);
}

std::vector<BigComplex> side(const SpectrumPair& spec, bool first) {
  if (spec.exact()) return lifted(first ? spec.a_exact() : spec.b_exact());
  return lifted(first ? spec.a() : spec.b());
}

BigComplex vandermonde(const std::vector<BigComplex>& x) {
  BigComplex out(Real(1));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) out *= x[j] - x[i];
  return out;
}

// prod_{i<N} i! det[exp(-zN a_i b_j)] / ((-zN)^{N(N-1)/2} V(a) V(b)), at the
// current precision.
BigComplex determinant_formula(Complex z, const SpectrumPair& spec) {
  const int N = spec.N();
  const auto a = side(spec, true), b = side(spec, false);
  const BigComplex t = big(z) * BigComplex(Real(-N));
  DenseMatrix<BigComplex> m(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m(i, j) = exp(t * a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]);
  BigComplex prefactor(Real(1));
  for (int i = 1; i < N; ++i) prefactor *= BigComplex(big_real(factorial(i)));
  const BigComplex denom = pow_int(t, static_cast<long long>(N) * (N - 1) / 2) * vandermonde(a) * vandermonde(b);
  return prefactor * determinant(std::move(m)) / denom;
}

// Decimal digits lost to cancellation in the determinant, estimated from the
// size of the entries against the expected size of the result.
double cancellation_digits(Complex z, const SpectrumPair& spec) {
  const int N = spec.N();
  const double ma = max_abs(spec.a()), mb = max_abs(spec.b());
  const double entry = std::abs(z) * N * ma * mb;  // log of the largest entry
  double log_det = -entry * N / kLn10;             // pessimistic |I| >= exp(-N^2 |z| ma mb)
  const auto a = lifted(spec.a()), b = lifted(spec.b());
  {
    PrecisionScope scope(30);
    log_det += log10_abs(vandermonde(a)) + log10_abs(vandermonde(b));
  }
  log_det += static_cast<double>(N) * (N - 1) / 2 * std::log10(std::abs(z) * N);
  double log_upper = entry * N / kLn10;
  for (int i = 1; i <= N; ++i) {
    log_upper += std::log10(static_cast<double>(i));
    log_det -= std::lgamma(static_cast<double>(i)) / kLn10;  // log10 (i-1)!
  }
  return std::max(0.0, log_upper - log_det);
}

}  // namespace

// ---------------------------------------------------------------- spectra --

SpectrumPair::SpectrumPair(std::vector<Complex> a, std::vector<Complex> b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || a_.size() != b_.size()) throw UsageError("hciz_model", "spectra must be nonempty and of equal length");
  auto real = [](const std::vector<Complex>& x) {
    return std::all_of(x.begin(), x.end(), [](Complex v) { return v.imag() == 0; });
  };
  auto distinct = [](const std::vector<Complex>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (x[i] == x[j]) return false;
    return true;
  };
  hermitian_a_ = real(a_);
  hermitian_b_ = real(b_);
  simple_a_ = distinct(a_);
  simple_b_ = distinct(b_);
}

SpectrumPair SpectrumPair::from_rational(std::vector<Rational> a, std::vector<Rational> b) {
  std::vector<Complex> ca, cb;
  for (const auto& v : a) ca.emplace_back(to_double(v), 0.0);
  for (const auto& v : b) cb.emplace_back(to_double(v), 0.0);
  SpectrumPair out(std::move(ca), std::move(cb));
  auto distinct = [](const std::vector<Rational>& x) {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (x[i] == x[j]) return false;
    return true;
  };
  out.simple_a_ = distinct(a);
  out.simple_b_ = distinct(b);
  out.a_exact_ = std::move(a);
  out.b_exact_ = std::move(b);
  return out;
}

SpectrumPair SpectrumPair::from_complex(std::vector<Complex> a, std::vector<Complex> b) {
  return SpectrumPair(std::move(a), std::move(b));
}

SpectrumPair SpectrumPair::from_real(const std::vector<double>& a, const std::vector<double>& b) {
  return SpectrumPair(std::vector<Complex>(a.begin(), a.end()), std::vector<Complex>(b.begin(), b.end()));
}

const std::vector<Rational>& SpectrumPair::a_exact() const {
  if (!a_exact_) throw UsageError("hciz_model", "exact spectra required");
  return *a_exact_;
}

const std::vector<Rational>& SpectrumPair::b_exact() const {
  if (!b_exact_) throw UsageError("hciz_model", "exact spectra required");
  return *b_exact_;
}

bool SpectrumPair::scalar_a() const {
  if (a_exact_) return std::all_of(a_exact_->begin(), a_exact_->end(), [&](const Rational& v) { return v == a_exact_->front(); });
  return std::all_of(a_.begin(), a_.end(), [&](Complex v) { return v == a_.front(); });
}

bool SpectrumPair::scalar_b() const {
  if (b_exact_) return std::all_of(b_exact_->begin(), b_exact_->end(), [&](const Rational& v) { return v == b_exact_->front(); });
  return std::all_of(b_.begin(), b_.end(), [&](Complex v) { return v == b_.front(); });
}

double SpectrumPair::spectral_bound() const { return std::max(max_abs(a_), max_abs(b_)); }

nlohmann::json SpectrumPair::to_json() const {
  nlohmann::json out{{"N", N()}, {"hermitian", hermitian()}, {"simple", simple()}};
  auto list = [&](const std::vector<Complex>& x, const std::optional<std::vector<Rational>>& exact) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (exact)
        arr.push_back(to_string((*exact)[i]));
      else
        arr.push_back({x[i].real(), x[i].imag()});
    }
    return arr;
  };
  out["a"] = list(a_, a_exact_);
  out["b"] = list(b_, b_exact_);
  return out;
}

bool MomentData::consistent() const {
  auto within = [&](const std::vector<Rational>& m) {
    Rational bound = M;
    for (const auto& v : m) {
      if (abs(v) > bound) return false;
      bound *= M;
    }
    return true;
  };
  return M >= 0 && within(phi) && within(psi);
}

Rational power_sum(const std::vector<Rational>& spectrum, const Partition& alpha) {
  Rational out(1);
  for (int k : alpha.parts()) {
    Rational s(0);
    for (const auto& x : spectrum) s += ipow(x, k);
    out *= s;
  }
  return out;
}

Complex power_sum(const std::vector<Complex>& spectrum, const Partition& alpha) {
  Complex out(1.0);
  for (int k : alpha.parts()) {
    Complex s(0.0);
    for (Complex x : spectrum) s += std::pow(x, k);
    out *= s;
  }
  return out;
}

// ------------------------------------------------------------ derivatives --

std::vector<Rational> partition_derivatives(int d_max, const SpectrumPair& spec, DerivativeRoute route) {
  if (d_max < 0) throw UsageError("hciz_model", "d_max must be nonnegative");
  const int N = spec.N();
  const auto& a = spec.a_exact();
  const auto& b = spec.b_exact();
  if (route == DerivativeRoute::schur) {
    if (d_max > kMaxDerivativeOrder)
      throw CapacityError("hciz_model", "derivative order limited to " + std::to_string(kMaxDerivativeOrder));
    return schur_derivatives<Rational>(d_max, N, a, b, [](const Rational& q) { return q; });
  }
  std::vector<Rational> out{Rational(1)};
  for (int d = 1; d <= d_max; ++d) {
    // weingarten_table raises CapacityError past the materializable range.
    const auto table = weingarten_table(d, N);
    const auto perms = table->index_set();
    const auto W = table->matrix();
    std::vector<Rational> pa, pb;
    for (const auto& p : perms) {
      const Partition t = cycle_type(p);
      pa.push_back(power_sum(a, t));
      pb.push_back(power_sum(b, t));
    }
    Rational moment(0);
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (pa[i] == 0) continue;
      Rational row(0);
      for (std::size_t j = 0; j < perms.size(); ++j)
        if (pb[j] != 0) row += W(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * pb[j];
      moment += pa[i] * row;
    }
    out.push_back(moment * Rational(ipow(BigInt(-N), d)));
  }
  return out;
}

std::vector<BigComplex> partition_derivatives_numeric(int d_max, const SpectrumPair& spec) {
  if (d_max < 0) throw UsageError("hciz_model", "d_max must be nonnegative");
  if (d_max > kMaxDerivativeOrder)
    throw CapacityError("hciz_model", "derivative order limited to " + std::to_string(kMaxDerivativeOrder));
  return schur_derivatives<BigComplex>(d_max, spec.N(), side(spec, true), side(spec, false), to_big);
}

std::vector<Rational> free_energy_derivatives(const std::vector<Rational>& partition_derivs, int N) {
  return cumulants(partition_derivs, N);
}

std::vector<BigComplex> free_energy_derivatives(const std::vector<BigComplex>& partition_derivs, int N) {
  return cumulants(partition_derivs, N);
}

Rational DerivativeSeries::partial_sum(int genus) const {
  if (genus < 0 || genus > g_max) throw UsageError("hciz_model", "genus outside the computed range");
  Rational out(0);
  const Rational inv = Rational(1) / Rational(static_cast<long long>(N) * N);
  Rational scale(1);
  for (int g = 0; g <= genus; ++g) {
    out += coefficients[static_cast<std::size_t>(g)] * scale;
    scale *= inv;
  }
  return out;
}

double derivative_tail_bound(int d, int N, int g_max, double M) {
  if (M == 0) return 0;
  const double log_fact = std::lgamma(d + 1.0);
  const double log_x = 2 * (log_fact - std::log(static_cast<double>(N)));
  if (log_x >= 0) return std::numeric_limits<double>::infinity();
  const double log_p = std::log(partition_count(d).convert_to<double>());
  const double log_bound = 2 * d * std::log(M) + 2 * log_p + (2 * d - 2) * log_fact + (g_max + 1) * log_x -
                           std::log1p(-std::exp(log_x));
  return std::exp(log_bound);
}

DerivativeSeries leading_derivative_series(int d, const MomentData& moments, int g_max, int N) {
  if (d < 1) throw UsageError("hciz_model", "derivative order must be at least 1");
  if (N < 1) throw UsageError("hciz_model", "dimension must be positive");
  const auto table = leading_coefficients(moments.phi, moments.psi, d, g_max);
  DerivativeSeries out;
  out.d = d;
  out.N = N;
  out.g_max = g_max;
  for (int g = 0; g <= g_max; ++g) out.coefficients.push_back(table[static_cast<std::size_t>(g)][static_cast<std::size_t>(d)]);
  out.M = to_double(moments.M);
  out.tail_bound = derivative_tail_bound(d, N, g_max, out.M);
  return out;
}

DerivativeSeries leading_derivative_series(int d, const SpectrumPair& spec, int g_max) {
  const int N = spec.N();
  MomentData moments;
  Rational bound(0);
  for (const auto* side_values : {&spec.a_exact(), &spec.b_exact()})
    for (const auto& v : *side_values) bound = std::max(bound, Rational(abs(v)));
  moments.M = bound;
  for (int k = 1; k <= d; ++k) {
    moments.phi.push_back(power_sum(spec.a_exact(), Partition({k})) / Rational(N));
    moments.psi.push_back(power_sum(spec.b_exact(), Partition({k})) / Rational(N));
  }
  return leading_derivative_series(d, moments, g_max, N);
}

// --------------------------------------------------------------- integral --

SeriesEvaluation hciz_series(Complex z, const SpectrumPair& spec, int order) {
  if (order < 0) throw UsageError("hciz_model", "series order must be nonnegative");
  const int N = spec.N();
  std::vector<BigComplex> derivs;
  if (spec.exact()) {
    for (const auto& q : partition_derivatives(order, spec)) derivs.push_back(to_big(q));
  } else {
    derivs = partition_derivatives_numeric(order, spec);
  }
  SeriesEvaluation out;
  out.order = order;
  const BigComplex zb = big(z);
  BigComplex power(Real(1));
  for (int d = 0; d <= order; ++d) {
    out.value += derivs[static_cast<std::size_t>(d)] * power / BigComplex(big_real(factorial(d)));
    power *= zb;
  }
  const double y = std::abs(z) * N * N * max_abs(spec.a()) * max_abs(spec.b());
  out.remainder = std::exp((order + 1) * std::log(y) - std::lgamma(order + 2.0) + y);
  if (y == 0) out.remainder = 0;
  return out;
}

IntegralValue hciz_determinant(Complex z, const SpectrumPair& spec, int digits) {
  if (digits < 10) throw UsageError("hciz_model", "precision must be at least 10 digits");
  const int N = spec.N();
  IntegralValue out;
  if (z == Complex(0.0)) {
    PrecisionScope scope(digits);
    out.value = BigComplex(Real(1));
    out.digits = digits;
    out.method = "exact";
    return out;
  }
  if (spec.scalar_a() || spec.scalar_b()) {
    // The kernel is constant on the group: exp(-zN c Tr(other side)).
    PrecisionScope scope(digits + 10);
    const bool a_scalar = spec.scalar_a();
    const auto scalar_side = side(spec, a_scalar);
    const auto other = side(spec, !a_scalar);
    BigComplex trace;
    for (const auto& v : other) trace += v;
    out.value = exp(big(z) * BigComplex(Real(-N)) * scalar_side.front() * trace);
    out.digits = digits + 10;
    out.method = "scalar";
    return out;
  }
  if (!spec.simple())
    throw DomainError("hciz_model", "the determinantal formula needs pairwise distinct eigenvalues on each side");

  const double ma = max_abs(spec.a()), mb = max_abs(spec.b());
  if (std::abs(z) * N * ma * mb < kSeriesThreshold) {
    const double y = std::abs(z) * N * N * ma * mb;
    const double lower = 2 - std::exp(y);  // |I - 1| <= e^y - 1
    if (lower > 0) {
      const double target = std::pow(10.0, -digits) * lower;
      for (int order = 1; order <= kMaxSeriesOrder; ++order) {
        const double rem = std::exp((order + 1) * std::log(y) - std::lgamma(order + 2.0) + y);
        if (rem > target) continue;
        PrecisionScope scope(digits + 10);
        const auto series = hciz_series(z, spec, order);
        out.value = series.value;
        out.relative_error = series.remainder / lower;
        out.digits = digits + 10;
        out.method = "series";
        return out;
      }
    }
  }

  int work = digits + static_cast<int>(std::ceil(cancellation_digits(z, spec))) + 20;
  for (int round = 0; round < 8; ++round) {
    const int boosted = work + 16 + work / 8;
    BigComplex coarse;
    {
      PrecisionScope scope(work);
      coarse = determinant_formula(z, spec);
    }
    PrecisionScope scope(boosted);
    BigComplex fine = determinant_formula(z, spec);
    const BigComplex diff = fine - BigComplex(Real(coarse.re), Real(coarse.im));
    const Real size = abs(fine);
    const double rel = size > 0 ? (abs(diff) / size).convert_to<double>() : std::numeric_limits<double>::infinity();
    if (rel <= std::pow(10.0, -digits)) {
      out.value = std::move(fine);
      out.relative_error = rel;
      out.digits = boosted;
      out.method = "determinant";
      return out;
    }
    work = boosted + work / 2;
  }
  throw NumericalError("hciz_model", "determinant did not stabilize under increasing precision");
}

Estimate hciz_monte_carlo(Complex z, const SpectrumPair& spec, long long samples, std::uint64_t seed) {
  if (samples < 1000) throw UsageError("hciz_model", "Monte Carlo needs at least 1000 samples");
  const int N = spec.N();
  const auto& a = spec.a();
  const auto& b = spec.b();
  const Complex scale = -z * static_cast<double>(N);
  return haar_average(N, samples, seed, [&](const ComplexMatrix& u) {
    Complex trace(0.0);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        trace += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] * std::norm(u(i, j));
    return std::exp(scale * trace);
  });
}

Complex free_energy(Complex z, const SpectrumPair& spec, int path_steps, int digits) {
  if (path_steps < 1) throw UsageError("hciz_model", "path needs at least one step");
  if (z == Complex(0.0)) return {0.0, 0.0};
  const double n2 = static_cast<double>(spec.N()) * spec.N();
  if (z.imag() == 0 && spec.hermitian()) {
    const IntegralValue v = hciz_determinant(z, spec, digits);
    PrecisionScope scope(v.digits);
    if (!(v.value.re > 0))
      throw NumericalError("hciz_model", "integral is not positive at a real point");
    return {mp::log(v.value.re).convert_to<double>() / n2, 0.0};
  }

  constexpr int kMaxDepth = 12;
  auto at = [&](double s) { return hciz_determinant(z * s, spec, digits).value; };
  // Phase increment of I between s0 and s1, halving the step while it is
  // too large to be unwrapped safely.
  std::function<double(double, const BigComplex&, double, const BigComplex&, int)> phase =
      [&](double s0, const BigComplex& v0, double s1, const BigComplex& v1, int depth) -> double {
    if (norm(v1) == 0) throw NumericalError("hciz_model", "zero suspected on path");
    const double step = arg(v1 / v0).convert_to<double>();
    if (std::abs(step) < std::numbers::pi / 2) return step;
    if (depth >= kMaxDepth) throw NumericalError("hciz_model", "zero suspected on path");
    const double mid = 0.5 * (s0 + s1);
    const BigComplex vm = at(mid);
    return phase(s0, v0, mid, vm, depth + 1) + phase(mid, vm, s1, v1, depth + 1);
  };
  PrecisionScope scope(digits);
  double theta = 0;
  BigComplex previous(Real(1));
  for (int k = 1; k <= path_steps; ++k) {
    const double s = static_cast<double>(k) / path_steps;
    BigComplex current = at(s);
    theta += phase(static_cast<double>(k - 1) / path_steps, previous, s, current, 0);
    previous = std::move(current);
  }
  const double log_abs = 0.5 * mp::log(norm(previous)).convert_to<double>();
  return {log_abs / n2, theta / n2};
}

// ------------------------------------------------------------- experiment --

std::vector<Rational> uniform_classical_locations(int N, const Rational& M) {
  if (N < 1) throw UsageError("hciz_model", "dimension must be positive");
  std::vector<Rational> out;
  for (int i = 1; i <= N; ++i) out.push_back(-M + Rational(2 * i) * M / Rational(N));
  return out;
}

std::string ConvergenceResult::to_csv() const {
  std::ostringstream os;
  os << "N,z_re,z_im,F_re,F_im,C0_re,C0_im,gap\n" << std::setprecision(17);
  for (const auto& r : rows)
    os << r.N << ',' << r.z.real() << ',' << r.z.imag() << ',' << r.F.real() << ',' << r.F.imag() << ','
       << r.C0.real() << ',' << r.C0.imag() << ',' << r.gap << '\n';
  return os.str();
}

nlohmann::json ConvergenceResult::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows)
    rows_json.push_back({{"N", r.N},
                         {"z", {r.z.real(), r.z.imag()}},
                         {"F", {r.F.real(), r.F.imag()}},
                         {"C0", {r.C0.real(), r.C0.imag()}},
                         {"gap", r.gap}});
  return {{"rows", rows_json}, {"slope", slope}, {"d_trunc", d_trunc}, {"digits", digits}};
}

ConvergenceResult convergence_experiment(Complex z, const std::vector<int>& Ns, const Rational& M, int d_trunc,
                                         int digits) {
  if (M <= 0) throw UsageError("hciz_model", "spectral bound M must be positive");
  ConvergenceResult out;
  out.d_trunc = d_trunc;
  out.digits = digits;
  const auto moments = uniform_moments(M, d_trunc);
  const Complex c0 = c_g_series(0, moments, moments, d_trunc).evaluate(z);
  // Sequential on purpose: every leg holds the global precision lock.
  for (int N : Ns) {
    const auto locations = uniform_classical_locations(N, M);
    const auto spec = SpectrumPair::from_rational(locations, locations);
    ConvergenceRow row;
    row.N = N;
    row.z = z;
    row.F = free_energy(z, spec, 16, digits);
    row.C0 = c0;
    row.gap = std::abs(row.F - c0);
    out.rows.push_back(row);
  }
  std::vector<double> xs, ys;
  for (const auto& r : out.rows)
    if (r.gap > 0) {
      xs.push_back(std::log(static_cast<double>(r.N)));
      ys.push_back(std::log(r.gap));
    }
  if (xs.size() < 2) {
    out.slope = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  out.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return out;
}

}  // namespace hcizlab
