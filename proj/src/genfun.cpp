#include "hcizlab/genfun.hpp"

#include "hcizlab/error.hpp"
#include "hcizlab/monotone_hurwitz.hpp"

#include <cmath>
#include <sstream>

namespace hcizlab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw UsageError("genfun", "series orders differ");
}

// log|q| as a double, valid far outside double range.
double log_abs(const Rational& q) {
  auto log_int = [](BigInt x) {
    if (x < 0) x = -x;
    const auto bits = static_cast<long>(mp::msb(x));
    if (bits < 60) return std::log(x.convert_to<double>());
    const BigInt top = x >> static_cast<unsigned>(bits - 60);
    return std::log(top.convert_to<double>()) + static_cast<double>(bits - 60) * std::log(2.0);
  };
  return log_int(BigInt(mp::numerator(q))) - log_int(BigInt(mp::denominator(q)));
}

double ratio_as_double(const Rational& num, const Rational& den) { return std::exp(log_abs(num) - log_abs(den)); }

}  // namespace

// ---------------------------------------------------------------- series

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw UsageError("genfun", "series order must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

int TruncatedSeries::valuation() const {
  for (int n = 0; n <= order(); ++n)
    if ((*this)[n] != 0) return n;
  return order() + 1;
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
  TruncatedSeries out(new_order);
  for (int n = 0; n <= std::min(order(), new_order); ++n) out[n] = (*this)[n];
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_order(*this, o);
  for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_order(a, b);
  const int n_max = a.order();
  TruncatedSeries out(n_max);
  for (int i = 0; i <= n_max; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n_max; ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  if ((*this)[0] == 0) throw DomainError("genfun", "reciprocal of a series with zero constant term");
  TruncatedSeries out(order());
  out[0] = Rational(1) / (*this)[0];
  for (int n = 1; n <= order(); ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) acc += (*this)[k] * out[n - k];
    out[n] = -acc * out[0];
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(int k) const {
  if (k < 0) return reciprocal().pow(-k);
  TruncatedSeries result = constant(Rational(1), order());
  TruncatedSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
  require_same_order(*this, inner);
  if (inner[0] != 0) throw DomainError("genfun", "composition needs an inner series without constant term");
  // Horner from the top coefficient.
  TruncatedSeries out(order());
  for (int n = order(); n >= 0; --n) {
    out = out * inner;
    out[0] += (*this)[n];
  }
  return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries out(std::max(order() - 1, 0));
  for (int n = 1; n <= order(); ++n) out[n - 1] = (*this)[n] * n;
  return out;
}

TruncatedSeries TruncatedSeries::log() const {
  if ((*this)[0] != 1) throw DomainError("genfun", "log needs constant term 1");
  // (log f)' = f' / f
  const TruncatedSeries q = derivative() * reciprocal().truncated(std::max(order() - 1, 0));
  TruncatedSeries out(order());
  for (int n = 1; n <= order(); ++n) out[n] = q[n - 1] / n;
  return out;
}

TruncatedSeries TruncatedSeries::exp() const {
  if ((*this)[0] != 0) throw DomainError("genfun", "exp needs constant term 0");
  // g = exp f satisfies n g_n = sum_k k f_k g_{n-k}.
  TruncatedSeries out(order());
  out[0] = 1;
  for (int n = 1; n <= order(); ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) acc += (*this)[k] * k * out[n - k];
    out[n] = acc / n;
  }
  return out;
}

std::complex<double> TruncatedSeries::evaluate(std::complex<double> z) const {
  std::complex<double> acc(0.0);
  for (int n = order(); n >= 0; --n) acc = acc * z + (*this)[n].convert_to<double>();
  return acc;
}

nlohmann::json TruncatedSeries::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : coeffs_)
    arr.push_back({{"numerator", to_string(BigInt(mp::numerator(c)))},
                   {"denominator", to_string(BigInt(mp::denominator(c)))}});
  return arr;
}

// ---------------------------------------------------------------- s(z)

TruncatedSeries s_coefficients(int n_max) {
  if (n_max < 1) throw UsageError("genfun", "n_max must be at least 1");
  TruncatedSeries s(n_max);
  for (int n = 1; n <= n_max; ++n)
    s[n] = Rational(ipow(BigInt(2), n - 1) * binomial(3 * n - 2, n - 1)) / Rational(n);
  return s;
}

TruncatedSeries s_by_iteration(int n_max) {
  if (n_max < 1) throw UsageError("genfun", "n_max must be at least 1");
  const TruncatedSeries z = TruncatedSeries::variable(n_max);
  const TruncatedSeries one = TruncatedSeries::constant(Rational(1), n_max);
  TruncatedSeries s(n_max);
  // Each pass fixes at least one more coefficient.
  for (int pass = 0; pass <= n_max; ++pass) {
    TruncatedSeries next = z * (one - s * Rational(2)).pow(-2);
    if (next == s) break;
    s = std::move(next);
  }
  return s;
}

TruncatedSeries s_functional_residual(const TruncatedSeries& s) {
  const int n = s.order();
  return s - TruncatedSeries::variable(n) * (TruncatedSeries::constant(Rational(1), n) - s * Rational(2)).pow(-2);
}

TruncatedSeries s_prime_coefficients(int n_max) {
  if (n_max < 0) throw UsageError("genfun", "n_max must be non-negative");
  TruncatedSeries out(n_max);
  for (int n = 0; n <= n_max; ++n) out[n] = Rational(binomial(3 * n + 1, n) * ipow(BigInt(2), n));
  return out;
}

TruncatedSeries hypergeometric_coefficients(int n_max) {
  if (n_max < 0) throw UsageError("genfun", "n_max must be non-negative");
  const Rational a(2, 3), b(4, 3), c(3, 2), x(27, 2);
  TruncatedSeries out(n_max);
  out[0] = 1;
  for (int n = 0; n < n_max; ++n) out[n + 1] = out[n] * (a + n) * (b + n) / ((c + n) * (n + 1)) * x;
  return out;
}

SeriesValue s_prime_hypergeometric(std::complex<double> z, double tolerance) {
  const std::complex<double> x = 13.5 * z;
  if (std::abs(x) >= 1) throw DomainError("genfun", "hypergeometric series needs |27z/2| < 1");
  SeriesValue out;
  std::complex<double> term(1.0), sum(0.0);
  for (int n = 0; n < 100000; ++n) {
    sum += term;
    const double factor = (2.0 / 3 + n) * (4.0 / 3 + n) / ((1.5 + n) * (n + 1));
    term *= factor * x;
    out.terms = n + 1;
    // Every later term ratio is below |x|, since the Pochhammer factor is < 1.
    out.remainder_bound = std::abs(term) / (1 - std::abs(x));
    if (out.remainder_bound < tolerance) break;
  }
  out.value = sum;
  return out;
}

SeriesValue s_value(std::complex<double> z, int n_max) {
  if (std::abs(z) >= kCriticalPoint) throw DomainError("genfun", "s(z) series needs |z| < 2/27");
  const TruncatedSeries s = s_coefficients(n_max + 1);
  SeriesValue out;
  out.value = s.truncated(n_max).evaluate(z);
  out.terms = n_max;
  // s_{n+1}/s_n increases to 27/2, so the tail is below a geometric series.
  out.remainder_bound =
      s[n_max + 1].convert_to<double>() * std::pow(std::abs(z), n_max + 1) / (1 - 13.5 * std::abs(z));
  return out;
}

// ---------------------------------------------------------------- multivariate

MultiSeries MultiSeries::phi(int k, int max_weight) {
  MultiSeries m(max_weight);
  if (k <= max_weight) m.terms_[Partition({k})] = 1;
  return m;
}

MultiSeries MultiSeries::constant(const Rational& c, int max_weight) {
  MultiSeries m(max_weight);
  if (c != 0) m.terms_[Partition()] = c;
  return m;
}

Rational MultiSeries::coefficient(const Partition& monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::map<Partition, Rational> MultiSeries::degree(int n) const {
  std::map<Partition, Rational> out;
  for (const auto& [key, value] : terms_)
    if (key.size() == n) out.emplace(key, value);
  return out;
}

TruncatedSeries MultiSeries::specialize(const std::vector<Rational>& values) const {
  TruncatedSeries out(max_weight_);
  for (const auto& [key, value] : terms_) {
    Rational term = value;
    for (int k : key.parts()) term *= k <= static_cast<int>(values.size()) ? values[static_cast<std::size_t>(k - 1)] : Rational(0);
    out[key.size()] += term;
  }
  return out;
}

MultiSeries MultiSeries::with_max_weight(int max_weight) const {
  MultiSeries out(max_weight);
  for (const auto& [key, value] : terms_) out.add(key, value);
  return out;
}

void MultiSeries::add(const Partition& key, const Rational& value) {
  if (key.size() > max_weight_ || value == 0) return;
  auto [it, inserted] = terms_.emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
  max_weight_ = std::min(max_weight_, o.max_weight_);
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->first.size() > max_weight_ ? terms_.erase(it) : std::next(it);
  for (const auto& [key, value] : o.terms_) add(key, value);
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o) {
  MultiSeries neg = o;
  neg *= Rational(-1);
  return *this += neg;
}

MultiSeries& MultiSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, value] : terms_) value *= c;
  return *this;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  MultiSeries out(std::min(a.max_weight_, b.max_weight_));
  // Group b by weight so pairs beyond the budget are never visited.
  std::vector<std::vector<std::pair<const Partition*, const Rational*>>> by_weight(
      static_cast<std::size_t>(out.max_weight_) + 1);
  for (const auto& [kb, vb] : b.terms_)
    if (kb.size() <= out.max_weight_) by_weight[static_cast<std::size_t>(kb.size())].emplace_back(&kb, &vb);
  for (const auto& [ka, va] : a.terms_)
    for (int w = 0; ka.size() + w <= out.max_weight_; ++w)
      for (const auto& [kb, vb] : by_weight[static_cast<std::size_t>(w)]) out.add(ka.join(*kb), va * *vb);
  return out;
}

MultiSeries MultiSeries::one_minus_pow(int m) const {
  if (coefficient(Partition()) != 0) throw DomainError("genfun", "(1 - f)^{-m} needs f without constant term");
  // sum_n binom(m + n - 1, n) f^n; f^n has weight >= n.
  MultiSeries result = constant(Rational(1), max_weight_);
  MultiSeries power = result;
  for (int n = 1; n <= max_weight_; ++n) {
    power = power * *this;
    if (power.is_zero()) break;
    MultiSeries term = power;
    term *= Rational(binomial(m + n - 1, n));
    result += term;
  }
  return result;
}

std::string MultiSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int n = 0; n <= max_weight_; ++n)
    for (const auto& [key, value] : degree(n)) {
      os << (first ? "" : " + ") << to_string(value);
      for (int k : key.parts()) os << "*p" << k;
      os << "*z^" << n;
      first = false;
    }
  return first ? "0" : os.str();
}

MultiSeries gamma_of(const std::vector<MultiSeries>& s) {
  if (s.empty()) throw UsageError("genfun", "gamma needs at least s_1");
  MultiSeries g(s.front().max_weight());
  for (std::size_t k = 1; k <= s.size(); ++k) {
    MultiSeries term = s[k - 1];
    term *= Rational(binomial(2 * static_cast<int>(k), static_cast<int>(k)));
    g += term;
  }
  return g;
}

std::vector<MultiSeries> solve_sj_system(int K, int n_max) {
  if (K < 1 || n_max < 1) throw UsageError("genfun", "need K >= 1 and n_max >= 1");
  // A pass with budget w settles z-degree w, given everything below it; the
  // budget grows by one per pass and a last pass at n_max confirms the fixed point.
  std::vector<MultiSeries> s;
  for (int j = 1; j <= K; ++j) s.push_back(MultiSeries::phi(j, 1));
  auto pass = [&](int budget) {
    std::vector<MultiSeries> current;
    for (const auto& sj : s) current.push_back(sj.with_max_weight(budget));
    const MultiSeries g = gamma_of(current);
    std::vector<MultiSeries> powers{MultiSeries::constant(Rational(1), budget)};
    while (static_cast<int>(powers.size()) < budget && !powers.back().is_zero()) powers.push_back(powers.back() * g);
    std::vector<MultiSeries> next;
    for (int j = 1; j <= K; ++j) {
      MultiSeries inner(budget);
      for (std::size_t n = 0; n < powers.size(); ++n) {
        MultiSeries term = powers[n];
        term *= Rational(binomial(2 * j + static_cast<int>(n) - 1, static_cast<int>(n)));
        inner += term;
      }
      next.push_back(MultiSeries::phi(j, budget) * inner);
    }
    return next;
  };
  for (int budget = 1; budget <= n_max; ++budget) s = pass(budget);
  if (pass(n_max) != s) throw NumericalError("genfun", "s_j iteration did not reach a fixed point");
  return s;
}

std::vector<MultiSeries> sj_system_residuals(const std::vector<MultiSeries>& s) {
  const MultiSeries g = gamma_of(s);
  std::vector<MultiSeries> out;
  for (std::size_t j = 1; j <= s.size(); ++j)
    out.push_back(s[j - 1] - MultiSeries::phi(static_cast<int>(j), s[j - 1].max_weight()) *
                                 g.one_minus_pow(2 * static_cast<int>(j)));
  return out;
}

std::vector<Rational> eta_coefficients(int j, int K) {
  if (j < 0 || K < 1) throw UsageError("genfun", "need j >= 0 and K >= 1");
  std::vector<Rational> out;
  for (int k = 1; k <= K; ++k) out.emplace_back((2 * k + 1) * ipow(BigInt(k), j) * binomial(2 * k, k));
  return out;
}

std::vector<Rational> gamma_coefficients(int K) {
  std::vector<Rational> out;
  for (int k = 1; k <= K; ++k) out.emplace_back(binomial(2 * k, k));
  return out;
}

Rational apply_linear(const std::vector<Rational>& form, const std::vector<Rational>& phi) {
  Rational sum(0);
  for (std::size_t k = 0; k < std::min(form.size(), phi.size()); ++k) sum += form[k] * phi[k];
  return sum;
}

// ---------------------------------------------------------------- genus series

TruncatedSeries genus_series_all_ones(int g, int d_max) {
  if (g < 0 || d_max < 1) throw UsageError("genfun", "need g >= 0 and d_max >= 1");
  const auto sums = hurwitz_sums_all_ones(d_max, g);
  TruncatedSeries out(d_max);
  for (int d = 1; d <= d_max; ++d)
    out[d] = Rational(sums[static_cast<std::size_t>(g)][static_cast<std::size_t>(d)]) / Rational(factorial(d));
  return out;
}

std::vector<std::vector<Rational>> leading_coefficients(const std::vector<Rational>& phi,
                                                        const std::vector<Rational>& psi, int d_max, int g_max) {
  // C_{g,d}(Phi, Psi) = (-1)^d S_{g,d}(-Phi, -Psi), since l(alpha) counts the
  // factors of phi_alpha.
  std::vector<Rational> neg_phi, neg_psi;
  for (int k = 0; k < d_max; ++k) {
    neg_phi.push_back(k < static_cast<int>(phi.size()) ? Rational(-phi[static_cast<std::size_t>(k)]) : Rational(0));
    neg_psi.push_back(k < static_cast<int>(psi.size()) ? Rational(-psi[static_cast<std::size_t>(k)]) : Rational(0));
  }
  auto sums = weighted_hurwitz_sums(neg_phi, neg_psi, d_max, g_max);
  for (auto& row : sums)
    for (std::size_t d = 1; d < row.size(); ++d)
      if (d % 2 == 1) row[d] = -row[d];
  return sums;
}

TruncatedSeries c_g_series(int g, const std::vector<Rational>& phi, const std::vector<Rational>& psi, int d_max) {
  if (g < 0 || d_max < 1) throw UsageError("genfun", "need g >= 0 and d_max >= 1");
  const auto coeffs = leading_coefficients(phi, psi, d_max, g);
  TruncatedSeries out(d_max);
  for (int d = 1; d <= d_max; ++d)
    out[d] = coeffs[static_cast<std::size_t>(g)][static_cast<std::size_t>(d)] / Rational(factorial(d));
  return out;
}

double c_g_convergence_radius(double M) {
  if (M <= 0) throw UsageError("genfun", "moment bound M must be positive");
  return kCriticalPoint / (M * M);
}

std::vector<Rational> uniform_moments(const Rational& M, int K) {
  std::vector<Rational> out;
  Rational power(1);
  for (int k = 1; k <= K; ++k) {
    power *= M;
    out.push_back(k % 2 == 0 ? Rational(power / (k + 1)) : Rational(0));
  }
  return out;
}

// ---------------------------------------------------------------- radius

const char* to_string(RadiusMethod method) {
  switch (method) {
    case RadiusMethod::ratio: return "ratio";
    case RadiusMethod::cauchy_hadamard: return "cauchy_hadamard";
    case RadiusMethod::domb_sykes: return "domb_sykes";
  }
  return "?";
}

RadiusEstimate radius_estimate(const TruncatedSeries& series, RadiusMethod method) {
  std::vector<int> nonzero;
  for (int n = 1; n <= series.order(); ++n)
    if (series[n] != 0) nonzero.push_back(n);
  if (nonzero.size() < 10) throw UsageError("genfun", "radius estimation needs at least 10 nonzero coefficients");

  RadiusEstimate est;
  est.method = method;
  if (method == RadiusMethod::cauchy_hadamard) {
    for (int n : nonzero) est.trend.emplace_back(n, std::exp(log_abs(series[n]) / n));
  } else {
    // Ratios a_n / a_{n-1} over consecutive nonzero pairs.
    std::vector<std::pair<int, double>> ratios;
    for (int n = 2; n <= series.order(); ++n)
      if (series[n] != 0 && series[n - 1] != 0) ratios.emplace_back(n, ratio_as_double(series[n], series[n - 1]));
    if (ratios.size() < 2) throw UsageError("genfun", "too few consecutive nonzero coefficients for ratios");
    if (method == RadiusMethod::ratio) {
      est.trend = ratios;
    } else {
      // Linear in 1/n through the last two ratios, evaluated at 1/n = 0.
      for (std::size_t i = 1; i < ratios.size(); ++i) {
        const auto [n, r] = ratios[i];
        const auto [m, q] = ratios[i - 1];
        if (m != n - 1) continue;
        est.trend.emplace_back(n, n * r - m * q);
      }
      if (est.trend.empty()) throw UsageError("genfun", "too few consecutive ratios for Domb-Sykes");
    }
  }
  est.growth = est.trend.back().second;
  est.radius = 1 / est.growth;
  return est;
}

}  // namespace hcizlab
