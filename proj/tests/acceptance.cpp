// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are pinned
// below. Criteria listed in kKnownUnattainable are reported as FAIL when they
// fail and do not change the exit status; every other failure does.

#include "hcizlab/characters.hpp"
#include "hcizlab/class_algebra.hpp"
#include "hcizlab/combinatorics.hpp"
#include "hcizlab/genfun.hpp"
#include "hcizlab/hciz_model.hpp"
#include "hcizlab/monotone_hurwitz.hpp"
#include "hcizlab/weingarten.hpp"
#include "hcizlab/zeros.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

using namespace hcizlab;

namespace {

// ---------------------------------------------------------- tolerances --

constexpr double kStandardErrors = 4.0;          // Monte Carlo agreement
constexpr long long kMonteCarloSamples = 400000;  // within the 1e5..1e6 band
constexpr double kRadiusTolerance = 0.05;         // genus zero and s(z)
constexpr double kGenusOneRadiusTolerance = 0.10;
constexpr int kRadiusCoefficients = 24;           // >= 20 for the genus series
constexpr int kSCoefficients = 40;
constexpr double kSlopeLow = -2.6, kSlopeHigh = -1.4;
constexpr double kZeroResidual = 1e-10;
constexpr double kLatticeRelative = 4 * std::numeric_limits<double>::epsilon();
constexpr double kRoundingSlack = 1e-15;  // absolute, for double comparisons of O(1) values
constexpr int kWeingartenSeriesOrder = 30;
constexpr double kRatioRounding = 1e-12;  // relative, ratios of rationals rounded to double
constexpr int kGenusMax = 6;

const std::set<int> kKnownUnattainable{9};

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Checker {
  Outcome outcome;
  void require(bool ok, const std::string& what) {
    if (!ok && outcome.passed) {
      outcome.passed = false;
      outcome.detail = what;
    }
  }
  template <class T>
  void note(const std::string& key, const T& value) {
    if (!outcome.passed) return;
    std::ostringstream os;
    os << std::setprecision(6) << key << " = " << value;
    outcome.detail += (outcome.detail.empty() ? "" : "; ") + os.str();
  }
};

std::string pair_label(const Partition& a, const Partition& b, int g) {
  return "(" + a.str() + "), (" + b.str() + "), g = " + std::to_string(g);
}

// 1 ----------------------------------------------------------------------
Outcome oracle_equivalence() {
  Checker c;
  int compared = 0;
  for (int d = 1; d <= 5; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d))
        for (int g = 0; g <= 2; ++g) {
          const int r = ray_count(a, b, g);
          if (r < 0) continue;
          c.require(brute_force_count(a, b, r, true) == connected_double(a, b, g), pair_label(a, b, g));
          ++compared;
        }
  c.note("triples compared", compared);
  return c.outcome;
}

// 2 ----------------------------------------------------------------------
Outcome closed_form() {
  Checker c;
  for (int d = 1; d <= 8; ++d)
    for (const auto& a : enumerate_partitions(d))
      c.require(genus_zero_closed_form(a) == connected_double(a, Partition::ones(d), 0), "alpha = " + a.str());
  const std::vector<std::pair<Partition, BigInt>> spots{
      {Partition({1}), BigInt(1)}, {Partition({2}), BigInt(1)}, {Partition({1, 1, 1}), BigInt(8)}};
  for (const auto& [a, expected] : spots) {
    const Partition ones = Partition::ones(a.size());
    const BigInt brute = brute_force_count(a, ones, ray_count(a, ones, 0), true);
    c.require(brute == expected && genus_zero_closed_form(a) == expected, "spot value at " + a.str());
  }
  return c.outcome;
}

// 3 ----------------------------------------------------------------------
Outcome weingarten_consistency() {
  Checker c;
  for (int d = 1; d <= 5; ++d)
    for (int N = d; N <= 8; ++N)
      c.require(weingarten_exact(d, N).class_values == weingarten_by_characters(d, N).class_values,
                "tables differ at d = " + std::to_string(d) + ", N = " + std::to_string(N));
  for (auto [d, N] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}}) {
    const DenseMatrix<Rational> product = to_rational(gram_matrix(d, N)) * weingarten_exact(d, N).matrix();
    bool identity = true;
    for (Eigen::Index i = 0; i < product.rows(); ++i)
      for (Eigen::Index j = 0; j < product.cols(); ++j) identity = identity && product(i, j) == Rational(i == j ? 1 : 0);
    c.require(identity, "Gram * W != I at d = " + std::to_string(d) + ", N = " + std::to_string(N));
  }
  // Convergence rate: every truncation error lies under a majorant whose
  // successive ratio decreases to (d-1)/N (its dominant pole), and the
  // measured ratio of successive errors moves toward (d-1)/N as the order grows.
  double worst_excess = 0;
  for (int d = 2; d <= 5; ++d)
    for (int N = d; N <= 8; ++N) {
      const auto exact = weingarten_by_characters(d, N);
      const double rate = (d - 1.0) / N;
      double previous_ratio = std::numeric_limits<double>::infinity();
      for (int R = 0; R <= kWeingartenSeriesOrder; ++R) {
        const auto s = weingarten_series(d, N, R);
        const double ratio = weingarten_series(d, N, R + 1).tail_bound / s.tail_bound;
        c.require(ratio >= rate * (1 - kRatioRounding) && ratio <= previous_ratio * (1 + kRatioRounding),
                  "majorant ratio not decreasing to (d-1)/N at d = " + std::to_string(d) + ", N = " + std::to_string(N));
        previous_ratio = ratio;
        for (std::size_t m = 0; m < s.classes.size(); ++m) {
          const double err =
              std::abs(Rational(exact.class_value(s.classes[m]) - s.partial_sums[m]).convert_to<double>());
          c.require(err <= s.tail_bound, "error above the majorant at d = " + std::to_string(d) +
                                             ", N = " + std::to_string(N) + ", R = " + std::to_string(R));
        }
      }
      const double early = observed_convergence_ratio(weingarten_series(d, N, kWeingartenSeriesOrder / 2), exact);
      const double late = observed_convergence_ratio(weingarten_series(d, N, kWeingartenSeriesOrder), exact);
      c.require(std::abs(late - rate) <= std::abs(early - rate),
                "measured ratio moves away from (d-1)/N at d = " + std::to_string(d) + ", N = " + std::to_string(N));
      worst_excess = std::max(worst_excess, late - rate);
    }
  c.note("largest measured ratio minus (d-1)/N at order 30", worst_excess);
  return c.outcome;
}

// 4 ----------------------------------------------------------------------
Outcome determinant_identities() {
  Checker c;
  for (int d = 2; d <= 5; ++d) c.require(zagier_determinant_check(d), "Zagier product at d = " + std::to_string(d));
  for (int d = 1; d <= 4; ++d)
    for (int N = 1; N <= 6; ++N) {
      c.require(gram_determinant_check(d, N), "Gram determinant at d = " + std::to_string(d) + ", N = " + std::to_string(N));
      c.require((gram_determinant_formula(d, N) == 0) == (N < d),
                "singular set at d = " + std::to_string(d) + ", N = " + std::to_string(N));
    }
  return c.outcome;
}

// 5 ----------------------------------------------------------------------
Outcome reciprocity() {
  Checker c;
  for (int d = 1; d <= 5; ++d) {
    c.require(eh_reciprocity_check(d, 6), "e-h reciprocity at d = " + std::to_string(d));
    for (int r = 0; r <= 6; ++r)
      c.require(jm_action_coefficients(r, d, SymmetricKind::elementary, JmEngine::enumeration) == permutations_of_length(r, d),
                "e_r identity at d = " + std::to_string(d) + ", r = " + std::to_string(r));
  }
  return c.outcome;
}

// 6 ----------------------------------------------------------------------
Outcome derivative_closure() {
  Checker c;
  auto q = [](long n, long d = 1) { return Rational(n, d); };
  const std::vector<SpectrumPair> specs{
      SpectrumPair::from_rational({q(1), q(0), q(-1)}, {q(1, 2), q(-1, 3), q(1)}),
      SpectrumPair::from_rational({q(1), q(1, 3), q(-1, 2)}, {q(-1), q(1, 4), q(1)}),
      SpectrumPair::from_rational({q(1), q(1, 2), q(-1, 2), q(-1)}, {q(1, 5), q(-2, 3), q(1), q(0)}),
      SpectrumPair::from_rational({q(3, 4), q(-1), q(0), q(1, 6)}, {q(1), q(1), q(-1), q(-1, 2)}),
      SpectrumPair::from_rational({q(1), q(1, 2), q(0), q(-1, 2), q(-1)}, {q(1), q(1, 2), q(0), q(-1, 2), q(-1)}),
      SpectrumPair::from_rational({q(-1), q(2, 7), q(1, 3), q(-3, 5), q(1)}, {q(1, 9), q(0), q(-1), q(1), q(1, 2)}),
  };
  int monotone_cases = 0;
  for (const auto& spec : specs) {
    const int N = spec.N();
    const auto free = free_energy_derivatives(partition_derivatives(3, spec), N);
    for (int d = 1; d <= 3; ++d) {
      const auto series = leading_derivative_series(d, spec, kGenusMax);
      const bool shrinking = std::pow(std::tgamma(d + 1.0) / N, 2) < 1;
      double previous = std::numeric_limits<double>::infinity();
      for (int g = 0; g <= kGenusMax; ++g) {
        const double gap = abs(Rational(series.partial_sum(g) - free[static_cast<std::size_t>(d)])).convert_to<double>();
        const std::string where = "N = " + std::to_string(N) + ", d = " + std::to_string(d) + ", g_max = " + std::to_string(g);
        c.require(gap <= derivative_tail_bound(d, N, g, series.M), "outside the tail bound at " + where);
        if (shrinking) {
          c.require(gap <= previous, "gap grew at " + where);
          previous = gap;
        }
      }
      monotone_cases += shrinking;
    }
  }
  c.note("cases with shrinking gaps", monotone_cases);
  return c.outcome;
}

// 7 ----------------------------------------------------------------------
Outcome three_way() {
  Checker c;
  auto q = [](long n, long d = 1) { return Rational(n, d); };
  const std::vector<SpectrumPair> specs{
      SpectrumPair::from_rational({q(0), q(1)}, {q(0), q(1)}),
      SpectrumPair::from_rational({q(1), q(0), q(-1)}, {q(1), q(0), q(-1)}),
      SpectrumPair::from_rational({q(1), q(1, 3), q(-1, 2)}, {q(-1), q(1, 4), q(1)}),
  };
  std::uint64_t seed = 7001;
  double worst_z = 0;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& spec : specs) {
    for (Complex z : {Complex(0.1), Complex(0.0, 0.3)}) {
      const std::string where = "N = " + std::to_string(spec.N()) + ", z = (" + std::to_string(z.real()) + ", " +
                                std::to_string(z.imag()) + ")";
      const Complex det = hciz_determinant(z, spec).to_complex();
      SeriesEvaluation series;
      {
        PrecisionScope scope(40);
        series = hciz_series(z, spec, kMaxDerivativeOrder);
      }
      c.require(std::abs(series.value.to_complex() - det) <= series.remainder + kRoundingSlack,
                "Maclaurin sum outside its remainder at " + where);
      const auto mc = hciz_monte_carlo(z, spec, kMonteCarloSamples, seed++);
      const double zr = std::abs(mc.mean.real() - det.real()) / std::max(mc.se_re, 1e-300);
      const double zi = std::abs(mc.mean.imag() - det.imag()) / std::max(mc.se_im, 1e-300);
      c.require(std::abs(mc.mean.real() - det.real()) <= kStandardErrors * mc.se_re + kRoundingSlack &&
                    std::abs(mc.mean.imag() - det.imag()) <= kStandardErrors * mc.se_im + kRoundingSlack,
                "Monte Carlo off at " + where);
      worst_z = std::max({worst_z, mc.se_re > 0 ? zr : 0.0, mc.se_im > 0 ? zi : 0.0});
    }
    const double M = spec.spectral_bound();
    for (int k = 0; k < 20;) {
      const Complex z(u(rng), u(rng));
      if (std::abs(z) > 1 || std::abs(z) == 0) continue;
      ++k;
      c.require(free_energy(z, spec).real() <= M * M * std::abs(z), "Re F above M^2 |z| at N = " + std::to_string(spec.N()));
    }
  }
  c.note("largest Monte Carlo deviation in standard errors", worst_z);
  return c.outcome;
}

// 8 ----------------------------------------------------------------------
Outcome generating_functions() {
  Checker c;
  const auto s = s_coefficients(20);
  const std::vector<long> leading{0, 1, 4, 28, 240, 2288, 23296};
  for (std::size_t n = 0; n < leading.size(); ++n)
    c.require(s[static_cast<int>(n)] == Rational(leading[n]), "s coefficient " + std::to_string(n));
  c.require(s == s_by_iteration(20), "closed form differs from the iteration");
  const auto residual = s_functional_residual(s);
  bool zero = true;
  for (int n = 0; n <= std::min(residual.order(), 20); ++n) zero = zero && residual[n] == 0;
  c.require(zero, "functional-equation residual is nonzero below z^21");
  const auto derivative = s_coefficients(41).derivative().truncated(40);
  c.require(derivative == hypergeometric_coefficients(40), "s' differs from the hypergeometric series");
  c.require(s_prime_coefficients(40) == hypergeometric_coefficients(40), "s' coefficients differ from the hypergeometric series");

  const auto sj = solve_sj_system(4, 4);
  auto coefficient = [&](int j, std::vector<int> parts) { return sj[static_cast<std::size_t>(j)].coefficient(Partition(std::move(parts))); };
  c.require(coefficient(0, {1}) == 1 && coefficient(0, {1, 1}) == 4 && coefficient(0, {2, 1}) == 12 &&
                coefficient(0, {1, 1, 1}) == 28 && coefficient(0, {3, 1}) == 40 && coefficient(0, {2, 1, 1}) == 216 &&
                coefficient(0, {1, 1, 1, 1}) == 240 && sj[0].degree(4).size() == 3,
            "s_1 leading terms");
  c.require(coefficient(1, {2}) == 1 && coefficient(1, {2, 1}) == 8 && coefficient(1, {2, 2}) == 24 &&
                coefficient(1, {2, 1, 1}) == 72 && sj[1].degree(4).size() == 2,
            "s_2 leading terms");
  c.require(coefficient(2, {3}) == 1 && coefficient(2, {3, 1}) == 12 && sj[2].degree(4).size() == 1, "s_3 leading terms");
  for (const auto& r : sj_system_residuals(solve_sj_system(8, 8))) c.require(r.is_zero(), "multivariate residual");
  return c.outcome;
}

// 9 ----------------------------------------------------------------------
Outcome critical_point() {
  Checker c;
  const auto within = [](double r, double tol) { return std::abs(r - kCriticalPoint) <= tol * kCriticalPoint; };
  const double genus0 = radius_estimate(genus_series_all_ones(0, kRadiusCoefficients), RadiusMethod::domb_sykes).radius;
  const double genus1 = radius_estimate(genus_series_all_ones(1, kRadiusCoefficients), RadiusMethod::domb_sykes).radius;
  const double s = radius_estimate(s_coefficients(kSCoefficients), RadiusMethod::domb_sykes).radius;
  std::ostringstream os;
  os << std::setprecision(6) << "s(z) " << s << ", genus 0 " << genus0 << ", genus 1 " << genus1 << " vs "
     << kCriticalPoint;
  c.require(within(s, kRadiusTolerance), "s(z) radius: " + os.str());
  c.require(within(genus0, kRadiusTolerance), "genus-zero radius: " + os.str());
  c.require(within(genus1, kGenusOneRadiusTolerance), "genus-one radius: " + os.str());
  if (c.outcome.passed) c.outcome.detail = os.str();
  return c.outcome;
}

// 10 ---------------------------------------------------------------------
Outcome free_energy_convergence() {
  Checker c;
  const auto result = convergence_experiment(0.05, {8, 16, 32, 64}, Rational(1), 12);
  std::ostringstream gaps;
  gaps << std::setprecision(4);
  for (std::size_t n = 0; n < result.rows.size(); ++n) {
    gaps << (n ? " " : "") << result.rows[n].gap;
    if (n > 0) c.require(result.rows[n].gap < result.rows[n - 1].gap, "gap did not decrease at N = " + std::to_string(result.rows[n].N));
  }
  c.require(result.slope >= kSlopeLow && result.slope <= kSlopeHigh, "slope " + std::to_string(result.slope));
  c.note("slope", result.slope);
  c.note("gaps", gaps.str());
  return c.outcome;
}

// 11 ---------------------------------------------------------------------
Outcome zeros() {
  Checker c;
  const std::vector<std::vector<std::vector<double>>> bs{
      {{0, 1}, {-1, 0.5}, {0.2, 0.9}},
      {{0, 1, 2}, {-1, 0.25, 1}, {-0.5, 0.1, 0.7}},
      {{0, 1, 2, 3}, {-1, -0.3, 0.4, 1}, {-0.8, -0.1, 0.35, 0.9}},
  };
  double worst = 0;
  int checked = 0;
  for (const auto& family : bs)
    for (const auto& b : family)
      for (double spacing : {0.5, 1.0}) {
        const auto p = predicted_zeros(-0.25, spacing, b, kDefaultZeroWindow);
        for (const auto& z : p.zeros) {
          const double r = verify_zero(z.z(), p.spectra());
          worst = std::max(worst, r);
          ++checked;
          c.require(r < kZeroResidual, "residual " + std::to_string(r) + " at N = " + std::to_string(p.N));
        }
      }
  const auto lattice = predicted_zeros(0, 1, {0, 1}, kDefaultZeroWindow);
  for (const auto& z : lattice.zeros)
    c.require(std::abs(z.im - z.k * std::numbers::pi) <= kLatticeRelative * std::abs(z.im), "N = 2 lattice at k = " + std::to_string(z.k));
  c.require(lattice.zeros.size() == 2 * kDefaultZeroWindow, "N = 2 lattice size");
  for (double M : {0.5, 1.0, 2.0}) {
    const auto r = smallest_zero_bound_uniform(M, {-M, 0.3 * M, M});
    c.require(r.holds && r.beyond_critical && std::abs(r.bound - std::numbers::pi / (2 * M * M)) <= 1e-15 * r.bound,
              "uniform bound at M = " + std::to_string(M));
  }
  double previous = cauchy_counterexample(4).smallest;
  for (int N = 5; N <= 64; ++N) {
    const double s = cauchy_counterexample(N).smallest;
    c.require(s < previous, "Cauchy smallest zero did not decrease at N = " + std::to_string(N));
    previous = s;
  }
  // Decay like pi^2 / (2 (N + 1)), hence to 0.
  c.require(std::abs(previous * 65 / (std::numbers::pi * std::numbers::pi / 2) - 1) < 0.01, "Cauchy decay rate");
  c.note("zeros checked", checked);
  c.note("largest residual", worst);
  c.note("Cauchy smallest at N = 64", previous);
  return c.outcome;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"oracle equivalence of monotone Hurwitz counts", oracle_equivalence},
      {"genus-zero closed form", closed_form},
      {"Weingarten consistency", weingarten_consistency},
      {"determinant identities", determinant_identities},
      {"e-h reciprocity and the e_r identity", reciprocity},
      {"genus expansion of the derivatives", derivative_closure},
      {"three-way HCIZ agreement", three_way},
      {"generating functions", generating_functions},
      {"critical point from series coefficients", critical_point},
      {"convergence of the free energy", free_energy_convergence},
      {"zeros", zeros},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool known = kKnownUnattainable.count(id) > 0;
    if (!outcome.passed && !known) ++unexpected;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << criteria[i].first << "  ["
              << std::fixed << std::setprecision(1) << seconds << " s]" << std::defaultfloat;
    if (!outcome.passed && known) std::cout << "  (known unattainable)";
    if (!outcome.detail.empty()) std::cout << "  " << outcome.detail;
    std::cout << std::endl;
  }
  std::cout << (unexpected == 0 ? "acceptance: no unexpected failures" : "acceptance: " + std::to_string(unexpected) + " unexpected failure(s)")
            << std::endl;
  return unexpected == 0 ? 0 : 1;
}
