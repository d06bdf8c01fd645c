#include "hcizlab/verify.hpp"

#include "hcizlab/class_algebra.hpp"
#include "hcizlab/combinatorics.hpp"
#include "hcizlab/error.hpp"
#include "hcizlab/genfun.hpp"
#include "hcizlab/hciz_model.hpp"
#include "hcizlab/monotone_hurwitz.hpp"
#include "hcizlab/weingarten.hpp"
#include "hcizlab/zeros.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace hcizlab {

namespace {

CheckOutcome fail(const std::string& detail) { return {false, detail}; }
CheckOutcome pass() { return {true, ""}; }

std::string label(const Partition& a, const Partition& b) { return "(" + a.str() + "), (" + b.str() + ")"; }

// ------------------------------------------------------- combinatorics --

CheckOutcome class_sizes_sum(const VerifyContext&) {
  for (int d = 0; d <= 7; ++d) {
    BigInt total(0);
    for (const auto& a : enumerate_partitions(d)) total += class_size(a);
    if (total != factorial(d)) return fail("d = " + std::to_string(d));
  }
  return pass();
}

CheckOutcome conjugation_invariance(const VerifyContext& ctx) {
  std::mt19937_64 rng(ctx.seed);
  const int pairs = ctx.full() ? 2000 : 200;
  for (int d = 1; d <= 6; ++d) {
    const auto order = static_cast<std::uint32_t>(factorial(d).convert_to<unsigned long>());
    std::uniform_int_distribution<std::uint32_t> pick(0, order - 1);
    for (int k = 0; k < pairs; ++k) {
      const auto p = permutation_unrank(d, pick(rng)), r = permutation_unrank(d, pick(rng));
      if (cycle_type(r * p * r.inverse()) != cycle_type(p)) return fail("d = " + std::to_string(d));
    }
  }
  return pass();
}

CheckOutcome cycle_count_rising_factorial(const VerifyContext& ctx) {
  for (int d = 1; d <= (ctx.full() ? 6 : 5); ++d)
    for (int N = 1; N <= 5; ++N) {
      BigInt total(0);
      for (const auto& p : all_permutations(d)) total += ipow(BigInt(N), cycle_count(p));
      if (Rational(total) != rising_factorial(Rational(N), d))
        return fail("d = " + std::to_string(d) + ", N = " + std::to_string(N));
    }
  return pass();
}

CheckOutcome catalan_restricted(const VerifyContext& ctx) {
  std::vector<BigInt> catalan{BigInt(1)};
  const int d_max = ctx.full() ? 8 : 7;
  for (int n = 1; n <= d_max; ++n) {
    BigInt c(0);
    for (int i = 0; i < n; ++i) c += catalan[static_cast<std::size_t>(i)] * catalan[static_cast<std::size_t>(n - 1 - i)];
    catalan.push_back(c);
  }
  for (int d = 1; d <= d_max; ++d)
    if (BigInt(static_cast<long long>(enumerate_restricted(d, 2).size())) != catalan[static_cast<std::size_t>(d)])
      return fail("d = " + std::to_string(d));
  return pass();
}

// ----------------------------------------------------------- characters --

CheckOutcome dimension_squares(const VerifyContext& ctx) {
  for (int d = 1; d <= 8; ++d) {
    const auto table = ctx.character_table(d);
    const int identity = table->index().index_of(Partition::ones(d));
    BigInt total(0);
    for (int l = 0; l < table->index().count(); ++l) total += table->value(l, identity) * table->value(l, identity);
    if (total != factorial(d)) return fail("d = " + std::to_string(d));
  }
  return pass();
}

CheckOutcome column_orthogonality(const VerifyContext& ctx) {
  for (int d = 1; d <= (ctx.full() ? 7 : 6); ++d)
    if (!column_orthogonality_holds(*ctx.character_table(d))) return fail("d = " + std::to_string(d));
  return pass();
}

CheckOutcome table_vs_direct(const VerifyContext& ctx) {
  for (int d = 1; d <= (ctx.full() ? 6 : 5); ++d) {
    const auto table = ctx.character_table(d);
    const auto parts = enumerate_partitions(d);
    for (std::size_t l = 0; l < parts.size(); ++l)
      for (std::size_t m = 0; m < parts.size(); ++m)
        if (table->value(static_cast<int>(l), static_cast<int>(m)) != character(parts[l], parts[m]))
          return fail("chi at " + label(parts[l], parts[m]));
  }
  return pass();
}

CheckOutcome conjugate_contents(const VerifyContext&) {
  for (int d = 1; d <= 8; ++d)
    for (const auto& l : enumerate_partitions(d)) {
      auto a = contents(l), b = contents(l.conjugate());
      for (int& c : b) c = -c;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return fail("lambda = " + l.str());
    }
  return pass();
}

// -------------------------------------------------------- class algebra --

CheckOutcome jm_engines(const VerifyContext& ctx) {
  const int d_max = ctx.full() ? 5 : 4, r_max = ctx.full() ? 6 : 5;
  for (int d = 1; d <= d_max; ++d)
    for (int r = 0; r <= r_max; ++r)
      for (auto kind : {SymmetricKind::elementary, SymmetricKind::complete})
        if (jm_action_coefficients(r, d, kind, JmEngine::enumeration) != jm_action_coefficients(r, d, kind, JmEngine::eigenvalues))
          return fail("d = " + std::to_string(d) + ", r = " + std::to_string(r));
  return pass();
}

CentralElement random_class_combination(int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  CentralElement out(d);
  for (int m = 0; m < out.index().count(); ++m) out[m] = Rational(coeff(rng));
  return out;
}

CheckOutcome multiplication_laws(const VerifyContext& ctx) {
  std::mt19937_64 rng(ctx.seed + 1);
  for (int d = 1; d <= 5; ++d)
    for (int t = 0; t < (ctx.full() ? 20 : 5); ++t) {
      const auto a = random_class_combination(d, rng), b = random_class_combination(d, rng),
                 c = random_class_combination(d, rng);
      if (a * b != b * a) return fail("commutativity, d = " + std::to_string(d));
      if ((a * b) * c != a * (b * c)) return fail("associativity, d = " + std::to_string(d));
      if (multiply_by_convolution(a, b) != a * b) return fail("convolution vs eigenvalues, d = " + std::to_string(d));
    }
  return pass();
}

CheckOutcome eigenvalue_multiplicativity(const VerifyContext& ctx) {
  std::mt19937_64 rng(ctx.seed + 2);
  for (int d = 1; d <= (ctx.full() ? 6 : 5); ++d) {
    const auto a = random_class_combination(d, rng), b = random_class_combination(d, rng);
    const auto prod = multiply_by_convolution(a, b);
    for (int l = 0; l < prod.index().count(); ++l)
      if (prod.eigenvalue(l) != a.eigenvalue(l) * b.eigenvalue(l)) return fail("d = " + std::to_string(d));
  }
  return pass();
}

CheckOutcome gram_poles(const VerifyContext& ctx) {
  for (int d = 1; d <= 5; ++d)
    for (int N = 1; N <= d + 2; ++N)
      if ((gram_determinant_formula(d, N) == 0) != (N < d))
        return fail("pole set, d = " + std::to_string(d) + ", N = " + std::to_string(N));
  for (int d = 1; d <= (ctx.full() ? 4 : 3); ++d)
    for (int N = 1; N <= 6; ++N)
      if (!gram_determinant_check(d, N)) return fail("determinant, d = " + std::to_string(d) + ", N = " + std::to_string(N));
  return pass();
}

CheckOutcome eh_reciprocity(const VerifyContext&) {
  for (int d = 1; d <= 5; ++d)
    if (!eh_reciprocity_check(d, 6)) return fail("d = " + std::to_string(d));
  return pass();
}

CheckOutcome elementary_is_length_sum(const VerifyContext&) {
  for (int d = 1; d <= 5; ++d)
    for (int r = 0; r <= 6; ++r)
      if (jm_action_coefficients(r, d, SymmetricKind::elementary) != permutations_of_length(r, d))
        return fail("d = " + std::to_string(d) + ", r = " + std::to_string(r));
  return pass();
}

CheckOutcome zagier(const VerifyContext& ctx) {
  for (int d = 2; d <= (ctx.full() ? 5 : 4); ++d)
    if (!zagier_determinant_check(d)) return fail("d = " + std::to_string(d));
  return pass();
}

// ------------------------------------------------------ monotone Hurwitz --

CheckOutcome brute_vs_connected(const VerifyContext& ctx) {
  const int d_max = ctx.full() ? 5 : 4, g_max = ctx.full() ? 2 : 1;
  for (int d = 1; d <= d_max; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d))
        for (int g = 0; g <= g_max; ++g) {
          const int r = ray_count(a, b, g);
          if (r < 0) continue;
          if (brute_force_count(a, b, r, true) != connected_double(a, b, g))
            return fail(label(a, b) + ", g = " + std::to_string(g));
        }
  return pass();
}

CheckOutcome brute_vs_disconnected(const VerifyContext& ctx) {
  const int d_max = ctx.full() ? 5 : 4;
  for (int d = 1; d <= d_max; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d))
        for (int r = 0; r <= 6; ++r)
          if (brute_force_count(a, b, r, false) != disconnected_count(a, b, r))
            return fail(label(a, b) + ", r = " + std::to_string(r));
  return pass();
}

CheckOutcome genus_zero_formula(const VerifyContext& ctx) {
  for (int d = 1; d <= (ctx.full() ? 8 : 7); ++d)
    for (const auto& a : enumerate_partitions(d))
      if (genus_zero_closed_form(a) != connected_double(a, Partition::ones(d), 0)) return fail("alpha = " + a.str());
  return pass();
}

CheckOutcome parity_vanishing(const VerifyContext&) {
  const auto table = HurwitzTable::get(6, 2);
  for (int d = 1; d <= 6; ++d)
    for (const auto& a : enumerate_partitions(d))
      for (const auto& b : enumerate_partitions(d)) {
        const int base = a.length() + b.length();
        for (int r = 0; r <= table->max_rays(); ++r) {
          if (r >= base - 2 && (r - base) % 2 == 0) continue;
          if (table->connected_rays(a, b, r) != 0) return fail(label(a, b) + ", r = " + std::to_string(r));
        }
      }
  return pass();
}

CheckOutcome structural_identities(const VerifyContext& ctx) {
  for (const auto& result : structural_identity_suite(ctx.full() ? 7 : 5, 2))
    if (!result.passed) return fail(result.name + ": " + result.detail);
  return pass();
}

// ------------------------------------------------------------ Weingarten --

CheckOutcome weingarten_tables(const VerifyContext& ctx) {
  for (int d = 1; d <= (ctx.full() ? 5 : 4); ++d)
    for (int N = d; N <= 8; ++N) {
      const auto a = weingarten_exact(d, N), b = weingarten_by_characters(d, N);
      if (a.class_values != b.class_values) return fail("d = " + std::to_string(d) + ", N = " + std::to_string(N));
    }
  return pass();
}

CheckOutcome weingarten_inverse(const VerifyContext& ctx) {
  std::vector<std::pair<int, int>> cases{{3, 2}, {4, 2}, {4, 3}, {2, 2}, {3, 3}, {3, 5}};
  if (ctx.full()) cases.insert(cases.end(), {{5, 2}, {5, 3}, {4, 4}, {5, 5}});
  for (auto [d, N] : cases) {
    const auto table = weingarten_exact(d, N);
    const DenseMatrix<Rational> product = to_rational(gram_matrix(d, N)) * table.matrix();
    for (Eigen::Index i = 0; i < product.rows(); ++i)
      for (Eigen::Index j = 0; j < product.cols(); ++j)
        if (product(i, j) != Rational(i == j ? 1 : 0)) return fail("d = " + std::to_string(d) + ", N = " + std::to_string(N));
  }
  return pass();
}

CheckOutcome weingarten_series_convergence(const VerifyContext& ctx) {
  const std::vector<std::pair<int, int>> cases{{2, 3}, {3, 4}, {3, 7}, {4, 5}, {4, 8}};
  const int order = ctx.full() ? 30 : 20;
  for (auto [d, N] : cases) {
    const auto exact = weingarten_by_characters(d, N);
    // Every truncation error sits under the majorant tail, whose exponential
    // rate is exactly (d-1)/N.
    for (int R = 1; R <= order; R += 3) {
      const auto s = weingarten_series(d, N, R);
      for (std::size_t m = 0; m < s.classes.size(); ++m) {
        const double err = std::abs(Rational(exact.class_value(s.classes[m]) - s.partial_sums[m]).convert_to<double>());
        if (err > s.tail_bound * (1 + 1e-12))
          return fail("tail bound, d = " + std::to_string(d) + ", N = " + std::to_string(N) + ", R = " + std::to_string(R));
      }
    }
    const double target = (d - 1.0) / N;
    const double early = observed_convergence_ratio(weingarten_series(d, N, order / 2), exact);
    const double late = observed_convergence_ratio(weingarten_series(d, N, order), exact);
    if (!(std::abs(late - target) <= std::abs(early - target) + 1e-12) || late > target * 1.01) {
      std::ostringstream os;
      os << "observed ratio " << late << " vs " << target << " (d = " << d << ", N = " << N << ")";
      return fail(os.str());
    }
  }
  return pass();
}

CheckOutcome weingarten_monte_carlo(const VerifyContext& ctx) {
  struct Pattern {
    IndexList i, ic, j, jc;
    int N;
  };
  const std::vector<Pattern> patterns{
      {{1}, {1}, {1}, {1}, 2},
      {{1, 1}, {1, 1}, {1, 1}, {1, 1}, 2},
      {{1, 2}, {1, 2}, {1, 2}, {1, 2}, 2},
      {{1, 2}, {1, 2}, {1, 2}, {2, 1}, 3},
      {{1, 1}, {1, 1}, {1, 2}, {1, 2}, 3},
      {{1, 2}, {2, 1}, {1, 1}, {1, 1}, 3},
      {{1}, {}, {1}, {}, 3},
      {{1, 2}, {1, 2}, {3, 4}, {3, 4}, 5},
      {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, 5},
      {{1, 1, 2}, {1, 1, 2}, {1, 2, 2}, {1, 2, 2}, 2},  // d = 3 > N = 2
  };
  const long long samples = ctx.full() ? 200000 : 40000;
  std::uint64_t seed = ctx.seed + 10;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    const auto& pt = patterns[p];
    const double exact = correlation(pt.i, pt.ic, pt.j, pt.jc, pt.N).convert_to<double>();
    const auto est = monte_carlo_correlation(pt.i, pt.ic, pt.j, pt.jc, pt.N, samples, seed++);
    if (std::abs(est.mean.real() - exact) > 4 * est.se_re + 1e-15 || std::abs(est.mean.imag()) > 4 * est.se_im + 1e-15)
      return fail("pattern " + std::to_string(p + 1));
  }
  return pass();
}

// -------------------------------------------------------------- genfun --

CheckOutcome sj_residuals(const VerifyContext& ctx) {
  const int n = ctx.full() ? 10 : 7;
  for (const auto& r : sj_system_residuals(solve_sj_system(n, n)))
    if (!r.is_zero()) return fail("nonzero residual at n_max = " + std::to_string(n));
  return pass();
}

CheckOutcome sj_specialization(const VerifyContext& ctx) {
  const int n = ctx.full() ? 20 : 12;
  std::vector<Rational> delta(static_cast<std::size_t>(n), Rational(0));
  delta[0] = 1;
  const auto s = solve_sj_system(n, n);
  if (s[0].specialize(delta) != s_coefficients(n)) return fail("n_max = " + std::to_string(n));
  return pass();
}

CheckOutcome s_series(const VerifyContext&) {
  const auto s = s_coefficients(20);
  if (s != s_by_iteration(20)) return fail("closed form vs iteration");
  const auto residual = s_functional_residual(s);
  for (int n = 0; n <= residual.order(); ++n)
    if (residual[n] != 0) return fail("functional residual at z^" + std::to_string(n));
  const auto derivative = s_coefficients(41).derivative().truncated(40);
  if (derivative != s_prime_coefficients(40) || derivative != hypergeometric_coefficients(40))
    return fail("derivative vs hypergeometric");
  return pass();
}

CheckOutcome all_ones_signs(const VerifyContext& ctx) {
  const int d_max = ctx.full() ? 8 : 6;
  const auto sums = hurwitz_sums_all_ones(d_max, 2);
  std::vector<Rational> minus(static_cast<std::size_t>(d_max), Rational(-1));
  const auto signed_sums = weighted_hurwitz_sums(minus, minus, d_max, 2);
  for (int g = 0; g <= 2; ++g)
    for (int d = 1; d <= d_max; ++d) {
      if (sums[static_cast<std::size_t>(g)][static_cast<std::size_t>(d)] < 0) return fail("negative coefficient");
      if (d >= 2 && signed_sums[static_cast<std::size_t>(g)][static_cast<std::size_t>(d)] != 0)
        return fail("signed sum, g = " + std::to_string(g) + ", d = " + std::to_string(d));
    }
  return pass();
}

CheckOutcome upper_bound_chain(const VerifyContext& ctx) {
  const int d_max = ctx.full() ? 8 : 6;
  const auto table = HurwitzTable::get(d_max, 2);
  for (int g = 0; g <= 2; ++g)
    for (int d = 2; d <= d_max; ++d) {
      BigInt total(0);
      for (const auto& a : enumerate_partitions(d))
        for (const auto& b : enumerate_partitions(d)) total += table->connected(a, b, g);
      const BigInt simple = table->connected(Partition::ones(d), Partition::ones(d), g);
      const BigInt p = partition_count(d);
      if (!(simple <= total) || Rational(total) > Rational(p * p * d * d, 4) * Rational(simple))
        return fail("g = " + std::to_string(g) + ", d = " + std::to_string(d));
    }
  return pass();
}

// ----------------------------------------------------------- HCIZ model --

std::vector<Rational> seeded_spectrum(int N, std::mt19937_64& rng) {
  std::vector<int> pool;
  for (int k = -12; k <= 12; ++k) pool.push_back(k);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<Rational> out;
  for (int i = 0; i < N; ++i) out.push_back(Rational(pool[static_cast<std::size_t>(i)], 12));
  return out;
}

CheckOutcome genus_expansion_closure(const VerifyContext& ctx) {
  std::mt19937_64 rng(ctx.seed + 3);
  for (int N = 1; N <= 5; ++N)
    for (int d = 1; d <= std::min(N, ctx.full() ? 5 : 3); ++d) {
      const auto spec = SpectrumPair::from_rational(seeded_spectrum(N, rng), seeded_spectrum(N, rng));
      const Rational exact = free_energy_derivatives(partition_derivatives(d, spec), N)[static_cast<std::size_t>(d)];
      const auto series = leading_derivative_series(d, spec, 6);
      double previous = std::numeric_limits<double>::infinity();
      for (int g = 0; g <= 6; ++g) {
        const double gap = abs(Rational(series.partial_sum(g) - exact)).convert_to<double>();
        const double tail = derivative_tail_bound(d, N, g, series.M);
        const std::string where = "N = " + std::to_string(N) + ", d = " + std::to_string(d) + ", g_max = " + std::to_string(g);
        if (gap > tail * (1 + 1e-12)) return fail("outside tail bound, " + where);
        if (std::tgamma(d + 1.0) < N) {
          if (gap > previous) return fail("gap grew, " + where);
          previous = gap;
        }
      }
    }
  return pass();
}

std::vector<SpectrumPair> three_way_spectra() {
  auto q = [](long n, long d = 1) { return Rational(n, d); };
  return {SpectrumPair::from_rational({q(0), q(1)}, {q(0), q(1)}),
          SpectrumPair::from_rational({q(1), q(0), q(-1)}, {q(1), q(0), q(-1)}),
          SpectrumPair::from_rational({q(1), q(1, 3), q(-1, 2)}, {q(-1), q(1, 4), q(1)})};
}

CheckOutcome three_way(const VerifyContext& ctx) {
  const long long samples = ctx.full() ? 400000 : 100000;
  std::uint64_t seed = ctx.seed + 20;
  int config = 0;
  for (const auto& spec : three_way_spectra())
    for (Complex z : {Complex(0.1), Complex(0.0, 0.3)}) {
      ++config;
      const Complex det = hciz_determinant(z, spec).to_complex();
      SeriesEvaluation series;
      {
        PrecisionScope scope(40);
        series = hciz_series(z, spec, kMaxDerivativeOrder);
      }
      if (std::abs(series.value.to_complex() - det) > series.remainder + 1e-15)
        return fail("Maclaurin sum, configuration " + std::to_string(config));
      const auto mc = hciz_monte_carlo(z, spec, samples, seed++);
      if (std::abs(mc.mean.real() - det.real()) > 4 * mc.se_re + 1e-15 ||
          std::abs(mc.mean.imag() - det.imag()) > 4 * mc.se_im + 1e-15)
        return fail("Monte Carlo, configuration " + std::to_string(config));
    }
  return pass();
}

CheckOutcome free_energy_bound(const VerifyContext& ctx) {
  std::mt19937_64 rng(ctx.seed + 4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (const auto& spec : three_way_spectra()) {
    const double M = spec.spectral_bound();
    for (int k = 0; k < (ctx.full() ? 20 : 6);) {
      const Complex z(u(rng), u(rng));
      if (std::abs(z) > 1) continue;
      ++k;
      if (free_energy(z, spec).real() > M * M * std::abs(z)) return fail("violated at N = " + std::to_string(spec.N()));
    }
  }
  return pass();
}

CheckOutcome free_energy_real(const VerifyContext&) {
  for (const auto& spec : three_way_spectra())
    for (double x : {-0.8, 0.05, 0.6})
      if (free_energy(x, spec).imag() != 0) return fail("nonzero imaginary part at N = " + std::to_string(spec.N()));
  return pass();
}

CheckOutcome convergence(const VerifyContext&) {
  const auto result = convergence_experiment(0.05, {8, 16, 32, 64}, Rational(1), 12);
  for (std::size_t n = 1; n < result.rows.size(); ++n)
    if (!(result.rows[n].gap < result.rows[n - 1].gap)) return fail("gap not decreasing");
  if (!(result.slope >= -2.6 && result.slope <= -1.4)) return fail("slope " + std::to_string(result.slope));
  return pass();
}

// ---------------------------------------------------------------- zeros --

const std::vector<std::vector<double>>& zero_spectra(int N) {
  static const std::vector<std::vector<std::vector<double>>> table{
      {{0, 1}, {-1, 0.5}, {0.2, 0.9}},
      {{0, 1, 2}, {-1, 0.25, 1}, {-0.5, 0.1, 0.7}},
      {{0, 1, 2, 3}, {-1, -0.3, 0.4, 1}, {-0.8, -0.1, 0.35, 0.9}},
  };
  return table[static_cast<std::size_t>(N - 2)];
}

CheckOutcome predicted_are_zeros(const VerifyContext&) {
  for (int N = 2; N <= 4; ++N)
    for (const auto& b : zero_spectra(N)) {
      const auto p = predicted_zeros(0.3, 0.7, b, 2);
      for (const auto& z : p.zeros)
        if (verify_zero(z.z(), p.spectra()) >= 1e-10)
          return fail("N = " + std::to_string(N) + ", zero " + std::to_string(z.im));
    }
  return pass();
}

CheckOutcome midpoints_nonzero(const VerifyContext&) {
  for (int N = 2; N <= 4; ++N)
    for (const auto& b : zero_spectra(N)) {
      const auto p = predicted_zeros(0.3, 0.7, b, 8);
      const double complete = 9 * 2 * std::numbers::pi / (N * 0.7 * (b.back() - b.front()));
      for (std::size_t n = 1; n < p.zeros.size(); ++n) {
        const double lo = p.zeros[n - 1].im, hi = p.zeros[n].im;
        if ((lo < 0 && hi > 0) || std::abs(lo) >= complete || std::abs(hi) >= complete) continue;
        if (verify_zero(Complex(0, 0.5 * (lo + hi)), p.spectra()) <= 1e-3)
          return fail("N = " + std::to_string(N) + ", midpoint " + std::to_string(0.5 * (lo + hi)));
      }
    }
  return pass();
}

CheckOutcome lattice_symmetry(const VerifyContext&) {
  for (int N = 2; N <= 4; ++N)
    for (const auto& b : zero_spectra(N)) {
      const auto p = predicted_zeros(0, 0.5, b, 3);
      auto shifted = b;
      for (double& v : shifted) v -= 1.75;
      const auto q = predicted_zeros(0, 0.5, shifted, 3), r = predicted_zeros(0, 2.0, b, 3);
      if (q.zeros.size() != p.zeros.size() || r.zeros.size() != p.zeros.size()) return fail("lattice size changed");
      for (std::size_t n = 0; n < p.zeros.size(); ++n) {
        if (std::abs(q.zeros[n].im - p.zeros[n].im) > 1e-12 * std::abs(p.zeros[n].im)) return fail("shift");
        if (std::abs(4 * r.zeros[n].im - p.zeros[n].im) > 1e-12 * std::abs(p.zeros[n].im)) return fail("scaling");
        if (std::abs(p.zeros[n].im + p.zeros[p.zeros.size() - 1 - n].im) > 1e-12 * std::abs(p.zeros[n].im))
          return fail("negation");
      }
    }
  return pass();
}

CheckOutcome uniform_zero_bound(const VerifyContext&) {
  for (double M : {0.25, 1.0, 4.0})
    for (const auto& b : {std::vector<double>{-1, 1}, std::vector<double>{-0.5, 0.2, 0.9}, std::vector<double>{-1, -0.2, 0.3, 1}}) {
      std::vector<double> scaled;
      for (double v : b) scaled.push_back(v * M);
      const auto r = smallest_zero_bound_uniform(M, scaled);
      if (!r.holds || !r.beyond_critical) return fail("M = " + std::to_string(M));
    }
  return pass();
}

CheckOutcome cauchy_trend(const VerifyContext&) {
  double previous = cauchy_counterexample(4).smallest;
  for (int N = 5; N <= 64; ++N) {
    const double s = cauchy_counterexample(N).smallest;
    if (!(s < previous)) return fail("not decreasing at N = " + std::to_string(N));
    previous = s;
  }
  return pass();
}

}  // namespace

const char* to_string(VerifyProfile profile) { return profile == VerifyProfile::full ? "full" : "quick"; }

VerifyProfile parse_profile(const std::string& text) {
  if (text == "quick") return VerifyProfile::quick;
  if (text == "full") return VerifyProfile::full;
  throw UsageError("verify", "profile must be quick or full, got '" + text + "'");
}

const std::vector<Invariant>& invariant_registry() {
  static const std::vector<Invariant> registry{
      {"combinatorics.class_sizes", "combinatorics_core", "class sizes of S(d) sum to d!, d <= 7", false, class_sizes_sum},
      {"combinatorics.conjugation", "combinatorics_core", "cycle type is a conjugation invariant, d <= 6", false, conjugation_invariance},
      {"combinatorics.rising_factorial", "combinatorics_core", "sum of N^{c(pi)} is the rising factorial, N <= 5", false,
       cycle_count_rising_factorial},
      {"combinatorics.catalan", "combinatorics_core", "|S_2(d)| is the Catalan number", false, catalan_restricted},
      {"characters.dimension_squares", "characters", "sum of chi_lambda(1)^2 is d!, d <= 8", false, dimension_squares},
      {"characters.column_orthogonality", "characters", "column orthogonality of the character table", false,
       column_orthogonality},
      {"characters.table_vs_direct", "characters", "cached table equals direct Murnaghan-Nakayama evaluation", false,
       table_vs_direct},
      {"characters.conjugate_contents", "characters", "contents of the conjugate are negated", false, conjugate_contents},
      {"class_algebra.jm_engines", "class_algebra", "word enumeration and content evaluation agree", false, jm_engines},
      {"class_algebra.multiplication", "class_algebra", "commutative, associative, convolution-consistent", false,
       multiplication_laws},
      {"class_algebra.eigenvalues", "class_algebra", "central eigenvalues are multiplicative", false,
       eigenvalue_multiplicativity},
      {"class_algebra.gram_poles", "class_algebra", "Gram form singular exactly for integer N < d", false, gram_poles},
      {"class_algebra.eh_reciprocity", "class_algebra", "sum (-1)^j e_i h_j vanishes for r > 0, d <= 5, r <= 6", false,
       eh_reciprocity},
      {"class_algebra.elementary_lengths", "class_algebra", "e_r at the JM elements is the sum over |pi| = r", false,
       elementary_is_length_sum},
      {"class_algebra.zagier", "class_algebra", "adjacent-transposition determinant matches the product formula", false,
       zagier},
      {"hurwitz.brute_vs_connected", "monotone_hurwitz", "transitive enumeration equals the character method", false,
       brute_vs_connected},
      {"hurwitz.brute_vs_disconnected", "monotone_hurwitz", "full enumeration equals the central-character count", false,
       brute_vs_disconnected},
      {"hurwitz.genus_zero_formula", "monotone_hurwitz", "genus-zero product formula", false, genus_zero_formula},
      {"hurwitz.parity", "monotone_hurwitz", "counts vanish off the Riemann-Hurwitz lattice", false, parity_vanishing},
      {"hurwitz.structural", "monotone_hurwitz", "symmetry, stripping, maximization, signed sums", false,
       structural_identities},
      {"weingarten.tables", "weingarten", "inversion equals the character formula for d <= N", false, weingarten_tables},
      {"weingarten.gram_inverse", "weingarten", "Gram times W is the identity, unstable cases included", false,
       weingarten_inverse},
      {"weingarten.series", "weingarten", "1/N series errors under the tail majorant, ratio tends to (d-1)/N", false,
       weingarten_series_convergence},
      {"weingarten.monte_carlo", "weingarten", "ten correlation patterns within 4 standard errors", false,
       weingarten_monte_carlo},
      {"genfun.sj_residuals", "genfun", "multivariate solution satisfies its equations exactly", false, sj_residuals},
      {"genfun.specialization", "genfun", "s_1 at phi = (1, 0, ...) is s(z)", false, sj_specialization},
      {"genfun.s_series", "genfun", "closed form, functional equation, hypergeometric derivative", false, s_series},
      {"genfun.all_ones_signs", "genfun", "all-ones sums nonnegative, signed sums vanish for d >= 2", false,
       all_ones_signs},
      {"genfun.upper_bound_chain", "genfun", "H(1^d, 1^d) <= total <= p(d)^2 d^2 / 4 H(1^d, 1^d)", false,
       upper_bound_chain},
      {"hciz.genus_expansion", "hciz_model", "genus partial sums within the tail of the exact derivatives", false,
       genus_expansion_closure},
      {"hciz.three_way", "hciz_model", "determinant, Maclaurin sum and Monte Carlo agree on 6 configurations", false,
       three_way},
      {"hciz.free_energy_bound", "hciz_model", "Re F <= M^2 |z| in the unit disc", false, free_energy_bound},
      {"hciz.real_axis", "hciz_model", "F is real on the real axis", false, free_energy_real},
      {"hciz.convergence", "hciz_model", "F_N(0.05) -> C_0 with slope in [-2.6, -1.4] over N = 8..64", true, convergence},
      {"zeros.predicted", "zeros", "predicted zeros have residual < 1e-10", false, predicted_are_zeros},
      {"zeros.midpoints", "zeros", "midpoints between adjacent zeros have residual > 1e-3", false, midpoints_nonzero},
      {"zeros.symmetry", "zeros", "lattice invariant under shifts, scales with the spacing", false, lattice_symmetry},
      {"zeros.uniform_bound", "zeros", "smallest zero >= pi/(2M^2) > 2/(27 M^2)", false, uniform_zero_bound},
      {"zeros.cauchy", "zeros", "Cauchy smallest zero decreases over N = 4..64", false, cauchy_trend},
  };
  return registry;
}

bool VerifyReport::passed() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::vector<std::string> VerifyReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results)
    if (!r.passed) out.push_back(r.name);
  return out;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : results)
    items.push_back({{"name", r.name},
                     {"module", r.module},
                     {"description", r.description},
                     {"passed", r.passed},
                     {"detail", r.detail},
                     {"seconds", r.seconds}});
  return {{"profile", to_string(profile)}, {"passed", passed()}, {"invariants", items}};
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.module << "] " << r.description;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << '\n';
  }
  os << (passed() ? "all invariants passed" : std::to_string(failures().size()) + " invariant(s) failed") << " ("
     << to_string(profile) << " profile)\n";
  return os.str();
}

VerifyReport run_verification(const VerifyContext& context, const std::vector<std::string>& modules) {
  VerifyReport report;
  report.profile = context.profile;
  for (const auto& inv : invariant_registry()) {
    if (inv.full_only && !context.full()) continue;
    if (!modules.empty() && std::find(modules.begin(), modules.end(), inv.module) == modules.end()) continue;
    InvariantResult result{inv.name, inv.module, inv.description, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto outcome = inv.check(context);
      result.passed = outcome.passed;
      result.detail = outcome.detail;
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(result));
  }
  return report;
}

std::shared_ptr<const CharacterTable> corrupted_character_table(int d) {
  auto table = std::make_shared<CharacterTable>(*CharacterTable::get(d));
  const int last = table->index().count() - 1;
  table->corrupt(0, last, table->value(0, last) + 1);
  return table;
}

}  // namespace hcizlab
