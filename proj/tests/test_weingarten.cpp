#include "doctest.h"
#include "hcizlab/class_algebra.hpp"
#include "hcizlab/error.hpp"
#include "hcizlab/weingarten.hpp"

#include <functional>
#include <map>

using namespace hcizlab;

namespace {

Rational q(long long n, long long d = 1) { return Rational(n, d); }

bool is_identity(const DenseMatrix<Rational>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

// Known d = 3 values, written out by hand.
Rational wg3(const Partition& mu, long long N) {
  const Rational den = Rational((N * N - 1) * (N * N - 4));
  if (mu == Partition({1, 1, 1})) return Rational(N * N - 2) / (den * N);
  if (mu == Partition({2, 1})) return Rational(-1) / den;
  return Rational(2) / (den * N);
}

// E|u_11|^{2k} = k! (N-1)! / (N+k-1)!, from the Beta(1, N-1) law of |u_11|^2.
Rational moment_u11(int k, int N) { return Rational(factorial(k) * factorial(N - 1)) / Rational(factorial(N + k - 1)); }

// Per-permutation counts of monotone transposition words of length r.
std::map<std::vector<int>, long long> monotone_word_products(int d, int r) {
  std::map<std::vector<int>, long long> out;
  std::function<void(const Permutation&, int, int)> rec = [&](const Permutation& p, int len, int last) {
    if (len == r) {
      ++out[p.one_line()];
      return;
    }
    for (int t = std::max(2, last); t <= d; ++t)
      for (int s = 1; s < t; ++s) rec(p * Permutation::transposition(d, s, t), len + 1, t);
  };
  rec(Permutation::identity(d), 0, 2);
  return out;
}

}  // namespace

TEST_CASE("Gram matrices") {
  for (int N = 1; N <= 4; ++N) {
    const auto g = gram_matrix(1, N);
    CHECK(g.rows() == 1);
    CHECK(g(0, 0) == N);
  }
  for (int N = 2; N <= 5; ++N) {
    const auto g = gram_matrix(2, N);
    REQUIRE(g.rows() == 2);
    CHECK(g(0, 0) == N * N);
    CHECK(g(0, 1) == N);
    CHECK(g(1, 0) == N);
    CHECK(g(1, 1) == N * N);
  }
  CHECK(gram_matrix(3, 2).rows() == 5);
  CHECK(gram_matrix(4, 2).rows() == 14);
  CHECK(restricted_basis_size(4, 3) == 23);
  for (int d = 1; d <= 4; ++d)
    for (int N = d; N <= d + 2; ++N) CHECK(gram_matrix(d, N) == QDistanceMatrix(d, GeneratingSet::all_transpositions).gram_form(N));
  CHECK_THROWS_AS(gram_matrix(8, 8), CapacityError);
  CHECK_THROWS_AS(gram_matrix(0, 3), UsageError);
}

TEST_CASE("exact Weingarten tables") {
  for (int N = 1; N <= 6; ++N) CHECK(weingarten_exact(1, N).class_value(Partition({1})) == q(1, N));
  for (long long N = 2; N <= 7; ++N) {
    const auto t = weingarten_exact(2, static_cast<int>(N));
    CHECK(t.class_value(Partition({1, 1})) == q(1, N * N - 1));
    CHECK(t.class_value(Partition({2})) == q(-1, N * (N * N - 1)));
  }
  for (int N = 3; N <= 7; ++N) {
    const auto t = weingarten_exact(3, N);
    for (const auto& mu : enumerate_partitions(3)) CHECK(t.class_value(mu) == wg3(mu, N));
  }
  SUBCASE("Gram times W is the identity") {
    for (auto [d, N] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {4, 4}, {4, 6}, {3, 2}, {4, 2}, {4, 3}, {2, 1}, {5, 2}}) {
      CAPTURE(d);
      CAPTURE(N);
      const auto t = weingarten_exact(d, N);
      CHECK(t.range == (d <= N ? WeingartenRange::stable : WeingartenRange::unstable));
      const DenseMatrix<Rational> prod = to_rational(gram_matrix(d, N)) * t.matrix();
      CHECK(is_identity(prod));
    }
  }
  SUBCASE("unstable tables are keyed by basis pairs") {
    const auto t = weingarten_exact(3, 2);
    CHECK(t.basis.size() == 5);
    CHECK_THROWS_AS(t.class_value(Partition({3})), UsageError);
    const auto reversed = Permutation::from_one_line({3, 2, 1});
    CHECK_THROWS_AS(t.value(reversed, reversed), UsageError);
    CHECK(t.value(t.basis[0], t.basis[1]) == t.pair_values(0, 1));
  }
}

TEST_CASE("character formula matches exact inversion") {
  for (int d = 1; d <= 4; ++d)
    for (int N = d; N <= 8; ++N) {
      CAPTURE(d);
      CAPTURE(N);
      const auto a = weingarten_exact(d, N);
      const auto b = weingarten_by_characters(d, N);
      CHECK(a.classes == b.classes);
      CHECK(a.class_values == b.class_values);
    }
  CHECK(weingarten_by_characters(1, 4).class_value(Partition({1})) == q(1, 4));
  CHECK_THROWS_AS(weingarten_by_characters(3, 2), DomainError);
}

TEST_CASE("Weingarten series") {
  SUBCASE("d = 2 geometric series") {
    const auto s = weingarten_series(2, 5, 12);
    const int id = 1, swap = 0;  // (1,1) is last in reverse-lex order
    REQUIRE(s.classes[static_cast<std::size_t>(id)] == Partition({1, 1}));
    for (int r = 0; r <= 12; ++r) {
      CHECK(s.coefficients[static_cast<std::size_t>(id)][static_cast<std::size_t>(r)] == (r % 2 == 0 ? 1 : 0));
      CHECK(s.coefficients[static_cast<std::size_t>(swap)][static_cast<std::size_t>(r)] == (r % 2 == 1 ? -1 : 0));
    }
    Rational expected(0);
    for (int r = 0; r <= 12; r += 2) expected += q(1, 25) / Rational(ipow(BigInt(5), r));
    CHECK(s.partial_sums[static_cast<std::size_t>(id)] == expected);
  }
  SUBCASE("coefficients count monotone words") {
    for (int d = 2; d <= 4; ++d)
      for (int r = 0; r <= 5; ++r) {
        const auto s = weingarten_series(d, d, r);
        const auto words = monotone_word_products(d, r);
        for (const auto& p : all_permutations(d)) {
          const auto it = words.find(p.one_line());
          const long long count = it == words.end() ? 0 : it->second;
          std::size_t mu = 0;
          while (!(s.classes[mu] == cycle_type(p))) ++mu;
          CHECK(s.coefficients[mu][static_cast<std::size_t>(r)] == (r % 2 == 0 ? count : -count));
        }
      }
  }
  SUBCASE("partial sums converge to the exact value") {
    // At order 20 the identity class is inside 1e-15; the classes (3) and
    // (2,1) sit at 1.4e-14 there (their last kept term has the wrong parity)
    // and cross 1e-15 at order 22.
    const auto exact = weingarten_exact(3, 10);
    auto rel_error = [&](const WeingartenSeries& s, std::size_t m) {
      const Rational w = exact.class_value(s.classes[m]);
      return std::abs(Rational((s.partial_sums[m] - w) / w).convert_to<double>());
    };
    const auto s20 = weingarten_series(3, 10, 20);
    REQUIRE(s20.classes[2] == Partition::ones(3));
    CHECK(rel_error(s20, 2) < 1e-15);
    for (std::size_t m = 0; m < 3; ++m) CHECK(rel_error(s20, m) < 2e-14);
    const auto s22 = weingarten_series(3, 10, 22);
    for (std::size_t m = 0; m < 3; ++m) CHECK(rel_error(s22, m) < 1e-15);
  }
  SUBCASE("tail bound dominates every truncation error") {
    for (auto [d, N] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}, {4, 9}}) {
      const auto exact = weingarten_by_characters(d, N);
      for (int R : {1, 4, 9}) {
        const auto s = weingarten_series(d, N, R);
        for (std::size_t m = 0; m < s.classes.size(); ++m) {
          const double err = std::abs(Rational(exact.class_value(s.classes[m]) - s.partial_sums[m]).convert_to<double>());
          CHECK(err <= s.tail_bound * (1 + 1e-12));
        }
      }
    }
    CHECK(std::isinf(weingarten_series(4, 3, 5).tail_bound));
  }
  SUBCASE("observed ratio approaches (d-1)/N") {
    for (auto [d, N] : std::vector<std::pair<int, int>>{{3, 3}, {3, 7}, {4, 4}, {4, 8}}) {
      CAPTURE(d);
      CAPTURE(N);
      const auto exact = weingarten_by_characters(d, N);
      const double target = (d - 1.0) / N;
      const double early = observed_convergence_ratio(weingarten_series(d, N, 12), exact);
      const double late = observed_convergence_ratio(weingarten_series(d, N, 30), exact);
      CHECK(late <= target * 1.01);
      CHECK(std::abs(late - target) <= std::abs(early - target) + 1e-12);
    }
  }
}

TEST_CASE("exact correlations") {
  for (int N = 1; N <= 6; ++N) {
    CAPTURE(N);
    CHECK(correlation({1}, {1}, {1}, {1}, N) == q(1, N));
    CHECK(correlation({1}, {}, {1}, {}, N) == 0);
    CHECK(correlation({1, 1}, {1, 1}, {1, 1}, {1, 1}, N) == q(2, N * (N + 1)));
    for (int k = 1; k <= 4; ++k) {
      const IndexList ones(static_cast<std::size_t>(k), 1);
      CHECK(correlation(ones, ones, ones, ones, N) == moment_u11(k, N));
    }
  }
  for (long long N = 2; N <= 5; ++N) {
    CHECK(correlation({1, 2}, {1, 2}, {1, 2}, {1, 2}, static_cast<int>(N)) == q(1, N * N - 1));
    CHECK(correlation({1, 2}, {1, 2}, {1, 2}, {2, 1}, static_cast<int>(N)) == q(-1, N * (N * N - 1)));
  }
  // Row normalization: sum_j E[|u_11|^4 |u_1j|^2] = E|u_11|^4, across the unstable range.
  for (int N = 2; N <= 3; ++N) {
    Rational total(0);
    for (int j = 1; j <= N; ++j) total += correlation({1, 1, 1}, {1, 1, 1}, {1, 1, j}, {1, 1, j}, N);
    CHECK(total == moment_u11(2, N));
  }
  // Entries of distinct rows in a fixed column against the column norm.
  Rational col(0);
  for (int i = 1; i <= 2; ++i) col += correlation({1, 2, i}, {1, 2, i}, {1, 1, 1}, {1, 1, 1}, 2);
  CHECK(col == correlation({1, 2}, {1, 2}, {1, 1}, {1, 1}, 2));
  CHECK_THROWS_AS(correlation({1}, {1}, {1, 1}, {1}, 3), UsageError);
  CHECK_THROWS_AS(correlation({4}, {4}, {1}, {1}, 3), UsageError);
}

TEST_CASE("Haar sampling") {
  HaarSampler sampler(5, 17);
  for (int k = 0; k < 50; ++k) CHECK(unitarity_defect(sampler.next()) < 1e-12);
  CHECK(sampler.draws() == 50);

  HaarSampler a(4, 99), b(4, 99);
  for (int k = 0; k < 3; ++k) CHECK(a.next() == b.next());

  const auto second = monte_carlo_correlation({1}, {1}, {1}, {1}, 3, 100000, 7);
  CHECK(std::abs(second.mean.real() - 1.0 / 3) <= 4 * second.se_re);
  const auto fourth = monte_carlo_correlation({1, 1}, {1, 1}, {1, 1}, {1, 1}, 3, 100000, 8);
  CHECK(std::abs(fourth.mean.real() - 1.0 / 6) <= 4 * fourth.se_re);
  const auto first = monte_carlo_correlation({1}, {}, {1}, {}, 4, 100000, 9);
  CHECK(std::abs(first.mean.real()) <= 4 * first.se_re);
  CHECK(std::abs(first.mean.imag()) <= 4 * first.se_im);
  const auto unbalanced = monte_carlo_correlation({1, 2}, {}, {1, 2}, {}, 3, 100000, 10);
  CHECK(std::abs(unbalanced.mean.real()) <= 4 * unbalanced.se_re);
  CHECK(std::abs(unbalanced.mean.imag()) <= 4 * unbalanced.se_im);
  CHECK_THROWS_AS(monte_carlo_correlation({1}, {1}, {1}, {1}, 3, 10, 1), UsageError);
}

TEST_CASE("Haar sampling is left invariant") {
  // Rotate by a fixed non-diagonal unitary and compare against exact moments.
  const int N = 3;
  ComplexMatrix v(N, N);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) v(i, j) = std::polar(1 / std::sqrt(double(N)), 2 * pi * i * j / N);
  const auto est = haar_average(N, 60000, 21, [&](const ComplexMatrix& u) {
    const ComplexMatrix w = v * u;
    return Complex(std::norm(w(0, 0)) * std::norm(w(1, 1)), 0.0);
  });
  const double exact = correlation({1, 2}, {1, 2}, {1, 2}, {1, 2}, N).convert_to<double>();
  CHECK(std::abs(est.mean.real() - exact) <= 4 * est.se_re);
}

TEST_CASE("Monte Carlo is independent of the thread count") {
  set_thread_count(1);
  const auto one = monte_carlo_correlation({1, 2}, {1, 2}, {1, 2}, {2, 1}, 3, 9000, 5);
  set_thread_count(3);
  const auto three = monte_carlo_correlation({1, 2}, {1, 2}, {1, 2}, {2, 1}, 3, 9000, 5);
  set_thread_count(0);
  CHECK(one.mean == three.mean);
  CHECK(one.se_re == three.se_re);
}

TEST_CASE("JSON export") {
  const auto j = to_json(weingarten_exact(2, 5));
  CHECK(j["d"] == 2);
  CHECK(j["N"] == 5);
  CHECK(j["range"] == "stable");
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["entries"][0]["class"] == std::vector<int>{2});
  CHECK(j["entries"][0]["numerator"] == "-1");
  CHECK(j["entries"][0]["denominator"] == "120");
  CHECK(j["entries"][1]["numerator"] == "1");
  CHECK(j["entries"][1]["denominator"] == "24");
  const auto u = to_json(weingarten_exact(3, 2));
  CHECK(u["range"] == "unstable");
  CHECK(u["entries"].size() == 25);
}
