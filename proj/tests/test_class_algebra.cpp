#include "doctest.h"
#include "hcizlab/class_algebra.hpp"
#include "hcizlab/error.hpp"

#include <random>

using namespace hcizlab;

namespace {

// Per-permutation coefficient of target in the product of all weakly (or
// strictly) increasing words of r transpositions, by plain recursion.
long long count_words(int d, int r, bool strict, const Permutation& target) {
  long long count = 0;
  std::function<void(int, int, const Permutation&)> rec = [&](int left, int min_t, const Permutation& acc) {
    if (left == 0) {
      if (acc == target) ++count;
      return;
    }
    for (int t = min_t; t <= d; ++t)
      for (int s = 1; s < t; ++s) rec(left - 1, strict ? t + 1 : t, acc * Permutation::transposition(d, s, t));
  };
  rec(r, 2, Permutation::identity(d));
  return count;
}

}  // namespace

TEST_CASE("Jucys-Murphy polynomials") {
  const auto e1 = jm_action_coefficients(1, 2, SymmetricKind::elementary);
  CHECK(e1.coefficient(Partition({2})) == 1);
  CHECK(e1.coefficient(Partition({1, 1})) == 0);
  const auto h2 = jm_action_coefficients(2, 3, SymmetricKind::complete);
  CHECK(h2.coefficient(Partition({1, 1, 1})) == 3);
  CHECK(h2.coefficient(Partition({1, 1, 1})) == count_words(3, 2, false, Permutation::identity(3)));
  CHECK_THROWS_AS(jm_action_coefficients(-1, 3, SymmetricKind::complete), UsageError);
}

TEST_CASE("e_r is the sum of permutations of length r") {
  for (int d = 1; d <= 5; ++d)
    for (int r = 0; r <= 4; ++r) {
      CHECK(jm_action_coefficients(r, d, SymmetricKind::elementary) == permutations_of_length(r, d));
      CHECK(jm_action_coefficients(r, d, SymmetricKind::elementary, JmEngine::enumeration) ==
            permutations_of_length(r, d));
    }
}

TEST_CASE("the two engines agree") {
  for (int d = 1; d <= 5; ++d)
    for (int r = 0; r <= 6; ++r)
      for (auto kind : {SymmetricKind::elementary, SymmetricKind::complete})
        CHECK(jm_action_coefficients(r, d, kind, JmEngine::enumeration) ==
              jm_action_coefficients(r, d, kind, JmEngine::eigenvalues));
}

TEST_CASE("enumeration engine against brute-force words") {
  for (int d = 2; d <= 4; ++d)
    for (int r = 0; r <= 4; ++r) {
      const auto h = jm_action_coefficients(r, d, SymmetricKind::complete, JmEngine::enumeration);
      const auto e = jm_action_coefficients(r, d, SymmetricKind::elementary, JmEngine::enumeration);
      for (const auto& mu : enumerate_partitions(d)) {
        const auto rep = Permutation::of_cycle_type(mu);
        CHECK(h.coefficient(mu) == count_words(d, r, false, rep));
        CHECK(e.coefficient(mu) == count_words(d, r, true, rep));
      }
    }
}

TEST_CASE("multiply") {
  const auto c2 = CentralElement::class_sum(Partition({2}));
  CHECK(c2 * c2 == CentralElement::identity(2));
  const auto t = CentralElement::class_sum(Partition({2, 1}));
  const auto sq = t * t;
  CHECK(sq.coefficient(Partition({1, 1, 1})) == 3);
  CHECK(sq.coefficient(Partition({3})) == 3);
  CHECK(sq.coefficient(Partition({2, 1})) == 0);
  CHECK(t * CentralElement::identity(3) == t);
  CHECK_THROWS_AS(t * c2, UsageError);

  std::mt19937 rng(11);
  for (int d = 2; d <= 5; ++d) {
    const auto parts = enumerate_partitions(d);
    for (int trial = 0; trial < 6; ++trial) {
      CentralElement a(d), b(d), c(d);
      for (int mu = 0; mu < a.index().count(); ++mu) {
        a[mu] = Rational(static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 3));
        b[mu] = Rational(static_cast<int>(rng() % 7) - 3);
        c[mu] = Rational(static_cast<int>(rng() % 5) - 2);
      }
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == multiply_by_convolution(a, b));
    }
  }
}

TEST_CASE("eigenvalues are multiplicative") {
  for (int d = 1; d <= 6; ++d) {
    const auto h2 = jm_action_coefficients(2, d, SymmetricKind::complete);
    const auto e3 = jm_action_coefficients(3, d, SymmetricKind::elementary);
    const auto prod = h2 * e3;
    const auto table = CharacterTable::get(d);
    for (int l = 0; l < table->index().count(); ++l) {
      CHECK(prod.eigenvalue(l) == h2.eigenvalue(l) * e3.eigenvalue(l));
      CHECK(h2.eigenvalue(l) == Rational(complete_homogeneous(2, table->contents(l))));
    }
  }
}

TEST_CASE("e-h reciprocity") {
  CHECK(eh_reciprocity_check(1, 6));
  CHECK(eh_reciprocity_check(2, 6));
  CHECK(eh_reciprocity_check(5, 6));
  CHECK(eh_reciprocity_check(7, 8));
}

TEST_CASE("q-distance matrices") {
  const QDistanceMatrix all2(2, GeneratingSet::all_transpositions);
  const auto m = all2.at(Rational(1, 3));
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == Rational(1, 3));
  const auto g = all2.gram_form(5);
  CHECK(g(0, 0) == 25);
  CHECK(g(0, 1) == 5);
  const QDistanceMatrix adj3(3, GeneratingSet::adjacent_transpositions);
  CHECK(adj3.distances()(0, 5) == 3);  // identity to [3,2,1]
  CHECK(adj3.distances() == adj3.distances().transpose());
  CHECK_THROWS_AS(QDistanceMatrix(7, GeneratingSet::all_transpositions), CapacityError);
  CHECK_THROWS_AS(QDistanceMatrix(3, GeneratingSet::adjacent_transpositions).gram_form(3), UsageError);
}

TEST_CASE("adjacent-transposition determinant identity") {
  const QDistanceMatrix adj2(2, GeneratingSet::adjacent_transpositions);
  CHECK(bareiss_determinant(adj2.symbolic()) == IntPolynomial(std::vector<BigInt>{1, 0, -1}));
  const QDistanceMatrix adj3(3, GeneratingSet::adjacent_transpositions);
  const IntPolynomial one_minus_q2(std::vector<BigInt>{1, 0, -1});
  const IntPolynomial one_minus_q6 = IntPolynomial(BigInt(1)) - IntPolynomial::monomial(6);
  IntPolynomial expected = one_minus_q6;
  for (int k = 0; k < 6; ++k) expected *= one_minus_q2;
  CHECK(bareiss_determinant(adj3.symbolic()) == expected);
  for (int d = 2; d <= 4; ++d) CHECK(zagier_determinant_check(d));
}

TEST_CASE("Gram determinant") {
  CHECK(gram_determinant_formula(2, 3) == 72);
  CHECK(gram_determinant_check(2, 3));
  CHECK(gram_determinant_formula(2, 1) == 0);
  CHECK(gram_determinant_check(2, 1));
  CHECK(gram_determinant_formula(3, 2) == 0);
  CHECK(gram_determinant_check(3, 2));
  for (int d = 1; d <= 4; ++d)
    for (int N = 1; N <= 6; ++N) CHECK(gram_determinant_check(d, N));
  // Singular exactly for N < d.
  for (int d = 1; d <= 5; ++d)
    for (int N = 1; N <= d + 2; ++N) {
      const QDistanceMatrix omega(d, GeneratingSet::all_transpositions);
      CHECK((bareiss_determinant(omega.gram_form(N)) == 0) == (N < d));
    }
}
