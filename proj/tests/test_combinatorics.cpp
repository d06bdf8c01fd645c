#include "doctest.h"
#include "hcizlab/combinatorics.hpp"
#include "hcizlab/error.hpp"

#include <random>

using namespace hcizlab;

namespace {

// Partitions of n with parts at most k, by the standard two-index recurrence.
long long partitions_bounded(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partitions_bounded(n - k, k) + partitions_bounded(n, k - 1);
}

BigInt catalan(int n) { return divexact(binomial(2 * n, n), BigInt(n + 1)); }

// All subsequences, exhaustively.
int ldsBrute(const std::vector<int>& line) {
  const int n = static_cast<int>(line.size());
  int best = 0;
  for (int mask = 1; mask < (1 << n); ++mask) {
    int prev = 1 << 30, len = 0;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (line[static_cast<std::size_t>(i)] >= prev) ok = false;
      prev = line[static_cast<std::size_t>(i)];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

}  // namespace

TEST_CASE("enumerate_partitions") {
  CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition({1})});
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(8).size() == 22);
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0).front().empty());
  CHECK_THROWS_AS(enumerate_partitions(-1), UsageError);
  const auto p4 = enumerate_partitions(4);
  CHECK(p4[0] == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4[2] == Partition({2, 2}));
  CHECK(p4[3] == Partition({2, 1, 1}));
  CHECK(p4[4] == Partition({1, 1, 1, 1}));
  for (int d = 1; d <= 20; ++d) {
    CHECK(static_cast<long long>(enumerate_partitions(d).size()) == partitions_bounded(d, d));
    CHECK(partition_count(d) == partitions_bounded(d, d));
  }
}

TEST_CASE("partition construction sorts and validates") {
  CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition::parse("2,1,1") == Partition({2, 1, 1}));
  CHECK(Partition::parse("3 2") == Partition({3, 2}));
  CHECK_THROWS_AS(Partition({2, 0}), UsageError);
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK(Partition({2, 1}).size() == 3);
  CHECK(Partition({2, 1}).length() == 2);
}

TEST_CASE("aut_order and class_size") {
  CHECK(aut_order(Partition({1, 1, 1})) == 6);
  CHECK(aut_order(Partition({2, 1})) == 1);
  CHECK(aut_order(Partition({2, 2, 1, 1, 1})) == 12);
  CHECK(class_size(Partition({1, 1})) == 1);
  CHECK(class_size(Partition({2})) == 1);
  CHECK(class_size(Partition({2, 1})) == 3);
  for (int d = 1; d <= 7; ++d) {
    BigInt total(0);
    for (const auto& a : enumerate_partitions(d)) total += class_size(a);
    CHECK(total == factorial(d));
  }
  // Against direct counting of class members.
  for (int d = 1; d <= 5; ++d)
    for (const auto& a : enumerate_partitions(d)) CHECK(class_size(a) == static_cast<long>(class_members(a).size()));
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(Permutation::identity(4)) == Partition({1, 1, 1, 1}));
  CHECK(cycle_type(Permutation::from_one_line({2, 1, 4, 3})) == Partition({2, 2}));
  CHECK(cycle_type(Permutation::from_one_line({2, 3, 1, 5, 4})) == Partition({3, 2}));
  for (int d = 1; d <= 6; ++d)
    for (const auto& a : enumerate_partitions(d)) CHECK(cycle_type(Permutation::of_cycle_type(a)) == a);
}

TEST_CASE("compose follows (p q)(k) = p(q(k))") {
  const auto t12 = Permutation::from_one_line({2, 1});
  CHECK((t12 * t12).is_identity());
  CHECK(Permutation::from_one_line({2, 1, 3}) * Permutation::from_one_line({1, 3, 2}) ==
        Permutation::from_one_line({2, 3, 1}));
  const auto p = Permutation::from_one_line({3, 1, 4, 2});
  CHECK(p * Permutation::identity(4) == p);
  CHECK((p * p.inverse()).is_identity());
  CHECK_THROWS_AS(p * t12, UsageError);
  CHECK_THROWS_AS(Permutation::from_one_line({1, 1}), UsageError);
}

TEST_CASE("conjugation preserves cycle type") {
  for (int d = 1; d <= 5; ++d) {
    const auto all = all_permutations(d);
    for (const auto& p : all)
      for (const auto& r : all) CHECK(cycle_type(r * p * r.inverse()) == cycle_type(p));
  }
  std::mt19937 rng(7);
  const auto s6 = all_permutations(6);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& p = s6[rng() % s6.size()];
    const auto& r = s6[rng() % s6.size()];
    CHECK(cycle_type(r * p * r.inverse()) == cycle_type(p));
    CHECK(cycle_type(p.inverse()) == cycle_type(p));
  }
}

TEST_CASE("cycle counts give the rising factorial") {
  for (int d = 1; d <= 6; ++d) {
    const auto all = all_permutations(d);
    for (int N = 1; N <= 5; ++N) {
      BigInt total(0);
      for (const auto& p : all) total += ipow(BigInt(N), cycle_count(p));
      BigInt rising(1);
      for (int k = 0; k < d; ++k) rising *= N + k;
      CHECK(total == rising);
    }
  }
}

TEST_CASE("is_transitive") {
  const auto t12_2 = Permutation::transposition(2, 1, 2);
  CHECK(is_transitive(std::vector{t12_2}, 2));
  const auto t12 = Permutation::transposition(3, 1, 2);
  const auto t23 = Permutation::transposition(3, 2, 3);
  CHECK_FALSE(is_transitive(std::vector{t12}, 3));
  CHECK(is_transitive(std::vector{t12, t23}, 3));
  CHECK(is_transitive(std::vector<Permutation>{}, 1));
  CHECK_FALSE(is_transitive(std::vector<Permutation>{}, 2));
}

TEST_CASE("longest decreasing subsequence") {
  CHECK(longest_decreasing_subsequence(Permutation::identity(5)) == 1);
  CHECK(longest_decreasing_subsequence(Permutation::from_one_line({5, 4, 3, 2, 1})) == 5);
  CHECK(longest_decreasing_subsequence(Permutation::from_one_line({3, 1, 4, 2})) == 2);
  for (int d = 1; d <= 6; ++d)
    for (const auto& p : all_permutations(d)) CHECK(longest_decreasing_subsequence(p) == ldsBrute(p.one_line()));
}

TEST_CASE("enumerate_restricted") {
  for (int d = 1; d <= 6; ++d) CHECK(enumerate_restricted(d, 1).size() == 1);
  CHECK(enumerate_restricted(4, 2).size() == 14);
  CHECK(enumerate_restricted(3, 3).size() == 6);
  for (int d = 1; d <= 8; ++d) CHECK(BigInt(static_cast<long>(enumerate_restricted(d, 2).size())) == catalan(d));
}

TEST_CASE("rank and unrank are inverse") {
  for (int d = 1; d <= 5; ++d) {
    std::uint32_t expected = 0;
    for (const auto& p : all_permutations(d)) {
      CHECK(permutation_rank(p) == expected);
      CHECK(permutation_unrank(d, expected) == p);
      ++expected;
    }
  }
}
