#pragma once

// Partitions, permutations, and the group-theoretic predicates used by every
// other module. Permutations act on {1..d}; one-line form is exposed 1-based
// and stored 0-based. Composition is (p * q)(k) = p(q(k)) everywhere.

#include "hcizlab/numeric.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcizlab {

/// Weakly decreasing list of positive parts. Construction sorts the input.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "3,1,1" (also accepts "3 1 1"); "" is the empty partition.
  static Partition parse(std::string_view text);
  static Partition ones(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }
  /// The transposition class (2,1^{d-2}).
  static Partition transposition(int d);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  /// multiplicities()[v] = number of parts equal to v, indexed 0..max part.
  std::vector<int> multiplicities() const;
  /// Multiset union of parts.
  Partition join(const Partition& other) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of d in reverse lexicographic order: (d), (d-1,1), ..., (1^d).
/// d = 0 yields the single empty partition; d < 0 throws.
std::vector<Partition> enumerate_partitions(int d);

/// Number of partitions p(d), by Euler's pentagonal recurrence.
BigInt partition_count(int d);

/// Dense index over the partitions of one degree in canonical order.
class PartitionIndex {
 public:
  explicit PartitionIndex(int d);
  int degree() const { return d_; }
  int count() const { return static_cast<int>(list_.size()); }
  const std::vector<Partition>& partitions() const { return list_; }
  const Partition& operator[](int i) const { return list_[static_cast<std::size_t>(i)]; }
  int index_of(const Partition& p) const;

 private:
  int d_;
  std::vector<Partition> list_;
  std::map<Partition, int> lookup_;
};

/// |Aut(alpha)|: product over distinct part values of (multiplicity)!.
BigInt aut_order(const Partition& alpha);
/// z_alpha = prod v^{m_v} m_v!, the centralizer order of a permutation of type alpha.
BigInt centralizer_order(const Partition& alpha);
/// |C_alpha| = d! / z_alpha.
BigInt class_size(const Partition& alpha);

class Permutation {
 public:
  Permutation() = default;
  /// From 1-based one-line notation; throws unless it is a bijection of {1..d}.
  static Permutation from_one_line(const std::vector<int>& one_line);
  static Permutation identity(int d);
  /// The transposition (s t), 1-based points.
  static Permutation transposition(int d, int s, int t);
  /// A fixed representative of the class alpha: cycles on consecutive points.
  static Permutation of_cycle_type(const Partition& alpha);

  int degree() const { return static_cast<int>(images_.size()); }
  /// Image of a 0-based point.
  int operator()(int k) const { return images_[static_cast<std::size_t>(k)]; }
  std::vector<int> one_line() const;
  const std::vector<int>& images0() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

  std::string str() const;

 private:
  explicit Permutation(std::vector<int> images0) : images_(std::move(images0)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  std::vector<int> images_;
};

/// (p * q)(k) = p(q(k)). Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

Partition cycle_type(const Permutation& p);
int cycle_count(const Permutation& p);
int inversions(const Permutation& p);
/// Length of the longest strictly decreasing subsequence of the one-line form.
int longest_decreasing_subsequence(const Permutation& p);

/// True iff the group generated by gens acts transitively on {1..d}.
bool is_transitive(std::span<const Permutation> gens, int d);

/// All of S(d) in lexicographic order of one-line form.
std::vector<Permutation> all_permutations(int d);
/// The permutations of S(d) with no decreasing subsequence of length N+1.
std::vector<Permutation> enumerate_restricted(int d, int N);
/// Members of the conjugacy class alpha, lexicographic order.
std::vector<Permutation> class_members(const Partition& alpha);

/// Lexicographic rank of p among all permutations of its degree.
std::uint32_t permutation_rank(const Permutation& p);
Permutation permutation_unrank(int d, std::uint32_t rank);

/// Union-find over {0..n-1}.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int find(int x);
  bool unite(int a, int b);
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_;
};

}  // namespace hcizlab
