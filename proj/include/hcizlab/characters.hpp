#pragma once

// Irreducible characters of S(d): hook-length dimensions, box contents, and
// Murnaghan-Nakayama character values. All arithmetic is exact.

#include "hcizlab/combinatorics.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace hcizlab {

/// Contents j - i of the boxes (i, j) of lambda, 0-indexed, row by row.
std::vector<int> contents(const Partition& lambda);

/// Number of standard Young tableaux of shape lambda (hook-length formula).
BigInt dimension(const Partition& lambda);

/// Elementary symmetric e_r and complete homogeneous h_r of integer values.
BigInt elementary_symmetric(int r, const std::vector<int>& values);
BigInt complete_homogeneous(int r, const std::vector<int>& values);
/// h_0..h_rmax at once.
std::vector<BigInt> complete_homogeneous_all(int r_max, const std::vector<int>& values);

/// Evaluates f on the content multiset of lambda. f is any symmetric function
/// supplied as an evaluator on the multiset.
Rational central_eigenvalue(const std::function<Rational(const std::vector<int>&)>& f, const Partition& lambda);

/// prod over boxes of (1 + q c).
Rational content_product(const Partition& lambda, const Rational& q);

/// Murnaghan-Nakayama value chi^lambda(mu); memoized in a process-wide cache.
BigInt character(const Partition& lambda, const Partition& mu);

/// The full character table of S(d). Rows are irreducibles lambda and columns
/// are classes mu, both in canonical partition order.
class CharacterTable {
 public:
  explicit CharacterTable(int d);

  int degree() const { return index_.degree(); }
  const PartitionIndex& index() const { return index_; }
  const BigInt& value(int lambda, int mu) const { return values_(lambda, mu); }
  const BigInt& value(const Partition& lambda, const Partition& mu) const {
    return values_(index_.index_of(lambda), index_.index_of(mu));
  }
  const BigInt& dim(int lambda) const { return dims_[static_cast<std::size_t>(lambda)]; }
  const BigInt& class_size(int mu) const { return class_sizes_[static_cast<std::size_t>(mu)]; }
  const std::vector<int>& contents(int lambda) const { return contents_[static_cast<std::size_t>(lambda)]; }
  const DenseMatrix<BigInt>& matrix() const { return values_; }

  /// Overwrites one entry; exists so verification can be exercised against a
  /// deliberately broken table.
  void corrupt(int lambda, int mu, const BigInt& v) { values_(lambda, mu) = v; }

  /// Shared, lazily built table for degree d.
  static std::shared_ptr<const CharacterTable> get(int d);

 private:
  PartitionIndex index_;
  DenseMatrix<BigInt> values_;
  std::vector<BigInt> dims_;
  std::vector<BigInt> class_sizes_;
  std::vector<std::vector<int>> contents_;
};

/// sum_lambda chi(mu) chi(nu) == z_mu [mu == nu] for every pair of classes.
bool column_orthogonality_holds(const CharacterTable& table);
/// sum_lambda dim^2 == d! and chi^lambda(1^d) == dim(lambda).
bool dimensions_consistent(const CharacterTable& table);

}  // namespace hcizlab
