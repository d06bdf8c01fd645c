#pragma once

// The centre Z(d) of the group algebra of S(d), Jucys-Murphy specializations,
// and the q-distance / Gram matrices with their determinant identities.
//
// A CentralElement stores, for every class mu, the common coefficient of each
// permutation of type mu (the permutation basis). The coefficient of the class
// sum C_mu is the same number; the coefficient in the basis of normalized
// class sums differs by |C_mu|. Use class_sum_weight() when the latter is needed.

#include "hcizlab/characters.hpp"

#include <vector>

namespace hcizlab {

class CentralElement {
 public:
  explicit CentralElement(int d);

  static CentralElement identity(int d);
  /// The class sum C_mu: coefficient 1 on every permutation of type mu.
  static CentralElement class_sum(const Partition& mu);

  int degree() const { return index_->degree(); }
  const PartitionIndex& index() const { return *index_; }
  const Rational& operator[](int mu) const { return coeffs_[static_cast<std::size_t>(mu)]; }
  Rational& operator[](int mu) { return coeffs_[static_cast<std::size_t>(mu)]; }
  const Rational& coefficient(const Partition& mu) const { return coeffs_[static_cast<std::size_t>(index_->index_of(mu))]; }
  /// Total weight of the class mu: per-permutation coefficient times |C_mu|.
  Rational class_sum_weight(const Partition& mu) const;

  /// Scalar by which this element acts on the irreducible lambda.
  Rational eigenvalue(int lambda) const;
  std::vector<Rational> eigenvalues() const;
  /// Rebuilds an element from its eigenvalues on all irreducibles.
  static CentralElement from_eigenvalues(int d, const std::vector<Rational>& eigenvalues);

  CentralElement& operator+=(const CentralElement& other);
  CentralElement& operator-=(const CentralElement& other);
  CentralElement& operator*=(const Rational& scalar);
  friend CentralElement operator+(CentralElement a, const CentralElement& b) { return a += b; }
  friend CentralElement operator-(CentralElement a, const CentralElement& b) { return a -= b; }
  friend bool operator==(const CentralElement& a, const CentralElement& b) {
    return a.degree() == b.degree() && a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const PartitionIndex> index_;
  std::vector<Rational> coeffs_;
};

/// Product in the group algebra via eigenvalue multiplication.
CentralElement multiply(const CentralElement& a, const CentralElement& b);
/// Product by explicit convolution over permutation pairs (d <= 6).
CentralElement multiply_by_convolution(const CentralElement& a, const CentralElement& b);
inline CentralElement operator*(const CentralElement& a, const CentralElement& b) { return multiply(a, b); }

enum class SymmetricKind { elementary, complete };
enum class JmEngine { enumeration, eigenvalues };

/// Class expansion of e_r or h_r evaluated at the Jucys-Murphy elements.
/// The enumeration engine walks monotone transposition words (d <= 7); the
/// eigenvalue engine reconstructs from content evaluations.
CentralElement jm_action_coefficients(int r, int d, SymmetricKind kind, JmEngine engine = JmEngine::eigenvalues);

/// sum_{|pi| = r} pi, built by filtering S(d) on d - c(pi) = r.
CentralElement permutations_of_length(int r, int d);

/// sum_{i+j=r} (-1)^j e_i h_j == [r == 0] * identity for all r <= r_max.
bool eh_reciprocity_check(int d, int r_max);

enum class GeneratingSet { all_transpositions, adjacent_transpositions };

/// The q-distance matrix of the Cayley graph of S(d), rows and columns in
/// lexicographic order of one-line forms. Entries are q^{|g^-1 h|}.
class QDistanceMatrix {
 public:
  QDistanceMatrix(int d, GeneratingSet gens);

  int degree() const { return d_; }
  GeneratingSet generating_set() const { return gens_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  /// Word length |g^-1 h| for rows g, columns h.
  const Eigen::MatrixXi& distances() const { return distances_; }
  int size() const { return static_cast<int>(elements_.size()); }

  DenseMatrix<IntPolynomial> symbolic() const;
  DenseMatrix<Rational> at(const Rational& q) const;
  /// N^d Omega_{1/N} = [N^{c(g^-1 h)}]; only for all transpositions.
  DenseMatrix<BigInt> gram_form(int N) const;

 private:
  int d_;
  GeneratingSet gens_;
  std::vector<Permutation> elements_;
  Eigen::MatrixXi distances_;
};

/// The product formula prod_{i=1}^{d-1} (1 - q^{i(i+1)})^{binom(d,i+1)(i-1)!(d-i)!}.
IntPolynomial zagier_product(int d);

/// Checks the adjacent-transposition determinant against the product formula.
/// d <= 4 by fraction-free elimination over Z[q]; d = 5 by evaluating both
/// sides at enough points modulo enough primes to pin every coefficient.
bool zagier_determinant_check(int d);

/// prod_lambda (prod_box (N + c))^{dim^2}.
BigInt gram_determinant_formula(int d, int N);
/// Exact determinant of [N^{c(rho^-1 sigma)}] against the formula.
bool gram_determinant_check(int d, int N);

}  // namespace hcizlab
