#pragma once

// Unitary Weingarten calculus. For d <= N the Weingarten function is a class
// function of rho^-1 sigma; for d > N the Gram matrix over all of S(d) is
// singular and we work over the basis of permutations with no decreasing
// subsequence longer than N, where the Gram matrix is invertible.

#include "hcizlab/characters.hpp"
#include "hcizlab/haar.hpp"

#include <json.hpp>

#include <memory>
#include <vector>

namespace hcizlab {

enum class WeingartenRange { stable, unstable };

struct WeingartenTable {
  int d = 0;
  int N = 0;
  WeingartenRange range = WeingartenRange::stable;
  /// Stable range: value per cycle type, in enumerate_partitions(d) order.
  std::vector<Partition> classes;
  std::vector<Rational> class_values;
  /// Unstable range: restricted basis and the full inverse Gram matrix.
  std::vector<Permutation> basis;
  DenseMatrix<Rational> pair_values;

  Rational class_value(const Partition& mu) const;
  /// W(rho, sigma). In the unstable range both must lie in the basis.
  Rational value(const Permutation& rho, const Permutation& sigma) const;
  /// Row/column labels of the matrix form: S(d) or the restricted basis.
  std::vector<Permutation> index_set() const;
  DenseMatrix<Rational> matrix() const;
};

/// Largest Gram matrix we materialize.
inline constexpr long long kMaxGramRows = 5040;
/// Largest matrix handed to exact inversion: all of S(5) takes about two
/// seconds, while S(6) minus one row did not finish in fifteen minutes.
inline constexpr long long kMaxInverseRows = 150;

/// Size of the restricted basis: sum of dim(lambda)^2 over length(lambda) <= N.
BigInt restricted_basis_size(int d, int N);

/// [N^{c(rho^-1 sigma)}] over the restricted basis (all of S(d) when d <= N).
DenseMatrix<BigInt> gram_matrix(int d, int N);

/// Exact inverse of gram_matrix. In the stable range the result is collapsed
/// to cycle types and every entry is checked against the collapse.
WeingartenTable weingarten_exact(int d, int N);

/// Stable range only: sum over lambda of dim * chi / (d! prod (N + c)).
WeingartenTable weingarten_by_characters(int d, int N);

/// Shared cached table: characters in the stable range, inversion otherwise.
std::shared_ptr<const WeingartenTable> weingarten_table(int d, int N);

struct WeingartenSeries {
  int d = 0;
  int N = 0;
  int order = 0;
  std::vector<Partition> classes;
  /// coefficients[mu][r] = (-1)^r [pi] h_r(J_2..J_d) for pi of type mu.
  std::vector<std::vector<BigInt>> coefficients;
  /// N^{-d} sum_{r <= order} coefficients[mu][r] N^{-r}
  std::vector<Rational> partial_sums;
  /// Rigorous bound on |Wg - partial sum| for every class; infinite if N <= d - 1.
  double tail_bound = 0;

  /// Partial sum truncated at a lower order.
  Rational partial_sum(int mu, int order) const;
};

WeingartenSeries weingarten_series(int d, int N, int order);

/// Largest per-class ratio (e_R / e_{R-2})^{1/2} of successive truncation
/// errors at the final order, where e_r = |Wg(mu) - partial sum to order r|.
/// Classes whose errors vanish are skipped.
double observed_convergence_ratio(const WeingartenSeries& series, const WeingartenTable& exact);

using IndexList = std::vector<int>;  // 1-based indices

/// Exact Haar moment E[prod_k u_{I_k J_k} prod_k conj(u_{I'_k J'_k})].
Rational correlation(const IndexList& rows, const IndexList& rows_conj, const IndexList& cols,
                     const IndexList& cols_conj, int N);

/// Monte Carlo estimate of the same moment.
Estimate monte_carlo_correlation(const IndexList& rows, const IndexList& rows_conj, const IndexList& cols,
                                 const IndexList& cols_conj, int N, long long samples, std::uint64_t seed);

nlohmann::json to_json(const WeingartenTable& table);
const char* to_string(WeingartenRange range);

}  // namespace hcizlab
