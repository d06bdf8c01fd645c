#pragma once

// Monotone double Hurwitz numbers: tuples (rho, sigma, tau_1..tau_r) with
// rho in C_alpha, sigma in C_beta, transpositions tau_i = (s_i t_i), s_i < t_i,
// t weakly increasing, rho sigma tau_1 ... tau_r = id, generating a transitive
// subgroup. The number of transpositions is r = 2g - 2 + l(alpha) + l(beta).

#include "hcizlab/characters.hpp"

#include <map>
#include <memory>
#include <vector>

namespace hcizlab {

/// r = 2g - 2 + l(alpha) + l(beta).
int ray_count(const Partition& alpha, const Partition& beta, int g);

/// Capacity of the brute-force walk.
inline constexpr int kBruteForceMaxDegree = 6;
inline constexpr int kBruteForceMaxRays = 14;

/// Counts tuples by walking transposition words. States are aggregated by
/// (product, last t, connectivity of the transpositions so far); rho is
/// enumerated at the end and sigma solved from the product relation. With
/// monotone = false condition t_1 <= ... <= t_r is dropped (classical count).
BigInt brute_force_count(const Partition& alpha, const Partition& beta, int r, bool require_transitive,
                         bool monotone = true);

/// [id] C_alpha C_beta h_r(J_1..J_d) through central characters; all tuples,
/// transitive or not.
BigInt disconnected_count(const Partition& alpha, const Partition& beta, int r);

/// Connected counts for every alpha, beta of degree <= d_max and genus <= g_max,
/// obtained from disconnected counts through the labelled exponential formula.
class HurwitzTable {
 public:
  HurwitzTable(int d_max, int g_max);

  int max_degree() const { return d_max_; }
  int max_genus() const { return g_max_; }
  /// Largest r kept; every r needed for genus <= g_max is covered.
  int max_rays() const { return r_max_; }

  BigInt connected(const Partition& alpha, const Partition& beta, int g) const;
  BigInt connected_rays(const Partition& alpha, const Partition& beta, int r) const;
  BigInt disconnected(const Partition& alpha, const Partition& beta, int r) const;

  /// Shared table covering at least (d_max, g_max).
  static std::shared_ptr<const HurwitzTable> get(int d_max, int g_max);

 private:
  struct Level {
    // values[(alpha * count + beta) * (r_max + 1) + r]
    std::vector<BigInt> disconnected;
    std::vector<BigInt> connected;
    int count = 0;
  };
  const BigInt& lookup(const std::vector<BigInt>& v, const Level& level, int a, int b, int r) const;
  const Level& level(int d) const;

  int d_max_, g_max_, r_max_;
  std::vector<Level> levels_;
};

inline constexpr int kConnectedMaxDegree = 12;
inline constexpr int kConnectedMaxGenus = 4;

/// H_g(alpha, beta) from the shared character table (d <= 12, g <= 4).
BigInt connected_double(const Partition& alpha, const Partition& beta, int g);

/// d!/|Aut alpha| prod binom(2 alpha_i, alpha_i) (2d+1)^{rising(l(alpha) - 3)}.
BigInt genus_zero_closed_form(const Partition& alpha);

/// (-1)^{d + l(alpha) + l(beta)} H_0(alpha, beta).
BigInt iz_number(const Partition& alpha, const Partition& beta);

struct IdentityResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, if any
};

/// Symmetry, stripping, maximization at transpositions, and the signed scalar sum.
std::vector<IdentityResult> structural_identity_suite(int d_max, int g_max);

/// sums[g][d] = sum_{alpha, beta |- d} H_g(alpha, beta) phi_alpha psi_beta for
/// 1 <= d <= d_max (index 0 unused). phi[k-1] is phi_k; both need d_max entries.
std::vector<std::vector<Rational>> weighted_hurwitz_sums(const std::vector<Rational>& phi,
                                                         const std::vector<Rational>& psi, int d_max, int g_max);

/// sums[g][d] = sum_{alpha, beta |- d} H_g(alpha, beta), through content
/// polynomials only; reaches degrees well beyond the character table range.
std::vector<std::vector<BigInt>> hurwitz_sums_all_ones(int d_max, int g_max);

}  // namespace hcizlab
