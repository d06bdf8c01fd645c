#include "hcizlab/class_algebra.hpp"

#include "hcizlab/error.hpp"

#include <map>
#include <mutex>

namespace hcizlab {

namespace {

std::shared_ptr<const PartitionIndex> shared_index(int d) {
  static std::mutex m;
  static std::map<int, std::shared_ptr<const PartitionIndex>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[d];
  if (!slot) slot = std::make_shared<const PartitionIndex>(d);
  return slot;
}

void require_same_degree(const CentralElement& a, const CentralElement& b) {
  if (a.degree() != b.degree()) throw UsageError("class_algebra", "central elements of different degree");
}

}  // namespace

CentralElement::CentralElement(int d) : index_(shared_index(d)) {
  coeffs_.assign(static_cast<std::size_t>(index_->count()), Rational(0));
}

CentralElement CentralElement::identity(int d) {
  CentralElement e(d);
  e[e.index().count() - 1] = 1;
  return e;
}

CentralElement CentralElement::class_sum(const Partition& mu) {
  CentralElement e(mu.size());
  e[e.index().index_of(mu)] = 1;
  return e;
}

Rational CentralElement::class_sum_weight(const Partition& mu) const {
  return coefficient(mu) * Rational(hcizlab::class_size(mu));
}

Rational CentralElement::eigenvalue(int lambda) const {
  const auto table = CharacterTable::get(degree());
  Rational s(0);
  for (int mu = 0; mu < index_->count(); ++mu) {
    const Rational& a = coeffs_[static_cast<std::size_t>(mu)];
    if (a == 0) continue;
    s += a * Rational(table->class_size(mu) * table->value(lambda, mu));
  }
  return s / Rational(table->dim(lambda));
}

std::vector<Rational> CentralElement::eigenvalues() const {
  std::vector<Rational> out;
  for (int l = 0; l < index_->count(); ++l) out.push_back(eigenvalue(l));
  return out;
}

CentralElement CentralElement::from_eigenvalues(int d, const std::vector<Rational>& eigenvalues) {
  const auto table = CharacterTable::get(d);
  CentralElement e(d);
  const int n = e.index().count();
  if (static_cast<int>(eigenvalues.size()) != n) throw UsageError("class_algebra", "wrong number of eigenvalues");
  const Rational order(factorial(d));
  for (int mu = 0; mu < n; ++mu) {
    Rational s(0);
    for (int l = 0; l < n; ++l) {
      if (eigenvalues[static_cast<std::size_t>(l)] == 0) continue;
      s += Rational(table->dim(l) * table->value(l, mu)) * eigenvalues[static_cast<std::size_t>(l)];
    }
    e[mu] = s / order;
  }
  return e;
}

CentralElement& CentralElement::operator+=(const CentralElement& other) {
  require_same_degree(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CentralElement& CentralElement::operator-=(const CentralElement& other) {
  require_same_degree(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CentralElement& CentralElement::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CentralElement multiply(const CentralElement& a, const CentralElement& b) {
  require_same_degree(a, b);
  auto ea = a.eigenvalues();
  const auto eb = b.eigenvalues();
  for (std::size_t l = 0; l < ea.size(); ++l) ea[l] *= eb[l];
  return CentralElement::from_eigenvalues(a.degree(), ea);
}

CentralElement multiply_by_convolution(const CentralElement& a, const CentralElement& b) {
  require_same_degree(a, b);
  const int d = a.degree();
  if (d > 6) throw CapacityError("class_algebra", "convolution product is limited to d <= 6");
  const auto perms = all_permutations(d);
  std::vector<int> type_of(perms.size());
  for (std::size_t i = 0; i < perms.size(); ++i) type_of[i] = a.index().index_of(cycle_type(perms[i]));
  // The product is central, so one representative per class suffices.
  CentralElement out(d);
  const int n = a.index().count();
  for (int mu = 0; mu < n; ++mu) {
    const Permutation target = Permutation::of_cycle_type(a.index()[mu]);
    Rational s(0);
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const Rational& ca = a[type_of[i]];
      if (ca == 0) continue;
      // x * y = target  =>  y = x^-1 * target
      const Permutation y = perms[i].inverse() * target;
      const Rational& cb = b[a.index().index_of(cycle_type(y))];
      if (cb != 0) s += ca * cb;
    }
    out[mu] = s;
  }
  return out;
}

namespace {

CentralElement jm_by_enumeration(int r, int d, SymmetricKind kind) {
  if (d > 7) throw CapacityError("class_algebra", "monotone word enumeration is limited to d <= 7");
  const auto perms = all_permutations(d);
  const std::size_t count = perms.size();
  // states[len][rank] = number of words of length len with that product
  std::vector<std::vector<BigInt>> states(static_cast<std::size_t>(r) + 1, std::vector<BigInt>(count, BigInt(0)));
  states[0][permutation_rank(Permutation::identity(d))] = 1;
  for (int t = 2; t <= d; ++t) {
    std::vector<Permutation> taus;
    for (int s = 1; s < t; ++s) taus.push_back(Permutation::transposition(d, s, t));
    // Elementary: at most one factor with this t. Complete: any number.
    auto step = [&](const std::vector<std::vector<BigInt>>& from) {
      std::vector<std::vector<BigInt>> to(from.size(), std::vector<BigInt>(count, BigInt(0)));
      for (int len = 0; len < r; ++len)
        for (std::size_t p = 0; p < count; ++p) {
          if (from[static_cast<std::size_t>(len)][p] == 0) continue;
          for (const auto& tau : taus) {
            const auto q = permutation_rank(perms[p] * tau);
            to[static_cast<std::size_t>(len) + 1][q] += from[static_cast<std::size_t>(len)][p];
          }
        }
      return to;
    };
    if (kind == SymmetricKind::elementary) {
      const auto added = step(states);
      for (int len = 0; len <= r; ++len)
        for (std::size_t p = 0; p < count; ++p) states[static_cast<std::size_t>(len)][p] += added[static_cast<std::size_t>(len)][p];
    } else {
      auto frontier = states;
      for (int k = 1; k <= r; ++k) {
        frontier = step(frontier);
        for (int len = 0; len <= r; ++len)
          for (std::size_t p = 0; p < count; ++p) states[static_cast<std::size_t>(len)][p] += frontier[static_cast<std::size_t>(len)][p];
      }
    }
  }
  CentralElement out(d);
  const auto& final_counts = states[static_cast<std::size_t>(r)];
  std::vector<bool> seen(static_cast<std::size_t>(out.index().count()), false);
  for (std::size_t p = 0; p < count; ++p) {
    const int mu = out.index().index_of(cycle_type(perms[p]));
    const Rational value(final_counts[p]);
    if (!seen[static_cast<std::size_t>(mu)]) {
      out[mu] = value;
      seen[static_cast<std::size_t>(mu)] = true;
    } else if (out[mu] != value) {
      throw NumericalError("class_algebra", "enumerated Jucys-Murphy polynomial is not central");
    }
  }
  return out;
}

CentralElement jm_by_eigenvalues(int r, int d, SymmetricKind kind) {
  const auto table = CharacterTable::get(d);
  std::vector<Rational> ev;
  for (int l = 0; l < table->index().count(); ++l) {
    const auto& c = table->contents(l);
    ev.emplace_back(kind == SymmetricKind::elementary ? elementary_symmetric(r, c) : complete_homogeneous(r, c));
  }
  return CentralElement::from_eigenvalues(d, ev);
}

}  // namespace

CentralElement jm_action_coefficients(int r, int d, SymmetricKind kind, JmEngine engine) {
  if (r < 0) throw UsageError("class_algebra", "negative degree r");
  if (d < 1) throw UsageError("class_algebra", "degree d must be positive");
  return engine == JmEngine::enumeration ? jm_by_enumeration(r, d, kind) : jm_by_eigenvalues(r, d, kind);
}

CentralElement permutations_of_length(int r, int d) {
  CentralElement out(d);
  for (int mu = 0; mu < out.index().count(); ++mu)
    if (d - out.index()[mu].length() == r) out[mu] = 1;
  return out;
}

bool eh_reciprocity_check(int d, int r_max) {
  std::vector<CentralElement> e, h;
  for (int k = 0; k <= r_max; ++k) {
    e.push_back(jm_action_coefficients(k, d, SymmetricKind::elementary));
    h.push_back(jm_action_coefficients(k, d, SymmetricKind::complete));
  }
  for (int r = 0; r <= r_max; ++r) {
    CentralElement sum(d);
    for (int i = 0; i <= r; ++i) {
      CentralElement term = multiply(e[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(r - i)]);
      if ((r - i) % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    if (!(sum == (r == 0 ? CentralElement::identity(d) : CentralElement(d)))) return false;
  }
  return true;
}

QDistanceMatrix::QDistanceMatrix(int d, GeneratingSet gens) : d_(d), gens_(gens) {
  if (d < 1) throw UsageError("class_algebra", "degree d must be positive");
  if (d > 6) throw CapacityError("class_algebra", "materialized q-distance matrices are limited to d <= 6");
  elements_ = all_permutations(d);
  const int n = size();
  distances_.resize(n, n);
  for (int i = 0; i < n; ++i) {
    const Permutation inv = elements_[static_cast<std::size_t>(i)].inverse();
    for (int j = 0; j < n; ++j) {
      const Permutation x = inv * elements_[static_cast<std::size_t>(j)];
      distances_(i, j) = gens == GeneratingSet::all_transpositions ? d - cycle_count(x) : inversions(x);
    }
  }
}

DenseMatrix<IntPolynomial> QDistanceMatrix::symbolic() const {
  DenseMatrix<IntPolynomial> m(size(), size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) m(i, j) = IntPolynomial::monomial(distances_(i, j));
  return m;
}

DenseMatrix<Rational> QDistanceMatrix::at(const Rational& q) const {
  DenseMatrix<Rational> m(size(), size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) m(i, j) = ipow(q, distances_(i, j));
  return m;
}

DenseMatrix<BigInt> QDistanceMatrix::gram_form(int N) const {
  if (gens_ != GeneratingSet::all_transpositions) {
    throw UsageError("class_algebra", "the Gram form exists only for the full transposition generating set");
  }
  DenseMatrix<BigInt> m(size(), size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) m(i, j) = ipow(BigInt(N), d_ - distances_(i, j));
  return m;
}

IntPolynomial zagier_product(int d) {
  IntPolynomial p(BigInt(1));
  for (int i = 1; i <= d - 1; ++i) {
    const BigInt e = binomial(d, i + 1) * factorial(i - 1) * factorial(d - i);
    const IntPolynomial factor = IntPolynomial(BigInt(1)) - IntPolynomial::monomial(i * (i + 1));
    for (BigInt k = 0; k < e; ++k) p *= factor;
  }
  return p;
}

namespace {

// Arithmetic modulo a prime below 2^62 in Montgomery form.
class Montgomery {
 public:
  explicit Montgomery(std::uint64_t p) : p_(p) {
    std::uint64_t inv = p;
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) % p);
    r2_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r2_) * r2_ % p);
  }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t reduce(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    const unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * p_) >> 64;
    const std::uint64_t r = static_cast<std::uint64_t>(u);
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(static_cast<unsigned __int128>(a) * b); }
  std::uint64_t to(std::uint64_t a) const { return mul(a % p_, r2_); }
  std::uint64_t from(std::uint64_t a) const { return reduce(a); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t pow(std::uint64_t base, std::uint64_t e) const {
    std::uint64_t r = to(1);
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  std::uint64_t inverse(std::uint64_t a) const { return pow(a, p_ - 2); }

 private:
  std::uint64_t p_, neg_inv_, r2_;
};

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  std::uint64_t dm = n - 1;
  int s = 0;
  while ((dm & 1) == 0) {
    dm >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = 1, base = a % n, e = dm;
    while (e) {
      if (e & 1) x = mulmod(x, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t determinant_mod(std::vector<std::uint64_t> m, int n, const Montgomery& f) {
  std::uint64_t det = f.to(1);
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && m[static_cast<std::size_t>(piv * n + k)] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m[static_cast<std::size_t>(k * n + j)], m[static_cast<std::size_t>(piv * n + j)]);
      det = f.sub(0, det);
    }
    const std::uint64_t pivot = m[static_cast<std::size_t>(k * n + k)];
    det = f.mul(det, pivot);
    const std::uint64_t inv = f.inverse(pivot);
    for (int i = k + 1; i < n; ++i) {
      const std::uint64_t factor = f.mul(m[static_cast<std::size_t>(i * n + k)], inv);
      if (factor == 0) continue;
      for (int j = k + 1; j < n; ++j) {
        auto& cell = m[static_cast<std::size_t>(i * n + j)];
        cell = f.sub(cell, f.mul(factor, m[static_cast<std::size_t>(k * n + j)]));
      }
    }
  }
  return det;
}

bool zagier_multimodular(int d) {
  const QDistanceMatrix omega(d, GeneratingSet::adjacent_transpositions);
  const int n = omega.size();
  const int max_distance = d * (d - 1) / 2;
  const int det_degree_bound = n * max_distance;

  std::vector<std::pair<int, BigInt>> factors;  // (i(i+1), exponent)
  int formula_degree = 0;
  BigInt exponent_sum(0);
  for (int i = 1; i <= d - 1; ++i) {
    const BigInt e = binomial(d, i + 1) * factorial(i - 1) * factorial(d - i);
    factors.emplace_back(i * (i + 1), e);
    formula_degree += i * (i + 1) * static_cast<int>(e);
    exponent_sum += e;
  }
  const int degree = std::max(det_degree_bound, formula_degree);
  // |coefficient| <= n! for the determinant and <= 2^(sum of exponents) for
  // the product; the primes must cover twice the larger bound.
  BigInt bound = factorial(n);
  const BigInt product_bound = ipow(BigInt(2), static_cast<int>(exponent_sum));
  if (product_bound > bound) bound = product_bound;
  bound *= 2;

  BigInt modulus(1);
  std::uint64_t candidate = (1ULL << 62) - 1;
  while (modulus <= bound) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    const Montgomery f(candidate);
    for (int point = 1; point <= degree + 1; ++point) {
      const std::uint64_t q = f.to(static_cast<std::uint64_t>(point));
      std::vector<std::uint64_t> powers(static_cast<std::size_t>(max_distance) + 1);
      powers[0] = f.to(1);
      for (int k = 1; k <= max_distance; ++k) powers[static_cast<std::size_t>(k)] = f.mul(powers[static_cast<std::size_t>(k - 1)], q);
      std::vector<std::uint64_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i * n + j)] = powers[static_cast<std::size_t>(omega.distances()(i, j))];
      const std::uint64_t lhs = determinant_mod(std::move(m), n, f);
      std::uint64_t rhs = f.to(1);
      for (const auto& [power, e] : factors) {
        const std::uint64_t base = f.sub(f.to(1), f.pow(q, static_cast<std::uint64_t>(power)));
        rhs = f.mul(rhs, f.pow(base, static_cast<std::uint64_t>(e)));
      }
      if (lhs != rhs) return false;
    }
    modulus *= BigInt(candidate);
    candidate -= 2;
  }
  return true;
}

}  // namespace

bool zagier_determinant_check(int d) {
  if (d < 2 || d > 5) throw UsageError("class_algebra", "the determinant identity is checked for 2 <= d <= 5");
  if (d == 5) return zagier_multimodular(d);
  const QDistanceMatrix omega(d, GeneratingSet::adjacent_transpositions);
  return bareiss_determinant(omega.symbolic()) == zagier_product(d);
}

BigInt gram_determinant_formula(int d, int N) {
  BigInt det(1);
  for (const auto& lambda : enumerate_partitions(d)) {
    BigInt block(1);
    for (int c : contents(lambda)) block *= N + c;
    const BigInt dim = dimension(lambda);
    det *= ipow(block, static_cast<int>(dim * dim));
  }
  return det;
}

bool gram_determinant_check(int d, int N) {
  if (d > 5) throw CapacityError("class_algebra", "Gram determinant check is limited to d <= 5");
  const QDistanceMatrix omega(d, GeneratingSet::all_transpositions);
  return bareiss_determinant(omega.gram_form(N)) == gram_determinant_formula(d, N);
}

}  // namespace hcizlab
