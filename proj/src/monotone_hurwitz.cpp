#include "hcizlab/monotone_hurwitz.hpp"

#include "hcizlab/error.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <unordered_map>

namespace hcizlab {

int ray_count(const Partition& alpha, const Partition& beta, int g) {
  return 2 * g - 2 + alpha.length() + beta.length();
}

namespace {

void require_same_degree(const Partition& alpha, const Partition& beta) {
  if (alpha.size() != beta.size()) throw UsageError("monotone_hurwitz", "alpha and beta have different degrees");
  if (alpha.size() < 1) throw UsageError("monotone_hurwitz", "degree must be positive");
}

// Set partition of at most 6 points as a restricted growth string packed in
// 3-bit fields.
using Labels = std::array<std::uint8_t, kBruteForceMaxDegree>;

std::uint32_t pack(const Labels& l, int d) {
  std::uint32_t code = 0;
  for (int i = 0; i < d; ++i) code |= static_cast<std::uint32_t>(l[static_cast<std::size_t>(i)]) << (3 * i);
  return code;
}

Labels unpack(std::uint32_t code, int d) {
  Labels l{};
  for (int i = 0; i < d; ++i) l[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((code >> (3 * i)) & 7u);
  return l;
}

Labels canonical(const Labels& l, int d) {
  std::array<int, 8> remap;
  remap.fill(-1);
  int next = 0;
  Labels out{};
  for (int i = 0; i < d; ++i) {
    auto& slot = remap[l[static_cast<std::size_t>(i)]];
    if (slot < 0) slot = next++;
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(slot);
  }
  return out;
}

Labels merged(Labels l, int d, int a, int b) {
  const auto from = l[static_cast<std::size_t>(b)];
  const auto to = l[static_cast<std::size_t>(a)];
  if (from == to) return l;
  for (int i = 0; i < d; ++i)
    if (l[static_cast<std::size_t>(i)] == from) l[static_cast<std::size_t>(i)] = to;
  return canonical(l, d);
}

}  // namespace

BigInt brute_force_count(const Partition& alpha, const Partition& beta, int r, bool require_transitive,
                         bool monotone) {
  require_same_degree(alpha, beta);
  const int d = alpha.size();
  if (r < 0) throw UsageError("monotone_hurwitz", "negative number of transpositions");
  if (d > kBruteForceMaxDegree || r > kBruteForceMaxRays) {
    throw CapacityError("monotone_hurwitz", "brute force is limited to d <= " + std::to_string(kBruteForceMaxDegree) +
                                                " and r <= " + std::to_string(kBruteForceMaxRays));
  }
  const auto perms = all_permutations(d);
  const int count = static_cast<int>(perms.size());
  std::vector<int> inverse_rank(static_cast<std::size_t>(count));
  std::vector<Partition> type(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    inverse_rank[static_cast<std::size_t>(i)] = static_cast<int>(permutation_rank(perms[static_cast<std::size_t>(i)].inverse()));
    type[static_cast<std::size_t>(i)] = cycle_type(perms[static_cast<std::size_t>(i)]);
  }
  struct Tau {
    int s, t, rank;
  };
  std::vector<Tau> taus;
  for (int t = 2; t <= d; ++t)
    for (int s = 1; s < t; ++s) taus.push_back({s, t, static_cast<int>(permutation_rank(Permutation::transposition(d, s, t)))});
  // right[p][tau] = rank(perm_p * tau)
  std::vector<std::vector<int>> right(static_cast<std::size_t>(count));
  for (int p = 0; p < count; ++p)
    for (const auto& tau : taus)
      right[static_cast<std::size_t>(p)].push_back(
          static_cast<int>(permutation_rank(perms[static_cast<std::size_t>(p)] * perms[static_cast<std::size_t>(tau.rank)])));

  Labels singletons{};
  for (int i = 0; i < d; ++i) singletons[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  auto key_of = [](int p, int last_t, std::uint32_t labels) {
    return static_cast<std::uint64_t>(p) | static_cast<std::uint64_t>(last_t) << 10 | static_cast<std::uint64_t>(labels) << 14;
  };
  std::unordered_map<std::uint64_t, std::uint64_t> states;
  const std::uint32_t start_labels = require_transitive ? pack(singletons, d) : 0;
  states[key_of(static_cast<int>(permutation_rank(Permutation::identity(d))), 2, start_labels)] = 1;

  for (int step = 0; step < r; ++step) {
    std::unordered_map<std::uint64_t, std::uint64_t> next;
    for (const auto& [key, n] : states) {
      const int p = static_cast<int>(key & 1023u);
      const int last_t = static_cast<int>((key >> 10) & 15u);
      const std::uint32_t labels = static_cast<std::uint32_t>(key >> 14);
      for (std::size_t k = 0; k < taus.size(); ++k) {
        const auto& tau = taus[k];
        if (monotone && tau.t < last_t) continue;
        std::uint32_t new_labels = labels;
        if (require_transitive) new_labels = pack(merged(unpack(labels, d), d, tau.s - 1, tau.t - 1), d);
        next[key_of(right[static_cast<std::size_t>(p)][k], monotone ? tau.t : 2, new_labels)] += n;
      }
    }
    states = std::move(next);
  }

  // Collapse the last-t coordinate before enumerating rho.
  std::map<std::pair<int, std::uint32_t>, BigInt> finals;
  for (const auto& [key, n] : states) {
    finals[{static_cast<int>(key & 1023u), static_cast<std::uint32_t>(key >> 14)}] += BigInt(n);
  }
  std::vector<int> rhos;
  for (int i = 0; i < count; ++i)
    if (type[static_cast<std::size_t>(i)] == alpha) rhos.push_back(i);

  BigInt total(0);
  for (const auto& [state, n] : finals) {
    const auto& [p, labels] = state;
    const Permutation p_inv = perms[static_cast<std::size_t>(inverse_rank[static_cast<std::size_t>(p)])];
    for (int rho : rhos) {
      // rho sigma P = id  =>  sigma = rho^-1 P^-1
      const Permutation sigma = perms[static_cast<std::size_t>(inverse_rank[static_cast<std::size_t>(rho)])] * p_inv;
      if (cycle_type(sigma) != beta) continue;
      if (require_transitive) {
        DisjointSets sets(d);
        const Labels l = unpack(labels, d);
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j)
            if (l[static_cast<std::size_t>(i)] == l[static_cast<std::size_t>(j)]) sets.unite(i, j);
        const auto& rp = perms[static_cast<std::size_t>(rho)];
        for (int i = 0; i < d; ++i) sets.unite(i, rp(i));
        if (sets.components() != 1) continue;
      }
      total += n;
    }
  }
  return total;
}

BigInt disconnected_count(const Partition& alpha, const Partition& beta, int r) {
  require_same_degree(alpha, beta);
  if (r < 0) throw UsageError("monotone_hurwitz", "negative number of transpositions");
  const int d = alpha.size();
  const auto table = CharacterTable::get(d);
  const int a = table->index().index_of(alpha);
  const int b = table->index().index_of(beta);
  BigInt sum(0);
  for (int l = 0; l < table->index().count(); ++l) {
    const BigInt chi = table->value(l, a) * table->value(l, b);
    if (chi == 0) continue;
    sum += chi * complete_homogeneous(r, table->contents(l));
  }
  const Rational value = Rational(sum * table->class_size(a) * table->class_size(b), factorial(d));
  return to_integer(value, "a disconnected monotone count");
}

HurwitzTable::HurwitzTable(int d_max, int g_max) : d_max_(d_max), g_max_(g_max) {
  if (d_max < 1 || g_max < 0) throw UsageError("monotone_hurwitz", "table needs d_max >= 1 and g_max >= 0");
  // r is additive over connected components, so one global bound keeps every
  // truncated product exact.
  r_max_ = 2 * g_max - 2 + 2 * d_max;
  const std::size_t width = static_cast<std::size_t>(r_max_) + 1;
  levels_.resize(static_cast<std::size_t>(d_max) + 1);

  for (int n = 1; n <= d_max; ++n) {
    const auto table = CharacterTable::get(n);
    const int p = table->index().count();
    Level& lv = levels_[static_cast<std::size_t>(n)];
    lv.count = p;
    lv.disconnected.assign(static_cast<std::size_t>(p * p) * width, BigInt(0));
    std::vector<std::vector<BigInt>> h(static_cast<std::size_t>(p));
    for (int l = 0; l < p; ++l) h[static_cast<std::size_t>(l)] = complete_homogeneous_all(r_max_, table->contents(l));
    const BigInt order = factorial(n);
    for (int a = 0; a < p; ++a)
      for (int b = a; b < p; ++b) {
        const BigInt weight = table->class_size(a) * table->class_size(b);
        for (int r = 0; r <= r_max_; ++r) {
          // Parity: sign(alpha) sign(beta) (-1)^r must be +1.
          if ((2 * n - table->index()[a].length() - table->index()[b].length() + r) % 2 != 0) continue;
          BigInt sum(0);
          for (int l = 0; l < p; ++l) {
            const BigInt& hr = h[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
            if (hr == 0) continue;
            sum += table->value(l, a) * table->value(l, b) * hr;
          }
          const BigInt v = divexact(sum * weight, order);
          lv.disconnected[(static_cast<std::size_t>(a * p + b)) * width + static_cast<std::size_t>(r)] = v;
          lv.disconnected[(static_cast<std::size_t>(b * p + a)) * width + static_cast<std::size_t>(r)] = v;
        }
      }

    // Labelled exponential formula: D_n = sum_k binom(n-1, k-1) C_k D_{n-k},
    // with D_0 = 1, solved for C_n.
    lv.connected = lv.disconnected;
    const auto& target_index = table->index();
    for (int k = 1; k < n; ++k) {
      const Level& ck = levels_[static_cast<std::size_t>(k)];
      const Level& dr = levels_[static_cast<std::size_t>(n - k)];
      const PartitionIndex& ik = CharacterTable::get(k)->index();
      const PartitionIndex& ir = CharacterTable::get(n - k)->index();
      std::vector<int> join(static_cast<std::size_t>(ck.count * dr.count));
      for (int i = 0; i < ck.count; ++i)
        for (int j = 0; j < dr.count; ++j)
          join[static_cast<std::size_t>(i * dr.count + j)] = target_index.index_of(ik[i].join(ir[j]));
      const BigInt coeff = binomial(n - 1, k - 1);
      struct Entry {
        int a, b, r;
        const BigInt* v;
      };
      std::vector<Entry> left, rightv;
      for (int a = 0; a < ck.count; ++a)
        for (int b = 0; b < ck.count; ++b)
          for (int r = 0; r <= r_max_; ++r) {
            const auto& v = ck.connected[static_cast<std::size_t>(a * ck.count + b) * width + static_cast<std::size_t>(r)];
            if (v != 0) left.push_back({a, b, r, &v});
          }
      for (int a = 0; a < dr.count; ++a)
        for (int b = 0; b < dr.count; ++b)
          for (int r = 0; r <= r_max_; ++r) {
            const auto& v = dr.disconnected[static_cast<std::size_t>(a * dr.count + b) * width + static_cast<std::size_t>(r)];
            if (v != 0) rightv.push_back({a, b, r, &v});
          }
      for (const auto& x : left)
        for (const auto& y : rightv) {
          const int r = x.r + y.r;
          if (r > r_max_) continue;
          const int a = join[static_cast<std::size_t>(x.a * dr.count + y.a)];
          const int b = join[static_cast<std::size_t>(x.b * dr.count + y.b)];
          lv.connected[static_cast<std::size_t>(a * p + b) * width + static_cast<std::size_t>(r)] -= coeff * *x.v * *y.v;
        }
    }
  }
}

const HurwitzTable::Level& HurwitzTable::level(int d) const {
  if (d < 1 || d > d_max_) throw CapacityError("monotone_hurwitz", "degree outside the computed table");
  return levels_[static_cast<std::size_t>(d)];
}

const BigInt& HurwitzTable::lookup(const std::vector<BigInt>& v, const Level& lv, int a, int b, int r) const {
  return v[static_cast<std::size_t>(a * lv.count + b) * (static_cast<std::size_t>(r_max_) + 1) + static_cast<std::size_t>(r)];
}

BigInt HurwitzTable::connected_rays(const Partition& alpha, const Partition& beta, int r) const {
  require_same_degree(alpha, beta);
  const Level& lv = level(alpha.size());
  if (r < 0) return BigInt(0);
  if (r > r_max_) throw CapacityError("monotone_hurwitz", "number of transpositions outside the computed table");
  const auto& index = CharacterTable::get(alpha.size())->index();
  return lookup(lv.connected, lv, index.index_of(alpha), index.index_of(beta), r);
}

BigInt HurwitzTable::connected(const Partition& alpha, const Partition& beta, int g) const {
  if (g < 0) throw UsageError("monotone_hurwitz", "negative genus");
  if (g > g_max_) throw CapacityError("monotone_hurwitz", "genus outside the computed table");
  return connected_rays(alpha, beta, ray_count(alpha, beta, g));
}

BigInt HurwitzTable::disconnected(const Partition& alpha, const Partition& beta, int r) const {
  require_same_degree(alpha, beta);
  const Level& lv = level(alpha.size());
  if (r < 0) return BigInt(0);
  if (r > r_max_) throw CapacityError("monotone_hurwitz", "number of transpositions outside the computed table");
  const auto& index = CharacterTable::get(alpha.size())->index();
  return lookup(lv.disconnected, lv, index.index_of(alpha), index.index_of(beta), r);
}

std::shared_ptr<const HurwitzTable> HurwitzTable::get(int d_max, int g_max) {
  static std::mutex m;
  static std::shared_ptr<const HurwitzTable> shared;
  std::lock_guard lock(m);
  if (!shared || shared->max_degree() < d_max || shared->max_genus() < g_max) {
    const int d = shared ? std::max(d_max, shared->max_degree()) : d_max;
    const int g = shared ? std::max(g_max, shared->max_genus()) : g_max;
    shared = std::make_shared<const HurwitzTable>(d, g);
  }
  return shared;
}

BigInt connected_double(const Partition& alpha, const Partition& beta, int g) {
  require_same_degree(alpha, beta);
  if (g < 0) throw UsageError("monotone_hurwitz", "negative genus");
  if (alpha.size() > kConnectedMaxDegree || g > kConnectedMaxGenus) {
    throw CapacityError("monotone_hurwitz", "connected counts are limited to d <= " +
                                                std::to_string(kConnectedMaxDegree) + " and g <= " +
                                                std::to_string(kConnectedMaxGenus));
  }
  if (ray_count(alpha, beta, g) < 0) return BigInt(0);
  return HurwitzTable::get(alpha.size(), g)->connected(alpha, beta, g);
}

BigInt genus_zero_closed_form(const Partition& alpha) {
  const int d = alpha.size();
  if (d < 1) throw UsageError("monotone_hurwitz", "degree must be positive");
  Rational value(divexact(factorial(d), aut_order(alpha)));
  for (int part : alpha.parts()) value *= Rational(binomial(2 * part, part));
  value *= rising_factorial(Rational(2 * d + 1), alpha.length() - 3);
  const BigInt result = to_integer(value, "the genus-zero closed form");
  if (result <= 0) throw NumericalError("monotone_hurwitz", "genus-zero closed form is not positive");
  return result;
}

BigInt iz_number(const Partition& alpha, const Partition& beta) {
  const BigInt h = connected_double(alpha, beta, 0);
  return (alpha.size() + alpha.length() + beta.length()) % 2 == 0 ? h : BigInt(-h);
}

std::vector<IdentityResult> structural_identity_suite(int d_max, int g_max) {
  if (d_max > 8) throw CapacityError("monotone_hurwitz", "structural identities are checked for d <= 8");
  const auto table = HurwitzTable::get(std::max(d_max, 1), std::max(g_max, 0));
  IdentityResult symmetry{"symmetry", true, ""};
  IdentityResult stripping{"stripping", true, ""};
  IdentityResult maximum{"maximization_at_transpositions", true, ""};
  IdentityResult scalar{"signed_scalar_sum", true, ""};
  auto fail = [](IdentityResult& res, const std::string& what) {
    if (res.passed) res.detail = what;
    res.passed = false;
  };
  for (int d = 1; d <= d_max; ++d) {
    const auto parts = enumerate_partitions(d);
    for (int g = 0; g <= g_max; ++g) {
      const std::string at = " at d=" + std::to_string(d) + ", g=" + std::to_string(g);
      BigInt signed_sum(0);
      BigInt top(0);
      if (d >= 2) top = table->connected(Partition::transposition(d), Partition::transposition(d), g);
      for (const auto& a : parts) {
        for (const auto& b : parts) {
          const BigInt h = table->connected(a, b, g);
          if (h != table->connected(b, a, g)) fail(symmetry, "(" + a.str() + "),(" + b.str() + ")" + at);
          if (d >= 2 && h > top) fail(maximum, "(" + a.str() + "),(" + b.str() + ")" + at);
          if ((a.length() + b.length()) % 2 == 0)
            signed_sum += h;
          else
            signed_sum -= h;
        }
        if (d >= 2) {
          const BigInt lhs = 2 * table->connected(a, Partition::transposition(d), g);
          const BigInt rhs = d * table->connected(a, Partition::ones(d), g);
          if (lhs != rhs) fail(stripping, "(" + a.str() + ")" + at);
        }
      }
      if (d >= 2 && signed_sum != 0) fail(scalar, at.substr(1));
    }
  }
  return {symmetry, stripping, maximum, scalar};
}

namespace {

// Bivariate polynomial in u (number of transpositions) and t (total number of
// parts of alpha and beta), dense, truncated in u.
template <class Scalar>
struct Bivariate {
  int u_max = 0, t_max = 0;
  std::vector<Scalar> c;
  Bivariate(int u, int t) : u_max(u), t_max(t), c(static_cast<std::size_t>((u + 1) * (t + 1)), Scalar(0)) {}
  Scalar& at(int r, int m) { return c[static_cast<std::size_t>(r * (t_max + 1) + m)]; }
  const Scalar& at(int r, int m) const { return c[static_cast<std::size_t>(r * (t_max + 1) + m)]; }
};

// Given per-degree disconnected series D_n(u, t), returns connected C_n(u, t)
// through the labelled exponential formula.
template <class Scalar>
std::vector<Bivariate<Scalar>> connected_from_disconnected(const std::vector<Bivariate<Scalar>>& dis) {
  const int d_max = static_cast<int>(dis.size()) - 1;
  std::vector<Bivariate<Scalar>> con = dis;
  for (int n = 2; n <= d_max; ++n) {
    auto& cn = con[static_cast<std::size_t>(n)];
    for (int k = 1; k < n; ++k) {
      const auto& ck = con[static_cast<std::size_t>(k)];
      const auto& dr = dis[static_cast<std::size_t>(n - k)];
      const Scalar coeff(binomial(n - 1, k - 1));
      for (int r1 = 0; r1 <= ck.u_max; ++r1)
        for (int m1 = 0; m1 <= ck.t_max; ++m1) {
          const Scalar& x = ck.at(r1, m1);
          if (x == 0) continue;
          const Scalar cx = coeff * x;
          for (int r2 = 0; r1 + r2 <= cn.u_max; ++r2)
            for (int m2 = 0; m2 <= dr.t_max; ++m2) {
              const Scalar& y = dr.at(r2, m2);
              if (y == 0) continue;
              cn.at(r1 + r2, m1 + m2) -= cx * y;
            }
        }
    }
  }
  return con;
}

template <class Scalar>
std::vector<std::vector<Scalar>> extract_genus(const std::vector<Bivariate<Scalar>>& con, int d_max, int g_max) {
  std::vector<std::vector<Scalar>> out(static_cast<std::size_t>(g_max) + 1,
                                       std::vector<Scalar>(static_cast<std::size_t>(d_max) + 1, Scalar(0)));
  for (int n = 1; n <= d_max; ++n)
    for (int g = 0; g <= g_max; ++g)
      for (int m = 2; m <= 2 * n; ++m) {
        const int r = 2 * g - 2 + m;
        if (r < 0 || r > con[static_cast<std::size_t>(n)].u_max) continue;
        out[static_cast<std::size_t>(g)][static_cast<std::size_t>(n)] += con[static_cast<std::size_t>(n)].at(r, m);
      }
  return out;
}

}  // namespace

std::vector<std::vector<Rational>> weighted_hurwitz_sums(const std::vector<Rational>& phi,
                                                         const std::vector<Rational>& psi, int d_max, int g_max) {
  if (d_max < 1 || g_max < 0) throw UsageError("monotone_hurwitz", "need d_max >= 1 and g_max >= 0");
  if (static_cast<int>(phi.size()) < d_max || static_cast<int>(psi.size()) < d_max) {
    throw UsageError("monotone_hurwitz", "moment prefixes shorter than the requested degree");
  }
  if (d_max > kConnectedMaxDegree) {
    throw CapacityError("monotone_hurwitz", "weighted sums need character tables; limited to d <= " +
                                                std::to_string(kConnectedMaxDegree));
  }
  const int r_max = 2 * g_max - 2 + 2 * d_max;
  std::vector<Bivariate<Rational>> dis;
  dis.emplace_back(r_max, 0);
  dis[0].at(0, 0) = 1;
  for (int n = 1; n <= d_max; ++n) {
    const auto table = CharacterTable::get(n);
    const int p = table->index().count();
    // X(lambda, t) = sum_alpha |C_alpha| chi^lambda(alpha) weight_alpha t^{l(alpha)}
    auto class_weights = [&](const std::vector<Rational>& w) {
      std::vector<Rational> out;
      for (int a = 0; a < p; ++a) {
        Rational prod(table->class_size(a));
        for (int part : table->index()[a].parts()) prod *= w[static_cast<std::size_t>(part - 1)];
        out.push_back(prod);
      }
      return out;
    };
    const auto wphi = class_weights(phi);
    const auto wpsi = class_weights(psi);
    Bivariate<Rational> dn(r_max, 2 * n);
    for (int l = 0; l < p; ++l) {
      std::vector<Rational> xphi(static_cast<std::size_t>(n) + 1, Rational(0)), xpsi = xphi;
      for (int a = 0; a < p; ++a) {
        const int len = table->index()[a].length();
        const Rational chi(table->value(l, a));
        xphi[static_cast<std::size_t>(len)] += chi * wphi[static_cast<std::size_t>(a)];
        xpsi[static_cast<std::size_t>(len)] += chi * wpsi[static_cast<std::size_t>(a)];
      }
      const auto h = complete_homogeneous_all(r_max, table->contents(l));
      for (int m1 = 0; m1 <= n; ++m1) {
        if (xphi[static_cast<std::size_t>(m1)] == 0) continue;
        for (int m2 = 0; m2 <= n; ++m2) {
          if (xpsi[static_cast<std::size_t>(m2)] == 0) continue;
          const Rational x = xphi[static_cast<std::size_t>(m1)] * xpsi[static_cast<std::size_t>(m2)];
          for (int r = 0; r <= r_max; ++r)
            if (h[static_cast<std::size_t>(r)] != 0) dn.at(r, m1 + m2) += x * Rational(h[static_cast<std::size_t>(r)]);
        }
      }
    }
    const Rational inv_order(BigInt(1), factorial(n));
    for (auto& c : dn.c) c *= inv_order;
    dis.push_back(std::move(dn));
  }
  return extract_genus(connected_from_disconnected(dis), d_max, g_max);
}

std::vector<std::vector<BigInt>> hurwitz_sums_all_ones(int d_max, int g_max) {
  if (d_max < 1 || g_max < 0) throw UsageError("monotone_hurwitz", "need d_max >= 1 and g_max >= 0");
  const int r_max = 2 * g_max - 2 + 2 * d_max;
  std::vector<Bivariate<BigInt>> dis;
  dis.emplace_back(r_max, 0);
  dis[0].at(0, 0) = 1;
  for (int n = 1; n <= d_max; ++n) {
    Bivariate<BigInt> dn(r_max, 2 * n);
    for (const auto& lambda : enumerate_partitions(n)) {
      // sum_alpha |C_alpha| chi^lambda(alpha) t^{l(alpha)} = dim(lambda) prod_box (t + c)
      const auto c = contents(lambda);
      IntPolynomial x(dimension(lambda));
      for (int content : c) x *= IntPolynomial(std::vector<BigInt>{content, 1});
      const IntPolynomial xx = x * x;
      const auto h = complete_homogeneous_all(r_max, c);
      for (int m = 0; m <= xx.degree(); ++m) {
        const BigInt& xm = xx.coefficients()[static_cast<std::size_t>(m)];
        if (xm == 0) continue;
        for (int r = 0; r <= r_max; ++r)
          if (h[static_cast<std::size_t>(r)] != 0) dn.at(r, m) += xm * h[static_cast<std::size_t>(r)];
      }
    }
    const BigInt order = factorial(n);
    for (auto& v : dn.c) v = divexact(v, order);
    dis.push_back(std::move(dn));
  }
  return extract_genus(connected_from_disconnected(dis), d_max, g_max);
}

}  // namespace hcizlab
