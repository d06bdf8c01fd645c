#include "hcizlab/characters.hpp"

#include "hcizlab/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hcizlab {

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) out.push_back(j - i);
  return out;
}

BigInt dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt hooks(1);
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return divexact(factorial(lambda.size()), hooks);
}

BigInt elementary_symmetric(int r, const std::vector<int>& values) {
  if (r < 0) return BigInt(0);
  std::vector<BigInt> e(static_cast<std::size_t>(r) + 1, BigInt(0));
  e[0] = 1;
  for (int x : values)
    for (int k = r; k >= 1; --k) e[static_cast<std::size_t>(k)] += x * e[static_cast<std::size_t>(k - 1)];
  return e[static_cast<std::size_t>(r)];
}

std::vector<BigInt> complete_homogeneous_all(int r_max, const std::vector<int>& values) {
  std::vector<BigInt> h(static_cast<std::size_t>(r_max) + 1, BigInt(0));
  h[0] = 1;
  // Adding a variable x: h_k <- h_k + x h_{k-1}, ascending k so x may repeat.
  for (int x : values) {
    if (x == 0) continue;
    for (int k = 1; k <= r_max; ++k) h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
  }
  return h;
}

BigInt complete_homogeneous(int r, const std::vector<int>& values) {
  if (r < 0) return BigInt(0);
  return complete_homogeneous_all(r, values)[static_cast<std::size_t>(r)];
}

Rational central_eigenvalue(const std::function<Rational(const std::vector<int>&)>& f, const Partition& lambda) {
  return f(contents(lambda));
}

Rational content_product(const Partition& lambda, const Rational& q) {
  Rational p(1);
  for (int c : contents(lambda)) p *= 1 + q * c;
  return p;
}

namespace {

using MnKey = std::pair<std::vector<int>, std::vector<int>>;

std::mutex& mn_mutex() {
  static std::mutex m;
  return m;
}

std::map<MnKey, BigInt>& mn_cache() {
  static std::map<MnKey, BigInt> cache;
  return cache;
}

// Rim hooks are removed through the beta-set (abacus) of lambda: a hook of
// length k is a bead moved from b to b-k onto a free slot, with sign given by
// the parity of the beads it jumps over.
BigInt murnaghan_nakayama(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (lambda.empty()) return BigInt(1);
  MnKey key{lambda, mu};
  {
    std::lock_guard lock(mn_mutex());
    auto it = mn_cache().find(key);
    if (it != mn_cache().end()) return it->second;
  }
  const int len = static_cast<int>(lambda.size());
  const int k = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  std::vector<int> beta(lambda.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

  BigInt total(0);
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - k;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int jumped = 0;
    for (int b : beta)
      if (b > to && b < from) ++jumped;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int r = 0; r < len; ++r) {
      const int part = moved[static_cast<std::size_t>(r)] - (len - 1 - r);
      if (part > 0) smaller.push_back(part);
    }
    const BigInt sub = murnaghan_nakayama(smaller, rest);
    if (jumped % 2 == 0)
      total += sub;
    else
      total -= sub;
  }
  std::lock_guard lock(mn_mutex());
  mn_cache().emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw UsageError("characters", "character arguments have different degrees");
  return murnaghan_nakayama(lambda.parts(), mu.parts());
}

CharacterTable::CharacterTable(int d) : index_(d) {
  const int n = index_.count();
  values_.resize(n, n);
  for (int l = 0; l < n; ++l) {
    dims_.push_back(dimension(index_[l]));
    contents_.push_back(hcizlab::contents(index_[l]));
    class_sizes_.push_back(hcizlab::class_size(index_[l]));
    for (int m = 0; m < n; ++m) values_(l, m) = character(index_[l], index_[m]);
  }
}

std::shared_ptr<const CharacterTable> CharacterTable::get(int d) {
  static std::mutex m;
  static std::map<int, std::shared_ptr<const CharacterTable>> tables;
  std::lock_guard lock(m);
  auto& slot = tables[d];
  if (!slot) slot = std::make_shared<const CharacterTable>(d);
  return slot;
}

bool column_orthogonality_holds(const CharacterTable& table) {
  const int n = table.index().count();
  for (int a = 0; a < n; ++a) {
    const BigInt z = centralizer_order(table.index()[a]);
    for (int b = a; b < n; ++b) {
      BigInt s(0);
      for (int l = 0; l < n; ++l) s += table.value(l, a) * table.value(l, b);
      if (s != (a == b ? z : BigInt(0))) return false;
    }
  }
  return true;
}

bool dimensions_consistent(const CharacterTable& table) {
  const int n = table.index().count();
  const int identity = n - 1;  // (1^d) is last in canonical order
  BigInt sum(0);
  for (int l = 0; l < n; ++l) {
    if (table.value(l, identity) != table.dim(l)) return false;
    sum += table.dim(l) * table.dim(l);
  }
  return sum == factorial(table.degree());
}

}  // namespace hcizlab
