#include "hcizlab/combinatorics.hpp"

#include "hcizlab/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace hcizlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw UsageError("combinatorics", "partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ',' || text[i] == ' ' || text[i] == '(' || text[i] == ')')) ++i;
    if (i == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc()) throw UsageError("combinatorics", "cannot parse partition '" + std::string(text) + "'");
    parts.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Partition(std::move(parts));
}

Partition Partition::transposition(int d) {
  if (d < 2) throw UsageError("combinatorics", "no transpositions in S(1)");
  std::vector<int> parts(static_cast<std::size_t>(d - 1), 1);
  parts[0] = 2;
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  return Partition(std::move(conj));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(parts_.empty() ? 1 : parts_.front() + 1), 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw UsageError("combinatorics", "cannot enumerate partitions of a negative integer");
  std::vector<Partition> out;
  std::vector<int> current;
  // Largest part first, parts bounded by the previous one: reverse lex order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

BigInt partition_count(int d) {
  if (d < 0) return BigInt(0);
  std::vector<BigInt> p(static_cast<std::size_t>(d) + 1, BigInt(0));
  p[0] = 1;
  for (int n = 1; n <= d; ++n) {
    BigInt acc(0);
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) acc += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = acc;
  }
  return p[static_cast<std::size_t>(d)];
}

PartitionIndex::PartitionIndex(int d) : d_(d), list_(enumerate_partitions(d)) {
  for (int i = 0; i < count(); ++i) lookup_.emplace(list_[static_cast<std::size_t>(i)], i);
}

int PartitionIndex::index_of(const Partition& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) {
    throw UsageError("combinatorics", "partition " + p.str() + " is not a partition of " + std::to_string(d_));
  }
  return it->second;
}

BigInt aut_order(const Partition& alpha) {
  BigInt a(1);
  for (int m : alpha.multiplicities()) a *= factorial(m);
  return a;
}

BigInt centralizer_order(const Partition& alpha) {
  BigInt z(1);
  const auto mult = alpha.multiplicities();
  for (std::size_t v = 1; v < mult.size(); ++v) {
    z *= ipow(BigInt(static_cast<long>(v)), mult[v]) * factorial(mult[v]);
  }
  return z;
}

BigInt class_size(const Partition& alpha) { return divexact(factorial(alpha.size()), centralizer_order(alpha)); }

Permutation Permutation::from_one_line(const std::vector<int>& one_line) {
  const int d = static_cast<int>(one_line.size());
  std::vector<int> images(one_line.size());
  std::vector<bool> seen(one_line.size(), false);
  for (int k = 0; k < d; ++k) {
    const int v = one_line[static_cast<std::size_t>(k)] - 1;
    if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)]) {
      throw UsageError("combinatorics", "one-line form is not a bijection of {1..d}");
    }
    seen[static_cast<std::size_t>(v)] = true;
    images[static_cast<std::size_t>(k)] = v;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::identity(int d) {
  std::vector<int> images(static_cast<std::size_t>(d));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int d, int s, int t) {
  if (s < 1 || t < 1 || s > d || t > d || s == t) throw UsageError("combinatorics", "invalid transposition");
  Permutation p = identity(d);
  std::swap(p.images_[static_cast<std::size_t>(s - 1)], p.images_[static_cast<std::size_t>(t - 1)]);
  return p;
}

Permutation Permutation::of_cycle_type(const Partition& alpha) {
  std::vector<int> images(static_cast<std::size_t>(alpha.size()));
  int start = 0;
  for (int len : alpha.parts()) {
    for (int j = 0; j < len; ++j) images[static_cast<std::size_t>(start + j)] = start + (j + 1) % len;
    start += len;
  }
  return Permutation(std::move(images));
}

std::vector<int> Permutation::one_line() const {
  std::vector<int> out(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out[k] = images_[k] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[static_cast<std::size_t>(images_[k])] = static_cast<int>(k);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k)) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(images_[k] + 1);
  }
  return s + "]";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw UsageError("combinatorics", "composing permutations of different degree");
  std::vector<int> images(q.images_.size());
  for (std::size_t k = 0; k < images.size(); ++k) images[k] = p.images_[static_cast<std::size_t>(q.images_[k])];
  return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& p) {
  const int d = p.degree();
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  std::vector<int> lengths;
  for (int k = 0; k < d; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    int len = 0;
    for (int x = k; !seen[static_cast<std::size_t>(x)]; x = p(x)) {
      seen[static_cast<std::size_t>(x)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

int cycle_count(const Permutation& p) { return cycle_type(p).length(); }

int inversions(const Permutation& p) {
  int count = 0;
  for (int i = 0; i < p.degree(); ++i)
    for (int j = i + 1; j < p.degree(); ++j)
      if (p(i) > p(j)) ++count;
  return count;
}

int longest_decreasing_subsequence(const Permutation& p) {
  // Patience sorting on the negated sequence: tails[k] is the largest possible
  // last value of a decreasing subsequence of length k+1.
  std::vector<int> tails;
  for (int k = 0; k < p.degree(); ++k) {
    const int v = -p(k);
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

DisjointSets::DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
  while (parent_[static_cast<std::size_t>(x)] != x) {
    parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
    x = parent_[static_cast<std::size_t>(x)];
  }
  return x;
}

bool DisjointSets::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  --components_;
  return true;
}

bool is_transitive(std::span<const Permutation> gens, int d) {
  if (d <= 1) return true;
  DisjointSets sets(d);
  for (const auto& g : gens) {
    if (g.degree() != d) throw UsageError("combinatorics", "generator degree mismatch");
    for (int k = 0; k < d; ++k) sets.unite(k, g(k));
  }
  return sets.components() == 1;
}

std::vector<Permutation> all_permutations(int d) {
  std::vector<Permutation> out;
  std::vector<int> line(static_cast<std::size_t>(d));
  std::iota(line.begin(), line.end(), 1);
  do {
    out.push_back(Permutation::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

std::vector<Permutation> enumerate_restricted(int d, int N) {
  if (d < 1 || N < 1) throw UsageError("combinatorics", "enumerate_restricted needs d, N >= 1");
  std::vector<Permutation> out;
  for (auto& p : all_permutations(d))
    if (longest_decreasing_subsequence(p) <= N) out.push_back(std::move(p));
  return out;
}

std::vector<Permutation> class_members(const Partition& alpha) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(alpha.size()))
    if (cycle_type(p) == alpha) out.push_back(std::move(p));
  return out;
}

std::uint32_t permutation_rank(const Permutation& p) {
  const int d = p.degree();
  std::uint32_t rank = 0;
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  for (int k = 0; k < d; ++k) {
    int smaller = 0;
    for (int v = 0; v < p(k); ++v)
      if (!used[static_cast<std::size_t>(v)]) ++smaller;
    used[static_cast<std::size_t>(p(k))] = true;
    rank = rank * static_cast<std::uint32_t>(d - k) + static_cast<std::uint32_t>(smaller);
  }
  return rank;
}

Permutation permutation_unrank(int d, std::uint32_t rank) {
  std::vector<int> digits(static_cast<std::size_t>(d));
  for (int k = d - 1; k >= 0; --k) {
    digits[static_cast<std::size_t>(k)] = static_cast<int>(rank % static_cast<std::uint32_t>(d - k));
    rank /= static_cast<std::uint32_t>(d - k);
  }
  std::vector<int> available(static_cast<std::size_t>(d));
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> line;
  for (int k = 0; k < d; ++k) {
    auto it = available.begin() + digits[static_cast<std::size_t>(k)];
    line.push_back(*it);
    available.erase(it);
  }
  return Permutation::from_one_line(line);
}

}  // namespace hcizlab
