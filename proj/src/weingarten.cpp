#include "hcizlab/weingarten.hpp"

#include "hcizlab/error.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <unordered_map>

namespace hcizlab {

namespace {

void require_degree(int d, int N) {
  if (d < 1) throw UsageError("weingarten", "degree must be at least 1");
  if (N < 1) throw UsageError("weingarten", "dimension N must be at least 1");
}

std::vector<BigInt> powers(int base, int top) {
  std::vector<BigInt> out(static_cast<std::size_t>(top) + 1);
  out[0] = 1;
  for (int k = 1; k <= top; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k) - 1] * base;
  return out;
}

std::vector<Permutation> basis_for(int d, int N) {
  const BigInt rows = restricted_basis_size(d, N);
  if (rows > kMaxGramRows)
    throw CapacityError("weingarten", "Gram matrix would have " + to_string(rows) + " rows (limit " +
                                          std::to_string(kMaxGramRows) + ")");
  return d <= N ? all_permutations(d) : enumerate_restricted(d, N);
}

Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

const char* to_string(WeingartenRange range) { return range == WeingartenRange::stable ? "stable" : "unstable"; }

Rational WeingartenTable::class_value(const Partition& mu) const {
  if (range != WeingartenRange::stable)
    throw UsageError("weingarten", "class values exist only in the stable range d <= N");
  if (mu.size() != d) throw UsageError("weingarten", "class " + mu.str() + " has the wrong degree");
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == mu) return class_values[i];
  throw UsageError("weingarten", "unknown class " + mu.str());
}

Rational WeingartenTable::value(const Permutation& rho, const Permutation& sigma) const {
  if (rho.degree() != d || sigma.degree() != d) throw UsageError("weingarten", "permutation degree mismatch");
  if (range == WeingartenRange::stable) return class_value(cycle_type(rho.inverse() * sigma));
  auto locate = [&](const Permutation& p) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i] == p) return static_cast<Eigen::Index>(i);
    throw UsageError("weingarten", p.str() + " is outside the restricted basis");
  };
  return pair_values(locate(rho), locate(sigma));
}

std::vector<Permutation> WeingartenTable::index_set() const {
  if (range == WeingartenRange::unstable) return basis;
  if (d > 7) throw CapacityError("weingarten", "index set S(d) too large to list for d > 7");
  return all_permutations(d);
}

DenseMatrix<Rational> WeingartenTable::matrix() const {
  if (range == WeingartenRange::unstable) return pair_values;
  const auto perms = index_set();
  const auto n = static_cast<Eigen::Index>(perms.size());
  DenseMatrix<Rational> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = value(perms[static_cast<std::size_t>(i)], perms[static_cast<std::size_t>(j)]);
  return out;
}

BigInt restricted_basis_size(int d, int N) {
  require_degree(d, N);
  BigInt total(0);
  for (const auto& lambda : enumerate_partitions(d))
    if (lambda.length() <= N) {
      const BigInt dim = dimension(lambda);
      total += dim * dim;
    }
  return total;
}

DenseMatrix<BigInt> gram_matrix(int d, int N) {
  require_degree(d, N);
  const auto basis = basis_for(d, N);
  const auto pow = powers(N, d);
  const auto n = static_cast<Eigen::Index>(basis.size());
  DenseMatrix<BigInt> g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Permutation inv = basis[static_cast<std::size_t>(i)].inverse();
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = pow[static_cast<std::size_t>(cycle_count(inv * basis[static_cast<std::size_t>(j)]))];
  }
  return g;
}

WeingartenTable weingarten_exact(int d, int N) {
  require_degree(d, N);
  const auto basis = basis_for(d, N);
  if (static_cast<long long>(basis.size()) > kMaxInverseRows)
    throw CapacityError("weingarten", "exact inversion limited to " + std::to_string(kMaxInverseRows) + " rows, got " +
                                          std::to_string(basis.size()));
  DenseMatrix<Rational> inverse;
  try {
    inverse = exact_inverse(gram_matrix(d, N));
  } catch (const DomainError&) {
    throw DomainError("weingarten",
                      "Gram matrix is singular: the Weingarten function has poles at N = -c for box contents c, "
                      "so d > N requires the restricted basis");
  }

  WeingartenTable table;
  table.d = d;
  table.N = N;
  if (d > N) {
    table.range = WeingartenRange::unstable;
    table.basis = basis;
    table.pair_values = std::move(inverse);
    return table;
  }

  table.range = WeingartenRange::stable;
  table.classes = enumerate_partitions(d);
  table.class_values.assign(table.classes.size(), Rational(0));
  std::vector<bool> seen(table.classes.size(), false);
  const PartitionIndex index(d);
  const auto n = static_cast<Eigen::Index>(basis.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const Permutation inv = basis[static_cast<std::size_t>(i)].inverse();
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto mu = static_cast<std::size_t>(index.index_of(cycle_type(inv * basis[static_cast<std::size_t>(j)])));
      if (!seen[mu]) {
        seen[mu] = true;
        table.class_values[mu] = inverse(i, j);
      } else if (table.class_values[mu] != inverse(i, j)) {
        throw NumericalError("weingarten", "inverse Gram entries disagree within class " + table.classes[mu].str());
      }
    }
  }
  return table;
}

WeingartenTable weingarten_by_characters(int d, int N) {
  require_degree(d, N);
  if (N < d)
    throw DomainError("weingarten", "character formula has poles for N < d (content product vanishes); use "
                                    "weingarten_exact for the restricted basis");
  const auto chars = CharacterTable::get(d);
  const int count = chars->index().count();
  const BigInt d_fact = factorial(d);
  std::vector<Rational> weights(static_cast<std::size_t>(count));
  for (int l = 0; l < count; ++l) {
    BigInt prod(1);
    for (int c : chars->contents(l)) prod *= N + c;
    weights[static_cast<std::size_t>(l)] = Rational(chars->dim(l)) / Rational(d_fact * prod);
  }
  WeingartenTable table;
  table.d = d;
  table.N = N;
  table.range = WeingartenRange::stable;
  table.classes = chars->index().partitions();
  for (int m = 0; m < count; ++m) {
    Rational sum(0);
    for (int l = 0; l < count; ++l) sum += weights[static_cast<std::size_t>(l)] * Rational(chars->value(l, m));
    table.class_values.push_back(sum);
  }
  return table;
}

std::shared_ptr<const WeingartenTable> weingarten_table(int d, int N) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const WeingartenTable>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({d, N});
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const WeingartenTable>(d <= N ? weingarten_by_characters(d, N) : weingarten_exact(d, N));
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(d, N), table).first->second;
}

Rational WeingartenSeries::partial_sum(int mu, int upto) const {
  const auto& coeff = coefficients[static_cast<std::size_t>(mu)];
  upto = std::min<int>(upto, static_cast<int>(coeff.size()) - 1);
  Rational sum(0);
  Rational scale = Rational(1) / Rational(ipow(BigInt(N), d));
  for (int r = 0; r <= upto; ++r) {
    sum += Rational(coeff[static_cast<std::size_t>(r)]) * scale;
    scale /= N;
  }
  return sum;
}

WeingartenSeries weingarten_series(int d, int N, int order) {
  require_degree(d, N);
  if (order < 0) throw UsageError("weingarten", "series order must be non-negative");
  const auto chars = CharacterTable::get(d);
  const int count = chars->index().count();
  const BigInt d_fact = factorial(d);

  std::vector<std::vector<BigInt>> h(static_cast<std::size_t>(count));
  for (int l = 0; l < count; ++l) h[static_cast<std::size_t>(l)] = complete_homogeneous_all(order, chars->contents(l));

  WeingartenSeries s;
  s.d = d;
  s.N = N;
  s.order = order;
  s.classes = chars->index().partitions();
  for (int m = 0; m < count; ++m) {
    std::vector<BigInt> row;
    for (int r = 0; r <= order; ++r) {
      BigInt total(0);
      for (int l = 0; l < count; ++l)
        total += chars->dim(l) * chars->value(l, m) * h[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
      BigInt c = divexact(total, d_fact);
      row.push_back(r % 2 == 0 ? c : BigInt(-c));
    }
    s.coefficients.push_back(std::move(row));
  }
  for (int m = 0; m < count; ++m) s.partial_sums.push_back(s.partial_sum(m, order));

  // |[pi] h_r| <= h_r(1, ..., d-1), whose generating function at 1/N is
  // prod_t N / (N - t). The tail is that product minus its own partial sum.
  if (N <= d - 1) {
    s.tail_bound = std::numeric_limits<double>::infinity();
  } else {
    std::vector<int> ones_to_top;
    for (int t = 1; t < d; ++t) ones_to_top.push_back(t);
    const auto words = complete_homogeneous_all(order, ones_to_top);
    Rational full(1);
    for (int t = 1; t < d; ++t) full *= Rational(N, N - t);
    Rational scale(1);
    for (int r = 0; r <= order; ++r) {
      full -= Rational(words[static_cast<std::size_t>(r)]) * scale;
      scale /= N;
    }
    full /= Rational(ipow(BigInt(N), d));
    s.tail_bound = full.convert_to<double>();
  }
  return s;
}

double observed_convergence_ratio(const WeingartenSeries& series, const WeingartenTable& exact) {
  if (series.order < 2) throw UsageError("weingarten", "observed ratio needs series order >= 2");
  double worst = 0;
  for (std::size_t m = 0; m < series.classes.size(); ++m) {
    const Rational w = exact.class_value(series.classes[m]);
    const Rational last = abs_value(w - series.partial_sum(static_cast<int>(m), series.order));
    const Rational before = abs_value(w - series.partial_sum(static_cast<int>(m), series.order - 2));
    if (last == 0 || before == 0) continue;
    worst = std::max(worst, std::sqrt(Rational(last / before).convert_to<double>()));
  }
  return worst;
}

namespace {

void check_indices(const IndexList& list, int N) {
  for (int i : list)
    if (i < 1 || i > N) throw UsageError("weingarten", "index " + std::to_string(i) + " outside 1.." + std::to_string(N));
}

void check_shapes(const IndexList& rows, const IndexList& rows_conj, const IndexList& cols,
                  const IndexList& cols_conj, int N) {
  if (N < 1) throw UsageError("weingarten", "dimension N must be at least 1");
  if (rows.size() != cols.size() || rows_conj.size() != cols_conj.size())
    throw UsageError("weingarten", "row and column index lists must have equal length");
  for (const auto* l : {&rows, &rows_conj, &cols, &cols_conj}) check_indices(*l, N);
}

// Positions p in the index set with source(perm(k)) == target(k) for all k.
std::vector<std::size_t> matching(const std::vector<Permutation>& perms, const IndexList& source,
                                  const IndexList& target) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < perms.size(); ++p) {
    bool ok = true;
    for (std::size_t k = 0; k < source.size() && ok; ++k)
      ok = source[static_cast<std::size_t>(perms[p](static_cast<int>(k)))] == target[k];
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace

Rational correlation(const IndexList& rows, const IndexList& rows_conj, const IndexList& cols,
                     const IndexList& cols_conj, int N) {
  check_shapes(rows, rows_conj, cols, cols_conj, N);
  if (rows.size() != rows_conj.size()) return Rational(0);
  const int d = static_cast<int>(rows.size());
  if (d == 0) return Rational(1);
  const auto table = weingarten_table(d, N);
  const auto perms = table->index_set();
  const auto left = matching(perms, rows, rows_conj);
  const auto right = matching(perms, cols, cols_conj);
  Rational sum(0);
  if (table->range == WeingartenRange::unstable) {
    for (auto i : left)
      for (auto j : right) sum += table->pair_values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return sum;
  }
  const PartitionIndex index(d);
  for (auto i : left) {
    const Permutation inv = perms[i].inverse();
    for (auto j : right)
      sum += table->class_values[static_cast<std::size_t>(index.index_of(cycle_type(inv * perms[j])))];
  }
  return sum;
}

Estimate monte_carlo_correlation(const IndexList& rows, const IndexList& rows_conj, const IndexList& cols,
                                 const IndexList& cols_conj, int N, long long samples, std::uint64_t seed) {
  check_shapes(rows, rows_conj, cols, cols_conj, N);
  if (samples < 1000) throw UsageError("weingarten", "Monte Carlo needs at least 1000 samples");
  return haar_average(N, samples, seed, [&](const ComplexMatrix& u) {
    Complex prod(1.0);
    for (std::size_t k = 0; k < rows.size(); ++k) prod *= u(rows[k] - 1, cols[k] - 1);
    for (std::size_t k = 0; k < rows_conj.size(); ++k) prod *= std::conj(u(rows_conj[k] - 1, cols_conj[k] - 1));
    return prod;
  });
}

nlohmann::json to_json(const WeingartenTable& table) {
  using nlohmann::json;
  json entries = json::array();
  auto fraction = [](json& e, const Rational& q) {
    e["numerator"] = to_string(BigInt(boost::multiprecision::numerator(q)));
    e["denominator"] = to_string(BigInt(boost::multiprecision::denominator(q)));
    e["value"] = to_string(q);
  };
  if (table.range == WeingartenRange::stable) {
    for (std::size_t m = 0; m < table.classes.size(); ++m) {
      json e;
      e["class"] = table.classes[m].parts();
      fraction(e, table.class_values[m]);
      entries.push_back(std::move(e));
    }
  } else {
    for (std::size_t i = 0; i < table.basis.size(); ++i)
      for (std::size_t j = 0; j < table.basis.size(); ++j) {
        json e;
        e["rho"] = table.basis[i].one_line();
        e["sigma"] = table.basis[j].one_line();
        fraction(e, table.pair_values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        entries.push_back(std::move(e));
      }
  }
  return json{{"d", table.d}, {"N", table.N}, {"range", to_string(table.range)}, {"entries", entries}};
}

}  // namespace hcizlab
