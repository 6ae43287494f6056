#include "mdslab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "mdslab/factor_list.hpp"
#include "mdslab/reducer.hpp"

namespace mdslab {

std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

namespace {

using Tally = std::map<std::vector<int>, long>;

// Residue sums of one partition: part j (1-based) lands in class (shift + j) mod n.
std::vector<int> residue_sums(const Partition& p, int n, int shift) {
  std::vector<int> r(n, 0);
  for (std::size_t j = 0; j < p.size(); ++j) r[(shift + static_cast<int>(j) + 1) % n] += p[j];
  return r;
}

Tally single_tally(int n, int shift, int bound) {
  Tally t;
  for (int s = 0; s <= bound; ++s)
    for (const auto& p : partitions_of(s)) ++t[residue_sums(p, n, shift)];
  return t;
}

Tally ntuple_tally(int n, int bound) {
  Tally acc{{std::vector<int>(n, 0), 1}};
  for (int i = 1; i <= n; ++i) {
    Tally next;
    for (const auto& [u, cu] : acc)
      for (const auto& [v, cv] : single_tally(n, i, bound)) {
        std::vector<int> w(n);
        int total = 0;
        for (int k = 0; k < n; ++k) total += (w[k] = u[k] + v[k]);
        if (total <= bound) next[w] += cu * cv;
      }
    acc = std::move(next);
  }
  return acc;
}

Exponent window(int N, int start, int len, int base, int step) {
  Exponent e(N, base);
  for (int t = 0; t < len; ++t) e[(start + t) % N] += step;
  return e;
}

}  // namespace

long count_partition_tuples(int n, const std::vector<int>& sums) {
  if (static_cast<int>(sums.size()) != n) throw std::invalid_argument("count_partition_tuples: need n sums");
  int total = 0;
  for (int a : sums) total += a;
  std::vector<int> want(n);
  for (int k = 1; k <= n; ++k) want[k % n] = sums[k - 1];
  long count = 0;
  for (const auto& p : partitions_of(total)) count += residue_sums(p, n, 0) == want;
  return count;
}

long count_partition_ntuples(int n, const std::vector<int>& sums) {
  if (static_cast<int>(sums.size()) != n) throw std::invalid_argument("count_partition_ntuples: need n sums");
  int total = 0;
  for (int a : sums) total += a;
  std::vector<int> want(n);
  for (int k = 1; k <= n; ++k) want[k % n] = sums[k - 1];
  Tally t = ntuple_tally(n, total);
  auto it = t.find(want);
  return it == t.end() ? 0 : it->second;
}

MultiSeries<QLaurent> partition_product_gf(int n, int bound) {
  FactorList fl(n);
  for (int m = 0; m * n + 1 <= bound; ++m)
    for (int j = 1; j <= n; ++j) fl.add(window(n, 0, j, m, 1), 0, 1);
  return expand_factors(fl, bound);
}

MultiSeries<QLaurent> partition_ntuple_gf(int n, int bound) {
  FactorList fl(n);
  for (int m = 0; m * n + 1 <= bound; ++m)
    for (int i = 0; i < n; ++i)
      for (int len = 1; len <= n; ++len) {
        Exponent e = window(n, i, len, m, 1);
        if (total_degree(e) <= bound) fl.add(e, 0, 1);
      }
  return expand_factors(fl, bound);
}

namespace {

bool row_parity_ok(const std::vector<int>& r) {
  const int m = static_cast<int>(r.size());
  for (int i = 0; i < m; ++i)
    if ((r[i] + r[(i + 2) % m]) % 2 != 0) return false;
  return true;
}

bool strong_step_ok(const std::vector<int>& from, const std::vector<int>& to, int j) {
  const int m = static_cast<int>(from.size());
  for (int i = 0; i < m; ++i) {
    if (i % 2 != j % 2) continue;
    if (from[i] < to[(i + m - 1) % m] || from[i] < to[(i + 1) % m]) return false;
  }
  return true;
}

}  // namespace

std::vector<ReductionChain> enumerate_reduction_chains(int n, int a, ChainReading reading) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("reduction chains are defined for odd n >= 3");
  const int m = n + 1;
  std::vector<int> row0(m);
  for (int i = 0; i < m; ++i) row0[i] = i % 2 == 0 ? a : 2 * a;
  std::vector<ReductionChain> out;
  ReductionChain rows{row0};
  std::function<void(int, bool)> rec = [&](int j, bool last_idle) {
    const auto r = rows.back();
    if (std::all_of(r.begin(), r.end(), [](int v) { return v == 0; })) {
      out.push_back(rows);
      return;
    }
    // Indices of the other parity move; each picks a value in [s - a_i, s/2].
    std::vector<int> moving, lo, hi;
    for (int i = 0; i < m; ++i) {
      if (i % 2 == j % 2) continue;
      int s = r[(i + m - 1) % m] + r[(i + 1) % m];
      if (s % 2 != 0 || 2 * r[i] < s) return;
      moving.push_back(i);
      lo.push_back(std::max(0, s - r[i]));
      hi.push_back(s / 2);
    }
    std::vector<int> next = r;
    std::function<void(std::size_t)> choose = [&](std::size_t k) {
      if (k == moving.size()) {
        if (!row_parity_ok(next)) return;
        bool idle = next == r;
        if (idle && last_idle) return;
        if (reading == ChainReading::Strong && !strong_step_ok(r, next, j)) return;
        rows.push_back(next);
        rec(j + 1, idle);
        rows.pop_back();
        return;
      }
      for (int v = lo[k]; v <= hi[k]; ++v) {
        next[moving[k]] = v;
        choose(k + 1);
      }
      next[moving[k]] = r[moving[k]];
    };
    choose(0);
  };
  rec(0, false);
  return out;
}

long count_reduction_chains(int n, int a, ChainReading reading) {
  return static_cast<long>(enumerate_reduction_chains(n, a, reading).size());
}

PartitionTuple chain_to_deltas(const ReductionChain& chain) {
  if (chain.empty()) throw std::invalid_argument("chain_to_deltas: empty chain");
  const int m = static_cast<int>(chain[0].size());
  const int len = static_cast<int>(chain.size()) - 1;
  auto at = [&](int j, int i) { return chain[j][((i % m) + m) % m]; };
  PartitionTuple pt;
  for (int i = 0; i < m; i += 2) {
    Partition d;
    for (int j = 1; j <= len; ++j) d.push_back(at(j - 1, i + j - 1) - at(j, i + j - 2));
    pt.parts.push_back(d);
  }
  return pt;
}

ReductionChain deltas_to_chain(const PartitionTuple& pt, int n, int a, int length) {
  const int m = n + 1;
  auto delta = [&](int i, int k) {
    const Partition& d = pt.parts.at((((i % m) + m) % m) / 2);
    return k - 1 < static_cast<int>(d.size()) ? d[k - 1] : 0;
  };
  ReductionChain rows;
  std::vector<int> row(m);
  for (int i = 0; i < m; ++i) row[i] = i % 2 == 0 ? a : 2 * a;
  rows.push_back(row);
  for (int j = 1; j <= length; ++j) {
    for (int i = 0; i < m; ++i) {
      if (i % 2 != j % 2) continue;
      int v = 0;
      for (int k = j + 1; k <= length; ++k) v += delta(i + j + 2 - 2 * k, k);
      row[i] = v;
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

Integer diagonal_constant(const FactorList& fl, int a) {
  auto s = diag_part(expand_factors(fl, a * fl.nvars()));
  QLaurent c = s.coeff({a});
  if (!c.is_zero() && (!c.is_polynomial_in_q() || c.max_exponent() > 0))
    throw std::logic_error("product diagonal is not a constant");
  return c.coeff(0);
}

}  // namespace

Integer odd_product_diagonal(int n, int a) {
  if (n % 2 == 0) throw std::invalid_argument("odd_product_diagonal: n must be odd");
  const int N = (n + 1) / 2;
  const int D = a * N;
  FactorList fl(N);
  for (int m = 0; 2 * m * N + 2 <= D || (2 * m + 1) * N <= D; ++m) {
    if ((2 * m + 1) * N <= D) fl.add(Exponent(N, 2 * m + 1), 0, 1);
    for (int i = 0; i < N; ++i)
      for (int len = 1; len <= N; ++len) {
        Exponent e = window(N, i, len, 2 * m, 2);
        if (total_degree(e) <= D) fl.add(e, 0, 1);
      }
  }
  if (a == 0) return Integer(1);
  return diagonal_constant(fl, a);
}

Integer even_product_diagonal(int n, int a) {
  if (n % 2 != 0) throw std::invalid_argument("even_product_diagonal: n must be even");
  const int N = n / 2 + 1;
  const int D = a * N;
  if (a == 0) return Integer(1);
  FactorList fl(N);
  for (int m = 0; 2 * m * N + 2 <= D; ++m)
    for (int i = 1; i < N; ++i)
      for (int len = 1; len <= N; ++len) {
        if ((i + len - 1) % N == N - 1) continue;
        Exponent e = window(N, i, len, 2 * m, 2);
        if (total_degree(e) <= D) fl.add(e, 0, 1);
      }
  return diagonal_constant(fl, a);
}

Partition conjugate(const Partition& p) {
  Partition c;
  for (int k = 1; !p.empty() && k <= p.front(); ++k)
    c.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [k](int v) { return v >= k; })));
  return c;
}

namespace {

int level(const Partition& p, int j) { return j < static_cast<int>(p.size()) ? p[j] : 0; }

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

GammaDecomposition gamma_decomposition(const PartitionTuple& pt) {
  std::size_t len = 0;
  for (const auto& d : pt.parts) len = std::max(len, d.size());
  // Common parity of each level; gamma collects the levels where it changes.
  std::vector<int> eps(len + 1, 0);
  for (std::size_t j = 0; j < len; ++j) {
    eps[j] = level(pt.parts.at(0), static_cast<int>(j)) % 2;
    for (const auto& d : pt.parts)
      if (level(d, static_cast<int>(j)) % 2 != eps[j])
        throw std::invalid_argument("gamma_decomposition: level " + std::to_string(j + 1) + " mixes parities");
  }
  GammaDecomposition out;
  for (int j = static_cast<int>(len); j >= 1; --j)
    if (eps[j - 1] != eps[j]) out.gamma.push_back(j);
  Partition gstar = conjugate(out.gamma);
  for (const auto& d : pt.parts) {
    Partition e;
    for (std::size_t j = 0; j < len; ++j) e.push_back(level(d, static_cast<int>(j)) - level(gstar, static_cast<int>(j)));
    out.even_parts.push_back(trimmed(e));
  }
  return out;
}

CheckReport check_lemma_partitions(int max_n, int max_entry) {
  CheckReport r("partition_lemma");
  r.params = {{"max_n", max_n}, {"max_entry", max_entry}};
  for (int n = 1; n <= max_n; ++n) {
    const int bound = n * max_entry;
    auto gf = partition_product_gf(n, bound);
    Tally brute = single_tally(n, 0, bound);
    for (const Exponent& e : monomials_upto(n, bound)) {
      if (*std::max_element(e.begin(), e.end()) > max_entry) continue;
      std::vector<int> classes(n);
      for (int k = 1; k <= n; ++k) classes[k % n] = e[k - 1];
      long count = brute.count(classes) ? brute.at(classes) : 0;
      QLaurent c = gf.coeff(e);
      r.expect(c == QLaurent(Integer(count)), [&] {
        return "n = " + std::to_string(n) + ", sums " + exponent_to_string(e) + ": brute force " +
               std::to_string(count) + ", product " + c.pretty();
      });
    }
  }
  return r;
}

CheckReport check_ntuple_partitions(int n, int bound) {
  CheckReport r("partition_ntuples");
  r.params = {{"n", n}, {"bound", bound}};
  auto gf = partition_ntuple_gf(n, bound);
  Tally brute = ntuple_tally(n, bound);
  for (const Exponent& e : monomials_upto(n, bound)) {
    std::vector<int> classes(n);
    for (int k = 1; k <= n; ++k) classes[k % n] = e[k - 1];
    long count = brute.count(classes) ? brute.at(classes) : 0;
    r.expect(gf.coeff(e) == QLaurent(Integer(count)), [&] {
      return "sums " + exponent_to_string(e) + ": brute force " + std::to_string(count) + ", product " +
             gf.coeff(e).pretty();
    });
  }
  return r;
}

CheckReport check_chain_agreement(int n, int max_a) {
  CheckReport r("chain_agreement");
  r.params = {{"n", n}, {"max_a", max_a}};
  auto P = compute_P(max_a, n);
  for (int a = 0; a <= max_a; ++a) {
    long literal = count_reduction_chains(n, a, ChainReading::Literal);
    long strong = count_reduction_chains(n, a, ChainReading::Strong);
    QLaurent p = P.coeff({a});
    Integer lowest = p.coeff(0);
    Integer product = odd_product_diagonal(n, a);
    r.expect(p.is_polynomial_in_q() && !p.is_zero() && p.min_exponent() == 0,
             [&] { return "p_" + std::to_string(a) + " = " + p.pretty() + " has no constant term"; });
    r.expect(Integer(literal) == lowest && lowest == product, [&] {
      return "a = " + std::to_string(a) + ": chains " + std::to_string(literal) + ", constant term of p_a " +
             lowest.get_str() + ", product diagonal " + product.get_str();
    });
    r.expect(literal == strong, [&] {
      return "a = " + std::to_string(a) + ": " + std::to_string(literal) + " chains under the stated conditions, " +
             std::to_string(strong) + " under the reconstructed inequalities";
    });
  }
  return r;
}

CheckReport check_even_p_lowest_terms(int n, int max_a) {
  CheckReport r("even_p_lowest_terms");
  r.params = {{"n", n}, {"max_a", max_a}};
  if (n % 2 != 0) throw std::invalid_argument("check_even_p_lowest_terms: n must be even");
  auto P = compute_P(max_a, n);
  for (int a = 0; a <= max_a; ++a) {
    QLaurent p = P.coeff({a});
    if (a % 2 == 1) {
      r.expect(p.is_zero(), [&] { return "p_" + std::to_string(a) + " = " + p.pretty() + ", expected 0"; });
      continue;
    }
    Integer product = even_product_diagonal(n, a);
    r.expect(!p.is_zero() && p.min_exponent() == 0 && p.coeff(0) == product, [&] {
      return "p_" + std::to_string(a) + " = " + p.pretty() + ", product diagonal " + product.get_str();
    });
  }
  return r;
}

namespace {

void partitions_bounded(int max_entry, int max_len, Partition& cur, std::vector<Partition>& out) {
  out.push_back(trimmed(cur));
  if (static_cast<int>(cur.size()) == max_len) return;
  int cap = cur.empty() ? max_entry : cur.back();
  for (int v = 1; v <= cap; ++v) {
    cur.push_back(v);
    partitions_bounded(max_entry, max_len, cur, out);
    cur.pop_back();
  }
}

// Strictly decreasing partitions with parts <= max_part.
std::vector<Partition> strict_partitions(int max_part) {
  std::vector<Partition> out;
  for (int mask = 0; mask < (1 << max_part); ++mask) {
    Partition g;
    for (int k = max_part; k >= 1; --k)
      if (mask & (1 << (k - 1))) g.push_back(k);
    out.push_back(g);
  }
  return out;
}

bool is_even_shift(const PartitionTuple& pt, const Partition& gamma) {
  Partition gstar = conjugate(gamma);
  for (const auto& d : pt.parts) {
    int len = static_cast<int>(std::max(d.size(), gstar.size()));
    for (int j = 0; j < len; ++j) {
      int e = level(d, j) - level(gstar, j);
      if (e < 0 || e % 2 != 0) return false;
    }
  }
  return true;
}

std::string tuple_to_string(const PartitionTuple& pt) {
  std::string s = "(";
  for (std::size_t i = 0; i < pt.parts.size(); ++i) s += (i ? ", " : "") + exponent_to_string(pt.parts[i]);
  return s + ")";
}

void check_one_gamma(CheckReport& r, const PartitionTuple& pt, int max_part) {
  GammaDecomposition g = gamma_decomposition(pt);
  bool strict = std::adjacent_find(g.gamma.begin(), g.gamma.end(), std::less_equal<int>()) == g.gamma.end();
  r.expect(strict, [&] { return tuple_to_string(pt) + ": gamma " + exponent_to_string(g.gamma) + " not strict"; });
  Partition gstar = conjugate(g.gamma);
  bool rebuilt = true;
  for (std::size_t i = 0; i < pt.parts.size(); ++i) {
    const Partition& e = g.even_parts[i];
    int len = static_cast<int>(std::max({e.size(), gstar.size(), pt.parts[i].size()}));
    for (int j = 0; j < len; ++j) {
      rebuilt = rebuilt && level(e, j) % 2 == 0 && level(e, j) >= 0;
      rebuilt = rebuilt && level(e, j) + level(gstar, j) == level(pt.parts[i], j);
    }
  }
  r.expect(rebuilt, [&] { return tuple_to_string(pt) + ": reconstruction failed"; });
  int candidates = 0;
  for (const auto& other : strict_partitions(max_part)) candidates += is_even_shift(pt, other);
  r.expect(candidates == 1, [&] {
    return tuple_to_string(pt) + ": " + std::to_string(candidates) + " strictly decreasing candidates";
  });
}

bool levels_share_parity(const PartitionTuple& pt) {
  std::size_t len = 0;
  for (const auto& d : pt.parts) len = std::max(len, d.size());
  for (std::size_t j = 0; j < len; ++j)
    for (const auto& d : pt.parts)
      if (level(d, static_cast<int>(j)) % 2 != level(pt.parts[0], static_cast<int>(j)) % 2) return false;
  return true;
}

}  // namespace

CheckReport check_gamma_roundtrip(int n, int max_entry, int max_len) {
  CheckReport r("gamma_roundtrip");
  r.params = {{"n", n}, {"max_entry", max_entry}, {"max_len", max_len}};
  const int parts = (n + 1) / 2;
  std::vector<Partition> single;
  Partition cur;
  partitions_bounded(max_entry, max_len, cur, single);
  std::vector<std::size_t> idx(parts, 0);
  long rejected = 0;
  while (true) {
    PartitionTuple pt;
    for (int i = 0; i < parts; ++i) pt.parts.push_back(single[idx[i]]);
    if (levels_share_parity(pt)) {
      check_one_gamma(r, pt, max_len);
    } else {
      bool threw = false;
      try {
        gamma_decomposition(pt);
      } catch (const std::invalid_argument&) {
        threw = true;
      }
      ++rejected;
      r.expect(threw, [&] { return tuple_to_string(pt) + ": mixed parities were accepted"; });
    }
    int k = 0;
    while (k < parts && ++idx[k] == single.size()) idx[k++] = 0;
    if (k == parts) break;
  }
  r.notes.push_back(std::to_string(rejected) + " tuples with mixed level parities rejected");
  return r;
}

CheckReport check_chain_bijection(int n, int max_a) {
  CheckReport r("chain_bijection");
  r.params = {{"n", n}, {"max_a", max_a}};
  for (int a = 0; a <= max_a; ++a) {
    auto chains = enumerate_reduction_chains(n, a, ChainReading::Literal);
    std::map<std::vector<Partition>, int> seen;
    for (const auto& chain : chains) {
      PartitionTuple pt = chain_to_deltas(chain);
      const int len = static_cast<int>(chain.size()) - 1;
      bool decreasing = true;
      for (const auto& d : pt.parts)
        for (std::size_t j = 0; j < d.size(); ++j)
          decreasing = decreasing && d[j] >= 0 && (j == 0 || d[j - 1] >= d[j]);
      r.expect(decreasing, [&] { return "a = " + std::to_string(a) + ": deltas " + tuple_to_string(pt) + " not a partition"; });
      r.expect(levels_share_parity(pt), [&] { return "deltas " + tuple_to_string(pt) + " mix parities"; });
      // Each delta_{i-2j}^{(j)} chain along the diagonal telescopes to a.
      const int N = static_cast<int>(pt.parts.size());
      for (int i = 0; i < N; ++i) {
        int s = 0;
        for (int j = 1; j <= len; ++j) s += level(pt.parts[((i - j) % N + N) % N], j - 1);
        r.expect(s == a, [&] { return "deltas " + tuple_to_string(pt) + ": diagonal " + std::to_string(i) + " sums to " + std::to_string(s); });
      }
      r.expect(deltas_to_chain(pt, n, a, len) == chain, [&] {
        return "a = " + std::to_string(a) + ": chain not recovered from " + tuple_to_string(pt);
      });
      r.expect(++seen[pt.parts] == 1, [&] { return "deltas " + tuple_to_string(pt) + " come from two chains"; });
      if (levels_share_parity(pt)) check_one_gamma(r, pt, std::max(1, len));
    }
  }
  return r;
}

}  // namespace mdslab
