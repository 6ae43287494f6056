#include "mdslab/global.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "mdslab/parallel.hpp"

namespace mdslab {

std::string TupleF::to_string() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) s += (i ? ", " : "") + f[i].to_string();
  return s + ")";
}

double enumeration_cost(long q0, int degree_sum, int n) {
  return std::pow(static_cast<double>(q0), degree_sum) * (n + 1);
}

GlobalContext::GlobalContext(int q0, CoeffEngine& engine, int table_degree)
    : q0_(q0), engine_(engine), table_(q0, table_degree) {}

const fq::Factorization& GlobalContext::factorization(const fq::PolyFq& f) {
  if (f.degree() <= table_.max_degree()) return table_.factor(f);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = extra_factors_[f];
  if (!slot) slot = std::make_unique<fq::Factorization>(fq::factor(f));
  return *slot;
}

Rational GlobalContext::c_at(const IndexTuple& t) {
  std::lock_guard<std::mutex> lock(mu_);
  return engine_.coeff(t).eval(Rational(q0_));
}

Integer GlobalContext::local_at(const IndexTuple& v, int p_deg) {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(v, p_deg);
  auto it = local_cache_.find(key);
  if (it != local_cache_.end()) return it->second;
  Integer w = local_weight_at(v, engine_, q0_, p_deg);
  local_cache_.emplace(key, w);
  return w;
}

namespace {

// Residue symbol raised to a nonnegative power.
int symbol_pow(const fq::PolyFq& f, const fq::PolyFq& g, int e) {
  if (e == 0 || g.is_one()) return 1;
  int s = fq::residue_symbol(f, g);
  return e % 2 == 0 ? s * s : s;
}

}  // namespace

Integer GlobalContext::H_impl(const TupleF& t, const std::vector<fq::PolyFq>& order) {
  const int m = t.size();
  if (m != n() + 1) throw std::invalid_argument("H: tuple has the wrong length");
  std::vector<const fq::Factorization*> fac;
  for (const auto& f : t.f) {
    if (!f.is_monic()) throw std::invalid_argument("H: arguments must be monic");
    fac.push_back(&factorization(f));
  }
  Integer value(1);
  // F accumulates the prime-power parts already absorbed.
  std::vector<fq::PolyFq> F(m, fq::PolyFq::one(q0_));
  for (const auto& p : order) {
    std::vector<int> v(m);
    for (int i = 0; i < m; ++i) v[i] = fac[i]->valuation(p);
    Integer w = local_at(IndexTuple(v), p.degree());
    if (w == 0) return Integer(0);
    int twist = 1;
    for (int i = 0; i < m; ++i) {
      int j = (i + 1) % m;
      // (F_i / p^{v_j}) (p^{v_i} / F_j)
      twist *= symbol_pow(F[i], p, v[j]);
      twist *= symbol_pow(p, F[j], v[i]);
    }
    if (twist == 0) return Integer(0);
    value *= w * twist;
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < v[i]; ++k) F[i] = F[i] * p;
  }
  return value;
}

namespace {

std::vector<fq::PolyFq> prime_support(const std::vector<const fq::Factorization*>& fac) {
  std::vector<fq::PolyFq> ps;
  for (const auto* f : fac)
    for (const auto& [p, e] : f->factors) ps.push_back(p);
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

}  // namespace

Integer GlobalContext::H(const TupleF& t) {
  std::vector<const fq::Factorization*> fac;
  for (const auto& f : t.f) fac.push_back(&factorization(f));
  return H_impl(t, prime_support(fac));
}

Integer GlobalContext::H_with_order(const TupleF& t, const std::vector<fq::PolyFq>& order) {
  std::vector<const fq::Factorization*> fac;
  for (const auto& f : t.f) fac.push_back(&factorization(f));
  std::vector<fq::PolyFq> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != prime_support(fac)) throw std::invalid_argument("H_with_order: order is not the prime support");
  return H_impl(t, order);
}

namespace {

void check_budget(int q0, const IndexTuple& a) {
  double cost = enumeration_cost(q0, a.sum(), a.n());
  if (cost > kSymbolBudget) {
    std::ostringstream os;
    os << "enumeration over " << a.to_string() << " at q0 = " << q0 << " costs " << cost
       << " symbol evaluations, budget is " << kSymbolBudget;
    throw BudgetExceeded(os.str());
  }
}

TupleF tuple_at(int q0, const IndexTuple& a, std::uint64_t k) {
  TupleF t;
  t.f.resize(a.size(), fq::PolyFq(q0));
  for (int i = a.size() - 1; i >= 0; --i) {
    std::uint64_t c = fq::monic_count(q0, a[i]);
    t.f[i] = fq::monic_at(q0, a[i], k % c);
    k /= c;
  }
  return t;
}

std::uint64_t tuple_count(int q0, const IndexTuple& a) {
  std::uint64_t total = 1;
  for (int v : a.values()) total *= fq::monic_count(q0, v);
  return total;
}

}  // namespace

Integer GlobalContext::global_coeff_sum(const IndexTuple& a) {
  check_budget(q0_, a);
  return parallel_sum<Integer>(tuple_count(q0_, a), [&](std::size_t k) { return H(tuple_at(q0_, a, k)); },
                               Integer(0));
}

Integer GlobalContext::naive_coeff(const IndexTuple& a) {
  check_budget(q0_, a);
  return parallel_sum<Integer>(
      tuple_count(q0_, a),
      [&](std::size_t k) {
        TupleF t = tuple_at(q0_, a, k);
        int s = 1;
        for (int i = 0; i < t.size() && s != 0; ++i) s *= fq::residue_symbol(t[i], t[i + 1]);
        return Integer(s);
      },
      Integer(0));
}

std::vector<Integer> GlobalContext::l_series(const TupleF& fixed, int i, int xbound) {
  if (fixed.size() != n() + 1) throw std::invalid_argument("l_series: tuple has the wrong length");
  int fixed_deg = 0;
  for (int j = 0; j < fixed.size(); ++j)
    if (j != i) fixed_deg += fixed.f[j].degree();
  if (enumeration_cost(q0_, xbound + fixed_deg, n()) > kSymbolBudget)
    throw BudgetExceeded("l_series: x-bound " + std::to_string(xbound) + " exceeds the enumeration budget");
  std::vector<Integer> out;
  for (int d = 0; d <= xbound; ++d)
    out.push_back(parallel_sum<Integer>(
        fq::monic_count(q0_, d),
        [&](std::size_t k) {
          TupleF t = fixed;
          t.f[i] = fq::monic_at(q0_, d, k);
          return H(t);
        },
        Integer(0)));
  return out;
}

CheckReport check_local_to_global(GlobalContext& ctx, int max_sum) {
  CheckReport r("local_to_global");
  const int n = ctx.n();
  r.params = {{"n", n}, {"q0", ctx.q0()}, {"max_sum", max_sum}};
  for (int s = 0; s <= max_sum; ++s)
    for (const IndexTuple& t : tuples_with_sum(n, s)) {
      Integer got = ctx.global_coeff_sum(t);
      Rational want = ctx.c_at(t);
      r.expect(Rational(got) == want, [&] {
        return "c" + t.to_string() + ": enumeration " + got.get_str() + ", engine " + want.get_str();
      });
    }
  return r;
}

namespace {

Integer at(const std::vector<Integer>& v, int k) { return k < 0 || k >= static_cast<int>(v.size()) ? Integer(0) : v[k]; }

}  // namespace

CheckReport check_l_series_fe(const TupleF& fixed, int i, GlobalContext& ctx) {
  CheckReport r("l_series_fe");
  const int q0 = ctx.q0();
  const int s = fixed[i - 1].degree() + fixed[i + 1].degree();
  TupleF shown = fixed;
  shown.f[i] = fq::PolyFq::one(q0);
  r.params = {{"fixed", shown.to_string()}, {"i", i}, {"q0", q0}};
  std::vector<Integer> L = ctx.l_series(fixed, i, s + 1);
  if (s % 2 == 1) {
    for (int d = 0; d <= s + 1; ++d) {
      Integer lhs = ipow(Integer(q0), (s - 1) / 2) * at(L, d);
      Integer rhs = ipow(Integer(q0), d) * at(L, s - 1 - d);
      r.expect(lhs == rhs, [&] { return "degree " + std::to_string(d) + ": " + lhs.get_str() + " vs " + rhs.get_str(); });
    }
  } else {
    std::vector<Integer> N;
    for (int d = 0; d <= s + 1; ++d) N.push_back(at(L, d) - q0 * at(L, d - 1));
    for (int d = 0; d <= s + 1; ++d) {
      Integer lhs = ipow(Integer(q0), s / 2) * at(N, d);
      Integer rhs = ipow(Integer(q0), d) * at(N, s - d);
      r.expect(lhs == rhs, [&] {
        return "cleared degree " + std::to_string(d) + ": " + lhs.get_str() + " vs " + rhs.get_str();
      });
    }
  }
  return r;
}

CheckReport check_l_series_fe_all(GlobalContext& ctx, int max_total) {
  CheckReport r("l_series_fe_all");
  const int n = ctx.n();
  const int q0 = ctx.q0();
  r.params = {{"n", n}, {"q0", q0}, {"max_total", max_total}};
  for (int i = 0; i <= n; ++i)
    for (int s = 0; s <= max_total; ++s)
      for (const IndexTuple& degs : tuples_with_sum(n, s)) {
        if (degs[i] != 0) continue;
        for (std::uint64_t k = 0; k < tuple_count(q0, degs); ++k) {
          r.absorb(check_l_series_fe(tuple_at(q0, degs, k), i, ctx));
        }
      }
  return r;
}

CheckReport check_grouping_independence(GlobalContext& ctx, int max_degree, int samples, unsigned seed) {
  CheckReport r("grouping_independence");
  const int n = ctx.n();
  const int q0 = ctx.q0();
  r.params = {{"n", n}, {"q0", q0}, {"max_degree", max_degree}, {"samples", samples}, {"seed", seed}};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int s = 0; s < samples; ++s) {
    TupleF t;
    for (int i = 0; i <= n; ++i) {
      int d = deg(rng);
      std::uniform_int_distribution<std::uint64_t> pick(0, fq::monic_count(q0, d) - 1);
      t.f.push_back(fq::monic_at(q0, d, pick(rng)));
    }
    Integer sorted = ctx.H(t);
    std::vector<fq::PolyFq> support;
    for (const auto& f : t.f)
      for (const auto& [p, e] : ctx.factorization(f).factors) support.push_back(p);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    std::vector<fq::PolyFq> order = support;
    std::shuffle(order.begin(), order.end(), rng);
    Integer shuffled = ctx.H_with_order(t, order);
    r.expect(sorted == shuffled, [&] {
      return t.to_string() + ": sorted order " + sorted.get_str() + ", shuffled order " + shuffled.get_str();
    });
    // Two-block split: H(F G) = H(F) H(G) prod (F_i/G_{i+1}) (G_i/F_{i+1}).
    TupleF F, G;
    for (const auto& f : t.f) {
      fq::PolyFq a = fq::PolyFq::one(q0), b = a;
      for (const auto& [p, e] : ctx.factorization(f).factors) {
        bool first = std::find(order.begin(), order.begin() + order.size() / 2, p) != order.begin() + order.size() / 2;
        for (int k = 0; k < e; ++k) (first ? a : b) = (first ? a : b) * p;
      }
      F.f.push_back(a);
      G.f.push_back(b);
    }
    Integer split = ctx.H(F) * ctx.H(G);
    for (int i = 0; i <= n; ++i) split *= fq::residue_symbol(F[i], G[i + 1]) * fq::residue_symbol(G[i], F[i + 1]);
    r.expect(sorted == split, [&] {
      return t.to_string() + ": direct " + sorted.get_str() + ", split " + F.to_string() + " | " + G.to_string() +
             " gives " + split.get_str();
    });
  }
  return r;
}

CheckReport observe_naive_vs_axiomatic(GlobalContext& ctx, int max_sum) {
  CheckReport r("naive_vs_axiomatic");
  r.params = {{"n", ctx.n()}, {"q0", ctx.q0()}, {"max_sum", max_sum}};
  long agree = 0, differ = 0;
  for (int s = 0; s <= max_sum; ++s)
    for (const IndexTuple& t : tuples_with_sum(ctx.n(), s)) {
      ++r.cases;
      Integer naive = ctx.naive_coeff(t);
      Integer axiomatic = ctx.global_coeff_sum(t);
      if (naive == axiomatic) {
        ++agree;
      } else {
        ++differ;
        r.notes.push_back("c" + t.to_string() + ": naive " + naive.get_str() + ", axiomatic " + axiomatic.get_str());
      }
    }
  r.notes.insert(r.notes.begin(), std::to_string(agree) + " tuples agree, " + std::to_string(differ) + " differ");
  return r;
}

}  // namespace mdslab
