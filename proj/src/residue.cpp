#include "mdslab/residue.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mdslab {

int residue_arity(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  return n % 2 == 1 ? (n + 1) / 2 : n / 2 + 1;
}

namespace {

Exponent filled(int N, int v) { return Exponent(N, v); }

// Adds 2 to the cyclic window of `len` variables starting at `start`.
Exponent with_window(Exponent base, int start, int len) {
  const int N = static_cast<int>(base.size());
  for (int t = 0; t < len; ++t) base[(start + t) % N] += 2;
  return base;
}

void add_pair(FactorList& fl, const Exponent& alpha, long gamma, int D) {
  if (total_degree(alpha) > D) return;
  fl.add(alpha, 0, gamma);
  fl.add(alpha, 4, gamma);
}

}  // namespace

ResidueProduct build_R(int n, int D) {
  const int N = residue_arity(n);
  ResidueProduct r{n, D, FactorList(N)};
  FactorList& fl = r.factors;
  for (int m = 0;; ++m) {
    int smallest = n % 2 == 1 ? std::min((2 * m + 1) * N, 2 * m * N + 2) : 2 * m * N + 2;
    if (smallest > D) break;
    Exponent base = filled(N, 2 * m);
    if (n % 2 == 1) {
      add_pair(fl, filled(N, 2 * m + 1), 1, D);
      for (int i = 0; i < N; ++i)
        for (int len = 1; len <= N; ++len) add_pair(fl, with_window(base, i, len), 1, D);
    } else {
      add_pair(fl, filled(N, 2 * m + 2), n / 2, D);
      for (int k = 0; k + 1 < N; ++k) {
        Exponent prefix = with_window(base, 0, k + 1);
        Exponent suffix = with_window(base, k + 1, N - k - 1);
        if (total_degree(prefix) <= D) fl.add(prefix, 2, 1);
        if (total_degree(suffix) <= D) fl.add(suffix, 2, 1);
      }
      for (int i = 1; i + 1 < N; ++i)
        for (int j = i; j + 1 < N; ++j) {
          add_pair(fl, with_window(base, i, j - i + 1), 1, D);
          // Complement: x_0..x_{i-1} together with x_{j+1}..x_n, a window wrapping past x_n.
          add_pair(fl, with_window(base, j + 1, N - (j - i + 1)), 1, D);
        }
    }
  }
  return r;
}

FactorList build_delta(int n, int D) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const int V = n + 1;
  FactorList fl(V);
  for (int m = 0; 2 * (m * V + 1) <= D; ++m)
    for (int i = 0; i < V; ++i)
      for (int len = 1; len <= n; ++len) {
        Exponent alpha = with_window(filled(V, 2 * m), i, len);
        if (total_degree(alpha) > D) continue;
        // (1 - q (q x_0^2 ... q x_n^2)^m (q x_i^2 ... q x_j^2))
        fl.add(alpha, 4 * (1 + m * V + len), -1);
      }
  return fl;
}

FactorList diagonal_factors(const FactorList& fl) {
  FactorList r(fl.nvars());
  for (const auto& f : fl.factors()) {
    bool diag = true;
    for (int a : f.alpha) diag = diag && a == f.alpha[0];
    if (diag) r.add(f);
  }
  return r;
}

FactorList off_diagonal_factors(const FactorList& fl) {
  FactorList r = fl;
  for (const auto& f : diagonal_factors(fl).factors()) r.add(f.alpha, f.beta, -f.gamma);
  return r;
}

PipelineResult run_pipeline(int n, int A) {
  const int N = residue_arity(n);
  PipelineResult out;
  auto R = build_R(n, A * N);
  out.log.push_back("build_R: " + std::to_string(R.factors.size()) + " distinct factors up to total degree " +
                    std::to_string(A * N));
  out.R_diag = diag_part(expand_factors(R.factors, A * N));
  out.P = compute_P(A, n);
  out.log.push_back("compute_P: p_0.." + std::to_string(A));
  auto Zs = series_mul(out.R_diag, series_inverse(out.P));
  out.seed.id = "pipeline(n=" + std::to_string(n) + ")";
  for (int a = 0; a <= A; ++a) {
    QLaurent z = Zs.coeff({a});
    if (a == 0) {
      if (z != QLaurent(1)) throw std::domain_error("pipeline: constant term is " + z.pretty());
    } else if (!z.is_zero() && z.min_exponent() < 4) {
      throw std::domain_error("dominance violation: coefficient " + std::to_string(a) + " is " + z.pretty() +
                              ", not divisible by q");
    }
    QLaurent c = z.shifted(2 * a * (n + 1));
    if (!c.exponents_divisible_by(4))
      throw std::domain_error("pipeline: non-integral exponent in c at diagonal " + std::to_string(a) + ": " +
                              c.pretty());
    if (n % 2 == 0 && a % 2 == 1 && !c.is_zero())
      throw std::domain_error("pipeline: odd diagonal " + std::to_string(a) + " is nonzero for even n");
    out.seed.values.push_back(c);
    out.log.push_back("c_diag(" + std::to_string(a) + ") = " + c.pretty());
  }
  return out;
}

DiagonalSeed pipeline_seed(int n, int max_sum) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, DiagonalSeed> cache;
  int A = std::max(1, max_sum / (n + 1));
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& [key, seed] : cache)
    if (key.first == n && key.second >= A) return seed;
  DiagonalSeed seed = run_pipeline(n, A).seed;
  cache[{n, A}] = seed;
  return seed;
}

IndexTuple residue_tuple(int n, const Exponent& avec) {
  const int N = residue_arity(n);
  if (static_cast<int>(avec.size()) != N) throw std::invalid_argument("residue_tuple: wrong length");
  std::vector<int> t;
  for (int k = 0; k < N; ++k) {
    t.push_back(avec[k]);
    if (n % 2 == 1)
      t.push_back(avec[k] + avec[(k + 1) % N]);
    else if (k + 1 < N)
      t.push_back(avec[k] + avec[k + 1]);
  }
  return IndexTuple(t);
}

int residue_scale(int n, const Exponent& avec) {
  int s = total_degree(avec);
  if (n % 2 == 1) return -8 * s;
  return 3 * (avec.front() + avec.back()) - 8 * s;
}

// Quarter-unit exponent of the q-power dividing H in the residue sum.
static int h_weight(int n, const Exponent& avec) {
  if (n % 2 == 1) return 4 * total_degree(avec);
  return 4 * total_degree(avec) - (avec.front() + avec.back());
}

QLaurent residue_coeff_from_c(const Exponent& avec, CoeffEngine& engine) {
  return engine.coeff(residue_tuple(engine.n(), avec)).shifted(residue_scale(engine.n(), avec));
}

HRouteValue residue_coeff_H_route(const Exponent& avec, GlobalContext& ctx) {
  const int n = ctx.n();
  const int N = residue_arity(n);
  const int q0 = ctx.q0();
  HRouteValue out;
  out.weight_quarters = h_weight(n, avec);
  std::vector<std::vector<fq::PolyFq>> choices;
  std::uint64_t total = 1;
  for (int d : avec) {
    choices.push_back(fq::monic_enum(q0, d));
    total *= choices.back().size();
  }
  if (enumeration_cost(q0, total_degree(avec), n) > kSymbolBudget)
    throw BudgetExceeded("residue H route over " + std::to_string(total) + " tuples exceeds the budget");
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t rest = k;
    std::vector<fq::PolyFq> f;
    for (int j = N - 1; j >= 0; --j) {
      f.push_back(choices[j][rest % choices[j].size()]);
      rest /= choices[j].size();
    }
    std::reverse(f.begin(), f.end());
    TupleF t;
    for (int j = 0; j < N; ++j) {
      t.f.push_back(f[j]);
      if (n % 2 == 1)
        t.f.push_back(f[j] * f[(j + 1) % N]);
      else if (j + 1 < N)
        t.f.push_back(f[j] * f[j + 1]);
    }
    Integer h = ctx.H(t);
    bool same_shape = true;
    fq::PolyFq sf = fq::squarefree_part(f[0]);
    for (int j = 1; j < N; ++j) same_shape = same_shape && fq::squarefree_part(f[j]) == sf;
    out.sum += h;
    if (!same_shape) out.off_shape += h;
  }
  return out;
}

CheckReport check_pipeline_consistency(int n, int max_sum, CoeffEngine& engine) {
  CheckReport r("pipeline_consistency");
  r.params = {{"n", n}, {"max_sum", max_sum}, {"seed", engine.seed().id}};
  const int N = residue_arity(n);
  auto R = expand_factors(build_R(n, max_sum).factors, max_sum);
  for (const Exponent& avec : monomials_upto(N, max_sum)) {
    QLaurent want = R.coeff(avec);
    QLaurent got = residue_coeff_from_c(avec, engine);
    r.expect(want == got, [&] {
      return "avec " + exponent_to_string(avec) + ": product gives " + want.pretty() + ", coefficients give " +
             got.pretty();
    });
  }
  return r;
}

CheckReport check_H_route(GlobalContext& ctx, int max_sum, CoeffEngine& engine) {
  CheckReport r("residue_H_route");
  const int n = ctx.n();
  r.params = {{"n", n}, {"q0", ctx.q0()}, {"max_sum", max_sum}};
  for (const Exponent& avec : monomials_upto(residue_arity(n), max_sum)) {
    HRouteValue hv = residue_coeff_H_route(avec, ctx);
    QLaurent scaled = residue_coeff_from_c(avec, engine).shifted(hv.weight_quarters);
    if (!scaled.exponents_divisible_by(4)) {
      r.fail("avec " + exponent_to_string(avec) + ": scaled residue coefficient has fractional exponents " +
             scaled.pretty());
      continue;
    }
    Rational want = scaled.eval(Rational(ctx.q0()));
    r.expect(want == Rational(hv.sum), [&] {
      return "avec " + exponent_to_string(avec) + ": H route " + hv.sum.get_str() + " vs " + want.get_str();
    });
    r.expect(hv.off_shape == 0, [&] {
      return "avec " + exponent_to_string(avec) + ": tuples with different squarefree parts contribute " +
             hv.off_shape.get_str();
    });
  }
  return r;
}

namespace {

TupleF residue_shape(int n, const std::vector<fq::PolyFq>& f) {
  const int N = static_cast<int>(f.size());
  TupleF t;
  for (int j = 0; j < N; ++j) {
    t.f.push_back(f[j]);
    if (n % 2 == 1)
      t.f.push_back(f[j] * f[(j + 1) % N]);
    else if (j + 1 < N)
      t.f.push_back(f[j] * f[j + 1]);
  }
  return t;
}

// All vectors of N monic polynomials with total degree <= max_degree.
std::vector<std::vector<fq::PolyFq>> small_vectors(int q, int N, int max_degree) {
  std::vector<std::vector<fq::PolyFq>> out;
  for (const Exponent& degs : monomials_upto(N, max_degree)) {
    std::vector<std::vector<fq::PolyFq>> partial{{}};
    for (int d : degs) {
      std::vector<std::vector<fq::PolyFq>> next;
      for (const auto& p : partial)
        for (const auto& f : fq::monic_enum(q, d)) {
          next.push_back(p);
          next.back().push_back(f);
        }
      partial = std::move(next);
    }
    out.insert(out.end(), partial.begin(), partial.end());
  }
  return out;
}

}  // namespace

CheckReport check_residue_multiplicativity(GlobalContext& ctx, int max_degree) {
  CheckReport r("residue_multiplicativity");
  const int n = ctx.n();
  const int N = residue_arity(n);
  r.params = {{"n", n}, {"q0", ctx.q0()}, {"max_degree", max_degree}};
  auto vecs = small_vectors(ctx.q0(), N, max_degree);
  for (std::size_t a = 0; a < vecs.size(); ++a)
    for (std::size_t b = a; b < vecs.size(); ++b) {
      fq::PolyFq pa = fq::PolyFq::one(ctx.q0()), pb = pa;
      for (const auto& f : vecs[a]) pa = pa * f;
      for (const auto& f : vecs[b]) pb = pb * f;
      if (fq::gcd(pa, pb).degree() > 0) continue;
      std::vector<fq::PolyFq> prod;
      for (int j = 0; j < N; ++j) prod.push_back(vecs[a][j] * vecs[b][j]);
      Integer whole = ctx.H(residue_shape(n, prod));
      Integer split = ctx.H(residue_shape(n, vecs[a])) * ctx.H(residue_shape(n, vecs[b]));
      r.expect(whole == split, [&] {
        return residue_shape(n, prod).to_string() + ": " + whole.get_str() + " vs product " + split.get_str();
      });
    }
  return r;
}

CheckReport check_euler_substitution(int n, int p_deg, int D, CoeffEngine& engine) {
  CheckReport r("euler_substitution");
  r.params = {{"n", n}, {"p_deg", p_deg}, {"D", D}, {"seed", engine.seed().id}};
  const int N = residue_arity(n);
  MultiSeries<QLaurent> local(N, D), substituted(N, D);
  for (const Exponent& avec : monomials_upto(N, D / p_deg)) {
    Exponent x = avec;
    for (int& v : x) v *= p_deg;
    // R_p from local weights at |p| = q^{deg p}.
    QLaurent h = local_weight(residue_tuple(n, avec), engine);
    local.set(x, h.substitute_power(p_deg).shifted(-h_weight(n, avec) * p_deg));
    // R with q -> q^{-deg p}.
    substituted.set(x, residue_coeff_from_c(avec, engine).substitute_power(-p_deg));
  }
  for (const auto& [e, v] : substituted.terms())
    r.expect(local.coeff(e) == v, [&] {
      return "monomial " + exponent_to_string(e) + ": " + local.coeff(e).pretty() + " vs " + v.pretty();
    });
  for (const auto& [e, v] : local.terms())
    r.expect(substituted.coeff(e) == v, [&] { return "extra local term at " + exponent_to_string(e); });
  return r;
}

CheckReport check_pairing(int n, int D) {
  CheckReport r("factor_pairing");
  r.params = {{"n", n}, {"D", D}};
  FactorList fl = build_R(n, D).factors;
  r.expect(is_beta_symmetric(fl), [] { return "factor multiset is not invariant under beta -> 1 - beta"; });
  FlatSplit s = split_flat_natural_sharp(fl);
  r.expect(s.anomalies.empty(), [&] { return "anomalous factor " + factor_to_string(s.anomalies.front()); });
  r.expect(s.flat.cardinality() == s.sharp.cardinality(), [&] {
    return "flat/sharp sizes " + std::to_string(s.flat.cardinality()) + " vs " + std::to_string(s.sharp.cardinality());
  });
  FactorList both = s.flat;
  both.merge(s.sharp);
  r.expect(pairing_completion(s.flat) == both, [] { return "pairing completion of the flat part differs"; });
  return r;
}

CheckReport check_even_series(int n, int D) {
  CheckReport r("parity_vanishing");
  r.params = {{"n", n}, {"D", D}};
  const int N = residue_arity(n);
  auto R = expand_factors(build_R(n, D).factors, D);
  CoeffEngine engine(n, pipeline_seed(n, D * 2));
  for (const Exponent& avec : monomials_upto(N, D)) {
    bool all_even = true, all_odd = true;
    for (int a : avec) {
      all_even = all_even && a % 2 == 0;
      all_odd = all_odd && a % 2 == 1;
    }
    bool must_vanish = n % 2 == 0 ? !all_even : !(all_even || all_odd);
    if (!must_vanish) continue;
    r.expect(R.coeff(avec).is_zero(), [&] { return "product has a term at " + exponent_to_string(avec); });
    r.expect(residue_coeff_from_c(avec, engine).is_zero(),
             [&] { return "coefficient formula is nonzero at " + exponent_to_string(avec); });
  }
  return r;
}

namespace {

Exponent unit(int N, std::initializer_list<int> ks) {
  Exponent v(N, 0);
  for (int k : ks) v[k] += 1;
  return v;
}

Eigen::MatrixXi from_columns(const std::vector<Exponent>& cols) {
  const int N = static_cast<int>(cols.size());
  Eigen::MatrixXi m(N, N);
  for (int k = 0; k < N; ++k)
    for (int t = 0; t < N; ++t) m(t, k) = cols[k][t];
  return m;
}

Exponent scaled(Exponent v, int s) {
  for (int& x : v) x *= s;
  return v;
}

// Compares M(F) with (F minus `removed`) plus the inverted removed factors.
CheckReport compare_transform(const std::string& name, const FactorList& F, const std::vector<Exponent>& columns,
                              const std::vector<std::pair<Exponent, int>>& removed, int D) {
  CheckReport r(name);
  FactorList adjusted = F;
  std::vector<std::pair<Exponent, int>> inside;
  for (const auto& rm : removed)
    if (total_degree(rm.first) <= D) inside.push_back(rm);
  for (const auto& [alpha, beta] : inside) {
    r.expect(F.multiplicity(alpha, beta) >= 1, [&] {
      return "cocycle factor " + factor_to_string({alpha, beta, 1}) + " missing from the product";
    });
    adjusted.add(alpha, beta, -1);
  }
  std::vector<Factor> target = adjusted.factors();
  for (const auto& [alpha, beta] : inside) target.push_back({scaled(alpha, -1), beta, 1});
  WindowComparison cmp = compare_on_window(F.factors(), target, ExponentMap(from_columns(columns)), D);
  r.cases += cmp.compared;
  if (!cmp.equal) r.fail(cmp.witness);
  if (cmp.compared == 0) r.notes.push_back("degree window is empty; comparison is vacuous");
  return r;
}

}  // namespace

CheckReport check_resfe(int i, int n, int D) {
  const int N = residue_arity(n);
  CheckReport r("residue_fe");
  r.params = {{"n", n}, {"i", i}, {"D", D}};
  if (i % 2 != 0 || i < 0 || i > 2 * (N - 1)) throw std::invalid_argument("check_resfe: i must be an even index");
  if (n % 2 == 0 && (i == 0 || i == n)) throw std::invalid_argument("check_resfe: need 0 < i < n for even n");
  const int pos = i / 2;
  std::vector<Exponent> cols;
  for (int k = 0; k < N; ++k) cols.push_back(unit(N, {k}));
  int lo = n % 2 == 1 ? (pos - 1 + N) % N : pos - 1;
  int hi = n % 2 == 1 ? (pos + 1) % N : pos + 1;
  cols[pos] = scaled(unit(N, {pos}), -1);
  cols[lo][pos] += 1;
  cols[hi][pos] += 1;
  Exponent two = scaled(unit(N, {pos}), 2);
  FactorList F = build_R(n, D).factors;
  for (int beta : {0, 4})
    if (D >= 2)
      r.expect(F.multiplicity(two, beta) == 1, [&] {
        return "swapped factor " + factor_to_string({two, beta, 1}) + " has multiplicity " +
               std::to_string(F.multiplicity(two, beta));
      });
  r.absorb(compare_transform("residue_fe", F, cols, {{two, 0}, {two, 4}}, D));
  return r;
}

CheckReport check_neven_fe(int n, EvenTransform which, int D) {
  std::string name = which == EvenTransform::CycleSquared ? "cycle_squared_fe" : "edge_fe";
  CheckReport r(name);
  r.params = {{"n", n}, {"D", D}};
  if (n % 2 != 0 || n < 2) throw std::invalid_argument("check_neven_fe: n must be even");
  if (n == 2 || (n == 4 && which == EvenTransform::Edge)) {
    r.unverified("unverified special case: the transform for n = " + std::to_string(n) +
                 " differs from the generic form and is not written out");
    return r;
  }
  if (n == 4) r.notes.push_back("n = 4 checked with the generic transform");
  const int N = residue_arity(n);
  FactorList F = build_R(n, D).factors;
  std::vector<Exponent> cols(N);
  std::vector<std::pair<Exponent, int>> removed;
  if (which == EvenTransform::CycleSquared) {
    cols[0] = Exponent(N, 2);
    cols[0][0] = cols[0][1] = 3;
    for (int k = 1; k + 2 < N; ++k) cols[k] = unit(N, {k + 1});
    cols[N - 2] = unit(N, {0, N - 1});
    cols[N - 1] = Exponent(N, -2);
    cols[N - 1][0] = -3;
    for (int m = 0; m < 2; ++m)
      for (int k = 0; k + 1 < N; ++k) removed.push_back({with_window(Exponent(N, 2 * m), 0, k + 1), 2});
    Exponent extra(N, 4);
    extra[0] += 2;
    removed.push_back({extra, 2});
  } else {
    for (int k = 0; k < N; ++k) cols[k] = unit(N, {k});
    cols[0] = scaled(unit(N, {N - 1}), -1);
    cols[1] = unit(N, {0, 1, N - 1});
    cols[N - 2] = unit(N, {0, N - 2, N - 1});
    cols[N - 1] = scaled(unit(N, {0}), -1);
    removed = {{scaled(unit(N, {0}), 2), 2},
               {scaled(unit(N, {N - 1}), 2), 2},
               {scaled(unit(N, {0, N - 1}), 2), 0},
               {scaled(unit(N, {0, N - 1}), 2), 4}};
  }
  r.absorb(compare_transform(name, F, cols, removed, D));
  return r;
}

CheckReport check_scalar_cocycle() {
  CheckReport r("scalar_cocycle");
  // r_ stands for q^{1/2}; the identity is checked exactly at rational sample points.
  const std::vector<Rational> roots{Rational(2), Rational(3), Rational(7, 3)};
  const std::vector<Rational> points{Rational(1, 7), Rational(2, 9), Rational(5), Rational(-3, 11)};
  for (const Rational& rt : roots)
    for (const Rational& x : points) {
      Rational q = rt * rt;
      auto ratio = [&](const Rational& num, const Rational& den) -> std::optional<Rational> {
        if (den == 0) return std::nullopt;
        return num / den;
      };
      Rational total(0);
      bool pole = false;
      for (int e1 : {1, -1})
        for (int e2 : {1, -1})
          for (int e3 : {1, -1}) {
            auto f1 = ratio(1 - Rational(e2 * e3) * x / q, 1 - Rational(e2 * e3) * x);
            auto f2 = ratio(1 - Rational(e1) * x / rt, 1 - Rational(e1) * rt * x);
            auto f3 = ratio(1 - x, 1 - q * x);
            if (!f1 || !f2 || !f3) {
              pole = true;
              continue;
            }
            Rational term = Rational(e2 * e3, 16) * q * q / (x * x * x * x);
            term *= Rational(e1 * e2 * e3) / rt - *f1;
            term *= Rational(e3) / rt - *f2;
            term *= Rational(e2) / rt - *f2;
            term *= Rational(e1) / rt - *f3;
            total += term;
          }
      Rational x2 = x * x;
      Rational den = (1 - x2) * (1 - q * x2);
      if (pole || den == 0) continue;
      Rational target = (1 - 1 / x2) * (1 - q / x2) / den;
      r.expect(total == target, [&] {
        return "q^(1/2) = " + rt.get_str() + ", x = " + x.get_str() + ": " + total.get_str() + " vs " +
               target.get_str();
      });
    }
  return r;
}

CheckReport reconstruct_R1(int n, int K) {
  CheckReport r("reconstruct_R1");
  r.params = {{"n", n}, {"max_factor_degree", K}};
  const int N = residue_arity(n);
  FactorList F = build_R(n, K * N).factors;
  auto R0 = diag_part(expand_factors(off_diagonal_factors(F), K * N));
  auto X = series_mul(compute_P(K, n), series_inverse(R0));
  FlatSplit s = split_flat_natural_sharp(factorize_product_form(X));
  r.expect(s.anomalies.empty(), [&] { return "anomalous factor " + factor_to_string(s.anomalies.front()); });
  r.expect(s.natural.empty(), [&] { return "diagonal factors with beta = 1/2: " + factor_to_string(s.natural.factors().front()); });
  FactorList rebuilt = pairing_completion(s.flat);
  FactorList direct(1);
  for (const auto& f : diagonal_factors(F).factors())
    if (f.alpha[0] <= K) direct.add({f.alpha[0]}, f.beta, f.gamma);
  r.expect(rebuilt == direct, [&] {
    std::ostringstream os;
    os << "reconstructed {";
    for (const auto& f : rebuilt.factors()) os << factor_to_string(f) << " ";
    os << "} vs direct {";
    for (const auto& f : direct.factors()) os << factor_to_string(f) << " ";
    os << "}";
    return os.str();
  });
  return r;
}

}  // namespace mdslab
