#include "mdslab/reducer.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mdslab {

IndexTuple::IndexTuple(std::vector<int> a) : a_(std::move(a)) {
  if (a_.empty()) throw std::invalid_argument("IndexTuple: empty");
  for (int x : a_)
    if (x < 0) throw std::invalid_argument("IndexTuple: negative entry");
}

int IndexTuple::sum() const { return std::accumulate(a_.begin(), a_.end(), 0); }

bool IndexTuple::is_diagonal() const {
  for (int x : a_)
    if (x != a_[0]) return false;
  return true;
}

bool IndexTuple::is_zero() const { return is_diagonal() && a_[0] == 0; }

IndexTuple IndexTuple::with(int i, int v) const {
  IndexTuple r = *this;
  if (v < 0) throw std::invalid_argument("IndexTuple::with: negative entry");
  r.a_[wrap(i)] = v;
  return r;
}

std::string IndexTuple::to_string() const { return exponent_to_string(a_); }

std::vector<IndexTuple> tuples_with_sum(int n, int s) {
  std::vector<IndexTuple> out;
  for (const Exponent& e : monomials_upto(n + 1, s))
    if (total_degree(e) == s) out.emplace_back(e);
  return out;
}

const QLaurent& DiagonalSeed::at(int a) const {
  static const QLaurent zero;
  if (a < 0) throw std::out_of_range("DiagonalSeed: negative index");
  if (a < static_cast<int>(values.size())) return values[a];
  if (zero_tail) return zero;
  throw std::out_of_range("DiagonalSeed '" + id + "' has no value at index " + std::to_string(a));
}

DiagonalSeed DiagonalSeed::unit() { return DiagonalSeed{"unit", {QLaurent(1)}, true}; }

CoeffEngine::CoeffEngine(int n, DiagonalSeed seed, ReductionStrategy strategy)
    : n_(n), seed_(std::move(seed)), strategy_(strategy) {
  if (n < 2) throw std::invalid_argument("CoeffEngine: n must be at least 2");
}

int CoeffEngine::reduction_index(const IndexTuple& t) const {
  int best = -1, best_v = 0;
  for (int i = 0; i <= n_; ++i) {
    int v = 2 * t[i] - (t[i - 1] + t[i + 1]);
    if (v <= 0) continue;
    if (strategy_ == ReductionStrategy::LastApplicable || v > best_v) {
      best = i;
      best_v = v;
    }
  }
  return best;
}

const QLaurent& CoeffEngine::coeff(const IndexTuple& t) {
  if (t.n() != n_) throw std::invalid_argument("CoeffEngine: tuple length mismatch");
  auto it = memo_.find(t);
  if (it != memo_.end()) return it->second;
  QLaurent v = compute(t);
  return memo_.emplace(t, std::move(v)).first->second;
}

QLaurent CoeffEngine::coeff_or_zero(const IndexTuple& t, int i, int v) {
  if (v < 0) return QLaurent();
  return coeff(t.with(i, v));
}

QLaurent CoeffEngine::compute(const IndexTuple& t) {
  if (t.is_diagonal()) return seed_.at(t[0]);
  int i = reduction_index(t);
  if (i < 0) throw std::logic_error("convexity violation at " + t.to_string());
  int s = t[i - 1] + t[i + 1];
  int a = t[i];
  if (s % 2 == 1) return coeff_or_zero(t, i, s - 1 - a).shifted(4 * a - 2 * (s - 1));
  QLaurent q = QLaurent::q_power(4);
  QLaurent inner = coeff_or_zero(t, i, s - a) - q * coeff_or_zero(t, i, s - a - 1);
  return q * coeff_or_zero(t, i, a - 1) + inner.shifted(4 * a - 2 * s);
}

std::map<IndexTuple, QLaurent> CoeffEngine::boundary_coeffs(int d) {
  std::map<IndexTuple, QLaurent> out;
  for (int s = 0; s <= d; ++s)
    for (const auto& t : tuples_with_sum(n_, s)) out.emplace(t, coeff(t));
  return out;
}

MultiSeries<QLaurent> compute_P(int A, int n) {
  CoeffEngine engine(n, DiagonalSeed::unit());
  MultiSeries<QLaurent> P(1, A);
  for (int a = 0; a <= A; ++a) {
    std::vector<int> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i % 2 == 0 ? a : 2 * a;
    if (n % 2 == 0) v[n] = a;
    int shift = n % 2 == 1 ? -4 * a * (n + 1) : 6 * a - 4 * a * (n + 2);
    P.set({a}, engine.coeff(IndexTuple(v)).shifted(shift));
  }
  return P;
}

QLaurent local_weight(const IndexTuple& t, CoeffEngine& engine) {
  QLaurent h = engine.coeff(t).substitute_power(-1).shifted(4 * t.sum());
  if (!h.is_zero() && (h.min_exponent() < 0 || h.max_exponent() > 4 * t.sum()))
    throw std::domain_error("local-to-global violation at " + t.to_string() + ": H = " + h.pretty());
  return h;
}

Integer local_weight_at(const IndexTuple& t, CoeffEngine& engine, long q0, int p_deg) {
  Rational norm = rpow(Rational(q0), p_deg);
  Rational v = local_weight(t, engine).eval(norm);
  if (v.get_den() != 1) throw std::logic_error("local weight is not an integer");
  return v.get_num();
}

CheckReport check_dominance(const IndexTuple& t, CoeffEngine& engine) {
  CheckReport r("dominance");
  const QLaurent& c = engine.coeff(t);
  ++r.cases;
  bool exception = t.sum() == 0 || (t.sum() == 1);
  if (exception || c.is_zero()) return r;
  // Every exponent e/4 must exceed (sum + 1) / 2.
  int bound = 2 * (t.sum() + 1);
  if (c.min_exponent() <= bound) {
    std::ostringstream os;
    os << "c" << t.to_string() << " = " << c.pretty() << (c.min_exponent() == bound ? " (term at the boundary)" : "");
    r.fail(os.str());
  }
  return r;
}

CheckReport check_dominance_all(int max_sum, CoeffEngine& engine) {
  CheckReport r("dominance");
  r.params = {{"n", engine.n()}, {"max_sum", max_sum}, {"seed", engine.seed().id}};
  for (int s = 0; s <= max_sum; ++s)
    for (const auto& t : tuples_with_sum(engine.n(), s)) r.absorb(check_dominance(t, engine));
  for (int i = 0; i <= engine.n(); ++i)
    for (int a = 0; a <= max_sum; ++a) {
      IndexTuple t = IndexTuple(std::vector<int>(engine.n() + 1, 0)).with(i, a);
      r.expect(engine.coeff(t) == QLaurent::q_power(4 * a),
               [&] { return "unit tuple " + t.to_string() + " gives " + engine.coeff(t).pretty(); });
    }
  return r;
}

namespace {

// Checks the recurrence at position i of `base` with entry a placed there.
void check_relation_at(const IndexTuple& base, int i, int a, CoeffEngine& engine, CheckReport& r) {
  int s = base[i - 1] + base[i + 1];
  auto c = [&](int v) { return v < 0 ? QLaurent() : engine.coeff(base.with(i, v)); };
  QLaurent q = QLaurent::q_power(4);
  QLaurent lhs, rhs;
  if (s % 2 == 1) {
    lhs = c(a);
    rhs = s - 1 - a < 0 ? QLaurent() : c(s - 1 - a).shifted(4 * a - 2 * (s - 1));
  } else {
    lhs = c(a) - q * c(a - 1);
    rhs = s - a < 0 ? QLaurent() : (c(s - a) - q * c(s - a - 1)).shifted(4 * a - 2 * s);
  }
  r.expect(lhs == rhs, [&] {
    return "position " + std::to_string(i) + " of " + base.with(i, a).to_string() + ": " + lhs.pretty() +
           " != " + rhs.pretty();
  });
}

}  // namespace

CheckReport check_lambda_fe(const IndexTuple& fixed, int i, CoeffEngine& engine) {
  CheckReport r("lambda_fe");
  int s = fixed[i - 1] + fixed[i + 1];
  for (int a = 0; a <= 2 * s + 2; ++a) check_relation_at(fixed, i, a, engine, r);
  return r;
}

CheckReport check_lambda_fe_all(int max_sum, CoeffEngine& engine) {
  CheckReport r("lambda_fe");
  r.params = {{"n", engine.n()}, {"max_fixed_sum", max_sum}, {"seed", engine.seed().id}};
  for (int s = 0; s <= max_sum; ++s)
    for (const auto& t : tuples_with_sum(engine.n(), s))
      for (int i = 0; i <= engine.n(); ++i)
        if (t[i] == 0) r.absorb(check_lambda_fe(t, i, engine));
  return r;
}

CheckReport check_closure(int max_sum, CoeffEngine& engine) {
  CheckReport r("recurrence_closure");
  r.params = {{"n", engine.n()}, {"max_sum", max_sum}, {"seed", engine.seed().id}};
  for (int s = 0; s <= max_sum; ++s)
    for (const auto& t : tuples_with_sum(engine.n(), s))
      for (int i = 0; i <= engine.n(); ++i) check_relation_at(t, i, t[i], engine, r);
  return r;
}

CheckReport check_reducibility(int n, int max_sum) {
  CheckReport r("terminal_states");
  r.params = {{"n", n}, {"max_sum", max_sum}};
  CoeffEngine probe(n, DiagonalSeed::unit());
  for (int s = 0; s <= max_sum; ++s)
    for (const auto& t : tuples_with_sum(n, s))
      if (!t.is_diagonal())
        r.expect(probe.reduction_index(t) >= 0, [&] { return "no reduction applies to " + t.to_string(); });
  return r;
}

CheckReport check_strategy_independence(int n, const DiagonalSeed& seed, int max_sum) {
  CheckReport r("strategy_independence");
  r.params = {{"n", n}, {"max_sum", max_sum}, {"seed", seed.id}};
  CoeffEngine a(n, seed, ReductionStrategy::MaxViolation);
  CoeffEngine b(n, seed, ReductionStrategy::LastApplicable);
  for (int s = 0; s <= max_sum; ++s)
    for (const auto& t : tuples_with_sum(n, s))
      r.expect(a.coeff(t) == b.coeff(t), [&] {
        return t.to_string() + ": " + a.coeff(t).pretty() + " vs " + b.coeff(t).pretty();
      });
  return r;
}

MultiSeries<QLaurent> generated_series(CoeffEngine& engine, int D) {
  MultiSeries<QLaurent> z(engine.n() + 1, D);
  for (int s = 0; s <= D; ++s)
    for (const auto& t : tuples_with_sum(engine.n(), s)) z.set(t.values(), engine.coeff(t));
  return z;
}

CheckReport check_diagonal_determination(int n, const DiagonalSeed& seed1, const DiagonalSeed& seed2, int D) {
  CheckReport r("diagonal_determination");
  r.params = {{"n", n}, {"D", D}, {"seed1", seed1.id}, {"seed2", seed2.id}};
  CoeffEngine e1(n, seed1), e2(n, seed2);
  auto ratio = series_mul(generated_series(e1, D), series_inverse(generated_series(e2, D)));
  for (const auto& [e, v] : ratio.terms()) {
    bool diag = true;
    for (int x : e) diag = diag && x == e[0];
    r.expect(diag, [&] { return "off-diagonal term " + exponent_to_string(e) + " with coefficient " + v.pretty(); });
  }
  int A = D / (n + 1);
  MultiSeries<QLaurent> s1(1, A), s2(1, A);
  for (int a = 0; a <= A; ++a) {
    s1.set({a}, seed1.at(a));
    s2.set({a}, seed2.at(a));
  }
  auto expected = series_mul(s1, series_inverse(s2));
  for (int a = 0; a <= A; ++a) {
    QLaurent got = ratio.coeff(Exponent(n + 1, a));
    r.expect(got == expected.coeff({a}), [&] {
      return "diagonal ratio at degree " + std::to_string(a) + ": " + got.pretty() + " vs " +
             expected.coeff({a}).pretty();
    });
  }
  return r;
}

}  // namespace mdslab
