#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdslab/qlaurent.hpp"

namespace mdslab {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// All exponent vectors in `nvars` variables with total degree <= bound, in
/// lexicographic order. u <= v componentwise implies u comes first.
std::vector<Exponent> monomials_upto(int nvars, int bound);

namespace detail {
inline std::optional<QLaurent> unit_inverse(const QLaurent& c) {
  auto ts = c.terms();
  if (ts.size() != 1 || abs(ts[0].second) != 1) return std::nullopt;
  return QLaurent::monomial(ts[0].second, -ts[0].first);
}
inline std::optional<Rational> unit_inverse(const Rational& c) {
  if (c == 0) return std::nullopt;
  return Rational(1) / c;
}
inline std::optional<Integer> unit_inverse(const Integer& c) {
  if (abs(c) != 1) return std::nullopt;
  return c;
}
}  // namespace detail

/// Truncated power series in several variables: only total degree <= bound is kept.
template <class Scalar>
class MultiSeries {
 public:
  MultiSeries(int nvars, int bound) : nvars_(nvars), bound_(bound) {
    if (nvars < 1 || bound < 0) throw std::invalid_argument("MultiSeries: bad shape");
  }

  static MultiSeries one(int nvars, int bound) {
    MultiSeries s(nvars, bound);
    s.set(Exponent(nvars, 0), Scalar(1));
    return s;
  }

  int nvars() const noexcept { return nvars_; }
  int bound() const noexcept { return bound_; }
  const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }

  Scalar coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Sets a coefficient. Exponents beyond the bound are rejected, not dropped.
  void set(const Exponent& e, const Scalar& v) {
    check_shape(e);
    if (total_degree(e) > bound_) throw std::out_of_range("MultiSeries: exponent exceeds bound");
    if (is_zero(v))
      terms_.erase(e);
    else
      terms_[e] = v;
  }

  void add(const Exponent& e, const Scalar& v) {
    check_shape(e);
    if (total_degree(e) > bound_) throw std::out_of_range("MultiSeries: exponent exceeds bound");
    if (is_zero(v)) return;
    auto [it, fresh] = terms_.try_emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Copy with terms above `bound` discarded.
  MultiSeries truncated(int bound) const {
    MultiSeries r(nvars_, bound);
    for (const auto& [e, v] : terms_)
      if (total_degree(e) <= bound) r.terms_.emplace(e, v);
    return r;
  }

  /// In place: multiply by (1 - c x^alpha)^{+1 or -1}, truncating at the bound.
  void mul_binomial(const Exponent& alpha, const Scalar& c, bool inverse) {
    check_shape(alpha);
    if (total_degree(alpha) == 0) throw std::invalid_argument("mul_binomial: constant monomial");
    if (total_degree(alpha) > bound_) return;
    std::map<Exponent, Scalar> out;
    if (inverse) {
      // out[v] = s[v] + c out[v - alpha], visiting v in an order where v - alpha comes first.
      for (const Exponent& v : monomials_upto(nvars_, bound_)) {
        Scalar acc = coeff(v);
        Exponent w = v;
        bool inside = true;
        for (int i = 0; i < nvars_; ++i)
          if ((w[i] -= alpha[i]) < 0) inside = false;
        if (inside) {
          auto it = out.find(w);
          if (it != out.end()) acc += c * it->second;
        }
        if (!is_zero(acc)) out.emplace(v, acc);
      }
    } else {
      out = terms_;
      for (const auto& [e, v] : terms_) {
        Exponent w = e;
        for (int i = 0; i < nvars_; ++i) w[i] += alpha[i];
        if (total_degree(w) > bound_) continue;
        Scalar t = c * v;
        auto [it, fresh] = out.try_emplace(w, Scalar(0) - t);
        if (!fresh) {
          it->second -= t;
          if (is_zero(it->second)) out.erase(it);
        }
      }
    }
    terms_ = std::move(out);
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.nvars_ == b.nvars_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
  }

 private:
  int nvars_;
  int bound_;
  std::map<Exponent, Scalar> terms_;

  void check_shape(const Exponent& e) const {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultiSeries: arity mismatch");
    for (int x : e)
      if (x < 0) throw std::invalid_argument("MultiSeries: negative exponent");
  }
};

template <class Scalar>
MultiSeries<Scalar> series_mul(const MultiSeries<Scalar>& a, const MultiSeries<Scalar>& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("series_mul: arity mismatch");
  if (a.bound() != b.bound()) throw std::invalid_argument("series_mul: truncation bounds differ");
  const int bound = a.bound();
  MultiSeries<Scalar> r(a.nvars(), bound);
  for (const auto& [ea, va] : a.terms()) {
    int da = total_degree(ea);
    if (da > bound) continue;
    for (const auto& [eb, vb] : b.terms()) {
      if (da + total_degree(eb) > bound) continue;
      Exponent e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add(e, va * vb);
    }
  }
  return r;
}

template <class Scalar>
MultiSeries<Scalar> series_inverse(const MultiSeries<Scalar>& a) {
  const int n = a.nvars();
  auto unit = detail::unit_inverse(a.coeff(Exponent(n, 0)));
  if (!unit) throw std::domain_error("series_inverse: constant term is not a unit");
  MultiSeries<Scalar> inv(n, a.bound());
  std::vector<Exponent> order = monomials_upto(n, a.bound());
  std::stable_sort(order.begin(), order.end(),
                   [](const Exponent& x, const Exponent& y) { return total_degree(x) < total_degree(y); });
  for (const Exponent& v : order) {
    if (total_degree(v) == 0) {
      inv.set(v, *unit);
      continue;
    }
    Scalar acc(0);
    for (const auto& [u, au] : a.terms()) {
      if (total_degree(u) == 0) continue;
      Exponent w = v;
      bool inside = true;
      for (int i = 0; i < n; ++i)
        if ((w[i] -= u[i]) < 0) inside = false;
      if (inside) acc += au * inv.coeff(w);
    }
    inv.set(v, Scalar(0) - acc * *unit);
  }
  return inv;
}

/// Terms with all exponents equal, as a series in one variable y = x_0 ... x_{n-1}.
template <class Scalar>
MultiSeries<Scalar> diag_part(const MultiSeries<Scalar>& s) {
  MultiSeries<Scalar> r(1, s.bound() / s.nvars());
  for (const auto& [e, v] : s.terms()) {
    bool diag = true;
    for (int x : e) diag = diag && x == e[0];
    if (diag) r.set({e[0]}, v);
  }
  return r;
}

std::string exponent_to_string(const Exponent& e);

}  // namespace mdslab
