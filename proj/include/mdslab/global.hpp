#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "mdslab/fq_poly.hpp"
#include "mdslab/reducer.hpp"
#include "mdslab/report.hpp"

namespace mdslab {

/// Arguments (f_0, ..., f_n) of H, all monic.
struct TupleF {
  std::vector<fq::PolyFq> f;

  int size() const { return static_cast<int>(f.size()); }
  const fq::PolyFq& operator[](int i) const {
    int m = size();
    return f[((i % m) + m) % m];
  }
  std::string to_string() const;
};

/// Thrown when an enumeration would exceed the symbol-evaluation budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kSymbolBudget = 1e8;

/// Symbol evaluations for summing over all tuples with the given degrees:
/// q0^{sum a} tuples, n + 1 cross symbols each.
double enumeration_cost(long q0, int degree_sum, int n);

/// Global objects at a concrete q0 assembled from the local weights of `engine`.
/// Thread-safe: the local-weight cache and the engine are guarded by a mutex.
class GlobalContext {
 public:
  /// Factorizations of monic polynomials up to `table_degree` are precomputed.
  GlobalContext(int q0, CoeffEngine& engine, int table_degree);

  int q0() const noexcept { return q0_; }
  int n() const noexcept { return engine_.n(); }

  /// H(f_0, ..., f_n) with primes visited in sorted order.
  Integer H(const TupleF& t);
  /// Same, visiting the prime support in the given order (must list every prime once).
  Integer H_with_order(const TupleF& t, const std::vector<fq::PolyFq>& order);

  /// Sum of H over monic tuples with deg f_i = a_i.
  Integer global_coeff_sum(const IndexTuple& a);
  /// Sum of the cyclic symbol product over monic tuples with deg f_i = a_i.
  Integer naive_coeff(const IndexTuple& a);

  /// Coefficients 0..xbound of sum over monic f_i of H x^{deg f_i}; entry i of `fixed` is ignored.
  std::vector<Integer> l_series(const TupleF& fixed, int i, int xbound);

  /// c_t evaluated at q = q0.
  Rational c_at(const IndexTuple& t);

  const fq::Factorization& factorization(const fq::PolyFq& f);
  /// Local weight at valuation tuple v for a prime of degree p_deg.
  Integer local_at(const IndexTuple& v, int p_deg);

 private:
  int q0_;
  CoeffEngine& engine_;
  fq::FactorTable table_;
  std::mutex mu_;
  std::map<std::pair<IndexTuple, int>, Integer> local_cache_;
  std::map<fq::PolyFq, std::unique_ptr<fq::Factorization>> extra_factors_;

  Integer H_impl(const TupleF& t, const std::vector<fq::PolyFq>& order);
};

/// global_coeff_sum(a) == c_a(q0) for all tuples with entry sum <= max_sum.
CheckReport check_local_to_global(GlobalContext& ctx, int max_sum);

/// Exact functional equation of one L-series in x_i.
CheckReport check_l_series_fe(const TupleF& fixed, int i, GlobalContext& ctx);
/// Every fixed tuple with total degree <= max_total, every position.
CheckReport check_l_series_fe_all(GlobalContext& ctx, int max_total);

/// H computed with a random prime order and via a random two-block split
/// agrees with the sorted-order evaluation.
CheckReport check_grouping_independence(GlobalContext& ctx, int max_degree, int samples, unsigned seed);

/// Compares naive_coeff with global_coeff_sum; disagreements are notes, not failures.
CheckReport observe_naive_vs_axiomatic(GlobalContext& ctx, int max_sum);

}  // namespace mdslab
