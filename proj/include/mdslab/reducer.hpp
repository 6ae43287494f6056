#pragma once

#include <map>
#include <string>
#include <vector>

#include "mdslab/multiseries.hpp"
#include "mdslab/qlaurent.hpp"
#include "mdslab/report.hpp"

namespace mdslab {

/// Coefficient multi-index (a_0, ..., a_n); positions are read modulo n + 1.
class IndexTuple {
 public:
  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> a);

  int size() const noexcept { return static_cast<int>(a_.size()); }
  int n() const noexcept { return size() - 1; }
  int operator[](int i) const { return a_[wrap(i)]; }
  int sum() const;
  bool is_diagonal() const;
  bool is_zero() const;
  /// The tuple with position i replaced by v; v must be >= 0.
  IndexTuple with(int i, int v) const;
  const std::vector<int>& values() const noexcept { return a_; }
  std::string to_string() const;

  friend auto operator<=>(const IndexTuple&, const IndexTuple&) = default;

 private:
  std::vector<int> a_;
  int wrap(int i) const {
    int m = size();
    return ((i % m) + m) % m;
  }
};

/// All tuples of length n+1 with entry sum exactly s (lexicographic order).
std::vector<IndexTuple> tuples_with_sum(int n, int s);

/// Diagonal values d_a assigned to c_{a,...,a}.
struct DiagonalSeed {
  std::string id;
  std::vector<QLaurent> values;
  bool zero_tail = false;  // values past the end are 0 rather than unknown

  const QLaurent& at(int a) const;
  static DiagonalSeed unit();
};

enum class ReductionStrategy {
  MaxViolation,    // index maximizing 2a_i - (a_{i-1} + a_{i+1}), ties to the smallest i
  LastApplicable,  // largest index where a reduction applies
};

/// Memoized reduction of c_t to diagonal coefficients via the one-variable
/// functional-equation recurrences. Not safe for concurrent use; fill the
/// table first, then share read-only.
class CoeffEngine {
 public:
  CoeffEngine(int n, DiagonalSeed seed, ReductionStrategy strategy = ReductionStrategy::MaxViolation);

  int n() const noexcept { return n_; }
  const DiagonalSeed& seed() const noexcept { return seed_; }
  std::size_t table_size() const noexcept { return memo_.size(); }

  /// c_t(q). Tuples with a negative entry are not representable and never requested.
  const QLaurent& coeff(const IndexTuple& t);

  /// All c_t with entry sum <= d.
  std::map<IndexTuple, QLaurent> boundary_coeffs(int d);

  /// Index chosen by the strategy, or -1 when no reduction applies.
  int reduction_index(const IndexTuple& t) const;

 private:
  int n_;
  DiagonalSeed seed_;
  ReductionStrategy strategy_;
  std::map<IndexTuple, QLaurent> memo_;

  QLaurent compute(const IndexTuple& t);
  QLaurent coeff_or_zero(const IndexTuple& t, int i, int v);
};

/// p_0..p_A as a one-variable series.
MultiSeries<QLaurent> compute_P(int A, int n);

/// H(p^{a_0}, ..., p^{a_n}) as a polynomial in |p|, exponents in quarter units.
/// Throws std::domain_error on a negative exponent.
QLaurent local_weight(const IndexTuple& t, CoeffEngine& engine);

/// Exact value of the local weight at |p| = q0^{p_deg}.
Integer local_weight_at(const IndexTuple& t, CoeffEngine& engine, long q0, int p_deg);

CheckReport check_dominance(const IndexTuple& t, CoeffEngine& engine);
/// Every tuple with entry sum <= max_sum, plus c at unit tuples equal to q^a.
CheckReport check_dominance_all(int max_sum, CoeffEngine& engine);

/// One-variable functional equation at position i, other entries taken from `fixed`.
CheckReport check_lambda_fe(const IndexTuple& fixed, int i, CoeffEngine& engine);
/// All fixed sub-tuples with entry sum <= max_sum, every position.
CheckReport check_lambda_fe_all(int max_sum, CoeffEngine& engine);

/// Both recurrences hold at every index for every tuple with sum <= max_sum.
CheckReport check_closure(int max_sum, CoeffEngine& engine);

/// A reduction applies to every non-diagonal tuple with sum <= max_sum.
CheckReport check_reducibility(int n, int max_sum);

/// Same coefficients from two reduction strategies.
CheckReport check_strategy_independence(int n, const DiagonalSeed& seed, int max_sum);

/// Ratio of the two generated series is a series in x_0 x_1 ... x_n alone and
/// equals the ratio of the seeds.
CheckReport check_diagonal_determination(int n, const DiagonalSeed& seed1, const DiagonalSeed& seed2, int D);

/// Truncated series sum c_t x^t over tuples with sum <= D.
MultiSeries<QLaurent> generated_series(CoeffEngine& engine, int D);

}  // namespace mdslab
