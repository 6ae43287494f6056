#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "mdslab/multiseries.hpp"

namespace mdslab {

/// One factor (1 - q^{beta/4} x^alpha)^{-gamma}. beta is in quarter units.
struct Factor {
  Exponent alpha;
  int beta = 0;
  long gamma = 0;
};

std::string factor_to_string(const Factor& f);

/// Multiset of product-form factors prod (1 - q^beta x^alpha)^{-gamma}.
/// Entries with equal (alpha, beta) are merged; zero multiplicities vanish.
class FactorList {
 public:
  explicit FactorList(int nvars) : nvars_(nvars) {}

  int nvars() const noexcept { return nvars_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  void add(const Exponent& alpha, int beta_quarters, long gamma);
  void add(const Factor& f) { add(f.alpha, f.beta, f.gamma); }
  void merge(const FactorList& other);
  long multiplicity(const Exponent& alpha, int beta_quarters) const;

  std::vector<Factor> factors() const;
  /// Sum of |gamma|, the multiset cardinality.
  long cardinality() const;
  FactorList restricted_to_degree(int max_total) const;

  const std::map<std::pair<Exponent, int>, long>& entries() const noexcept { return entries_; }
  friend bool operator==(const FactorList&, const FactorList&) = default;

 private:
  int nvars_;
  std::map<std::pair<Exponent, int>, long> entries_;
};

/// Expansion of the product, truncated at total degree `bound`.
MultiSeries<QLaurent> expand_factors(const FactorList& fl, int bound);

/// Inverse of expand_factors: peels factors by increasing total degree.
FactorList factorize_product_form(const MultiSeries<QLaurent>& s);

struct FlatSplit {
  FactorList flat;     // beta <= 0
  FactorList natural;  // beta == 1/2
  FactorList sharp;    // beta >= 1
  std::vector<Factor> anomalies;
};

/// Throws std::domain_error on anomalies (0 < beta < 1, beta != 1/2) when strict.
FlatSplit split_flat_natural_sharp(const FactorList& fl, bool strict = false);

/// Adds the partner (alpha, 1 - beta, gamma) of every entry; requires beta <= 0.
FactorList pairing_completion(const FactorList& flat);

/// True if the multiset is invariant under beta -> 1 - beta.
bool is_beta_symmetric(const FactorList& fl);

/// Integer linear substitution on exponent vectors: alpha -> M alpha.
class ExponentMap {
 public:
  explicit ExponentMap(Eigen::MatrixXi m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXi& matrix() const { return m_; }
  std::vector<int> apply(const Exponent& e) const;
  ExponentMap inverse() const;

 private:
  Eigen::MatrixXi m_;
};

/// Result of comparing a factor multiset with its image under a substitution.
struct WindowComparison {
  bool equal = true;
  long compared = 0;  // number of factors inside the window on the image side
  std::string witness;
};

/// Compares {M f : f in `source`} with `target` on the window where both the
/// exponent and its preimage have L1 norm <= window. Exponents may be negative.
WindowComparison compare_on_window(const std::vector<Factor>& source, const std::vector<Factor>& target,
                                   const ExponentMap& map, int window);

}  // namespace mdslab
