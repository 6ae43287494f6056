#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdslab/integer.hpp"

namespace mdslab::fq {

/// Prime field F_q. Only primes q = 1 mod 4 are accepted.
class FieldQ {
 public:
  explicit FieldQ(int q);

  int q() const noexcept { return q_; }
  int reduce(long long v) const noexcept {
    long long r = v % q_;
    return static_cast<int>(r < 0 ? r + q_ : r);
  }
  int add(int a, int b) const noexcept { int s = a + b; return s >= q_ ? s - q_ : s; }
  int sub(int a, int b) const noexcept { int s = a - b; return s < 0 ? s + q_ : s; }
  int neg(int a) const noexcept { return a == 0 ? 0 : q_ - a; }
  int mul(int a, int b) const noexcept {
    return static_cast<int>(static_cast<long long>(a) * b % q_);
  }
  int inv(int a) const;
  int legendre(int a) const noexcept { return legendre_[a]; }

 private:
  int q_;
  std::vector<int> inverse_;
  std::vector<signed char> legendre_;
};

bool is_valid_modulus(int q);

/// Shared field instance for modulus q; throws std::invalid_argument for bad q.
const FieldQ& field(int q);

/// Polynomial over F_q, coefficients stored low degree first, always trimmed.
class PolyFq {
 public:
  explicit PolyFq(int q);
  PolyFq(int q, std::vector<int> coeffs);

  static PolyFq constant(int q, int c);
  static PolyFq monomial(int q, int deg, int c = 1);
  static PolyFq one(int q) { return constant(q, 1); }

  int modulus() const noexcept { return q_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  int leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  int coeff(int i) const noexcept { return i < 0 || i >= static_cast<int>(c_.size()) ? 0 : c_[i]; }
  const std::vector<int>& coeffs() const noexcept { return c_; }

  PolyFq monic() const;
  PolyFq scaled(int c) const;

  /// Norm |f| = q^deg f, as a machine integer (deg must be small).
  std::uint64_t norm() const;

  /// Injective code for monic polynomials: the value at t = q.
  std::uint64_t monic_code() const;
  static PolyFq from_monic_code(int q, std::uint64_t code);

  std::string to_string() const;

  PolyFq& operator+=(const PolyFq& o);
  PolyFq& operator-=(const PolyFq& o);
  friend PolyFq operator+(PolyFq a, const PolyFq& b) { return a += b; }
  friend PolyFq operator-(PolyFq a, const PolyFq& b) { return a -= b; }
  friend PolyFq operator*(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator%(const PolyFq& a, const PolyFq& b);
  friend PolyFq operator/(const PolyFq& a, const PolyFq& b);

  friend bool operator==(const PolyFq& a, const PolyFq& b) = default;
  /// Order: degree first, then coefficient vector lexicographically from t^0.
  friend std::strong_ordering operator<=>(const PolyFq& a, const PolyFq& b);

 private:
  int q_;
  std::vector<int> c_;
  void trim();
};

std::pair<PolyFq, PolyFq> divmod(const PolyFq& a, const PolyFq& b);
PolyFq gcd(const PolyFq& a, const PolyFq& b);
PolyFq powmod(const PolyFq& base, const Integer& e, const PolyFq& m);

/// All monic polynomials of degree d in lexicographic coefficient order.
std::vector<PolyFq> monic_enum(int q, int d);
std::uint64_t monic_count(int q, int d);
/// k-th element of monic_enum(q, d) without materializing the list.
PolyFq monic_at(int q, int d, std::uint64_t k);

bool is_irreducible(const PolyFq& f);

struct Factorization {
  int unit = 1;
  std::vector<std::pair<PolyFq, int>> factors;  // monic primes, sorted

  PolyFq product(int q) const;
  int valuation(const PolyFq& p) const;
};

/// Trial division by monic primes of degree at most deg f / 2.
Factorization factor(const PolyFq& f);

PolyFq squarefree_part(const PolyFq& f);
bool is_squarefree(const PolyFq& f);

/// Quadratic residue symbol (f/g) for monic g, by the Euclidean algorithm with
/// reciprocity. (f/1) = 1 for every f.
int residue_symbol(const PolyFq& f, const PolyFq& g);

/// Same symbol from the factorization of g and Euler's criterion at each prime.
int residue_symbol_by_factoring(const PolyFq& f, const PolyFq& g);

/// Smallest-prime-factor sieve over monic polynomials of degree <= max_degree.
class FactorTable {
 public:
  FactorTable(int q, int max_degree);

  int q() const noexcept { return q_; }
  int max_degree() const noexcept { return max_degree_; }
  const Factorization& factor(const PolyFq& f) const;
  const std::vector<PolyFq>& primes(int deg) const { return primes_.at(deg); }
  bool is_prime(const PolyFq& f) const;

 private:
  int q_;
  int max_degree_;
  std::vector<std::vector<PolyFq>> primes_;
  std::vector<Factorization> table_;  // indexed by monic_code
};

}  // namespace mdslab::fq
