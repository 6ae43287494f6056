#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdslab/integer.hpp"

namespace mdslab {

/// Element of Z[q^{1/4}, q^{-1/4}]. Exponents are stored in quarter units, so
/// exponent 4 means q^1.
class QLaurent {
 public:
  QLaurent() = default;
  QLaurent(long c) : QLaurent(Integer(c)) {}  // NOLINT: implicit constants are convenient
  QLaurent(const Integer& c);                 // NOLINT

  static QLaurent monomial(const Integer& c, int quarter_exp);
  /// q^{e/4}
  static QLaurent q_power(int quarter_exp) { return monomial(Integer(1), quarter_exp); }

  bool is_zero() const noexcept { return c_.empty(); }
  int min_exponent() const;
  int max_exponent() const;
  Integer coeff(int quarter_exp) const;
  std::vector<std::pair<int, Integer>> terms() const;
  std::size_t term_count() const;

  /// True when every exponent is a multiple of `grain` quarter units.
  bool exponents_divisible_by(int grain) const;
  bool is_polynomial_in_q() const;  // element of Z[q]

  QLaurent shifted(int quarter_exp) const;
  /// q -> q^m for integer m (m may be negative or zero).
  QLaurent substitute_power(int m) const;

  /// Value at q = q0. Requires integral exponents.
  Rational eval(const Rational& q0) const;
  Integer eval_integer(long q0) const;

  /// Canonical text form "e:c;e:c" with e in quarter units, ascending. Zero is "".
  std::string serialize() const;
  static QLaurent parse(std::string_view text);
  std::string pretty() const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent operator-() const;
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    r *= b;
    return r;
  }
  friend bool operator==(const QLaurent& a, const QLaurent& b) = default;

 private:
  int low_ = 0;
  std::vector<Integer> c_;
  void normalize();
};

inline bool is_zero(const QLaurent& v) { return v.is_zero(); }
inline bool is_zero(const Integer& v) { return v == 0; }
inline bool is_zero(const Rational& v) { return v == 0; }

}  // namespace mdslab
