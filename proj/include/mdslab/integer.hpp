#pragma once

#include <gmpxx.h>

#include <string>

namespace mdslab {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational rpow(const Rational& base, long e) {
  Rational b = base;
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  Rational r(1);
  for (long i = 0; i < e; ++i) r *= b;
  return r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace mdslab
