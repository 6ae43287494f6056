#include <doctest.h>

#include <random>

#include "mdslab/qlaurent.hpp"

using namespace mdslab;

namespace {

QLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), exp(-12, 12), coef(-50, 50);
  QLaurent r;
  for (int k = terms(rng); k > 0; --k) r += QLaurent::monomial(Integer(coef(rng)), exp(rng));
  return r;
}

}  // namespace

TEST_CASE("construction and accessors") {
  QLaurent z;
  CHECK(z.is_zero());
  CHECK_THROWS(z.min_exponent());
  QLaurent p = QLaurent::monomial(Integer(3), 4) + QLaurent(2);
  CHECK(p.min_exponent() == 0);
  CHECK(p.max_exponent() == 4);
  CHECK(p.coeff(4) == 3);
  CHECK(p.coeff(2) == 0);
  CHECK(p.term_count() == 2);
  CHECK(p.is_polynomial_in_q());
  CHECK_FALSE(QLaurent::q_power(2).is_polynomial_in_q());
  CHECK_FALSE(QLaurent::q_power(-4).is_polynomial_in_q());
  CHECK((p - p).is_zero());
}

TEST_CASE("serialization") {
  CHECK(QLaurent(1).serialize() == "0:1");
  CHECK(QLaurent::q_power(4).serialize() == "4:1");
  CHECK(QLaurent().serialize() == "");
  QLaurent v = QLaurent::monomial(Integer(-7), -3) + QLaurent::monomial(Integer("123456789012345678901234567890"), 10);
  CHECK(v.serialize() == "-3:-7;10:123456789012345678901234567890");
  CHECK(QLaurent::parse(v.serialize()) == v);
  CHECK(QLaurent::parse("") == QLaurent());
  CHECK_THROWS(QLaurent::parse("4:1;0:1"));
  CHECK_THROWS(QLaurent::parse("4:0"));
  CHECK_THROWS(QLaurent::parse("4"));
  CHECK_THROWS(QLaurent::parse("0:1;"));
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    QLaurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * QLaurent(1) == a);
    CHECK(a + (-a) == QLaurent());
    CHECK(QLaurent::parse(a.serialize()) == a);
  }
}

TEST_CASE("shifts, substitution and evaluation") {
  QLaurent p = QLaurent(1) + QLaurent::q_power(4);  // 1 + q
  CHECK(p.shifted(8) == QLaurent::q_power(8) + QLaurent::q_power(12));
  CHECK(p.substitute_power(-1) == QLaurent(1) + QLaurent::q_power(-4));
  CHECK(p.substitute_power(2) == QLaurent(1) + QLaurent::q_power(8));
  CHECK(p.substitute_power(0) == QLaurent(2));
  CHECK(p.eval(Rational(5)) == 6);
  CHECK(p.eval_integer(5) == 6);
  CHECK(QLaurent::q_power(-4).eval(Rational(5)) == Rational(1, 5));
  CHECK_THROWS(QLaurent::q_power(-4).eval_integer(5));
  CHECK_THROWS(QLaurent::q_power(2).eval(Rational(4)));
  CHECK(QLaurent::q_power(6).exponents_divisible_by(2));
  CHECK_FALSE(QLaurent::q_power(6).exponents_divisible_by(4));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    QLaurent a = random_laurent(rng).substitute_power(4), b = random_laurent(rng).substitute_power(4);
    CHECK((a * b).eval(Rational(13)) == a.eval(Rational(13)) * b.eval(Rational(13)));
  }
}
