#include <doctest.h>

#include <map>
#include <random>

#include "mdslab/fq_poly.hpp"

using namespace mdslab;
using namespace mdslab::fq;

namespace {

PolyFq P(int q, std::vector<int> c) { return PolyFq(q, std::move(c)); }

std::vector<PolyFq> monics_upto(int q, int d) {
  std::vector<PolyFq> out;
  for (int k = 0; k <= d; ++k)
    for (auto& f : monic_enum(q, k)) out.push_back(f);
  return out;
}

// Number of monic irreducibles of degree d: (1/d) sum_{e | d} mu(d/e) q^e.
long necklace(int q, int d) {
  auto mu = [](int m) {
    int r = 1;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        r = -r;
      }
    return m > 1 ? -r : r;
  };
  long s = 0;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) {
      long pw = 1;
      for (int k = 0; k < e; ++k) pw *= q;
      s += mu(d / e) * pw;
    }
  return s / d;
}

}  // namespace

TEST_CASE("field moduli") {
  CHECK(is_valid_modulus(5));
  CHECK(is_valid_modulus(13));
  CHECK(is_valid_modulus(29));
  CHECK_FALSE(is_valid_modulus(3));
  CHECK_FALSE(is_valid_modulus(7));
  CHECK_FALSE(is_valid_modulus(9));
  CHECK_FALSE(is_valid_modulus(25));
  CHECK_THROWS(field(7));
  const FieldQ& F = field(13);
  for (int a = 1; a < 13; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  int squares = 0;
  for (int a = 1; a < 13; ++a) squares += F.legendre(a) == 1;
  CHECK(squares == 6);
}

TEST_CASE("monic enumeration") {
  CHECK(monic_enum(5, 0).size() == 1);
  CHECK(monic_enum(5, 0)[0].is_one());
  CHECK(monic_enum(5, 1).size() == 5);
  CHECK(monic_enum(5, 3).size() == 125);
  CHECK(monic_count(13, 2) == 169);
  auto deg3 = monic_enum(5, 3);
  for (std::size_t k = 0; k < deg3.size(); ++k) {
    CHECK(deg3[k].is_monic());
    CHECK(deg3[k].degree() == 3);
    CHECK(monic_at(5, 3, k) == deg3[k]);
    CHECK(PolyFq::from_monic_code(5, deg3[k].monic_code()) == deg3[k]);
    if (k > 0) CHECK(deg3[k - 1] < deg3[k]);
  }
}

TEST_CASE("arithmetic identities") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(0, 12);
  auto random_poly = [&](int d) {
    std::vector<int> c(d + 1);
    for (auto& v : c) v = coef(rng);
    c.back() = 1 + coef(rng) % 12;
    return P(13, c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    PolyFq a = random_poly(trial % 7), b = random_poly(trial % 4);
    auto [quo, rem] = divmod(a, b);
    CHECK(quo * b + rem == a);
    CHECK(rem.degree() < b.degree());
    PolyFq g = gcd(a, b);
    CHECK(g.is_monic());
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK((a + b) - b == a);
  }
  CHECK((P(5, {1, 1}) * P(5, {4, 1})) == P(5, {4, 0, 1}));
  CHECK(P(5, {3, 6}) == P(5, {3, 1}));
}

TEST_CASE("factorization examples") {
  auto t2 = factor(P(5, {0, 0, 1}));
  REQUIRE(t2.factors.size() == 1);
  CHECK(t2.factors[0].first == P(5, {0, 1}));
  CHECK(t2.factors[0].second == 2);
  CHECK(t2.unit == 1);

  auto t2p1 = factor(P(5, {1, 0, 1}));
  REQUIRE(t2p1.factors.size() == 2);
  CHECK(t2p1.factors[0].first == P(5, {2, 1}));
  CHECK(t2p1.factors[1].first == P(5, {3, 1}));

  auto lin = factor(P(5, {2, 2}));
  CHECK(lin.unit == 2);
  REQUIRE(lin.factors.size() == 1);
  CHECK(lin.factors[0].first == P(5, {1, 1}));

  CHECK_THROWS_WITH(factor(PolyFq(5)), doctest::Contains("zero polynomial"));
}

TEST_CASE("factorization reconstructs its input and the sieve agrees") {
  FactorTable table(5, 5);
  for (const auto& f : monics_upto(5, 5)) {
    const Factorization& a = table.factor(f);
    CHECK(a.product(5) == f);
    Factorization b = factor(f);
    CHECK(a.factors == b.factors);
    for (const auto& [p, e] : a.factors) CHECK(is_irreducible(p));
  }
  for (int d = 1; d <= 5; ++d) CHECK(static_cast<long>(table.primes(d).size()) == necklace(5, d));
  FactorTable t13(13, 3);
  for (int d = 1; d <= 3; ++d) CHECK(static_cast<long>(t13.primes(d).size()) == necklace(13, d));
}

TEST_CASE("squarefree part") {
  CHECK(squarefree_part(PolyFq::one(5)).is_one());
  CHECK(squarefree_part(P(5, {0, 0, 1})).is_one());
  PolyFq t = P(5, {0, 1}), t1 = P(5, {1, 1});
  CHECK(squarefree_part(t * t * t * t1) == t * t1);
  CHECK(is_squarefree(t * t1));
  CHECK_FALSE(is_squarefree(t * t));
}

TEST_CASE("residue symbol examples") {
  PolyFq t = P(5, {0, 1}), t1 = P(5, {1, 1});
  CHECK(residue_symbol(t, t1) == 1);
  CHECK(residue_symbol(t1, t) == 1);
  for (const auto& g : monics_upto(5, 3)) CHECK(residue_symbol(PolyFq::one(5), g) == 1);
  CHECK(residue_symbol(PolyFq(5), PolyFq::one(5)) == 1);
  CHECK(residue_symbol(t, t * t1) == 0);
  // A constant is a square mod a prime of even degree.
  CHECK(residue_symbol(PolyFq::constant(5, 2), P(5, {2, 0, 1})) == 1);
  CHECK(residue_symbol(PolyFq::constant(5, 2), t) == -1);
  CHECK_THROWS(residue_symbol(t, P(5, {1, 2})));
}

TEST_CASE("euclidean symbol agrees with the factoring oracle, degree <= 4 over F_5") {
  auto polys = monics_upto(5, 4);
  long mismatches = 0, reciprocity = 0;
  for (const auto& g : polys)
    for (const auto& f : polys) {
      int fast = residue_symbol(f, g);
      mismatches += fast != residue_symbol_by_factoring(f, g);
      if (fast != 0) reciprocity += fast != residue_symbol(g, f);
      else reciprocity += residue_symbol(g, f) != 0;
    }
  CHECK(mismatches == 0);
  CHECK(reciprocity == 0);
}

TEST_CASE("euclidean symbol agrees with the factoring oracle over F_13") {
  // Exhaustive up to degree 2 in both arguments; degree 3 and 4 moduli against sampled numerators.
  auto small = monics_upto(13, 2);
  for (const auto& g : small)
    for (const auto& f : small) REQUIRE(residue_symbol(f, g) == residue_symbol_by_factoring(f, g));
  std::mt19937 rng(13);
  for (int d = 3; d <= 4; ++d) {
    std::uniform_int_distribution<std::uint64_t> pick(0, monic_count(13, d) - 1);
    for (int s = 0; s < 400; ++s) {
      PolyFq g = monic_at(13, d, pick(rng));
      PolyFq f = monic_at(13, 1 + s % 5, pick(rng) % monic_count(13, 1 + s % 5));
      REQUIRE(residue_symbol(f, g) == residue_symbol_by_factoring(f, g));
      REQUIRE(residue_symbol(f.scaled(1 + s % 12), g) == residue_symbol_by_factoring(f.scaled(1 + s % 12), g));
    }
  }
}

TEST_CASE("symbol is multiplicative in the numerator") {
  auto polys = monics_upto(5, 2);
  for (const auto& g : monics_upto(5, 3))
    for (const auto& f1 : polys)
      for (const auto& f2 : polys) REQUIRE(residue_symbol(f1 * f2, g) == residue_symbol(f1, g) * residue_symbol(f2, g));
}

TEST_CASE("zeta Euler product over primes") {
  // prod_p (1 - x^{deg p})^{-1} = 1 / (1 - q x) through degree 6.
  const int q = 5, D = 6;
  FactorTable table(q, D);
  std::vector<Integer> s(D + 1, Integer(0));
  s[0] = 1;
  for (int d = 1; d <= D; ++d)
    for (std::size_t k = 0; k < table.primes(d).size(); ++k)
      for (int e = d; e <= D; ++e) s[e] += s[e - d];
  Integer pw(1);
  for (int d = 0; d <= D; ++d, pw *= q) CHECK(s[d] == pw);
}
