#include <doctest.h>

#include <random>

#include "mdslab/factor_list.hpp"
#include "mdslab/multiseries.hpp"

using namespace mdslab;

namespace {

using Series = MultiSeries<QLaurent>;

QLaurent q(int k) { return QLaurent::q_power(4 * k); }

Series geometric(QLaurent ratio, int D) {
  Series s(1, D);
  QLaurent pw(1);
  for (int k = 0; k <= D; ++k, pw *= ratio) s.set({k}, pw);
  return s;
}

}  // namespace

TEST_CASE("monomials are ordered so that divisors come first") {
  auto ms = monomials_upto(3, 4);
  CHECK(ms.size() == 35);
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      bool le = true;
      for (int k = 0; k < 3; ++k) le = le && ms[i][k] <= ms[j][k];
      CHECK_FALSE((le && ms[i] != ms[j]));
    }
}

TEST_CASE("series products and inverses") {
  Series a(1, 4), b(1, 4);
  a.set({0}, 1);
  a.set({1}, 1);
  b.set({0}, 1);
  b.set({1}, -1);
  Series ab = series_mul(a, b);
  CHECK(ab.coeff({0}) == QLaurent(1));
  CHECK(ab.coeff({2}) == QLaurent(-1));
  CHECK(ab.terms().size() == 2);

  CHECK(series_mul(geometric(1, 5), series_inverse(geometric(1, 5))) == Series::one(1, 5));
  Series one_minus_qx(1, 5);
  one_minus_qx.set({0}, 1);
  one_minus_qx.set({1}, -q(1));
  CHECK(series_inverse(one_minus_qx) == geometric(q(1), 5));

  Series bad(1, 3);
  bad.set({0}, 2);
  CHECK_THROWS(series_inverse(bad));
  CHECK_THROWS(series_mul(Series(1, 3), Series(1, 4)));
  CHECK_THROWS(a.set({5}, 1));
  // A constant term +-q^e is a unit.
  Series shifted(1, 3);
  shifted.set({0}, -q(2));
  shifted.set({2}, 1);
  CHECK(series_mul(shifted, series_inverse(shifted)) == Series::one(1, 3));
}

TEST_CASE("random unit series in three variables") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-3, 3), ex(-4, 8);
  for (int trial = 0; trial < 10; ++trial) {
    Series s = Series::one(3, 5);
    for (const auto& e : monomials_upto(3, 5))
      if (total_degree(e) > 0 && coef(rng) > 1) s.set(e, QLaurent::monomial(Integer(coef(rng)), ex(rng)));
    CHECK(series_mul(s, series_inverse(s)) == Series::one(3, 5));
  }
}

TEST_CASE("diagonal part") {
  Series s(2, 4);
  s.set({0, 0}, 1);
  s.set({1, 0}, 1);
  s.set({1, 1}, 1);
  s.set({2, 2}, q(1));
  auto d = diag_part(s);
  CHECK(d.nvars() == 1);
  CHECK(d.bound() == 2);
  CHECK(d.coeff({1}) == QLaurent(1));
  CHECK(d.coeff({2}) == q(1));
  CHECK(d.terms().size() == 3);
}

TEST_CASE("expanding product forms") {
  FactorList geo(1);
  geo.add({1}, 0, 1);
  CHECK(expand_factors(geo, 6) == geometric(1, 6));

  FactorList two(1);
  two.add({1}, 0, 1);
  two.add({1}, 4, 1);
  auto e = expand_factors(two, 2);
  CHECK(e.coeff({1}) == QLaurent(1) + q(1));
  CHECK(e.coeff({2}) == QLaurent(1) + q(1) + q(2));

  FactorList num(1);
  num.add({2}, 0, -1);
  auto n = expand_factors(num, 5);
  CHECK(n.coeff({2}) == QLaurent(-1));
  CHECK(n.terms().size() == 2);

  FactorList zero(1);
  CHECK_THROWS(zero.add({0}, 0, 1));
}

TEST_CASE("factorizing product forms") {
  FactorList two(1);
  two.add({1}, 0, 1);
  two.add({1}, 4, 1);
  CHECK(factorize_product_form(expand_factors(two, 6)) == two);
  CHECK(factorize_product_form(Series::one(2, 5)).empty());

  FactorList cube(1);
  cube.add({2}, 0, 3);
  CHECK(factorize_product_form(expand_factors(cube, 8)) == cube);
}

TEST_CASE("factorize inverts expand on random lists") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> deg(0, 2), beta(-4, 8), gamma(-2, 3);
  const int D = 8;
  for (int trial = 0; trial < 25; ++trial) {
    FactorList fl(2);
    for (int k = 0; k < 5; ++k) {
      Exponent a{deg(rng), deg(rng)};
      if (total_degree(a) == 0 || 2 * total_degree(a) > D) continue;
      int g = gamma(rng);
      if (g != 0) fl.add(a, beta(rng), g);
    }
    FactorList back = factorize_product_form(expand_factors(fl, D));
    CHECK(back.restricted_to_degree(D / 2) == fl);
  }
}

TEST_CASE("flat, natural and sharp parts") {
  FactorList fl(1);
  fl.add({1}, 0, 1);
  fl.add({1}, 4, 1);
  auto s = split_flat_natural_sharp(fl);
  CHECK(s.flat.cardinality() == 1);
  CHECK(s.natural.empty());
  CHECK(s.sharp.multiplicity({1}, 4) == 1);

  FactorList half(1);
  half.add({2}, 2, 1);
  auto h = split_flat_natural_sharp(half);
  CHECK(h.flat.empty());
  CHECK(h.sharp.empty());
  CHECK(h.natural.multiplicity({2}, 2) == 1);

  FactorList odd(1);
  odd.add({1}, 1, 1);
  CHECK(split_flat_natural_sharp(odd).anomalies.size() == 1);
  CHECK_THROWS(split_flat_natural_sharp(odd, true));

  FactorList flat(1);
  flat.add({1}, 0, 1);
  CHECK(pairing_completion(flat) == fl);
  CHECK(pairing_completion(FactorList(1)).empty());
  CHECK(is_beta_symmetric(fl));
  CHECK_FALSE(is_beta_symmetric(flat));
  CHECK_THROWS(pairing_completion(fl));
}

TEST_CASE("exponent maps and window comparison") {
  Eigen::MatrixXi m(2, 2);
  m << 1, 1, 0, 1;
  ExponentMap M(m);
  CHECK(M.apply({2, 3}) == std::vector<int>{5, 3});
  CHECK(M.inverse().apply({5, 3}) == std::vector<int>{2, 3});
  Eigen::MatrixXi sing(2, 2);
  sing << 1, 2, 2, 4;
  CHECK_THROWS(ExponentMap(sing).inverse());

  std::vector<Factor> src{{{1, 0}, 0, 1}, {{0, 1}, 0, 1}};
  std::vector<Factor> img{{{1, 0}, 0, 1}, {{1, 1}, 0, 1}};
  CHECK(compare_on_window(src, img, M, 4).equal);
  std::vector<Factor> wrong{{{1, 0}, 0, 1}, {{1, 1}, 4, 1}};
  auto cmp = compare_on_window(src, wrong, M, 4);
  CHECK_FALSE(cmp.equal);
  CHECK_FALSE(cmp.witness.empty());
}
