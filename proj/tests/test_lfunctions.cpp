#include <doctest.h>

#include <cmath>

#include "mdslab/lfunctions.hpp"

using namespace mdslab;
using namespace mdslab::fq;

namespace {

PolyFq P(std::vector<int> c) { return PolyFq(5, std::move(c)); }

// L coefficients by summing the character over all monic polynomials of each degree.
std::vector<Integer> l_by_enumeration(const PolyFq& g) {
  std::vector<Integer> out;
  for (int d = 0; d < g.degree(); ++d) {
    long s = 0;
    for (const auto& f : monic_enum(g.modulus(), d)) s += residue_symbol_by_factoring(f, g);
    out.emplace_back(s);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<PolyFq> squarefree_of_degree(int q, int d) {
  std::vector<PolyFq> out;
  for (auto& g : monic_enum(q, d))
    if (is_squarefree(g)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("small L-polynomials") {
  LPolynomial lt = l_poly(P({0, 1}));
  CHECK(lt.coeffs == std::vector<Integer>{1});
  LPolynomial l2 = l_poly(P({0, 1}) * P({1, 1}));
  REQUIRE(l2.degree() <= 1);
  CHECK(l2.coeffs[0] == 1);
  CHECK_THROWS_AS(l_poly(PolyFq::one(5)), std::invalid_argument);
  CHECK_THROWS_AS(l_poly(P({0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(l_poly(P({1, 2})), std::invalid_argument);
  auto z = zeta_coeffs(5, 3);
  CHECK(z == std::vector<Integer>{1, 5, 25, 125});
}

TEST_CASE("L-polynomials agree with direct character sums") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& g : squarefree_of_degree(5, d)) {
      LPolynomial L = l_poly(g);
      CHECK(L.degree() <= d - 1);
      CHECK(L.coeffs == l_by_enumeration(g));
    }
}

TEST_CASE("functional equation and Riemann hypothesis") {
  CHECK(check_l_fe(P({0, 1})).passed());
  CHECK(check_rh(P({0, 1})).passed());
  for (int d : {3, 4})
    for (const auto& g : squarefree_of_degree(5, d)) {
      CHECK(check_l_fe(g).passed());
      CHECK(check_rh(g).passed());
    }
  PolyFq g3 = squarefree_of_degree(5, 3).front();
  LPolynomial L = l_poly(g3);
  REQUIRE(L.degree() == 2);
  std::vector<double> c;
  for (const auto& v : L.coeffs) c.push_back(v.get_d());
  auto roots = polynomial_roots(c);
  REQUIRE(roots.size() == 2);
  for (auto r : roots) CHECK(std::abs(r) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-9));
  CHECK(check_l_suite(5, 4).passed());
}

TEST_CASE("polynomial roots") {
  // (1 - 2x)(1 - 3x) = 1 - 5x + 6x^2
  auto r = polynomial_roots({1, -5, 6});
  REQUIRE(r.size() == 2);
  double a = std::min(r[0].real(), r[1].real()), b = std::max(r[0].real(), r[1].real());
  CHECK(a == doctest::Approx(1.0 / 3));
  CHECK(b == doctest::Approx(0.5));
}

TEST_CASE("Euler products") {
  for (const auto& g : squarefree_of_degree(5, 3)) CHECK(check_l_euler_product(g, 3).passed());
}

TEST_CASE("divisor counts are multiplicative") {
  std::vector<PolyFq> all;
  for (int d = 0; d <= 2; ++d)
    for (auto& f : monic_enum(5, d)) all.push_back(f);
  for (const auto& f : all)
    for (const auto& g : all) {
      if (!gcd(f, g).is_one()) continue;
      CHECK(divisor_count(factor(f * g)).value ==
            divisor_count(factor(f)).value * divisor_count(factor(g)).value);
    }
  CHECK(divisor_count(factor(P({0, 0, 0, 1}))).value == 4);
}

TEST_CASE("second-moment identity") {
  MomentSides s0 = moment_sides(5, 0, 0);
  CHECK(s0.character_sum == std::vector<std::vector<std::vector<Integer>>>{{{1}}});
  CHECK(s0.l_products == s0.character_sum);
  CHECK(moment_identity_check(5, 2, 2).passed());
  MomentSides s2 = moment_sides(5, 2, 2);
  CHECK(s2.character_sum == s2.l_products);
  // Degree 1 in x with trivial x_0, x_2 parts: sum of sigma_0 over the 5 monic linears.
  CHECK(s2.character_sum[1][0][0] == 10);
}
