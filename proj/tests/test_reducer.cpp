#include <doctest.h>

#include "mdslab/reducer.hpp"
#include "mdslab/residue.hpp"

using namespace mdslab;

namespace {

QLaurent q(int k) { return QLaurent::q_power(4 * k); }
IndexTuple T(std::vector<int> v) { return IndexTuple(std::move(v)); }

}  // namespace

TEST_CASE("index tuples") {
  IndexTuple t = T({1, 2, 3});
  CHECK(t.n() == 2);
  CHECK(t[-1] == 3);
  CHECK(t[3] == 1);
  CHECK(t.sum() == 6);
  CHECK(t.with(1, 0).values() == std::vector<int>{1, 0, 3});
  CHECK(T({2, 2, 2}).is_diagonal());
  CHECK(T({0, 0, 0}).is_zero());
  CHECK_THROWS(T({1, -1, 0}));
  CHECK(tuples_with_sum(2, 3).size() == 10);
  CHECK(tuples_with_sum(3, 0).size() == 1);
}

TEST_CASE("small coefficients from the recurrences") {
  CoeffEngine e(2, DiagonalSeed::unit());
  CHECK(e.coeff(T({0, 0, 0})) == QLaurent(1));
  CHECK(e.coeff(T({0, 1, 0})) == q(1));
  CHECK(e.coeff(T({0, 0, 3})) == q(3));
  CHECK(e.coeff(T({1, 1, 0})).is_zero());
  CHECK(e.coeff(T({1, 0, 1})).is_zero());
  auto table = e.boundary_coeffs(1);
  CHECK(table.size() == 4);
  for (const auto& [t, c] : table) CHECK(c == q(t.sum()));
  CHECK(e.boundary_coeffs(0).size() == 1);
}

TEST_CASE("constant terms of P count reduction chains") {
  // Independent count: 1, 1, 4, 5, 15 chains for a = 0..4 when n = 3.
  auto P = compute_P(4, 3);
  std::vector<long> expected{1, 1, 4, 5, 15};
  for (int a = 0; a <= 4; ++a) {
    QLaurent p = P.coeff({a});
    CHECK(p.coeff(0) == expected[a]);
    CHECK(p.min_exponent() >= 0);
  }
}

TEST_CASE("P is even for even n") {
  for (int n : {2, 4}) {
    auto P = compute_P(5, n);
    for (int a = 1; a <= 5; a += 2) CHECK(P.coeff({a}).is_zero());
    CHECK(P.coeff({0}) == QLaurent(1));
  }
}

TEST_CASE("pipeline diagonal values") {
  DiagonalSeed s3 = pipeline_seed(3, 8);
  CHECK(s3.at(0) == QLaurent(1));
  CHECK(s3.at(1) == q(3));
  CHECK(s3.at(2) == QLaurent(4) * q(5) + QLaurent(3) * q(6));
  CoeffEngine e3(3, s3);
  CHECK(e3.coeff(T({1, 1, 1, 1})).eval_integer(5) == 125);

  CoeffEngine e2(2, pipeline_seed(2, 6));
  CHECK(e2.coeff(T({2, 2, 0})) == q(3));
}

TEST_CASE("coefficients are integral and symmetric under the dihedral group") {
  for (int n : {2, 3}) {
    CoeffEngine e(n, pipeline_seed(n, 8));
    for (const auto& [t, c] : e.boundary_coeffs(8)) {
      if (c.is_zero()) continue;
      CHECK(c.min_exponent() >= 0);
      CHECK(c.exponents_divisible_by(n % 2 == 1 ? 4 : 2));
      std::vector<int> rot(t.values()), ref(t.values());
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      std::reverse(ref.begin(), ref.end());
      CHECK(e.coeff(IndexTuple(rot)) == c);
      CHECK(e.coeff(IndexTuple(ref)) == c);
    }
  }
}

TEST_CASE("local weights") {
  CoeffEngine e(2, pipeline_seed(2, 6));
  CHECK(local_weight(T({0, 0, 0}), e) == QLaurent(1));
  CHECK(local_weight(T({0, 4, 0}), e) == QLaurent(1));
  CHECK(local_weight(T({1, 1, 0}), e).is_zero());
  CHECK(local_weight_at(T({0, 2, 0}), e, 5, 2) == 1);
  // c_{2,2,0} = q^3, so H = |p|^4 |p|^{-3} = |p|.
  CHECK(local_weight(T({2, 2, 0}), e) == q(1));
  CHECK(local_weight_at(T({2, 2, 0}), e, 5, 2) == 25);

  DiagonalSeed bad{"bad", {QLaurent(1), q(-1)}, true};
  CoeffEngine eb(2, bad);
  CHECK_THROWS_WITH(local_weight(T({1, 1, 1}), eb), doctest::Contains("local-to-global violation"));
}

TEST_CASE("dominance") {
  for (int n : {2, 3}) {
    CoeffEngine e(n, pipeline_seed(n, 8));
    CHECK(check_dominance_all(8, e).passed());
  }
  CoeffEngine unit(2, DiagonalSeed::unit());
  CHECK(check_dominance(T({0, 0, 0}), unit).passed());
  CHECK(check_dominance(T({0, 1, 0}), unit).passed());
  // A seed placing a term exactly at the bound is reported, not accepted.
  DiagonalSeed edge{"edge", {QLaurent(1), QLaurent::q_power(8)}, true};
  CoeffEngine ee(2, edge);
  auto r = check_dominance(T({1, 1, 1}), ee);
  CHECK(r.status == Status::Fail);
  REQUIRE(r.witness);
  CHECK(r.witness->find("boundary") != std::string::npos);
}

TEST_CASE("one-variable functional equations") {
  CoeffEngine e2(2, pipeline_seed(2, 14));
  CHECK(check_lambda_fe(T({0, 0, 0}), 1, e2).passed());
  CHECK(check_lambda_fe(T({1, 0, 0}), 1, e2).passed());
  CHECK(check_lambda_fe_all(6, e2).passed());
  CoeffEngine e3(3, pipeline_seed(3, 14));
  CHECK(check_lambda_fe_all(6, e3).passed());
  // The relations hold for any diagonal: they are what the reduction is built from.
  DiagonalSeed other{"other", {QLaurent(1), q(2)}, true};
  CoeffEngine eo(2, other);
  CHECK(check_lambda_fe_all(4, eo).passed());
}

TEST_CASE("closure, terminal states and strategy independence") {
  for (int n : {2, 3}) {
    CoeffEngine e(n, pipeline_seed(n, 16));
    CHECK(check_closure(7, e).passed());
    CHECK(check_reducibility(n, 10).passed());
    CHECK(check_strategy_independence(n, e.seed(), 8).passed());
  }
}

TEST_CASE("diagonal determination") {
  DiagonalSeed pipe = pipeline_seed(2, 6);
  auto same = check_diagonal_determination(2, pipe, pipe, 6);
  CHECK(same.passed());
  CHECK(check_diagonal_determination(2, DiagonalSeed::unit(), pipe, 6).passed());

  DiagonalSeed scaled{"scaled", {QLaurent(1), QLaurent(2)}, true};
  CHECK(check_diagonal_determination(2, scaled, DiagonalSeed::unit(), 6).passed());
  CoeffEngine a(2, scaled), b(2, DiagonalSeed::unit());
  auto ratio = series_mul(generated_series(a, 6), series_inverse(generated_series(b, 6)));
  CHECK(ratio.coeff({1, 1, 1}) == QLaurent(2));
  CHECK(ratio.coeff({0, 0, 0}) == QLaurent(1));
}
