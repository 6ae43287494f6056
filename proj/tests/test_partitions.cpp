#include <doctest.h>

#include <functional>

#include "mdslab/partitions.hpp"
#include "mdslab/reducer.hpp"

using namespace mdslab;

namespace {

// Partitions of `total` by a plain recursion on the largest part.
void each_partition(int total, int max_part, Partition& cur, const std::function<void(const Partition&)>& fn) {
  if (total == 0) {
    fn(cur);
    return;
  }
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    each_partition(total - p, p, cur, fn);
    cur.pop_back();
  }
}

// Counts partitions whose parts in positions j = k (mod n), 1-based, sum to a_k.
long brute_tuples(int n, const std::vector<int>& a) {
  int total = 0;
  for (int x : a) total += x;
  long count = 0;
  Partition cur;
  each_partition(total, total, cur, [&](const Partition& p) {
    std::vector<int> s(n, 0);
    for (std::size_t j = 0; j < p.size(); ++j) s[(j % n)] += p[j];
    count += s == a;
  });
  return count;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(10).size() == 42);
  for (const auto& p : partitions_of(7))
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i - 1] >= p[i]);
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  for (const auto& p : partitions_of(8)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition tuples with prescribed residue sums") {
  CHECK(count_partition_tuples(1, {4}) == 5);
  CHECK(count_partition_tuples(2, {0, 0}) == 1);
  CHECK(count_partition_tuples(3, {0, 0, 0}) == 1);
  for (int n = 1; n <= 3; ++n)
    for (const Exponent& e : monomials_upto(n, 6)) CHECK(count_partition_tuples(n, e) == brute_tuples(n, e));
  auto gf = partition_product_gf(2, 4);
  CHECK(gf.coeff({1, 0}) == QLaurent(count_partition_tuples(2, {1, 0})));
  auto g1 = partition_product_gf(1, 8);
  for (int k = 0; k <= 8; ++k) CHECK(g1.coeff({k}) == QLaurent(static_cast<long>(partitions_of(k).size())));
  CHECK(check_lemma_partitions(3, 4).passed());
  CHECK(check_ntuple_partitions(2, 4).passed());
}

TEST_CASE("reduction chains") {
  std::vector<long> n3{1, 1, 4, 5, 15};
  for (int a = 0; a <= 4; ++a) {
    CHECK(count_reduction_chains(3, a, ChainReading::Literal) == n3[a]);
    CHECK(count_reduction_chains(3, a, ChainReading::Strong) == n3[a]);
  }
  std::vector<long> n5{1, 1, 8, 9};
  for (int a = 0; a <= 3; ++a) CHECK(count_reduction_chains(5, a, ChainReading::Literal) == n5[a]);
  for (int a = 0; a <= 4; ++a) CHECK(odd_product_diagonal(3, a) == n3[a]);
  CHECK_THROWS(count_reduction_chains(2, 1, ChainReading::Literal));
  CHECK(check_chain_agreement(3, 3).passed());
  CHECK(check_chain_bijection(3, 3).passed());
}

TEST_CASE("chains and delta sequences are inverse") {
  for (const auto& chain : enumerate_reduction_chains(3, 3, ChainReading::Literal)) {
    PartitionTuple pt = chain_to_deltas(chain);
    CHECK(deltas_to_chain(pt, 3, 3, static_cast<int>(chain.size()) - 1) == chain);
    for (const auto& d : pt.parts)
      for (std::size_t j = 1; j < d.size(); ++j) CHECK(d[j - 1] >= d[j]);
  }
}

TEST_CASE("even n: lowest terms of P") {
  std::vector<long> n2{1, 0, 1, 0, 2, 0, 3};
  std::vector<long> n4{1, 0, 3, 0, 10, 0, 27};
  for (int a = 0; a <= 6; ++a) {
    CHECK(even_product_diagonal(2, a) == n2[a]);
    CHECK(even_product_diagonal(4, a) == n4[a]);
  }
  auto P2 = compute_P(4, 2);
  for (int a = 0; a <= 4; a += 2) CHECK(P2.coeff({a}).coeff(P2.coeff({a}).min_exponent()) == n2[a]);
  CHECK(check_even_p_lowest_terms(2, 5).passed());
  CHECK(check_even_p_lowest_terms(4, 4).passed());
}

TEST_CASE("gamma decomposition") {
  GammaDecomposition g = gamma_decomposition({{{2, 2}, {4}, {}}});
  CHECK(g.gamma.empty());
  GammaDecomposition one = gamma_decomposition({{{1}}});
  CHECK(one.gamma == Partition{1});
  CHECK(conjugate(one.gamma) == Partition{1});
  REQUIRE(one.even_parts.size() == 1);
  CHECK(one.even_parts[0].empty());
  CHECK_THROWS_AS(gamma_decomposition({{{1}, {2}}}), std::invalid_argument);
  CHECK(check_gamma_roundtrip(3, 4, 3).passed());
}
