// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mdslab/global.hpp"
#include "mdslab/lfunctions.hpp"
#include "mdslab/partitions.hpp"
#include "mdslab/reducer.hpp"
#include "mdslab/residue.hpp"

using namespace mdslab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  long cases = 0;

  void take(const CheckReport& r) {
    cases += r.cases;
    if (r.status == Status::Fail && ok) {
      ok = false;
      detail = r.name + ": " + r.witness.value_or("failed");
    }
  }
  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome residue_formula(int n, int max_sum) {
  Outcome o;
  CoeffEngine e(n, pipeline_seed(n, 4 * max_sum + 8));
  o.take(check_pipeline_consistency(n, max_sum, e));
  return o;
}

Outcome c1() { return residue_formula(3, 8); }

Outcome c2() {
  Outcome o;
  for (int n : {2, 4, 5}) {
    Outcome s = residue_formula(n, 6);
    o.cases += s.cases;
    if (!s.ok && o.ok) o = s;
  }
  return o;
}

Outcome c3() {
  Outcome o;
  CoeffEngine e2(2, pipeline_seed(2, 20)), e3(3, pipeline_seed(3, 20));
  GlobalContext g2(5, e2, 6), g3(5, e3, 5);
  o.take(check_local_to_global(g2, 6));
  o.take(check_local_to_global(g3, 5));
  GlobalContext s2(13, e2, 3), s3(13, e3, 3);
  o.take(check_local_to_global(s2, 3));
  o.take(check_local_to_global(s3, 3));
  return o;
}

Outcome c4() {
  Outcome o;
  for (int n : {2, 3}) {
    CoeffEngine e(n, pipeline_seed(n, 16));
    o.take(check_dominance_all(8, e));
  }
  return o;
}

Outcome c5() {
  Outcome o;
  for (int n : {2, 3}) {
    CoeffEngine e(n, pipeline_seed(n, 30));
    o.take(check_lambda_fe_all(6, e));
  }
  CoeffEngine e2(2, pipeline_seed(2, 16));
  GlobalContext g(5, e2, 6);
  o.take(check_l_series_fe_all(g, 3));
  return o;
}

Outcome c6() {
  Outcome o;
  DiagonalSeed pipe = pipeline_seed(2, 6);
  DiagonalSeed other{"shifted", {QLaurent(1), QLaurent(0), QLaurent(7) * QLaurent::q_power(8)}, true};
  o.take(check_diagonal_determination(2, pipe, DiagonalSeed::unit(), 6));
  o.take(check_diagonal_determination(2, other, pipe, 6));
  return o;
}

Outcome c7() {
  Outcome o;
  for (int n : {2, 3}) {
    CoeffEngine e(n, pipeline_seed(n, 20));
    GlobalContext g(5, e, 4);
    o.take(check_H_route(g, 4, e));
    for (int p_deg : {1, 2}) o.take(check_euler_substitution(n, p_deg, 4, e));
  }
  for (int n = 2; n <= 5; ++n) o.take(check_pairing(n, 10));
  return o;
}

Outcome c8() {
  Outcome o;
  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i <= n; i += 2) {
      if (n % 2 == 0 && (i == 0 || i == n)) continue;
      o.take(check_resfe(i, n, 10));
    }
  o.take(check_neven_fe(6, EvenTransform::CycleSquared, 12));
  o.take(check_neven_fe(6, EvenTransform::Edge, 12));
  o.take(check_scalar_cocycle());
  return o;
}

Outcome c9() {
  Outcome o;
  for (int n = 2; n <= 5; ++n) o.take(reconstruct_R1(n, 6));
  return o;
}

Outcome c10() {
  Outcome o;
  o.take(check_lemma_partitions(3, 6));
  o.take(check_chain_agreement(3, 3));
  o.take(check_chain_bijection(3, 3));
  for (int n : {2, 4}) o.take(check_even_p_lowest_terms(n, 5));
  o.take(check_gamma_roundtrip(3, 4, 3));
  return o;
}

Outcome c11() {
  Outcome o;
  o.take(check_l_suite(5, 5));
  o.take(moment_identity_check(5, 4, 4));
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {"n = 3 residue formula, entry sum <= 8", c1},
      {"pipeline consistency for n = 2, 4, 5, entry sum <= 6", c2},
      {"local weights sum to c_t at q = 5 and q = 13", c3},
      {"dominance and unit tuples, entry sum <= 8", c4},
      {"one-variable functional equations", c5},
      {"diagonal determines the series", c6},
      {"residue through H, Euler substitution, factor pairing", c7},
      {"functional equations with scalar cocycle", c8},
      {"diagonal factors reconstructed from P", c9},
      {"partition and chain combinatorics", c10},
      {"L-functions and the second moment", c11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = all[k].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s  %s (%ld cases, %.1fs)%s%s\n", k + 1, o.ok ? "PASS" : "FAIL", all[k].title,
                o.cases, secs, o.ok ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
