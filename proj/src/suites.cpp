#include "mdslab/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "mdslab/global.hpp"
#include "mdslab/lfunctions.hpp"
#include "mdslab/partitions.hpp"
#include "mdslab/reducer.hpp"
#include "mdslab/residue.hpp"

namespace mdslab {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms", "fe", "residue", "partitions", "all"};
  return names;
}

namespace {

// Largest entry sum whose tuple enumeration stays inside the symbol budget.
int affordable_sum(int q0, int n, int wanted) {
  int s = wanted;
  while (s > 0 && enumeration_cost(q0, s, n) > kSymbolBudget / 10) --s;
  return s;
}

CheckReport capped(CheckReport r, int wanted, int used) {
  if (used < wanted)
    r.notes.push_back("limited to entry sum " + std::to_string(used) + " by the enumeration budget");
  return r;
}

std::vector<CheckReport> axioms_suite(const SuiteConfig& cfg) {
  std::vector<CheckReport> out;
  CoeffEngine engine(cfg.n, pipeline_seed(cfg.n, 2 * cfg.bound + 8));
  out.push_back(check_dominance_all(cfg.bound, engine));
  out.push_back(check_closure(cfg.bound, engine));
  out.push_back(check_reducibility(cfg.n, cfg.bound));
  out.push_back(check_strategy_independence(cfg.n, engine.seed(), cfg.bound));
  DiagonalSeed other = engine.seed();
  other.id = "perturbed";
  for (std::size_t a = 1; a < other.values.size(); ++a) other.values[a] += QLaurent::q_power(4 * static_cast<int>(a));
  out.push_back(check_diagonal_determination(cfg.n, engine.seed(), other, cfg.bound));
  int s = affordable_sum(cfg.q0, cfg.n, cfg.bound);
  GlobalContext ctx(cfg.q0, engine, std::max(s, 1));
  out.push_back(capped(check_local_to_global(ctx, s), cfg.bound, s));
  out.push_back(check_grouping_independence(ctx, std::max(1, std::min(s, 3)), 200, 12345u));
  out.push_back(check_residue_multiplicativity(ctx, 2));
  out.push_back(capped(observe_naive_vs_axiomatic(ctx, std::min(s, 4)), std::min(cfg.bound, 4), std::min(s, 4)));
  return out;
}

std::vector<CheckReport> fe_suite(const SuiteConfig& cfg) {
  std::vector<CheckReport> out;
  CoeffEngine engine(cfg.n, pipeline_seed(cfg.n, 2 * cfg.bound + 2));
  out.push_back(check_lambda_fe_all(cfg.bound, engine));
  int s = affordable_sum(cfg.q0, cfg.n, std::min(cfg.bound, 3));
  GlobalContext ctx(cfg.q0, engine, std::max(2 * s + 1, 1));
  out.push_back(capped(check_l_series_fe_all(ctx, s), std::min(cfg.bound, 3), s));
  out.push_back(check_l_suite(cfg.q0, std::clamp(cfg.bound, 1, 4)));
  out.push_back(moment_identity_check(cfg.q0, std::min(cfg.bound, 2), std::min(cfg.bound, 2)));
  return out;
}

std::vector<CheckReport> residue_suite(const SuiteConfig& cfg) {
  std::vector<CheckReport> out;
  const int n = cfg.n;
  const int D = cfg.trunc;
  CoeffEngine engine(n, pipeline_seed(n, 2 * D + 2));
  out.push_back(check_pipeline_consistency(n, D, engine));
  out.push_back(check_pairing(n, D));
  out.push_back(check_even_series(n, D));
  {
    int s = std::min(D, 4);
    GlobalContext ctx(cfg.q0, engine, 2 * s);
    out.push_back(check_H_route(ctx, s, engine));
  }
  for (int p_deg : {1, 2}) out.push_back(check_euler_substitution(n, p_deg, std::min(D, 4), engine));
  const int N = residue_arity(n);
  int admissible = 0;
  for (int pos = 0; pos < N; ++pos) {
    int i = 2 * pos;
    if (n % 2 == 0 && (i == 0 || i == n)) continue;
    ++admissible;
    out.push_back(check_resfe(i, n, D));
  }
  if (admissible == 0) {
    CheckReport r("residue_fe");
    r.params = {{"n", n}, {"D", D}};
    r.notes.push_back("no even index with 0 < i < n");
    out.push_back(r);
  }
  if (n % 2 == 0) {
    out.push_back(check_neven_fe(n, EvenTransform::CycleSquared, D));
    out.push_back(check_neven_fe(n, EvenTransform::Edge, D));
  }
  out.push_back(check_scalar_cocycle());
  out.push_back(reconstruct_R1(n, std::min(D, 6)));
  return out;
}

std::vector<CheckReport> partitions_suite(const SuiteConfig& cfg) {
  std::vector<CheckReport> out;
  int entry = std::min(cfg.bound, 6);
  out.push_back(check_lemma_partitions(3, entry));
  out.push_back(check_ntuple_partitions(2, std::min(cfg.bound, 6)));
  int odd_n = cfg.n % 2 == 1 ? cfg.n : 3;
  int even_n = cfg.n % 2 == 0 ? cfg.n : 2;
  out.push_back(check_chain_agreement(odd_n, std::min(cfg.bound, 3)));
  out.push_back(check_chain_bijection(odd_n, std::min(cfg.bound, 3)));
  out.push_back(check_even_p_lowest_terms(even_n, std::min(cfg.bound, 5)));
  out.push_back(check_gamma_roundtrip(3, 4, 3));
  return out;
}

}  // namespace

std::vector<CheckReport> run_suite(const std::string& suite, const SuiteConfig& cfg) {
  if (suite == "axioms") return axioms_suite(cfg);
  if (suite == "fe") return fe_suite(cfg);
  if (suite == "residue") return residue_suite(cfg);
  if (suite == "partitions") return partitions_suite(cfg);
  if (suite == "all") {
    std::vector<CheckReport> out;
    for (const char* name : {"axioms", "fe", "residue", "partitions"}) {
      auto part = run_suite(name, cfg);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace mdslab
