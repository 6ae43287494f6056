#pragma once

#include <string>
#include <vector>

#include "mdslab/factor_list.hpp"
#include "mdslab/global.hpp"
#include "mdslab/reducer.hpp"
#include "mdslab/report.hpp"

namespace mdslab {

/// Number of even-indexed variables x_0, x_2, ... carried by the residue.
int residue_arity(int n);

/// Explicit product for the residue in the even-indexed variables, truncated at total degree D.
struct ResidueProduct {
  int n = 0;
  int D = 0;
  FactorList factors{1};
};

ResidueProduct build_R(int n, int D);

/// The deformed Weyl denominator in x_0..x_n; every factor is a numerator (gamma = -1).
FactorList build_delta(int n, int D);

/// Sub-multiset with all exponent entries equal.
FactorList diagonal_factors(const FactorList& fl);
FactorList off_diagonal_factors(const FactorList& fl);

struct PipelineResult {
  MultiSeries<QLaurent> P{1, 0};
  MultiSeries<QLaurent> R_diag{1, 0};
  DiagonalSeed seed;
  std::vector<std::string> log;
};

/// Diagonal seed c_{a,...,a}, a <= A, recovered from the explicit residue.
PipelineResult run_pipeline(int n, int A);

/// Convenience: the pipeline seed for n, long enough for tuples of entry sum <= max_sum.
DiagonalSeed pipeline_seed(int n, int max_sum);

/// (a_0, a_0+a_2, a_2, ...) for an even-index vector.
IndexTuple residue_tuple(int n, const Exponent& avec);

/// q-power (quarter units) relating c at residue_tuple to the residue coefficient.
int residue_scale(int n, const Exponent& avec);

QLaurent residue_coeff_from_c(const Exponent& avec, CoeffEngine& engine);

/// Sum of H over monic (f_0, f_2, ...) of degrees avec at the residue shape, divided
/// by q0^{weighted degree}; returned as the undivided integer and its scale exponent.
struct HRouteValue {
  Integer sum;
  Integer off_shape;  // contribution from tuples whose squarefree parts differ (expected 0)
  int weight_quarters = 0;
};
HRouteValue residue_coeff_H_route(const Exponent& avec, GlobalContext& ctx);

/// expand_factors(build_R) agrees with residue_coeff_from_c on every avec with sum <= max_sum.
CheckReport check_pipeline_consistency(int n, int max_sum, CoeffEngine& engine);
CheckReport check_H_route(GlobalContext& ctx, int max_sum, CoeffEngine& engine);
/// Residue-shape weights are multiplicative across coprime supports.
CheckReport check_residue_multiplicativity(GlobalContext& ctx, int max_degree);
CheckReport check_euler_substitution(int n, int p_deg, int D, CoeffEngine& engine);
CheckReport check_pairing(int n, int D);
/// Mixed-parity coefficients vanish; for n even every nonzero term has all entries even.
CheckReport check_even_series(int n, int D);

CheckReport check_resfe(int i, int n, int D);
enum class EvenTransform { CycleSquared, Edge };
CheckReport check_neven_fe(int n, EvenTransform which, int D);
/// The eight-term sign average equals the scalar cocycle ratio at sample points.
CheckReport check_scalar_cocycle();

/// Rebuilds the diagonal factors of degree <= K from P and the off-diagonal factors alone.
CheckReport reconstruct_R1(int n, int K);

}  // namespace mdslab
