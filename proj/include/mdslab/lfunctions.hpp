#pragma once

#include <complex>
#include <vector>

#include "mdslab/fq_poly.hpp"
#include "mdslab/report.hpp"

namespace mdslab {

/// L(x, chi_g) for monic squarefree non-constant g.
struct LPolynomial {
  std::vector<Integer> coeffs;
  fq::PolyFq conductor;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct DivisorCount {
  Integer value;
};

DivisorCount divisor_count(const fq::Factorization& f);

/// Coefficients of zeta(x) = 1/(1 - qx) through degree dmax; the g = 1 case.
std::vector<Integer> zeta_coeffs(int q, int dmax);

/// Throws std::invalid_argument for g = 1 (use zeta_coeffs), non-monic or non-squarefree g,
/// and std::logic_error if the coefficient at degree deg g does not vanish.
LPolynomial l_poly(const fq::PolyFq& g);

CheckReport check_l_fe(const fq::PolyFq& g);
CheckReport check_rh(const fq::PolyFq& g, double tol = 1e-6);
/// Euler product over primes of degree <= max_deg reproduces l_poly through max_deg.
CheckReport check_l_euler_product(const fq::PolyFq& g, int max_deg);

/// Roots of sum c_k x^k via the companion matrix; throws on solver failure.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs);

/// Both sides of the second-moment identity, indexed [d][e0][e2]: d is the
/// degree in x = x_1 = x_3, e0 and e2 the formal degrees in x_0 and x_2.
struct MomentSides {
  std::vector<std::vector<std::vector<Integer>>> character_sum;
  std::vector<std::vector<std::vector<Integer>>> l_products;
};

MomentSides moment_sides(int q0, int dmax, int wmax);
CheckReport moment_identity_check(int q0, int dmax, int wmax);

/// check_l_fe, check_rh and the degree bound for every monic squarefree g with 1 <= deg g <= max_deg.
CheckReport check_l_suite(int q0, int max_deg);

}  // namespace mdslab
