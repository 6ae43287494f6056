#include "mdslab/lfunctions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "mdslab/parallel.hpp"

namespace mdslab {

DivisorCount divisor_count(const fq::Factorization& f) {
  Integer v(1);
  for (const auto& [p, e] : f.factors) v *= e + 1;
  return {v};
}

std::vector<Integer> zeta_coeffs(int q, int dmax) {
  std::vector<Integer> out;
  for (int d = 0; d <= dmax; ++d) out.push_back(ipow(Integer(q), d));
  return out;
}

namespace {

Integer character_sum(const fq::PolyFq& g, int d) {
  const int q = g.modulus();
  return parallel_sum<Integer>(
      fq::monic_count(q, d), [&](std::size_t k) { return Integer(fq::residue_symbol(fq::monic_at(q, d, k), g)); },
      Integer(0));
}

}  // namespace

LPolynomial l_poly(const fq::PolyFq& g) {
  if (!g.is_monic()) throw std::invalid_argument("l_poly: conductor must be monic");
  if (g.degree() == 0) throw std::invalid_argument("l_poly: g = 1 is the zeta function, use zeta_coeffs");
  if (!fq::is_squarefree(g)) throw std::invalid_argument("l_poly: conductor " + g.to_string() + " is not squarefree");
  LPolynomial L{{}, g};
  for (int d = 0; d < g.degree(); ++d) L.coeffs.push_back(character_sum(g, d));
  Integer extra = character_sum(g, g.degree());
  if (extra != 0)
    throw std::logic_error("l_poly: character sum in degree " + std::to_string(g.degree()) + " is " + extra.get_str());
  return L;
}

namespace {

Integer coeff_at(const std::vector<Integer>& v, int k) {
  return k < 0 || k >= static_cast<int>(v.size()) ? Integer(0) : v[k];
}

// L(x) / (1 - x) for even degree; requires L(1) = 0.
std::vector<Integer> strip_trivial_zero(const std::vector<Integer>& L) {
  std::vector<Integer> P;
  Integer run(0);
  for (std::size_t k = 0; k + 1 < L.size(); ++k) {
    run += L[k];
    P.push_back(run);
  }
  run += L.back();
  if (run != 0) throw std::logic_error("L(1) != 0 for an even-degree conductor");
  return P;
}

}  // namespace

namespace {

CheckReport l_fe_of(const LPolynomial& L) {
  const fq::PolyFq& g = L.conductor;
  CheckReport r("l_fe");
  r.params = {{"g", g.to_string()}, {"q", g.modulus()}};
  const Integer q(g.modulus());
  const int d = g.degree();
  r.expect(L.coeffs.at(0) == 1, [&] { return "constant coefficient " + L.coeffs[0].get_str(); });
  if (d % 2 == 1) {
    // q^{(d-1)/2} L_k = q^k L_{d-1-k}
    for (int k = 0; k <= d; ++k) {
      Integer lhs = ipow(q, (d - 1) / 2) * coeff_at(L.coeffs, k);
      Integer rhs = ipow(q, k) * coeff_at(L.coeffs, d - 1 - k);
      r.expect(lhs == rhs, [&] { return "degree " + std::to_string(k) + ": " + lhs.get_str() + " vs " + rhs.get_str(); });
    }
  } else {
    // Cleared form: q^{d-1} (qx - 1) L(x) = q^{d/2} (1 - x) q^{d-1} x^{d-1} L(1/(qx)).
    std::vector<Integer> lhs(d + 1), rhs(d + 1);
    for (int k = 0; k <= d; ++k) lhs[k] = ipow(q, d - 1) * (q * coeff_at(L.coeffs, k - 1) - coeff_at(L.coeffs, k));
    // x^{d-1} L(1/(qx)) q^{d-1} = sum_j L_j q^{d-1-j} x^{d-1-j}
    std::vector<Integer> rev(d, Integer(0));
    for (int j = 0; j < d; ++j) rev[d - 1 - j] = coeff_at(L.coeffs, j) * ipow(q, d - 1 - j);
    for (int k = 0; k <= d; ++k) rhs[k] = ipow(q, d / 2) * (coeff_at(rev, k) - coeff_at(rev, k - 1));
    for (int k = 0; k <= d; ++k)
      r.expect(lhs[k] == rhs[k], [&] {
        return "cleared degree " + std::to_string(k) + ": " + lhs[k].get_str() + " vs " + rhs[k].get_str();
      });
  }
  return r;
}

}  // namespace

CheckReport check_l_fe(const fq::PolyFq& g) { return l_fe_of(l_poly(g)); }

std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& coeffs) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && coeffs[deg] == 0.0) --deg;
  if (deg <= 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("polynomial_roots: eigenvalue solver did not converge");
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < deg; ++i) roots.push_back(solver.eigenvalues()[i]);
  return roots;
}

namespace {

CheckReport rh_of(const LPolynomial& L, double tol) {
  const fq::PolyFq& g = L.conductor;
  CheckReport r("rh");
  r.params = {{"g", g.to_string()}, {"q", g.modulus()}, {"tol", tol}};
  std::vector<Integer> poly = g.degree() % 2 == 0 ? strip_trivial_zero(L.coeffs) : L.coeffs;
  std::vector<double> c;
  for (const auto& v : poly) c.push_back(v.get_d());
  auto roots = polynomial_roots(c);
  if (roots.empty()) r.notes.push_back("no nontrivial roots");
  const double target = 1.0 / std::sqrt(static_cast<double>(g.modulus()));
  for (const auto& z : roots) {
    std::complex<double> value = 0;
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) value = value * z + c[k];
    double scale = 0;
    for (int k = 0; k < static_cast<int>(c.size()); ++k) scale += std::abs(c[k]) * std::pow(std::abs(z), k);
    if (std::abs(value) > 1e-8 * scale) {
      std::ostringstream os;
      os << "root " << z << " has residual " << std::abs(value);
      throw std::runtime_error("check_rh: " + os.str());
    }
    r.expect(std::abs(std::abs(z) - target) <= tol, [&] {
      std::ostringstream os;
      os.precision(12);
      os << "root " << z << " has modulus " << std::abs(z) << ", expected " << target;
      return os.str();
    });
  }
  return r;
}

}  // namespace

CheckReport check_rh(const fq::PolyFq& g, double tol) { return rh_of(l_poly(g), tol); }

CheckReport check_l_euler_product(const fq::PolyFq& g, int max_deg) {
  CheckReport r("l_euler_product");
  const int q = g.modulus();
  r.params = {{"g", g.to_string()}, {"max_deg", max_deg}};
  std::vector<Integer> prod(max_deg + 1, Integer(0));
  prod[0] = 1;
  fq::FactorTable table(q, max_deg);
  for (int d = 1; d <= max_deg; ++d)
    for (const auto& p : table.primes(d)) {
      int chi = fq::residue_symbol(p, g);
      if (chi == 0) continue;
      // multiply by 1 / (1 - chi x^d)
      for (int k = d; k <= max_deg; ++k) prod[k] += chi * prod[k - d];
    }
  LPolynomial L = l_poly(g);
  for (int k = 0; k <= max_deg; ++k)
    r.expect(prod[k] == coeff_at(L.coeffs, k), [&] {
      return "degree " + std::to_string(k) + ": Euler product " + prod[k].get_str() + ", L " +
             coeff_at(L.coeffs, k).get_str();
    });
  return r;
}

MomentSides moment_sides(int q0, int dmax, int wmax) {
  if (dmax < 0 || wmax < 0) throw std::invalid_argument("moment_sides: negative degree");
  const int top = std::max(dmax, wmax);
  std::vector<fq::PolyFq> polys;
  std::vector<std::size_t> start;
  for (int d = 0; d <= top; ++d) {
    start.push_back(polys.size());
    for (auto& f : fq::monic_enum(q0, d)) polys.push_back(std::move(f));
  }
  start.push_back(polys.size());
  auto block = [&](int d) { return std::make_pair(start[d], start[d + 1]); };
  using Cube = std::vector<std::vector<std::vector<Integer>>>;
  auto cube = [&] { return Cube(dmax + 1, std::vector<std::vector<Integer>>(wmax + 1, std::vector<Integer>(wmax + 1))); };
  MomentSides out{cube(), cube()};

  // (f1 f3 / f0 f2) = (f1/f0)(f3/f0)(f1/f2)(f3/f2); sum over f0 and f2 separately.
  const std::size_t W = start[wmax + 1];
  std::vector<std::vector<signed char>> sym(start[dmax + 1], std::vector<signed char>(W));
  for (std::size_t a = 0; a < sym.size(); ++a)
    for (std::size_t b = 0; b < W; ++b) sym[a][b] = static_cast<signed char>(fq::residue_symbol(polys[a], polys[b]));
  for (int d1 = 0; d1 <= dmax; ++d1)
    for (int d3 = 0; d1 + d3 <= dmax; ++d3) {
      auto [lo1, hi1] = block(d1);
      auto [lo3, hi3] = block(d3);
      for (std::size_t i1 = lo1; i1 < hi1; ++i1)
        for (std::size_t i3 = lo3; i3 < hi3; ++i3) {
          std::vector<long> w0(wmax + 1, 0), w2(wmax + 1, 0);
          for (int e = 0; e <= wmax; ++e) {
            auto [lo, hi] = block(e);
            for (std::size_t k = lo; k < hi; ++k) {
              w0[e] += sym[i1][k] * sym[i3][k];
              w2[e] += sym[i1][k] * sym[i3][k];
            }
          }
          for (int e0 = 0; e0 <= wmax; ++e0)
            for (int e2 = 0; e2 <= wmax; ++e2) out.character_sum[d1 + d3][e0][e2] += w0[e0] * w2[e2];
        }
    }

  // sum_f sigma_0(f) L_f(x_0) L_f(x_2), L_f(y) = sum_g (g/f) y^{deg g}.
  for (int d = 0; d <= dmax; ++d) {
    auto [lo, hi] = block(d);
    for (std::size_t i = lo; i < hi; ++i) {
      const fq::PolyFq& f = polys[i];
      Integer sigma = divisor_count(fq::factor(f)).value;
      std::vector<Integer> Lf(wmax + 1);
      for (int e = 0; e <= wmax; ++e) {
        auto [glo, ghi] = block(e);
        for (std::size_t k = glo; k < ghi; ++k) Lf[e] += fq::residue_symbol_by_factoring(polys[k], f);
      }
      for (int e0 = 0; e0 <= wmax; ++e0)
        for (int e2 = 0; e2 <= wmax; ++e2) out.l_products[d][e0][e2] += sigma * Lf[e0] * Lf[e2];
    }
  }
  return out;
}

CheckReport moment_identity_check(int q0, int dmax, int wmax) {
  CheckReport r("moment_identity");
  r.params = {{"q0", q0}, {"dmax", dmax}, {"wmax", wmax}};
  MomentSides s = moment_sides(q0, dmax, wmax);
  for (int d = 0; d <= dmax; ++d)
    for (int e0 = 0; e0 <= wmax; ++e0)
      for (int e2 = 0; e2 <= wmax; ++e2) {
        const Integer& a = s.character_sum[d][e0][e2];
        const Integer& b = s.l_products[d][e0][e2];
        r.expect(a == b, [&] {
          return "x^" + std::to_string(d) + " x0^" + std::to_string(e0) + " x2^" + std::to_string(e2) +
                 ": character sum " + a.get_str() + ", L products " + b.get_str();
        });
      }
  return r;
}

CheckReport check_l_suite(int q0, int max_deg) {
  CheckReport r("l_functions");
  r.params = {{"q0", q0}, {"max_deg", max_deg}};
  long conductors = 0;
  for (int d = 1; d <= max_deg; ++d)
    for (const auto& g : fq::monic_enum(q0, d)) {
      if (!fq::is_squarefree(g)) continue;
      ++conductors;
      LPolynomial L = l_poly(g);
      r.expect(L.degree() <= d - 1, [&] { return g.to_string() + ": L has degree " + std::to_string(L.degree()); });
      r.absorb(l_fe_of(L));
      CheckReport rh = rh_of(L, 1e-6);
      rh.notes.clear();
      r.absorb(rh);
      if (d <= 3) r.absorb(check_l_euler_product(g, 3));
    }
  r.notes.push_back(std::to_string(conductors) + " squarefree conductors");
  return r;
}

}  // namespace mdslab
