#include "mdslab/factor_list.hpp"

#include <Eigen/LU>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mdslab {

std::vector<Exponent> monomials_upto(int nvars, int bound) {
  std::vector<Exponent> out;
  Exponent cur(nvars, 0);
  // Depth-first in lexicographic order.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

std::string exponent_to_string(const Exponent& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

std::string factor_to_string(const Factor& f) {
  std::ostringstream os;
  os << "(alpha=" << exponent_to_string(f.alpha) << ", beta=" << f.beta << "/4, gamma=" << f.gamma << ")";
  return os.str();
}

void FactorList::add(const Exponent& alpha, int beta, long gamma) {
  if (static_cast<int>(alpha.size()) != nvars_) throw std::invalid_argument("FactorList: arity mismatch");
  bool nonzero = false;
  for (int a : alpha) nonzero = nonzero || a != 0;
  if (!nonzero) throw std::invalid_argument("FactorList: zero exponent vector");
  if (gamma == 0) return;
  auto key = std::make_pair(alpha, beta);
  long& g = entries_[key];
  g += gamma;
  if (g == 0) entries_.erase(key);
}

void FactorList::merge(const FactorList& other) {
  for (const auto& [k, g] : other.entries_) add(k.first, k.second, g);
}

long FactorList::multiplicity(const Exponent& alpha, int beta) const {
  auto it = entries_.find({alpha, beta});
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Factor> FactorList::factors() const {
  std::vector<Factor> out;
  out.reserve(entries_.size());
  for (const auto& [k, g] : entries_) out.push_back({k.first, k.second, g});
  return out;
}

long FactorList::cardinality() const {
  long n = 0;
  for (const auto& [k, g] : entries_) n += std::labs(g);
  return n;
}

FactorList FactorList::restricted_to_degree(int max_total) const {
  FactorList r(nvars_);
  for (const auto& [k, g] : entries_)
    if (total_degree(k.first) <= max_total) r.entries_.emplace(k, g);
  return r;
}

MultiSeries<QLaurent> expand_factors(const FactorList& fl, int bound) {
  auto s = MultiSeries<QLaurent>::one(fl.nvars(), bound);
  for (const auto& f : fl.factors()) {
    for (int a : f.alpha)
      if (a < 0) throw std::invalid_argument("expand_factors: negative exponent");
    if (total_degree(f.alpha) > bound) continue;
    QLaurent c = QLaurent::q_power(f.beta);
    for (long k = 0; k < std::labs(f.gamma); ++k) s.mul_binomial(f.alpha, c, f.gamma > 0);
  }
  return s;
}

FactorList factorize_product_form(const MultiSeries<QLaurent>& s) {
  const int n = s.nvars();
  if (s.coeff(Exponent(n, 0)) != QLaurent(1)) throw std::domain_error("factorize_product_form: constant term is not 1");
  FactorList out(n);
  MultiSeries<QLaurent> work = s;
  std::vector<Exponent> monos = monomials_upto(n, s.bound());
  for (int d = 1; d <= s.bound(); ++d) {
    std::vector<Factor> found;
    for (const Exponent& e : monos) {
      if (total_degree(e) != d) continue;
      for (const auto& [beta, c] : work.coeff(e).terms()) {
        if (!c.fits_slong_p()) throw std::domain_error("factorize_product_form: multiplicity overflow");
        found.push_back({e, beta, c.get_si()});
      }
    }
    // Dividing out (1 - q^beta x^alpha)^{-gamma} means multiplying by its inverse.
    for (const auto& f : found) {
      out.add(f);
      QLaurent c = QLaurent::q_power(f.beta);
      for (long k = 0; k < std::labs(f.gamma); ++k) work.mul_binomial(f.alpha, c, f.gamma < 0);
    }
    for (const auto& [e, v] : work.terms())
      if (total_degree(e) == d) throw std::logic_error("factorize_product_form: residual survived peeling");
  }
  return out;
}

FlatSplit split_flat_natural_sharp(const FactorList& fl, bool strict) {
  FlatSplit r{FactorList(fl.nvars()), FactorList(fl.nvars()), FactorList(fl.nvars()), {}};
  for (const auto& f : fl.factors()) {
    if (f.beta <= 0)
      r.flat.add(f);
    else if (f.beta >= 4)
      r.sharp.add(f);
    else if (f.beta == 2)
      r.natural.add(f);
    else
      r.anomalies.push_back(f);
  }
  if (strict && !r.anomalies.empty())
    throw std::domain_error("split_flat_natural_sharp: anomalous factor " + factor_to_string(r.anomalies.front()));
  return r;
}

FactorList pairing_completion(const FactorList& flat) {
  FactorList r = flat;
  for (const auto& f : flat.factors()) {
    if (f.beta > 0) throw std::invalid_argument("pairing_completion: factor with beta > 0");
    r.add(f.alpha, 4 - f.beta, f.gamma);
  }
  return r;
}

bool is_beta_symmetric(const FactorList& fl) {
  for (const auto& f : fl.factors())
    if (fl.multiplicity(f.alpha, 4 - f.beta) != f.gamma) return false;
  return true;
}

ExponentMap::ExponentMap(Eigen::MatrixXi m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("ExponentMap: matrix must be square");
}

std::vector<int> ExponentMap::apply(const Exponent& e) const {
  if (static_cast<int>(e.size()) != dim()) throw std::invalid_argument("ExponentMap: arity mismatch");
  Eigen::VectorXi v = Eigen::Map<const Eigen::VectorXi>(e.data(), dim());
  Eigen::VectorXi w = m_ * v;
  return std::vector<int>(w.data(), w.data() + w.size());
}

ExponentMap ExponentMap::inverse() const {
  Eigen::MatrixXd inv = m_.cast<double>().fullPivLu().inverse();
  Eigen::MatrixXi r(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) r(i, j) = static_cast<int>(std::lround(inv(i, j)));
  if ((m_ * r).isIdentity() == false) throw std::domain_error("ExponentMap: matrix is not unimodular");
  return ExponentMap(r);
}

namespace {
int l1(const std::vector<int>& e) {
  int s = 0;
  for (int x : e) s += std::abs(x);
  return s;
}
}  // namespace

WindowComparison compare_on_window(const std::vector<Factor>& source, const std::vector<Factor>& target,
                                   const ExponentMap& map, int window) {
  ExponentMap inv = map.inverse();
  std::map<std::pair<Exponent, int>, long> image, expected;
  for (const auto& f : source) {
    if (l1(f.alpha) > window) continue;
    Exponent g = map.apply(f.alpha);
    if (l1(g) > window) continue;
    image[{g, f.beta}] += f.gamma;
  }
  for (const auto& f : target) {
    if (l1(f.alpha) > window || l1(inv.apply(f.alpha)) > window) continue;
    expected[{f.alpha, f.beta}] += f.gamma;
  }
  std::erase_if(image, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
  WindowComparison r;
  for (const auto& [k, g] : expected) r.compared += std::labs(g);
  if (image == expected) return r;
  r.equal = false;
  for (const auto& [k, g] : image) {
    auto it = expected.find(k);
    long want = it == expected.end() ? 0 : it->second;
    if (want != g) {
      r.witness = "image factor " + factor_to_string({k.first, k.second, g}) + " expected multiplicity " +
                  std::to_string(want);
      return r;
    }
  }
  for (const auto& [k, g] : expected)
    if (!image.count(k)) {
      r.witness = "missing image factor " + factor_to_string({k.first, k.second, g});
      return r;
    }
  return r;
}

}  // namespace mdslab
