#include "mdslab/fq_poly.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace mdslab::fq {

bool is_valid_modulus(int q) {
  if (q < 5 || q % 4 != 1) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

FieldQ::FieldQ(int q) : q_(q) {
  if (!is_valid_modulus(q))
    throw std::invalid_argument("modulus must be a prime congruent to 1 mod 4, got " +
                                std::to_string(q));
  inverse_.assign(q, 0);
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul(a, b) == 1) {
        inverse_[a] = b;
        break;
      }
  legendre_.assign(q, -1);
  legendre_[0] = 0;
  for (int a = 1; a < q; ++a) legendre_[mul(a, a)] = 1;
}

int FieldQ::inv(int a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  return inverse_[a];
}

const FieldQ& field(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldQ>> fields;
  std::lock_guard<std::mutex> lock(mu);
  auto it = fields.find(q);
  if (it == fields.end()) it = fields.emplace(q, std::make_unique<FieldQ>(q)).first;
  return *it->second;
}

PolyFq::PolyFq(int q) : q_(q) { field(q); }

PolyFq::PolyFq(int q, std::vector<int> coeffs) : q_(q), c_(std::move(coeffs)) {
  const FieldQ& F = field(q);
  for (int& c : c_) c = F.reduce(c);
  trim();
}

PolyFq PolyFq::constant(int q, int c) { return PolyFq(q, {c}); }

PolyFq PolyFq::monomial(int q, int deg, int c) {
  std::vector<int> v(deg + 1, 0);
  v[deg] = c;
  return PolyFq(q, std::move(v));
}

void PolyFq::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyFq PolyFq::scaled(int c) const {
  const FieldQ& F = field(q_);
  PolyFq r(*this);
  for (int& x : r.c_) x = F.mul(x, F.reduce(c));
  r.trim();
  return r;
}

PolyFq PolyFq::monic() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no monic associate");
  return scaled(field(q_).inv(leading()));
}

std::uint64_t PolyFq::norm() const {
  if (is_zero()) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < degree(); ++i) r *= static_cast<std::uint64_t>(q_);
  return r;
}

std::uint64_t PolyFq::monic_code() const {
  if (!is_monic()) throw std::invalid_argument("monic_code of non-monic polynomial");
  std::uint64_t code = 0;
  for (int i = degree(); i >= 0; --i) code = code * q_ + static_cast<std::uint64_t>(c_[i]);
  return code;
}

PolyFq PolyFq::from_monic_code(int q, std::uint64_t code) {
  std::vector<int> v;
  while (code > 0) {
    v.push_back(static_cast<int>(code % q));
    code /= q;
  }
  PolyFq p(q, std::move(v));
  if (!p.is_monic()) throw std::invalid_argument("not a monic code");
  return p;
}

std::string PolyFq::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    int c = c_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

PolyFq& PolyFq::operator+=(const PolyFq& o) {
  const FieldQ& F = field(q_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F.add(c_[i], o.c_[i]);
  trim();
  return *this;
}

PolyFq& PolyFq::operator-=(const PolyFq& o) {
  const FieldQ& F = field(q_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = F.sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

PolyFq operator*(const PolyFq& a, const PolyFq& b) {
  if (a.q_ != b.q_) throw std::invalid_argument("modulus mismatch");
  PolyFq r(a.q_);
  if (a.is_zero() || b.is_zero()) return r;
  const FieldQ& F = field(a.q_);
  std::vector<long long> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += static_cast<long long>(a.c_[i]) * b.c_[j];
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = F.reduce(acc[i]);
  r.trim();
  return r;
}

std::pair<PolyFq, PolyFq> divmod(const PolyFq& a, const PolyFq& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
  const int q = a.modulus();
  const FieldQ& F = field(q);
  std::vector<int> r = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {PolyFq(q), a};
  std::vector<int> quo(a.degree() - db + 1, 0);
  int lead_inv = F.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    int c = F.mul(r[i], lead_inv);
    quo[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(c, bc[j]));
  }
  r.resize(db);
  return {PolyFq(q, std::move(quo)), PolyFq(q, std::move(r))};
}

PolyFq operator%(const PolyFq& a, const PolyFq& b) { return divmod(a, b).second; }
PolyFq operator/(const PolyFq& a, const PolyFq& b) { return divmod(a, b).first; }

std::strong_ordering operator<=>(const PolyFq& a, const PolyFq& b) {
  if (auto c = a.q_ <=> b.q_; c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

PolyFq gcd(const PolyFq& a, const PolyFq& b) {
  PolyFq x = a, y = b;
  while (!y.is_zero()) {
    PolyFq r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

PolyFq powmod(const PolyFq& base, const Integer& e, const PolyFq& m) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  PolyFq result = PolyFq::one(m.modulus()) % m;
  PolyFq b = base % m;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

std::uint64_t monic_count(int q, int d) {
  std::uint64_t r = 1;
  for (int i = 0; i < d; ++i) r *= static_cast<std::uint64_t>(q);
  return r;
}

PolyFq monic_at(int q, int d, std::uint64_t k) {
  std::vector<int> v(d + 1, 0);
  v[d] = 1;
  for (int i = d - 1; i >= 0; --i) {
    v[i] = static_cast<int>(k % q);
    k /= q;
  }
  // v[0] is the most significant digit, so enumeration order is lexicographic from t^0.
  return PolyFq(q, std::move(v));
}

std::vector<PolyFq> monic_enum(int q, int d) {
  if (d < 0) throw std::invalid_argument("negative degree");
  std::vector<PolyFq> out;
  std::uint64_t n = monic_count(q, d);
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(monic_at(q, d, k));
  return out;
}

namespace {

struct PrimeCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::vector<PolyFq>> by_degree;
};

PrimeCache& prime_cache() {
  static PrimeCache c;
  return c;
}

const std::vector<PolyFq>& primes_of_degree(int q, int d);

bool irreducible_by_trial(const PolyFq& f) {
  for (int k = 1; 2 * k <= f.degree(); ++k)
    for (const auto& p : primes_of_degree(f.modulus(), k))
      if ((f % p).is_zero()) return false;
  return true;
}

const std::vector<PolyFq>& primes_of_degree(int q, int d) {
  auto& cache = prime_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.by_degree.find({q, d});
    if (it != cache.by_degree.end()) return it->second;
  }
  std::vector<PolyFq> found;
  for (const auto& f : monic_enum(q, d))
    if (irreducible_by_trial(f)) found.push_back(f);
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.by_degree.emplace(std::make_pair(q, d), std::move(found)).first->second;
}

}  // namespace

bool is_irreducible(const PolyFq& f) {
  if (f.degree() < 1) return false;
  return irreducible_by_trial(f.monic());
}

PolyFq Factorization::product(int q) const {
  PolyFq r = PolyFq::constant(q, unit);
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

int Factorization::valuation(const PolyFq& p) const {
  for (const auto& [f, e] : factors)
    if (f == p) return e;
  return 0;
}

Factorization factor(const PolyFq& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.leading();
  PolyFq rest = f.monic();
  const int q = f.modulus();
  for (int k = 1; 2 * k <= rest.degree(); ++k) {
    for (const auto& p : primes_of_degree(q, k)) {
      int e = 0;
      while (rest.degree() >= k) {
        auto [quo, rem] = divmod(rest, p);
        if (!rem.is_zero()) break;
        rest = std::move(quo);
        ++e;
      }
      if (e > 0) out.factors.emplace_back(p, e);
    }
  }
  if (rest.degree() >= 1) out.factors.emplace_back(rest, 1);
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

PolyFq squarefree_part(const PolyFq& f) {
  Factorization fac = factor(f);
  PolyFq r = PolyFq::one(f.modulus());
  for (const auto& [p, e] : fac.factors)
    if (e % 2 == 1) r = r * p;
  return r;
}

bool is_squarefree(const PolyFq& f) {
  for (const auto& [p, e] : factor(f).factors)
    if (e > 1) return false;
  return true;
}

namespace {

constexpr int kKernelCap = 128;

struct SmallPoly {
  int deg = -1;
  std::array<int, kKernelCap> c{};
};

void load(SmallPoly& s, const PolyFq& p) {
  if (p.degree() >= kKernelCap) throw std::length_error("polynomial degree too large for residue kernel");
  s.deg = p.degree();
  for (int i = 0; i <= s.deg; ++i) s.c[i] = p.coeffs()[i];
}

// a <- a mod b for monic b.
void reduce_mod(SmallPoly& a, const SmallPoly& b, const FieldQ& F) {
  const int db = b.deg;
  for (int i = a.deg; i >= db; --i) {
    int c = a.c[i];
    if (c == 0) continue;
    for (int j = 0; j < db; ++j) a.c[i - db + j] = F.sub(a.c[i - db + j], F.mul(c, b.c[j]));
    a.c[i] = 0;
  }
  int d = std::min(a.deg, db - 1);
  while (d >= 0 && a.c[d] == 0) --d;
  a.deg = d;
}

}  // namespace

int residue_symbol(const PolyFq& f, const PolyFq& g) {
  if (!g.is_monic()) throw std::invalid_argument("residue_symbol: second argument must be monic");
  if (f.modulus() != g.modulus()) throw std::invalid_argument("modulus mismatch");
  const FieldQ& F = field(g.modulus());
  SmallPoly a, b;
  load(a, f);
  load(b, g);
  int sign = 1;
  for (;;) {
    if (b.deg == 0) return sign;
    reduce_mod(a, b, F);
    if (a.deg < 0) return 0;
    int lead = a.c[a.deg];
    if (lead != 1) {
      if (b.deg % 2 == 1) sign *= F.legendre(lead);
      int li = F.inv(lead);
      for (int i = 0; i <= a.deg; ++i) a.c[i] = F.mul(a.c[i], li);
    }
    // Both monic now and q = 1 mod 4, so reciprocity swaps without a sign.
    std::swap(a, b);
  }
}

int residue_symbol_by_factoring(const PolyFq& f, const PolyFq& g) {
  if (!g.is_monic()) throw std::invalid_argument("residue_symbol: second argument must be monic");
  const int q = g.modulus();
  const FieldQ& F = field(q);
  int result = 1;
  for (const auto& [p, e] : factor(g).factors) {
    PolyFq r = f % p;
    if (r.is_zero()) return 0;
    Integer exponent = (ipow(Integer(q), p.degree()) - 1) / 2;
    PolyFq v = powmod(r, exponent, p);
    if (v.degree() != 0) throw std::logic_error("Euler criterion produced a non-constant");
    int s = v.coeffs()[0] == 1 ? 1 : (v.coeffs()[0] == F.neg(1) ? -1 : 0);
    if (s == 0) throw std::logic_error("Euler criterion produced an unexpected constant");
    if (e % 2 == 1) result *= s;
  }
  return result;
}

FactorTable::FactorTable(int q, int max_degree) : q_(q), max_degree_(max_degree) {
  field(q);
  if (max_degree < 0) throw std::invalid_argument("negative max degree");
  std::uint64_t size = monic_count(q, max_degree + 1);
  std::vector<std::uint64_t> spf(size, 0);  // code of the smallest prime factor, 0 = unset
  primes_.assign(max_degree + 1, {});
  for (int d = 1; d <= max_degree; ++d) {
    for (std::uint64_t k = 0; k < monic_count(q, d); ++k) {
      PolyFq f = monic_at(q, d, k);
      std::uint64_t code = f.monic_code();
      if (spf[code] != 0) continue;
      primes_[d].push_back(f);
      for (int e = 0; e + d <= max_degree; ++e)
        for (std::uint64_t j = 0; j < monic_count(q, e); ++j) {
          std::uint64_t c = (f * monic_at(q, e, j)).monic_code();
          if (spf[c] == 0) spf[c] = code;
        }
    }
  }
  table_.assign(size, Factorization{});
  for (int d = 1; d <= max_degree; ++d)
    for (std::uint64_t k = 0; k < monic_count(q, d); ++k) {
      PolyFq f = monic_at(q, d, k);
      std::uint64_t code = f.monic_code();
      PolyFq p = PolyFq::from_monic_code(q, spf[code]);
      PolyFq rest = f / p;
      Factorization fac = table_[rest.monic_code()];
      bool merged = false;
      for (auto& [pp, e] : fac.factors)
        if (pp == p) {
          ++e;
          merged = true;
        }
      if (!merged) {
        fac.factors.emplace_back(p, 1);
        std::sort(fac.factors.begin(), fac.factors.end());
      }
      table_[code] = std::move(fac);
    }
}

const Factorization& FactorTable::factor(const PolyFq& f) const {
  if (!f.is_monic() || f.degree() > max_degree_ || f.modulus() != q_)
    throw std::out_of_range("FactorTable: polynomial outside the table");
  return table_[f.monic_code()];
}

bool FactorTable::is_prime(const PolyFq& f) const {
  const auto& fac = factor(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace mdslab::fq
