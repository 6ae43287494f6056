#include "mdslab/qlaurent.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mdslab {

QLaurent::QLaurent(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

QLaurent QLaurent::monomial(const Integer& c, int quarter_exp) {
  QLaurent r(c);
  if (!r.is_zero()) r.low_ = quarter_exp;
  return r;
}

void QLaurent::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

int QLaurent::min_exponent() const {
  if (is_zero()) throw std::domain_error("min_exponent of zero");
  return low_;
}

int QLaurent::max_exponent() const {
  if (is_zero()) throw std::domain_error("max_exponent of zero");
  return low_ + static_cast<int>(c_.size()) - 1;
}

Integer QLaurent::coeff(int e) const {
  long k = static_cast<long>(e) - low_;
  if (k < 0 || k >= static_cast<long>(c_.size())) return Integer(0);
  return c_[k];
}

std::vector<std::pair<int, Integer>> QLaurent::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) out.emplace_back(low_ + static_cast<int>(k), c_[k]);
  return out;
}

std::size_t QLaurent::term_count() const {
  std::size_t n = 0;
  for (const auto& c : c_) n += c != 0;
  return n;
}

bool QLaurent::exponents_divisible_by(int grain) const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0 && (low_ + static_cast<int>(k)) % grain != 0) return false;
  return true;
}

bool QLaurent::is_polynomial_in_q() const {
  return is_zero() || (low_ >= 0 && exponents_divisible_by(4));
}

QLaurent QLaurent::shifted(int e) const {
  QLaurent r = *this;
  if (!r.is_zero()) r.low_ += e;
  return r;
}

QLaurent QLaurent::substitute_power(int m) const {
  QLaurent r;
  for (const auto& [e, c] : terms()) r += monomial(c, e * m);
  return r;
}

Rational QLaurent::eval(const Rational& q0) const {
  if (!exponents_divisible_by(4)) throw std::domain_error("eval: fractional power of q");
  Rational acc(0);
  for (const auto& [e, c] : terms()) acc += Rational(c) * rpow(q0, e / 4);
  return acc;
}

Integer QLaurent::eval_integer(long q0) const {
  Rational v = eval(Rational(q0));
  if (v.get_den() != 1) throw std::domain_error("eval_integer: value is not an integer");
  return v.get_num();
}

std::string QLaurent::serialize() const {
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty()) out += ';';
    out += std::to_string(e);
    out += ':';
    out += c.get_str();
  }
  return out;
}

QLaurent QLaurent::parse(std::string_view text) {
  QLaurent r;
  std::size_t pos = 0;
  bool have_last = false;
  int last = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("QLaurent::parse: missing ':'");
    int e = 0;
    auto [p, ec] = std::from_chars(item.data(), item.data() + colon, e);
    if (ec != std::errc() || p != item.data() + colon)
      throw std::invalid_argument("QLaurent::parse: bad exponent");
    if (have_last && e <= last) throw std::invalid_argument("QLaurent::parse: exponents not ascending");
    Integer c;
    if (c.set_str(std::string(item.substr(colon + 1)), 10) != 0 || c == 0)
      throw std::invalid_argument("QLaurent::parse: bad coefficient");
    r += monomial(c, e);
    have_last = true;
    last = e;
    pos = end + 1;
    if (end == text.size()) break;
    if (pos == text.size()) throw std::invalid_argument("QLaurent::parse: trailing ';'");
  }
  return r;
}

std::string QLaurent::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto ts = terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    auto [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "q";
    if (e != 4) {
      if (e % 4 == 0)
        os << "^" << e / 4;
      else
        os << "^(" << e << "/4)";
    }
  }
  return os.str();
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(max_exponent(), o.max_exponent());
  if (lo < low_) c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
  low_ = lo;
  c_.resize(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[o.low_ - lo + k] += o.c_[k];
  normalize();
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  if (is_zero() || o.is_zero()) return *this = QLaurent();
  std::vector<Integer> out(c_.size() + o.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  low_ += o.low_;
  normalize();
  return *this;
}

}  // namespace mdslab
