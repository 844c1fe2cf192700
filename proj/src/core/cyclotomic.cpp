#include "dualcount/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dualcount {

namespace {

std::vector<std::int64_t> poly_exact_divide(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  std::vector<std::int64_t> quo(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t t = num[i] / den[dn];
    quo[i - dn] = t;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= t * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j)
    if (num[j] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return quo;
}

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::mutex lock;
  static std::map<int, std::vector<std::int64_t>> cache;
  {
    std::lock_guard guard(lock);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_exact_divide(p, cyclotomic_polynomial(d));
  std::lock_guard guard(lock);
  cache.emplace(n, p);
  return p;
}

Cyclotomic::Cyclotomic(int order) : order_(order), coeff_(order, 0) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

Cyclotomic Cyclotomic::integer(int order, std::int64_t value) {
  Cyclotomic c(order);
  c.coeff_[0] = value;
  return c;
}

Cyclotomic Cyclotomic::root(int order, std::int64_t exponent) {
  Cyclotomic c(order);
  c.coeff_[mod(exponent, order)] = 1;
  return c;
}

Cyclotomic Cyclotomic::lifted(int new_order) const {
  if (new_order % order_ != 0) throw std::invalid_argument("cannot lift cyclotomic to a non-multiple order");
  if (new_order == order_) return *this;
  Cyclotomic c(new_order);
  const int step = new_order / order_;
  for (int k = 0; k < order_; ++k) c.coeff_[k * step] = coeff_[k];
  return c;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic c(order_);
  for (int k = 0; k < order_; ++k) c.coeff_[mod(-k, order_)] = coeff_[k];
  return c;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  const int l = std::lcm(order_, other.order_);
  if (l != order_) *this = lifted(l);
  const Cyclotomic o = other.lifted(l);
  for (int k = 0; k < l; ++k) coeff_[k] += o.coeff_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += other * -1; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  const int l = std::lcm(order_, other.order_);
  const Cyclotomic a = lifted(l);
  const Cyclotomic b = other.lifted(l);
  Cyclotomic c(l);
  for (int i = 0; i < l; ++i) {
    if (a.coeff_[i] == 0) continue;
    for (int j = 0; j < l; ++j) c.coeff_[(i + j) % l] += a.coeff_[i] * b.coeff_[j];
  }
  return *this = c;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t scalar) {
  for (auto& c : coeff_) c *= scalar;
  return *this;
}

std::vector<std::int64_t> Cyclotomic::reduced() const {
  const auto phi = cyclotomic_polynomial(order_);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> r = coeff_;
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t t = r[i];
    if (t == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= t * phi[j];
  }
  r.resize(deg);
  return r;
}

bool Cyclotomic::is_zero() const {
  for (auto c : reduced())
    if (c != 0) return false;
  return true;
}

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  const auto r = reduced();
  for (std::size_t k = 1; k < r.size(); ++k)
    if (r[k] != 0) return std::nullopt;
  return r.empty() ? 0 : r[0];
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (int k = 0; k < order_; ++k)
    if (coeff_[k] != 0) z += static_cast<double>(coeff_[k]) * std::polar(1.0, 2 * std::numbers::pi * k / order_);
  return z;
}

std::string Cyclotomic::to_string() const {
  if (auto v = as_integer()) return std::to_string(*v);
  const auto r = reduced();
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    if (!first) out << (r[k] > 0 ? " + " : " - ");
    else if (r[k] < 0) out << "-";
    first = false;
    const std::int64_t a = r[k] < 0 ? -r[k] : r[k];
    if (k == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << "*";
    out << "z" << order_ << "^" << k;
  }
  return out.str();
}

}  // namespace dualcount
