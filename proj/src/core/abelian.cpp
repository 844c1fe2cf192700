#include "dualcount/abelian.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dualcount {

namespace {
int mod(long a, int n) {
  long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}
}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  for (int d : factors_)
    if (d < 2) throw std::invalid_argument("abelian group factors must be at least 2");
}

std::size_t FiniteAbelianGroup::order() const {
  std::size_t n = 1;
  for (int d : factors_) n *= static_cast<std::size_t>(d);
  return n;
}

int FiniteAbelianGroup::exponent() const {
  int l = 1;
  for (int d : factors_) l = std::lcm(l, d);
  return l;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::normalize(Element a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("element has wrong rank");
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = mod(a[k], factors_[k]);
  return a;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::add(const Element& a, const Element& b) const {
  Element c(factors_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = mod(static_cast<long>(a[k]) + b[k], factors_[k]);
  return c;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::neg(const Element& a) const { return scale(a, -1); }

FiniteAbelianGroup::Element FiniteAbelianGroup::scale(const Element& a, long k) const {
  Element c(factors_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(k * a[i], factors_[i]);
  return c;
}

bool FiniteAbelianGroup::is_zero(const Element& a) const {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (mod(a[k], factors_[k]) != 0) return false;
  return true;
}

int FiniteAbelianGroup::element_order(const Element& a) const {
  int o = 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const int d = factors_[k];
    o = std::lcm(o, d / std::gcd(mod(a[k], d), d));
  }
  return o;
}

std::size_t FiniteAbelianGroup::index_of(const Element& a) const {
  std::size_t idx = 0;
  for (std::size_t k = factors_.size(); k-- > 0;) idx = idx * factors_[k] + mod(a[k], factors_[k]);
  return idx;
}

FiniteAbelianGroup::Element FiniteAbelianGroup::element(std::size_t index) const {
  Element a(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    a[k] = static_cast<int>(index % factors_[k]);
    index /= factors_[k];
  }
  return a;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::elements() const {
  std::vector<Element> out;
  const std::size_t n = order();
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::torsion(int r) const {
  std::vector<Element> out;
  for (auto& a : elements())
    if (is_zero(scale(a, r))) out.push_back(a);
  return out;
}

FiniteAbelianGroup FiniteAbelianGroup::torsion_structure(int r) const {
  std::vector<int> f;
  for (int d : factors_) {
    const int g = std::gcd(r, d);
    if (g > 1) f.push_back(g);
  }
  return FiniteAbelianGroup(f);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::quotient_representative(const Element& a, int r) const {
  Element rep(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) rep[k] = mod(a[k], std::gcd(r, factors_[k]));
  return rep;
}

std::vector<FiniteAbelianGroup::Element> FiniteAbelianGroup::quotient_representatives(int r) const {
  std::vector<Element> out;
  for (auto& a : elements())
    if (quotient_representative(a, r) == a) out.push_back(a);
  return out;
}

int FiniteAbelianGroup::pairing_exponent(const Element& character, const Element& x) const {
  const int l = exponent();
  long e = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    e += static_cast<long>(character[k]) * x[k] * (l / factors_[k]);
  return mod(e, l);
}

FiniteAbelianGroup::Element FiniteAbelianGroup::apply_hom(const std::vector<Element>& images, const Element& x) const {
  Element y = zero();
  for (std::size_t k = 0; k < factors_.size(); ++k) y = add(y, scale(images[k], x[k]));
  return y;
}

std::vector<std::vector<FiniteAbelianGroup::Element>> FiniteAbelianGroup::isomorphisms_to_dual() const {
  const auto all = elements();
  std::vector<std::vector<Element>> candidates_per_generator(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (auto& c : all)
      if (is_zero(scale(c, factors_[k]))) candidates_per_generator[k].push_back(c);

  std::vector<std::vector<Element>> result;
  std::vector<Element> images(factors_.size());
  auto rec = [&](auto& self, std::size_t k) -> void {
    if (k == factors_.size()) {
      for (std::size_t i = 1; i < all.size(); ++i)
        if (is_zero(apply_hom(images, all[i]))) return;
      result.push_back(images);
      return;
    }
    for (auto& c : candidates_per_generator[k]) {
      images[k] = c;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return result;
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < factors_.size(); ++k) out << (k ? "xZ" : "Z") << factors_[k];
  return out.str();
}

std::string FiniteAbelianGroup::element_to_string(const Element& a) const {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < a.size(); ++k) out << (k ? "," : "") << a[k];
  out << ")";
  return out.str();
}

}  // namespace dualcount
