#include <stdexcept>

#include "dualcount/series.hpp"

namespace dualcount {

GaussRational GaussRational::rotated(int k) const {
  switch (((k % 4) + 4) % 4) {
    case 0: return *this;
    case 1: return {-im, re};
    case 2: return {-re, -im};
    default: return {im, -re};
  }
}

std::string GaussRational::to_string() const {
  if (im == 0) return re.get_str();
  if (re == 0) return im.get_str() + "i";
  return re.get_str() + (im > 0 ? "+" : "") + im.get_str() + "i";
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (im == 0 && o.im == 0) {
    re *= o.re;
    return *this;
  }
  mpq_class r = re * o.re - im * o.im;
  im = re * o.im + im * o.re;
  re = r;
  return *this;
}

std::optional<GaussRational> GaussRational::inverse() const {
  const mpq_class norm = re * re + im * im;
  if (norm == 0) return std::nullopt;
  return GaussRational(re / norm, -im / norm);
}

GaussSeries GaussSeries::constant(int order, GaussRational c) {
  GaussSeries s(order);
  s[0] = std::move(c);
  return s;
}

GaussSeries& GaussSeries::operator+=(const GaussSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
  return *this;
}

GaussSeries& GaussSeries::operator-=(const GaussSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (std::size_t k = 0; k < coeff_.size(); ++k) coeff_[k] -= o.coeff_[k];
  return *this;
}

GaussSeries& GaussSeries::operator*=(const GaussRational& s) {
  for (auto& c : coeff_) c *= s;
  return *this;
}

GaussSeries operator*(const GaussSeries& a, const GaussSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("series orders differ");
  const int n = a.order();
  GaussSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

GaussSeries GaussSeries::inverse() const {
  const auto inv0 = coeff_[0].inverse();
  if (!inv0) throw std::domain_error("series with zero constant term is not invertible");
  const int n = order();
  GaussSeries out(n);
  out[0] = *inv0;
  for (int k = 1; k <= n; ++k) {
    GaussRational acc;
    for (int j = 1; j <= k; ++j)
      if (!coeff_[j].is_zero()) acc += coeff_[j] * out[k - j];
    out[k] = -(acc * *inv0);
  }
  return out;
}

void GaussSeries::multiply_pole(int unit, int k, int e) {
  if (k < 1) throw std::invalid_argument("pole degree must be at least 1");
  const int n = order();
  // 1/(1 - u q^k): s_j += u s_{j-k}, ascending. (1 - u q^k): s_j -= u s_{j-k}, descending.
  for (int rep = 0; rep < e; ++rep)
    for (int j = k; j <= n; ++j)
      if (!coeff_[j - k].is_zero()) coeff_[j] += coeff_[j - k].rotated(unit);
  for (int rep = 0; rep < -e; ++rep)
    for (int j = n; j >= k; --j)
      if (!coeff_[j - k].is_zero()) coeff_[j] -= coeff_[j - k].rotated(unit);
}

void GaussSeries::shift(int k) {
  if (k <= 0) return;
  const int n = order();
  for (int j = n; j >= 0; --j) coeff_[j] = j >= k ? coeff_[j - k] : GaussRational();
}

bool GaussSeries::is_zero() const {
  for (auto& c : coeff_)
    if (!c.is_zero()) return false;
  return true;
}

PolyGauss PolyGauss::constant(GaussRational c) {
  PolyGauss p;
  p.coeff_.push_back(std::move(c));
  p.trim();
  return p;
}

void PolyGauss::trim() {
  while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
}

PolyGauss& PolyGauss::operator+=(const PolyGauss& o) {
  if (o.coeff_.size() > coeff_.size()) coeff_.resize(o.coeff_.size());
  for (std::size_t k = 0; k < o.coeff_.size(); ++k) coeff_[k] += o.coeff_[k];
  trim();
  return *this;
}

PolyGauss& PolyGauss::operator*=(const GaussRational& s) {
  for (auto& c : coeff_) c *= s;
  trim();
  return *this;
}

PolyGauss operator*(const PolyGauss& a, const PolyGauss& b) {
  PolyGauss out;
  if (a.coeff_.empty() || b.coeff_.empty()) return out;
  out.coeff_.resize(a.coeff_.size() + b.coeff_.size() - 1);
  for (std::size_t i = 0; i < a.coeff_.size(); ++i) {
    if (a.coeff_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeff_.size(); ++j)
      if (!b.coeff_[j].is_zero()) out.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
  }
  out.trim();
  return out;
}

void PolyGauss::multiply_binomial(int unit, int k, int m) {
  if (m < 0) throw std::invalid_argument("negative binomial power");
  for (int rep = 0; rep < m; ++rep) {
    const int old = static_cast<int>(coeff_.size());
    coeff_.resize(old + k);
    for (int j = old + k - 1; j >= k; --j)
      if (!coeff_[j - k].is_zero()) coeff_[j] -= coeff_[j - k].rotated(unit);
  }
  trim();
}

void PolyGauss::shift(int k) {
  if (k <= 0 || coeff_.empty()) return;
  coeff_.insert(coeff_.begin(), k, GaussRational());
}

}  // namespace dualcount
