#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dualcount {

/// Element of Z[ζ_N] stored in the redundant power basis ζ^0..ζ^{N-1}.
/// Equality and zero tests reduce modulo the cyclotomic polynomial Φ_N.
/// Operands of different orders are lifted to the lcm of the two orders.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int order);

  static Cyclotomic integer(int order, std::int64_t value);
  static Cyclotomic root(int order, std::int64_t exponent);

  int order() const { return order_; }
  const std::vector<std::int64_t>& coefficients() const { return coeff_; }

  Cyclotomic lifted(int new_order) const;
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(std::int64_t scalar);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, std::int64_t s) { return a *= s; }
  Cyclotomic operator-() const { return *this * -1; }

  /// Coefficients in the basis ζ^0..ζ^{φ(N)-1}.
  std::vector<std::int64_t> reduced() const;
  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

private:
  int order_;
  std::vector<std::int64_t> coeff_;
};

/// Φ_n as a coefficient list, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

}  // namespace dualcount
