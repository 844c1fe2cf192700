#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dualcount/counting.hpp"
#include "dualcount/grouprep.hpp"

namespace dualcount {

/// a + b i with exact rational parts.
struct GaussRational {
  mpq_class re = 0;
  mpq_class im = 0;

  GaussRational() = default;
  GaussRational(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long r) : re(r) {}

  /// Multiplication by i^k.
  GaussRational rotated(int k) const;
  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  GaussRational operator-() const { return {-re, -im}; }
  std::optional<GaussRational> inverse() const;
  friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
};

/// Truncated power series c_0 + ... + c_N q^N.
class GaussSeries {
public:
  explicit GaussSeries(int order = 0) : coeff_(order + 1) {}
  static GaussSeries constant(int order, GaussRational c);

  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  const GaussRational& operator[](int k) const { return coeff_[k]; }
  GaussRational& operator[](int k) { return coeff_[k]; }
  const std::vector<GaussRational>& coefficients() const { return coeff_; }

  GaussSeries& operator+=(const GaussSeries& o);
  GaussSeries& operator-=(const GaussSeries& o);
  GaussSeries& operator*=(const GaussRational& s);
  friend GaussSeries operator+(GaussSeries a, const GaussSeries& b) { return a += b; }
  friend GaussSeries operator-(GaussSeries a, const GaussSeries& b) { return a -= b; }
  friend GaussSeries operator*(const GaussSeries& a, const GaussSeries& b);
  /// Multiplicative inverse; requires c_0 != 0.
  GaussSeries inverse() const;
  /// In-place multiplication by (1 - u q^k)^{-e} for a unit u = i^unit, k >= 1 and any integer e.
  void multiply_pole(int unit, int k, int e);
  void shift(int k);
  bool is_zero() const;

  friend bool operator==(const GaussSeries& a, const GaussSeries& b) { return a.coeff_ == b.coeff_; }

private:
  std::vector<GaussRational> coeff_;
};

/// Polynomial in q with Gaussian coefficients, lowest degree first, no trailing zeros.
class PolyGauss {
public:
  PolyGauss() = default;
  static PolyGauss constant(GaussRational c);
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  const std::vector<GaussRational>& coefficients() const { return coeff_; }
  GaussRational at(int k) const { return k < static_cast<int>(coeff_.size()) ? coeff_[k] : GaussRational(); }

  PolyGauss& operator+=(const PolyGauss& o);
  PolyGauss& operator*=(const GaussRational& s);
  friend PolyGauss operator*(const PolyGauss& a, const PolyGauss& b);
  /// Multiplies by (1 - i^unit q^k)^m touching only the nonzero terms of the binomial.
  void multiply_binomial(int unit, int k, int m);
  void shift(int k);
  friend bool operator==(const PolyGauss& a, const PolyGauss& b) { return a.coeff_ == b.coeff_; }

private:
  void trim();
  std::vector<GaussRational> coeff_;
};

/// Exponent of i: constant + Σ coeff·parameter, taken mod 4.
struct LinearForm {
  int constant = 0;
  std::map<std::string, int> coeff;

  static LinearForm of(int c) { return {((c % 4) + 4) % 4, {}}; }
  bool is_constant() const { return coeff.empty(); }
  LinearForm operator+(const LinearForm& o) const;
  LinearForm scaled(int k) const;
  int evaluate(const std::map<std::string, int>& env) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct GenNode;
using GenExpr = std::shared_ptr<const GenNode>;

/// Expression tree. Build through the smart constructors below, which flatten nested sums and
/// products, fold constants, and merge repeated factors.
struct GenNode {
  enum class Kind { Const, UnitPow, QPow, Pole, Sum, Product, Avg };
  Kind kind = Kind::Const;
  GaussRational value;               // Const
  LinearForm unit;                   // UnitPow, Pole (exponent of i)
  int k = 0;                         // QPow exponent, Pole degree
  int e = 0;                         // Pole: factor (1 - unit q^k)^{-e}
  std::vector<GenExpr> children;     // Sum, Product, Avg body
  std::string param;                 // Avg
  int range = 1;                     // Avg over param in 0..range-1
};

namespace gen {
GenExpr constant(GaussRational c);
GenExpr unit_pow(LinearForm u);
GenExpr q_pow(int k);
/// (1 - i^u q^k)^{-e}; requires k >= 1.
GenExpr pole(LinearForm u, int k, int e = 1);
GenExpr sum(std::vector<GenExpr> terms);
GenExpr product(std::vector<GenExpr> factors);
GenExpr avg(std::string param, int range, GenExpr body);
/// Replaces q by i^u q throughout.
GenExpr substitute_q(const GenExpr& e, const LinearForm& u);
/// Reciprocal of a product of constants, units and poles.
std::optional<GenExpr> reciprocal(const GenExpr& e);
}  // namespace gen

bool structurally_equal(const GenExpr& a, const GenExpr& b);

/// Parses the DSL documented in docs/genexpr_grammar.md.
GenExpr parse_genexpr(std::string_view text);
std::string to_string(const GenExpr& e);

int default_series_order();
int max_series_order();
GaussSeries expand(const GenExpr& e, int order);
GaussRational coeff(const GenExpr& e, int k);

enum class RefinedCase { Y00_Sp, Y00_Spin, Y01_Sp, Y01_Spin, Y11_Spin };
std::string to_string(RefinedCase c);
RefinedCase parse_refined_case(std::string_view text);

/// DSL text of a built-in generating function. The Sp side is indexed by q^{2n}, the SO side by q^{2n+1}.
std::string builtin_genfun_text(const GroupSpec& g, Family side);
std::string builtin_genfun_text(RefinedCase c);
GenExpr builtin_genfun(const GroupSpec& g, Family side);
GenExpr builtin_genfun(RefinedCase c);

enum class IdentityKind { KF1, KF2, KF3, KF4, PropA, PropX, PropY };
std::string to_string(IdentityKind k);
IdentityKind parse_identity(std::string_view text);

/// Parameter groups separated by ';', values within a group by ','.
using IdentityParams = std::vector<std::vector<int>>;
IdentityParams parse_identity_params(std::string_view text);
std::string to_string(const IdentityParams& p);

struct IdentitySides {
  GenExpr lhs;
  GenExpr rhs;
};
/// Builds both sides; throws std::invalid_argument when the side conditions fail.
IdentitySides identity_sides(IdentityKind id, const IdentityParams& params);

struct ProofReport {
  IdentityKind identity = IdentityKind::KF1;
  IdentityParams params;
  std::string method;  // "cleared" or "series"
  int degree_or_order = 0;
  bool verdict = false;
};

ProofReport prove_identity(IdentityKind id, const IdentityParams& params);
/// Clearing is skipped when the common denominator would exceed this degree.
constexpr int kMaxClearedDegree = 4000;
constexpr int kFallbackSeriesOrder = 200;

}  // namespace dualcount
