#include "dualcount/errors.hpp"
#include "dualcount/series.hpp"

namespace dualcount {

namespace {

std::string pow_text(const std::string& factor, int e) {
  if (e == 0) return "";
  return " " + factor + (e == 1 ? "" : "^" + std::to_string(e));
}

const char* kSpinTail = " / ((1-(-1)^(4a) q^4)^2 (1-(-1)^(8a) q^8))";

std::string spin_01_body(const std::string& weight) {
  return "avg(a in 0..1) avg(b in 0..3) " + weight +
         " (1/((1-i^b (-1)^a q) (1-i^(-b) (-1)^(3a) q^3)) + 1/((1-(-1)^a q) (1-(-1)^(3a) q^3)) - 1)" + kSpinTail;
}

}  // namespace

std::string builtin_genfun_text(const GroupSpec& g, Family side) {
  if (side != Family::Sp && side != Family::SO_odd)
    throw Unsupported("built-in generating functions exist for the Sp and SO_odd sides only");
  const bool sp = side == Family::Sp;
  switch (g.kind) {
    case GroupKind::Cyclic: {
      const int h = g.param / 2;
      if (sp) return "1/(1-q^2)^" + std::to_string(h + 1);
      return "avg(a in 0..1) (-1)^a / ((1-(-1)^a q)" + pow_text("(1-(-1)^(2a) q^2)", h) + ")";
    }
    case GroupKind::BinaryDihedral: {
      const int m = g.param;
      if (m % 2 == 0) {
        const int k = m / 2;
        if (sp) return "1/(" + pow_text("(1-q^2)", k + 4).substr(1) + pow_text("(1-q^4)", k - 1) + ")";
        return "avg(a in 0..1) avg(b0 in 0..1) avg(b1 in 0..1) (-1)^a / ((1-(-1)^a q) (1-(-1)^(a+b0) q) "
               "(1-(-1)^(a+b1) q) (1-(-1)^(a+b0+b1) q)" +
               pow_text("(1-(-1)^(2a+b0) q^2)", k - 1) + pow_text("(1-(-1)^(4a) q^4)", k) + ")";
      }
      const int k = (m - 1) / 2;
      if (sp) return "1/(" + pow_text("(1-q^2)", k + 3).substr(1) + pow_text("(1-q^4)", k) + ")";
      return "avg(a in 0..1) avg(b in 0..1) (-1)^a / ((1-(-1)^a q) (1-(-1)^(a+b) q) (1-(-1)^(2a) q^2)" +
             pow_text("(1-(-1)^(2a+b) q^2)", k) + pow_text("(1-(-1)^(4a) q^4)", k) + ")";
    }
    case GroupKind::BinaryTetrahedral:
      if (sp) return "1/((1-q^2)^3 (1-q^4) (1-q^6))";
      return "avg(a in 0..1) (-1)^a / ((1-(-1)^a q) (1-(-1)^(2a) q^2) (1-(-1)^(3a) q^3) (1-(-1)^(4a) q^4)^2)";
    case GroupKind::BinaryOctahedral:
      if (sp) return "1/((1-q^2)^4 (1-q^4)^2 (1-q^6)^2)";
      return "avg(a in 0..1) avg(b in 0..1) (-1)^a / ((1-(-1)^a q) (1-(-1)^(a+b) q) (1-(-1)^(2a+b) q^2) "
             "(1-(-1)^(3a) q^3) (1-(-1)^(3a+b) q^3) (1-(-1)^(4a) q^4)^2 (1-(-1)^(8a) q^8))";
    case GroupKind::BinaryIcosahedral:
      if (sp) return "1/((1-q^2)^3 (1-q^4) (1-q^6)^3 (1-q^8) (1-q^10))";
      return "avg(a in 0..1) (-1)^a / ((1-(-1)^a q) (1-(-1)^(3a) q^3)^2 (1-(-1)^(4a) q^4)^3 (1-(-1)^(5a) q^5) "
             "(1-(-1)^(8a) q^8) (1-(-1)^(12a) q^12))";
  }
  throw Unsupported("no built-in generating function for " + g.to_string());
}

std::string builtin_genfun_text(RefinedCase c) {
  switch (c) {
    case RefinedCase::Y00_Sp: return "1/2 (1/((1-q^2)^4 (1-q^4)^2 (1-q^6)^2) + 1/((1-q^4)^4 (1-q^12)))";
    case RefinedCase::Y00_Spin:
      return "avg(a in 0..1) avg(b in 0..3) (-1)^a / ((1-(-1)^a q) (1-(-1)^a i^b q) (1-(-1)^(2a) i^b q^2) "
             "(1-(-1)^(3a) q^3) (1-(-1)^(3a) i^(-b) q^3) (1-(-1)^(4a) q^4)^2 (1-(-1)^(8a) q^8))";
    case RefinedCase::Y01_Sp: return "1/((1-q^2)^2 (1-q^4) (1-q^6) (1-q^8))";
    case RefinedCase::Y01_Spin: return spin_01_body("(-1)^a");
    case RefinedCase::Y11_Spin: return spin_01_body("(-1)^a i^(-2b)");
  }
  throw Unsupported("unknown refined case");
}

GenExpr builtin_genfun(const GroupSpec& g, Family side) { return parse_genexpr(builtin_genfun_text(g, side)); }
GenExpr builtin_genfun(RefinedCase c) { return parse_genexpr(builtin_genfun_text(c)); }

std::string to_string(RefinedCase c) {
  switch (c) {
    case RefinedCase::Y00_Sp: return "Y00-Sp";
    case RefinedCase::Y00_Spin: return "Y00-Spin";
    case RefinedCase::Y01_Sp: return "Y01-Sp";
    case RefinedCase::Y01_Spin: return "Y01-Spin";
    case RefinedCase::Y11_Spin: return "Y11-Spin";
  }
  return "?";
}

RefinedCase parse_refined_case(std::string_view text) {
  for (auto c : {RefinedCase::Y00_Sp, RefinedCase::Y00_Spin, RefinedCase::Y01_Sp, RefinedCase::Y01_Spin, RefinedCase::Y11_Spin})
    if (to_string(c) == text) return c;
  throw std::invalid_argument("unknown refined case '" + std::string(text) + "'");
}

}  // namespace dualcount
