#include <doctest.h>

#include <cstdlib>
#include <functional>

#include "dualcount/errors.hpp"
#include "dualcount/series.hpp"
#include "dualcount/suites.hpp"
#include "support.hpp"

using namespace dualcount;

namespace {

/// Gaussian integer with i^k bookkeeping.
struct GI {
  long re = 0, im = 0;
  GI operator*(const GI& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  GI& operator+=(const GI& o) { re += o.re, im += o.im; return *this; }
};
GI unit(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// Coefficient of q^N in Π_j 1/(1 - i^{u_j} q^{k_j}) by summing over all exponent tuples.
GI brute_force_poles(const std::vector<std::pair<int, int>>& poles, int N) {
  GI total;
  std::function<void(std::size_t, int, GI)> rec = [&](std::size_t j, int left, GI w) {
    if (j == poles.size()) {
      if (left == 0) total += w;
      return;
    }
    GI step = unit(poles[j].first);
    GI acc{1, 0};
    for (int x = 0; x * poles[j].second <= left; ++x) {
      rec(j + 1, left - x * poles[j].second, w * acc);
      acc = acc * step;
    }
  };
  rec(0, N, {1, 0});
  return total;
}

GaussRational as_gauss(GI g) { return GaussRational(mpq_class(g.re), mpq_class(g.im)); }

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("expansion of pole products matches brute-force counting") {
    auto g = testing_support::rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<std::pair<int, int>> poles;
      std::string text = "1/(";
      const int count = testing_support::uniform(g, 1, 5);
      for (int j = 0; j < count; ++j) {
        const int u = testing_support::uniform(g, 0, 3), k = testing_support::uniform(g, 1, 4);
        poles.push_back({u, k});
        text += "(1-i^" + std::to_string(u) + " q^" + std::to_string(k) + ")";
      }
      text += ")";
      CAPTURE(text);
      const GaussSeries s = expand(parse_genexpr(text), 14);
      for (int N = 0; N <= 14; ++N) CHECK(s[N] == as_gauss(brute_force_poles(poles, N)));
    }
  }

  TEST_CASE("averages select congruence classes") {
    // avg over a of (-1)^{aN} picks the even part.
    const GaussSeries s = expand(parse_genexpr("avg(a in 0..1) 1/(1-(-1)^a q)"), 10);
    for (int N = 0; N <= 10; ++N) CHECK(s[N] == GaussRational(N % 2 == 0 ? 1 : 0));
    const GaussSeries t = expand(parse_genexpr("avg(b in 0..3) 1/(1-i^b q)"), 12);
    for (int N = 0; N <= 12; ++N) CHECK(t[N] == GaussRational(N % 4 == 0 ? 1 : 0));
  }

  TEST_CASE("series arithmetic") {
    GaussSeries a = expand(parse_genexpr("1/(1-q)"), 10);
    GaussSeries b = expand(parse_genexpr("1-q"), 10);
    CHECK((a * b) == GaussSeries::constant(10, 1));
    CHECK(a.inverse() == b);
    GaussSeries c = a;
    c.multiply_pole(0, 1, -1);
    CHECK(c == GaussSeries::constant(10, 1));
    GaussSeries d = GaussSeries::constant(10, 1);
    d.multiply_pole(2, 3, 2);
    CHECK(d == expand(parse_genexpr("1/(1+q^3)^2"), 10));
  }

  TEST_CASE("Gaussian rationals") {
    const GaussRational i(0, 1);
    CHECK(i * i == GaussRational(-1));
    CHECK(GaussRational(1).rotated(3) == GaussRational(0, -1));
    CHECK(*GaussRational(3, 4).inverse() * GaussRational(3, 4) == GaussRational(1));
    CHECK_FALSE(GaussRational().inverse().has_value());
  }

  TEST_CASE("printer and parser round-trip") {
    for (const auto& text : std::vector<std::string>{
             "1/((1-q^2)^3 (1-q^4))", "avg(a in 0..1) (-1)^a / ((1-(-1)^a q) (1-(-1)^(2a) q^2))",
             "q^3 (1-q)^2 - 2/3", "avg(b in 0..3) i^(b+1) / (1 - i^b q^5)", "1/2 (1/(1-q^2) + 1/(1+q^2))"}) {
      CAPTURE(text);
      const GenExpr e = parse_genexpr(text);
      const GenExpr again = parse_genexpr(to_string(e));
      CHECK(structurally_equal(e, again));
      CHECK(expand(e, 12) == expand(again, 12));
    }
    for (const auto& g : standard_gammas())
      for (auto side : {Family::Sp, Family::SO_odd}) {
        const GenExpr e = builtin_genfun(g, side);
        CHECK(structurally_equal(e, parse_genexpr(to_string(e))));
      }
  }

  TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_genexpr("1/((1-q^0))"), ParseError);
    CHECK_THROWS_AS(parse_genexpr("1/(1-q"), ParseError);
    CHECK_THROWS_AS(parse_genexpr("avg(a in 0..1"), ParseError);
    CHECK_THROWS_AS(parse_genexpr("1/(1+q+q^2)"), ParseError);
    try {
      parse_genexpr("1 + $");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 4);
    }
  }

  TEST_CASE("coefficient access is bounded by the maximum order") {
    const GenExpr e = parse_genexpr("1/(1-q)");
    CHECK(coeff(e, 5) == GaussRational(1));
    CHECK_THROWS_AS(coeff(e, max_series_order() + 1), std::out_of_range);
  }

  TEST_CASE("generating functions reproduce enumeration counts") {
    for (const auto& g : {GroupSpec::cyclic(5), GroupSpec::binary_dihedral(3), GroupSpec::binary_dihedral(4),
                          GroupSpec::octahedral()}) {
      const GaussSeries sp = expand(builtin_genfun(g, Family::Sp), 13);
      const GaussSeries so = expand(builtin_genfun(g, Family::SO_odd), 13);
      for (int n = 0; n <= 6; ++n) {
        CHECK(sp[2 * n] == GaussRational(mpq_class(count_homs(g, {Family::Sp, n}))));
        CHECK(so[2 * n + 1] == GaussRational(mpq_class(count_homs(g, {Family::SO_odd, n}))));
        CHECK(sp[2 * n + 1].is_zero());
        CHECK(so[2 * n].is_zero());
      }
    }
  }

  TEST_CASE("identity instantiations prove by clearing denominators") {
    for (const auto& [id, p] : reference_instantiations(5)) {
      CAPTURE(to_string(id) + " " + to_string(p));
      const auto r = prove_identity(id, p);
      CHECK(r.verdict);
      CHECK(r.method == "cleared");
    }
  }

  TEST_CASE("random identity tuples") {
    for (auto id : {IdentityKind::KF1, IdentityKind::KF2, IdentityKind::KF3, IdentityKind::KF4}) {
      const auto tuples = random_identity_params(id, 12, 99);
      CHECK(tuples.size() == 12);
      for (const auto& p : tuples) {
        CAPTURE(to_string(id) + " " + to_string(p));
        CHECK(prove_identity(id, p).verdict);
      }
    }
  }

  TEST_CASE("a perturbed identity is refuted") {
    const auto sides = identity_sides(IdentityKind::KF1, {{1}, {1}, {1}, {1}});
    const GenExpr wrong = gen::product({sides.lhs, parse_genexpr("1/(1-q^2)")});
    CHECK_FALSE(expand(wrong, 30) == expand(sides.rhs, 30));
    CHECK(expand(sides.lhs, 30) == expand(sides.rhs, 30));
  }

  TEST_CASE("side conditions") {
    CHECK_THROWS_AS(identity_sides(IdentityKind::KF1, {{2}, {2, 2}, {1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(identity_sides(IdentityKind::KF1, {{4}, {1, 3, 1, 3}, {1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(identity_sides(IdentityKind::KF4, {{2, 2}, {1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(identity_sides(IdentityKind::KF1, {{3}, {1, 1, 1}, {1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(parse_identity("KF9"), std::invalid_argument);
  }

  TEST_CASE("the zero refined case vanishes through order 200") {
    const GaussSeries y = expand(builtin_genfun(RefinedCase::Y11_Spin), 200);
    CHECK(y.is_zero());
    CHECK(prove_identity(IdentityKind::PropY, {}).verdict);
  }

  TEST_CASE("order override through the environment") {
    const int before = max_series_order();
    ::setenv("DUALCOUNT_MAX_ORDER", "50", 1);
    CHECK(max_series_order() == 50);
    CHECK_THROWS_AS(coeff(parse_genexpr("1/(1-q)"), 51), std::out_of_range);
    ::unsetenv("DUALCOUNT_MAX_ORDER");
    CHECK(max_series_order() == before);
  }
}
